#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multitor/freemod.hpp"

namespace multitor {

// Module term (component, monomial) under the position-over-term order with the
// LOWER component index dominant: any term in component i beats any term in
// component j > i; ties break by the ring's monomial order.
struct ModTerm {
    int comp = -1;
    Exponents exp;
};

Cmp modterm_cmp(const ModTerm& a, const ModTerm& b, MonomialOrder order);
bool modterm_divides(const ModTerm& a, const ModTerm& b);

ModTerm lead_modterm(const FreeVector& v);
const Scalar& lead_modcoeff(const FreeVector& v);

// Reduced Groebner basis of a submodule of R^rank. Canonical: monic elements,
// pairwise non-divisible leads, fully inter-reduced, sorted by descending lead.
struct ModuleGB {
    RingPtr ring;
    int rank = 0;
    std::vector<FreeVector> basis;
    std::vector<ModTerm> leads; // cached, parallel to basis

    bool contains(const FreeVector& v) const;
    bool is_zero_module() const { return basis.empty(); }
    std::string str() const;
};

ModuleGB module_groebner(const RingPtr& ring, int rank, const std::vector<FreeVector>& gens);
FreeVector normal_form(const FreeVector& v, const ModuleGB& gb);

// GB of the generators of a submodule of R^head_rank, augmented with lift
// bookkeeping: each element of `mixed` satisfies head = sum_i tail_i * gens_i,
// and `syzygies` generates the full relation module of the generators.
struct AugmentedGB {
    RingPtr ring;
    int head_rank = 0;
    int ngens = 0;
    std::vector<FreeVector> mixed;    // rank head_rank + ngens, nonzero head part
    std::vector<FreeVector> syzygies; // rank ngens
    ModuleGB head_gb;                 // reduced GB of the generated submodule

    // Canonical lift through the generators; nullopt if v is not a member.
    std::optional<std::vector<Poly>> lift(const FreeVector& v) const;
};

AugmentedGB augmented_groebner(const RingPtr& ring, int head_rank,
                               const std::vector<FreeVector>& gens);

std::optional<std::vector<Poly>> membership_with_lift(const FreeVector& v,
                                                      const std::vector<FreeVector>& gens);

// Columns of the result generate ker(m : R^cols -> R^rows).
FreeMatrix syzygy(const FreeMatrix& m);
std::vector<FreeVector> syzygy_generators(const RingPtr& ring, int rank,
                                          const std::vector<FreeVector>& gens);

// Ideal-level conveniences (rank-1 submodules).
ModuleGB ideal_groebner(const RingPtr& ring, const std::vector<Poly>& gens);
Poly ideal_normal_form(const Poly& p, const ModuleGB& gb);
bool ideal_contains(const ModuleGB& gb, const Poly& p);
bool ideal_equal(const ModuleGB& a, const ModuleGB& b);
std::vector<Poly> gb_polys(const ModuleGB& rank1_gb);

// Generators of (I : f) = { g : f*g in I }.
std::vector<Poly> ideal_quotient(const RingPtr& ring, const std::vector<Poly>& I, const Poly& f);

bool is_zero_dimensional(const RingPtr& ring, const std::vector<Poly>& I);

// dim_k R/I; requires is_zero_dimensional(I).
std::uint64_t quotient_dim(const RingPtr& ring, const std::vector<Poly>& I);

// Number of module standard monomials of the span of gens inside R^rank,
// i.e. dim_k of R^rank / <gens>; nullopt = infinite.
std::optional<std::uint64_t> codim_standard_monomials(const RingPtr& ring, int rank,
                                                      const std::vector<FreeVector>& gens);

} // namespace multitor

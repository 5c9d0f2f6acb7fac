#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multitor/groebner.hpp"

namespace multitor {

// Subquotient <U>/<V> of a free module R^ambient_rank; every relation in V must
// lie in the span of U.
struct SubquotientModule {
    RingPtr ring;
    int ambient_rank = 0;
    std::vector<FreeVector> gens; // U
    std::vector<FreeVector> rels; // V

    static SubquotientModule submodule(const RingPtr& ring, int ambient_rank,
                                       std::vector<FreeVector> gens);
    static SubquotientModule zero(const RingPtr& ring, int ambient_rank);
    static SubquotientModule full_free(const RingPtr& ring, int rank);

    bool has_relations() const { return !rels.empty(); }
    std::string str() const;
};

void require_same_ambient(const SubquotientModule& a, const SubquotientModule& b);

// Checks the type invariant V subset of <U>.
bool subquotient_well_formed(const SubquotientModule& m);

SubquotientModule kernel_module(const FreeMatrix& m);
SubquotientModule image_module(const FreeMatrix& m);

// x * M for a genuine submodule (V empty).
SubquotientModule scale_submodule(const SubquotientModule& m, const Poly& x);

// Span equality of the generator sets (submodule comparison, V empty).
bool submodule_equal(const SubquotientModule& a, const SubquotientModule& b);
// Full comparison: U-spans and V-spans both GB-equal.
bool subquotient_equal(const SubquotientModule& a, const SubquotientModule& b);
// <U_A> subset of <U_B>
bool submodule_contained(const SubquotientModule& a, const SubquotientModule& b);

SubquotientModule submodule_intersect(const SubquotientModule& a, const SubquotientModule& b);
SubquotientModule submodule_sum(const SubquotientModule& a, const SubquotientModule& b);

// N/W as a subquotient (U_N, V_N + U_W); requires <U_W> subset of <U_N>.
SubquotientModule quotient_module(const SubquotientModule& n, const SubquotientModule& w);

// Matrix P with coker(P) isomorphic to M via e_i -> gens[i]: columns are lifts
// of the relations through U plus the syzygies among U.
FreeMatrix presentation(const SubquotientModule& m);

// dim_k of M when finite (nullopt = infinite). Errors with LengthNotLocal when
// the module has finite dimension but is not supported only at the origin.
std::optional<std::uint64_t> module_length(const SubquotientModule& m);

// rank of M at the generic point
int generic_rank(const SubquotientModule& m);

// Map of subquotients: column j of `matrix` is the image, in the target's
// ambient free module, of the j-th generator of the source.
struct ModuleMap {
    SubquotientModule source;
    SubquotientModule target;
    FreeMatrix matrix; // target.ambient_rank x |source.gens|

    static ModuleMap identity(const SubquotientModule& m);
    std::string str() const;
};

// Well-definedness: generator images in <U_target>, and images of the columns of
// presentation(source) in <V_target>.
bool map_well_defined(const ModuleMap& f, std::string* why = nullptr);

// f(v) for v given in the source ambient (must lie in <U_source>).
FreeVector map_apply(const ModuleMap& f, const FreeVector& v);

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f); // g after f
bool maps_equal(const ModuleMap& f, const ModuleMap& g);       // as maps on the source

enum class MapVerdict { Bijective, NotInjective, NotSurjective };

struct MapCertificate {
    MapVerdict verdict = MapVerdict::Bijective;
    std::optional<FreeVector> witness; // source element (ambient) or missing target element
    std::string detail;
};

MapCertificate map_is_bijective(const ModuleMap& f);

struct PullbackResult {
    SubquotientModule module; // ambient = source_f.ambient + source_g.ambient
    ModuleMap p1;             // projection to f.source
    ModuleMap p2;             // projection to g.source
};

// Fiber product {(a, b) : f(a) = g(b)} of maps with a common target.
PullbackResult pullback(const ModuleMap& f, const ModuleMap& g);

// Is multiplication by x injective on M?
bool mult_injective(const SubquotientModule& m, const Poly& x);
// A witness u in <U> \ <V> with x*u in <V>, when multiplication is not injective.
std::optional<FreeVector> mult_injective_witness(const SubquotientModule& m, const Poly& x);

// Generators of {w in R^rank : x*w in <gens>}.
std::vector<FreeVector> colon_by_scalar(const RingPtr& ring, int rank,
                                        const std::vector<FreeVector>& gens, const Poly& x);

// Generators of {c in R^cols(F) : F*c in <W>}.
std::vector<FreeVector> preimage_generators(const FreeMatrix& f, const std::vector<FreeVector>& w);

} // namespace multitor

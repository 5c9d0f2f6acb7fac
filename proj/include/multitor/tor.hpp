#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multitor/complexes.hpp"

namespace multitor {

struct TorEntry {
    int q = 0;
    SubquotientModule module;
    std::optional<std::uint64_t> length; // nullopt = infinite
    int rank = 0;                        // generic rank
    std::string provenance;
};

struct TorReport {
    std::vector<TorEntry> entries; // ascending q starting at 0
};

enum class Verdict { Verified, PreconditionFailed, Refuted };

std::string verdict_str(Verdict v);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifierReport {
    std::string claim;
    std::string instance;
    std::vector<CheckItem> checks;
    Verdict verdict = Verdict::Verified;
    std::string witness;

    void check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_passed() const;
    std::string str() const;
};

struct RegularityResult {
    bool regular = false;
    int failure_index = -1; // 1-based index of the first failing element
};

RegularityResult is_regular_sequence(const RingPtr& ring, const std::vector<Poly>& f);

// H^{-q}(K(f_1,...,f_n)), the multitor of the hypersurfaces cut by the f_i.
SubquotientModule multitor_hypersurfaces(const RingPtr& ring, const std::vector<Poly>& f, int q);
TorReport multitor_report(const RingPtr& ring, const std::vector<Poly>& f, int qmax);

// Tor^q(R/I, R/J) via a free resolution of R/I tensored with R/J.
SubquotientModule tor_pair(const RingPtr& ring, const std::vector<Poly>& I,
                           const std::vector<Poly>& J, int q, int max_len = -1);
TorReport tor_pair_report(const RingPtr& ring, const std::vector<Poly>& I,
                          const std::vector<Poly>& J, int qmax = -1, int max_len = -1);

// Serre's intersection multiplicity sum_i (-1)^i length Tor^i(R/I, R/J).
std::int64_t serre_multiplicity(const RingPtr& ring, const std::vector<Poly>& I,
                                const std::vector<Poly>& J);

// ker(d_f^{-q}) / x*im(d_f^{-q-1})
SubquotientModule scaled_cohomology_model(const RingPtr& ring, const std::vector<Poly>& f,
                                          const Poly& x, int q);

VerifierReport check_prop_affine(const RingPtr& ring, const std::vector<Poly>& f, const Poly& x,
                                 int q);
VerifierReport check_cor_regular(const RingPtr& ring, const std::vector<Poly>& f, const Poly& x,
                                 int q);
VerifierReport check_pullback_square(const RingPtr& ring, const std::vector<Poly>& f,
                                     const Poly& x, int q);
VerifierReport check_tor_independence(const RingPtr& ring, const std::vector<Poly>& I,
                                      const Poly& x);
VerifierReport verify_main_theorem_affine(const RingPtr& ring, const std::vector<Poly>& f,
                                          const Poly& x, int qmax);

} // namespace multitor

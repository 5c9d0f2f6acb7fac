#include "multitor/tor.hpp"

#include <sstream>

namespace multitor {

std::string verdict_str(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::PreconditionFailed: return "PreconditionFailed";
    case Verdict::Refuted: return "Refuted";
    }
    return "Unknown";
}

void VerifierReport::check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(CheckItem{name, pass, detail});
}

bool VerifierReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string VerifierReport::str() const {
    std::ostringstream os;
    os << "claim: " << claim << "\n";
    os << "instance: " << instance << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "fail") << "] " << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << "\n";
    }
    if (!witness.empty())
        os << "witness: " << witness << "\n";
    os << "verdict: " << verdict_str(verdict) << "\n";
    return os.str();
}

namespace {

std::string poly_list_str(const std::vector<Poly>& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += ", ";
        s += f[i].str();
    }
    return s + ")";
}

std::vector<Poly> scale_list(const std::vector<Poly>& f, const Poly& x) {
    std::vector<Poly> out;
    out.reserve(f.size());
    for (const auto& p : f)
        out.push_back(p * x);
    return out;
}

SubquotientModule koszul_kernel(const FreeComplex& k, int q) {
    if (q == 0)
        return SubquotientModule::full_free(k.ring, k.rank_at(0));
    return kernel_module(k.diff(q));
}

SubquotientModule koszul_image(const FreeComplex& k, int q) {
    // image of d^{-(q+1)} inside degree -q; zero when there is no such differential
    if (q + 1 <= k.length())
        return image_module(k.diff(q + 1));
    return SubquotientModule::zero(k.ring, k.rank_at(q));
}

ModuleMap canonical_map(const SubquotientModule& source, const SubquotientModule& target) {
    // identity on generators; source and target share their generator list
    ModuleMap f;
    f.source = source;
    f.target = target;
    f.matrix = FreeMatrix::from_columns(source.ring, source.ambient_rank, source.gens);
    return f;
}

} // namespace

// ---------------------------------------------------------------------------
// Regular sequences

RegularityResult is_regular_sequence(const RingPtr& ring, const std::vector<Poly>& f) {
    std::vector<Poly> prefix;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Poly& fi = f[i];
        ModuleGB prefix_gb = ideal_groebner(ring, prefix);
        bool collapsed = !prefix_gb.basis.empty() && prefix_gb.basis[0].entries[0].is_constant();
        if (fi.is_zero()) {
            // 0 is a nonzerodivisor only on the zero ring
            if (!collapsed)
                return RegularityResult{false, static_cast<int>(i) + 1};
        } else if (!collapsed) {
            std::vector<Poly> quot = ideal_quotient(ring, prefix, fi);
            if (!ideal_equal(ideal_groebner(ring, quot), prefix_gb))
                return RegularityResult{false, static_cast<int>(i) + 1};
        }
        prefix.push_back(fi);
    }
    return RegularityResult{true, -1};
}

// ---------------------------------------------------------------------------
// Multitors of hypersurfaces

SubquotientModule multitor_hypersurfaces(const RingPtr& ring, const std::vector<Poly>& f,
                                         int q) {
    require(q >= 0, ErrorCode::DegreeOutOfRange, "q must be nonnegative");
    for (const auto& p : f)
        require(!p.is_zero(), ErrorCode::ZeroDivisorGenerator,
                "hypersurface generators must be nonzero");
    if (q > static_cast<int>(f.size()))
        return SubquotientModule::zero(ring, 0);
    FreeComplex k = koszul_complex(ring, f);
    return homology(k, -q);
}

TorReport multitor_report(const RingPtr& ring, const std::vector<Poly>& f, int qmax) {
    for (const auto& p : f)
        require(!p.is_zero(), ErrorCode::ZeroDivisorGenerator,
                "hypersurface generators must be nonzero");
    FreeComplex k = koszul_complex(ring, f);
    TorReport rep;
    for (int q = 0; q <= qmax; ++q) {
        TorEntry e;
        e.q = q;
        e.module = (q <= k.length()) ? homology(k, -q) : SubquotientModule::zero(ring, 0);
        e.length = module_length(e.module);
        e.rank = generic_rank(e.module);
        e.provenance = "koszul(f)";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Tor of a pair of ideals

namespace {

SubquotientModule tor_from_resolution(const RingPtr& ring, const FreeComplex& res,
                                      const std::vector<Poly>& J, int q) {
    if (q > res.length())
        return SubquotientModule::zero(ring, 0);
    int rank_q = res.rank_at(q);

    std::vector<FreeVector> gens;
    if (q == 0) {
        gens = SubquotientModule::full_free(ring, rank_q).gens;
    } else {
        // preimage of J * R^{rank_{q-1}} under d^{-q}
        std::vector<FreeVector> jblock;
        for (int i = 0; i < res.rank_at(q - 1); ++i)
            for (const auto& g : J)
                if (!g.is_zero())
                    jblock.push_back(FreeVector::unit(ring, res.rank_at(q - 1), i).mul_poly(g));
        gens = preimage_generators(res.diff(q), jblock);
    }

    std::vector<FreeVector> rels;
    if (q + 1 <= res.length())
        for (const auto& c : res.diff(q + 1).columns())
            if (!c.is_zero())
                rels.push_back(c);
    for (int i = 0; i < rank_q; ++i)
        for (const auto& g : J)
            if (!g.is_zero())
                rels.push_back(FreeVector::unit(ring, rank_q, i).mul_poly(g));

    SubquotientModule m;
    m.ring = ring;
    m.ambient_rank = rank_q;
    m.gens = std::move(gens);
    m.rels = std::move(rels);
    return m;
}

} // namespace

SubquotientModule tor_pair(const RingPtr& ring, const std::vector<Poly>& I,
                           const std::vector<Poly>& J, int q, int max_len) {
    require(q >= 0, ErrorCode::DegreeOutOfRange, "q must be nonnegative");
    if (max_len < 0)
        max_len = ring->nvars() + 1;
    FreeComplex res = free_resolution(ring, I, max_len);
    return tor_from_resolution(ring, res, J, q);
}

TorReport tor_pair_report(const RingPtr& ring, const std::vector<Poly>& I,
                          const std::vector<Poly>& J, int qmax, int max_len) {
    if (max_len < 0)
        max_len = ring->nvars() + 1;
    FreeComplex res = free_resolution(ring, I, max_len);
    if (qmax < 0)
        qmax = res.length();
    TorReport rep;
    for (int q = 0; q <= qmax; ++q) {
        TorEntry e;
        e.q = q;
        e.module = tor_from_resolution(ring, res, J, q);
        e.length = module_length(e.module);
        e.rank = generic_rank(e.module);
        e.provenance = "resolution(I) tensor R/J";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::int64_t serre_multiplicity(const RingPtr& ring, const std::vector<Poly>& I,
                                const std::vector<Poly>& J) {
    std::vector<Poly> sum = I;
    sum.insert(sum.end(), J.begin(), J.end());
    require(is_zero_dimensional(ring, sum), ErrorCode::NotZeroDimensional,
            "the intersection is not zero-dimensional");
    TorReport rep = tor_pair_report(ring, I, J);
    std::int64_t m = 0;
    std::int64_t sign = 1;
    for (const auto& e : rep.entries) {
        require(e.length.has_value(), ErrorCode::LengthNotLocal,
                "Tor module of infinite length in a zero-dimensional intersection");
        m += sign * static_cast<std::int64_t>(*e.length);
        sign = -sign;
    }
    return m;
}

// ---------------------------------------------------------------------------
// The scaled cohomology model of Prop 3.1

SubquotientModule scaled_cohomology_model(const RingPtr& ring, const std::vector<Poly>& f,
                                          const Poly& x, int q) {
    require(!x.is_zero(), ErrorCode::ZeroScalar, "scaling element must be nonzero");
    require(q >= 0, ErrorCode::DegreeOutOfRange, "q must be nonnegative");
    int n = static_cast<int>(f.size());
    if (q > n)
        return SubquotientModule::zero(ring, 0);
    FreeComplex k = koszul_complex(ring, f);
    SubquotientModule ker = koszul_kernel(k, q);
    SubquotientModule im = koszul_image(k, q);
    return quotient_module(ker, scale_submodule(im, x));
}

// ---------------------------------------------------------------------------
// Verifiers

VerifierReport check_prop_affine(const RingPtr& ring, const std::vector<Poly>& f, const Poly& x,
                                 int q) {
    int n = static_cast<int>(f.size());
    VerifierReport rep;
    rep.claim = "prop31";
    rep.instance = "f = " + poly_list_str(f) + "; x = " + x.str() + "; q = " + std::to_string(q);
    require(q >= 0 && q <= n, ErrorCode::DegreeOutOfRange,
            "q must lie between 0 and the sequence length");

    if (x.is_zero()) {
        rep.check("x_nonzerodivisor", false, "x = 0 is a zerodivisor");
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = "x = 0";
        return rep;
    }
    rep.check("x_nonzerodivisor", true, "x is nonzero in a domain");

    FreeComplex kf = koszul_complex(ring, f);
    FreeComplex kxf = koszul_complex(ring, scale_list(f, x));

    bool diff_ok = true;
    for (int d = 1; d <= n; ++d)
        if (!(kxf.diff(d) == kf.diff(d).scaled(x))) {
            diff_ok = false;
            break;
        }
    rep.check("differential_scaling", diff_ok, "d_{xf} = x * d_f entrywise");

    SubquotientModule ker_f = koszul_kernel(kf, q);
    SubquotientModule ker_xf = koszul_kernel(kxf, q);
    bool ker_ok = submodule_equal(ker_xf, ker_f);
    rep.check("kernel_equality", ker_ok, "ker(d_{xf}^{-q}) = ker(d_f^{-q})");

    SubquotientModule im_f = koszul_image(kf, q);
    SubquotientModule im_xf = koszul_image(kxf, q);
    bool im_ok = submodule_equal(im_xf, scale_submodule(im_f, x));
    rep.check("image_scaling", im_ok, "im(d_{xf}^{-q-1}) = x * im(d_f^{-q-1})");

    SubquotientModule lhs = homology(kxf, -q);
    SubquotientModule rhs = quotient_module(ker_f, scale_submodule(im_f, x));
    bool model_ok = subquotient_equal(lhs, rhs);
    rep.check("cohomology_model", model_ok,
              "H^{-q}(K(xf)) = ker(d_f^{-q}) / x*im(d_f^{-q-1}) as (U, V) spans");

    if (rep.all_passed()) {
        rep.verdict = Verdict::Verified;
    } else {
        rep.verdict = Verdict::Refuted;
        for (const auto& c : rep.checks)
            if (!c.pass) {
                rep.witness = c.name;
                break;
            }
    }
    return rep;
}

VerifierReport check_cor_regular(const RingPtr& ring, const std::vector<Poly>& f, const Poly& x,
                                 int q) {
    int n = static_cast<int>(f.size());
    VerifierReport rep;
    rep.claim = "cor32";
    rep.instance = "f = " + poly_list_str(f) + "; x = " + x.str() + "; q = " + std::to_string(q);
    require(q >= 1 && q <= n, ErrorCode::DegreeOutOfRange,
            "the corollary concerns cohomological degrees -q < 0");

    if (x.is_zero()) {
        rep.check("x_nonzerodivisor", false, "x = 0 is a zerodivisor");
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = "x = 0";
        return rep;
    }
    RegularityResult reg = is_regular_sequence(ring, f);
    if (!reg.regular) {
        rep.check("sequence_regular", false,
                  "sequence fails regularity at index " + std::to_string(reg.failure_index));
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = "f_" + std::to_string(reg.failure_index);
        return rep;
    }
    rep.check("sequence_regular", true);

    FreeComplex kf = koszul_complex(ring, f);
    SubquotientModule ker = koszul_kernel(kf, q);
    SubquotientModule im = koszul_image(kf, q);
    bool exact = submodule_equal(im, ker);
    rep.check("image_equals_kernel", exact, "im(d_f^{-q-1}) = ker(d_f^{-q}) by regularity");

    SubquotientModule model = quotient_module(ker, scale_submodule(im, x));
    SubquotientModule tensor = quotient_module(ker, scale_submodule(ker, x));
    MapCertificate cert = map_is_bijective(canonical_map(model, tensor));
    rep.check("canonical_map_bijective", cert.verdict == MapVerdict::Bijective,
              cert.verdict == MapVerdict::Bijective
                  ? "ker/x*im -> ker (x) R/(x) is an isomorphism"
                  : cert.detail);

    rep.verdict = rep.all_passed() ? Verdict::Verified : Verdict::Refuted;
    if (rep.verdict == Verdict::Refuted && cert.witness.has_value())
        rep.witness = cert.witness->str();
    return rep;
}

VerifierReport check_pullback_square(const RingPtr& ring, const std::vector<Poly>& f,
                                     const Poly& x, int q) {
    int n = static_cast<int>(f.size());
    VerifierReport rep;
    rep.claim = "pullback";
    rep.instance = "f = " + poly_list_str(f) + "; x = " + x.str() + "; q = " + std::to_string(q);
    require(q >= 0 && q <= n, ErrorCode::DegreeOutOfRange,
            "q must lie between 0 and the sequence length");

    if (x.is_zero()) {
        rep.check("x_nonzerodivisor", false, "x = 0 is a zerodivisor");
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = "x = 0";
        return rep;
    }

    FreeComplex kf = koszul_complex(ring, f);
    SubquotientModule ker = koszul_kernel(kf, q);
    SubquotientModule im = koszul_image(kf, q);
    SubquotientModule h = quotient_module(ker, im);
    SubquotientModule xker = scale_submodule(SubquotientModule::submodule(ring, ker.ambient_rank,
                                                                          ker.gens),
                                             x);
    SubquotientModule xim = scale_submodule(im, x);

    // associated-primes hypothesis, checked two ways
    auto witness = mult_injective_witness(h, x);
    bool inj = !witness.has_value();
    SubquotientModule meet = submodule_intersect(
        im, SubquotientModule::submodule(ring, ker.ambient_rank, xker.gens));
    bool meet_ok = submodule_equal(meet, xim);
    require(inj == meet_ok, ErrorCode::Internal,
            "precondition routes disagree: mult_injective vs im cap x*ker = x*im");
    if (!inj) {
        rep.check("x_injective_on_homology", false,
                  "multiplication by x kills a class of ker/im");
        rep.check("intersection_condition", meet_ok, "im cap x*ker = x*im");
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = witness->str();
        return rep;
    }
    rep.check("x_injective_on_homology", true, "multiplication by x is injective on ker/im");
    rep.check("intersection_condition", true, "im cap x*ker = x*im");

    // corners of the square
    SubquotientModule model = quotient_module(ker, xim);           // ker / x*im
    SubquotientModule tensor = quotient_module(ker, xker);         // ker (x) R/(x)
    SubquotientModule hbar = quotient_module(ker, submodule_sum(im, xker)); // h (x) R/(x)

    ModuleMap bottom = canonical_map(h, hbar);   // ker/im -> ker/(im + x*ker)
    ModuleMap right = canonical_map(tensor, hbar);
    PullbackResult pb = pullback(bottom, right);

    // canonical map ker/x*im -> pullback, u -> (u, u)
    std::vector<FreeVector> cols;
    for (const auto& u : model.gens) {
        FreeVector w = FreeVector::zero(ring, pb.module.ambient_rank);
        for (int i = 0; i < ker.ambient_rank; ++i) {
            w.entries[static_cast<std::size_t>(i)] = u.entries[static_cast<std::size_t>(i)];
            w.entries[static_cast<std::size_t>(ker.ambient_rank + i)] =
                u.entries[static_cast<std::size_t>(i)];
        }
        cols.push_back(std::move(w));
    }
    ModuleMap into;
    into.source = model;
    into.target = pb.module;
    into.matrix = FreeMatrix::from_columns(ring, pb.module.ambient_rank, cols);

    MapCertificate cert = map_is_bijective(into);
    rep.check("canonical_map_bijective", cert.verdict == MapVerdict::Bijective,
              cert.verdict == MapVerdict::Bijective
                  ? "ker/x*im is the pullback of {ker/im -> ker/im (x) R/(x) <- ker (x) R/(x)}"
                  : cert.detail);

    rep.verdict = rep.all_passed() ? Verdict::Verified : Verdict::Refuted;
    if (rep.verdict == Verdict::Refuted && cert.witness.has_value())
        rep.witness = cert.witness->str();
    return rep;
}

VerifierReport check_tor_independence(const RingPtr& ring, const std::vector<Poly>& I,
                                      const Poly& x) {
    require(!x.is_zero(), ErrorCode::ZeroScalar, "x must be nonzero");
    VerifierReport rep;
    rep.claim = "torind";
    rep.instance = "I = " + poly_list_str(I) + "; x = " + x.str();

    std::vector<Poly> quot = ideal_quotient(ring, I, x);
    ModuleGB gb_i = ideal_groebner(ring, I);
    bool tor1_zero = ideal_equal(ideal_groebner(ring, quot), gb_i);
    rep.check("tor1_vanishes", tor1_zero, "Tor^1(R/I, R/(x)) = (I : x)/I");
    rep.check("tor_higher_structural", true,
              "the resolution R --x--> R of R/(x) has length 1, so Tor^q = 0 for q >= 2");

    if (tor1_zero) {
        rep.verdict = Verdict::Verified;
    } else {
        rep.verdict = Verdict::Refuted;
        for (const auto& g : quot)
            if (!ideal_contains(gb_i, g)) {
                rep.witness = g.str();
                break;
            }
    }
    return rep;
}

VerifierReport verify_main_theorem_affine(const RingPtr& ring, const std::vector<Poly>& f,
                                          const Poly& x, int qmax) {
    int n = static_cast<int>(f.size());
    VerifierReport rep;
    rep.claim = "main";
    rep.instance =
        "f = " + poly_list_str(f) + "; x = " + x.str() + "; qmax = " + std::to_string(qmax);
    require(qmax >= 0, ErrorCode::DegreeOutOfRange, "qmax must be nonnegative");

    if (x.is_zero()) {
        rep.check("divisor_nonzero", false, "x = 0 does not cut a divisor");
        rep.verdict = Verdict::PreconditionFailed;
        rep.witness = "x = 0";
        return rep;
    }
    rep.check("divisor_nonzero", true);
    for (const auto& p : f)
        if (p.is_zero()) {
            rep.check("sequence_nonzero", false, "some f_i is zero");
            rep.verdict = Verdict::PreconditionFailed;
            rep.witness = "f contains 0";
            return rep;
        }
    rep.check("sequence_nonzero", true, "Y_i are cut by x*f_i, Z_i by f_i, D by x");

    FreeComplex kxf = koszul_complex(ring, scale_list(f, x));
    bool precondition_failed = false;
    for (int q = 0; q <= qmax; ++q) {
        std::string tag = "q" + std::to_string(q);
        SubquotientModule via_koszul = (q <= n) ? homology(kxf, -q)
                                                : SubquotientModule::zero(ring, 0);
        SubquotientModule via_model = scaled_cohomology_model(ring, f, x, q);
        bool agree = subquotient_equal(via_koszul, via_model);
        rep.check(tag + ".koszul_equals_model", agree,
                  "H^{-q}(K(xf)) matches ker/x*im as (U, V) spans");

        if (q <= n) {
            VerifierReport sub = check_pullback_square(ring, f, x, q);
            bool ok = sub.verdict == Verdict::Verified;
            rep.check(tag + ".pullback_square", ok,
                      ok ? "model is the pullback corner of the square"
                         : "pullback square: " + verdict_str(sub.verdict) +
                               (sub.witness.empty() ? "" : ", witness " + sub.witness));
            if (sub.verdict == Verdict::PreconditionFailed) {
                precondition_failed = true;
                if (rep.witness.empty())
                    rep.witness = sub.witness;
            }
        } else {
            rep.check(tag + ".pullback_square", true, "all corners vanish beyond degree n");
        }
    }
    rep.check("twist_trivial_on_chart", true,
              "O(D)^{-q} is trivialized on the affine chart; no twist factor applied");

    if (precondition_failed)
        rep.verdict = Verdict::PreconditionFailed;
    else
        rep.verdict = rep.all_passed() ? Verdict::Verified : Verdict::Refuted;
    return rep;
}

} // namespace multitor

#include "multitor/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace multitor {

Cmp modterm_cmp(const ModTerm& a, const ModTerm& b, MonomialOrder order) {
    if (a.comp != b.comp)
        return a.comp < b.comp ? Cmp::Greater : Cmp::Less; // lower component dominant
    return monomial_cmp(a.exp, b.exp, order);
}

bool modterm_divides(const ModTerm& a, const ModTerm& b) {
    return a.comp == b.comp && monomial_divides(a.exp, b.exp);
}

ModTerm lead_modterm(const FreeVector& v) {
    int c = v.lead_comp();
    require(c >= 0, ErrorCode::Internal, "lead term of the zero vector");
    return ModTerm{c, v.entries[static_cast<std::size_t>(c)].lead_monomial()};
}

const Scalar& lead_modcoeff(const FreeVector& v) {
    int c = v.lead_comp();
    require(c >= 0, ErrorCode::Internal, "lead coefficient of the zero vector");
    return v.entries[static_cast<std::size_t>(c)].lead_coeff();
}

namespace {

FreeVector make_monic(const FreeVector& v) {
    const Scalar& lc = lead_modcoeff(v);
    if (lc == 1)
        return v;
    return v.scaled(field_div(v.ring->field(), Scalar(1), lc));
}

bool rational_field(const RingPtr& ring) {
    return ring->field().kind == FieldKind::Rationals;
}

// Over Q: rescale to integer coefficients with content 1 and positive lead.
// Keeps coefficient growth under control during Buchberger runs.
FreeVector make_primitive(const FreeVector& v, Scalar* applied = nullptr) {
    if (applied)
        *applied = 1;
    if (v.is_zero())
        return v;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& p : v.entries)
        for (const auto& t : p.terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        }
    Scalar scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    if (lead_modcoeff(v) < 0)
        scale = -scale;
    if (applied)
        *applied = scale;
    if (scale == 1)
        return v;
    return v.scaled(scale);
}

FreeVector normalize_element(const FreeVector& v) {
    return rational_field(v.ring) ? make_primitive(v) : make_monic(v);
}

// Full normal form of v against (basis, leads). Works for arbitrary lead
// coefficients; over Q the reduction is fraction-free with a tracked
// multiplier, so the returned vector is still the exact canonical remainder.
FreeVector reduce_full(const FreeVector& v, const std::vector<const FreeVector*>& basis,
                       const std::vector<ModTerm>& leads) {
    if (v.is_zero())
        return v;
    const RingPtr& ring = v.ring;
    const FieldSpec& field = ring->field();
    const bool rational = rational_field(ring);
    FreeVector work = v;
    Scalar lam(1); // invariant: v == work/lam + rem  (mod the submodule)
    std::vector<std::vector<Term>> rem(static_cast<std::size_t>(v.rank()));
    while (!work.is_zero()) {
        int comp = work.lead_comp();
        Poly& entry = work.entries[static_cast<std::size_t>(comp)];
        const Term lead = entry.lead_term();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (leads[k].comp != comp || !monomial_divides(leads[k].exp, lead.exp))
                continue;
            Exponents e = monomial_quot(lead.exp, leads[k].exp);
            const Scalar& gc = lead_modcoeff(*basis[k]);
            if (rational) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), lead.coeff.get_num().get_mpz_t(),
                        gc.get_num().get_mpz_t());
                Scalar a(mpq_class(gc.get_num()) / mpq_class(g));
                Scalar b(mpq_class(lead.coeff.get_num()) / mpq_class(g));
                if (a < 0) {
                    a = -a;
                    b = -b;
                }
                work = (a == 1 ? work : work.scaled(a)).add_mul(*basis[k], e, -b);
                lam = lam * a;
                Scalar applied;
                work = make_primitive(work, &applied);
                lam = lam * applied;
            } else {
                work = work.add_mul(*basis[k], e,
                                    field_neg(field, field_div(field, lead.coeff, gc)));
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            Scalar c = rational ? Scalar(lead.coeff / lam) : lead.coeff;
            rem[static_cast<std::size_t>(comp)].push_back(Term{lead.exp, std::move(c)});
            entry = Poly::from_canonical_terms(
                ring, std::vector<Term>(entry.terms().begin() + 1, entry.terms().end()));
        }
    }
    FreeVector out = FreeVector::zero(ring, v.rank());
    for (std::size_t c = 0; c < rem.size(); ++c)
        out.entries[c] = Poly::from_canonical_terms(ring, std::move(rem[c]));
    return out;
}

std::vector<const FreeVector*> ptr_view(const std::vector<FreeVector>& xs) {
    std::vector<const FreeVector*> p;
    p.reserve(xs.size());
    for (const auto& x : xs)
        p.push_back(&x);
    return p;
}

struct SPair {
    int deg;
    ModTerm lcm;
    int i, j;
};

struct SPairLess {
    MonomialOrder order;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        Cmp c = modterm_cmp(a.lcm, b.lcm, order);
        if (c != Cmp::Equal)
            return c == Cmp::Less;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

// true when the Buchberger product criterion is valid: both vectors supported
// in a single (common) component, with coprime lead monomials
bool product_criterion(const FreeVector& f, const FreeVector& g, const ModTerm& lf,
                       const ModTerm& lg) {
    if (!monomial_coprime(lf.exp, lg.exp))
        return false;
    auto single = [](const FreeVector& v, int comp) {
        for (int c = 0; c < v.rank(); ++c)
            if (c != comp && !v.entries[static_cast<std::size_t>(c)].is_zero())
                return false;
        return true;
    };
    return single(f, lf.comp) && single(g, lg.comp);
}

// Buchberger with the Gebauer-Moller pair update and normal selection strategy.
std::vector<FreeVector> buchberger_core(const RingPtr& ring, int rank,
                                        const std::vector<FreeVector>& gens) {
    MonomialOrder order = ring->order();
    std::vector<FreeVector> basis;
    std::vector<ModTerm> leads;
    std::set<SPair, SPairLess> pairs{SPairLess{order}};

    auto lcm_of = [&](int i, int j) {
        return ModTerm{leads[static_cast<std::size_t>(i)].comp,
                       monomial_lcm(leads[static_cast<std::size_t>(i)].exp,
                                    leads[static_cast<std::size_t>(j)].exp)};
    };

    auto add_element = [&](const FreeVector& h) {
        int t = static_cast<int>(basis.size());
        basis.push_back(normalize_element(h));
        leads.push_back(lead_modterm(basis.back()));
        const ModTerm& lt = leads.back();

        struct Cand {
            int i;
            Exponents lcm;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i)
            if (leads[static_cast<std::size_t>(i)].comp == lt.comp)
                cands.push_back(
                    Cand{i, monomial_lcm(leads[static_cast<std::size_t>(i)].exp, lt.exp)});

        // criterion B on old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const SPair& p = *it;
            if (p.lcm.comp == lt.comp && monomial_divides(lt.exp, p.lcm.exp) &&
                monomial_lcm(leads[static_cast<std::size_t>(p.i)].exp, lt.exp) != p.lcm.exp &&
                monomial_lcm(leads[static_cast<std::size_t>(p.j)].exp, lt.exp) != p.lcm.exp)
                it = pairs.erase(it);
            else
                ++it;
        }

        // criterion M: drop candidates whose lcm is properly divided by another's
        for (auto& a : cands)
            for (const auto& b : cands) {
                if (a.i == b.i)
                    continue;
                if (b.lcm != a.lcm && monomial_divides(b.lcm, a.lcm)) {
                    a.keep = false;
                    break;
                }
            }

        // criterion F: one representative per lcm class, preferring a class
        // killed entirely by the product criterion
        std::map<Exponents, std::vector<int>> classes;
        for (const auto& c : cands)
            if (c.keep)
                classes[c.lcm].push_back(c.i);
        for (const auto& [lcm_exp, members] : classes) {
            bool killed = false;
            for (int i : members) {
                if (product_criterion(basis[static_cast<std::size_t>(i)], basis.back(),
                                      leads[static_cast<std::size_t>(i)], lt)) {
                    killed = true;
                    break;
                }
            }
            if (killed)
                continue;
            int rep = *std::min_element(members.begin(), members.end());
            pairs.insert(SPair{monomial_degree(lcm_exp), ModTerm{lt.comp, lcm_exp}, rep, t});
        }
    };

    for (const auto& g : gens) {
        require_same_ring(ring, g.ring);
        require(g.rank() == rank, ErrorCode::RankMismatch,
                "generator rank does not match module rank");
        FreeVector r = reduce_full(g, ptr_view(basis), leads);
        if (!r.is_zero())
            add_element(r);
    }

    const bool rational = rational_field(ring);
    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const FreeVector& f = basis[static_cast<std::size_t>(p.i)];
        const FreeVector& g = basis[static_cast<std::size_t>(p.j)];
        const ModTerm& lf = leads[static_cast<std::size_t>(p.i)];
        const ModTerm& lg = leads[static_cast<std::size_t>(p.j)];
        Scalar a = lead_modcoeff(g);
        Scalar b = lead_modcoeff(f);
        if (rational) {
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
            a = Scalar(mpq_class(a.get_num()) / mpq_class(d));
            b = Scalar(mpq_class(b.get_num()) / mpq_class(d));
        }
        FreeVector s = f.mul_term(monomial_quot(p.lcm.exp, lf.exp), a) -
                       g.mul_term(monomial_quot(p.lcm.exp, lg.exp), b);
        FreeVector r = reduce_full(s, ptr_view(basis), leads);
        if (!r.is_zero())
            add_element(r);
    }
    return basis;
}

} // namespace

ModuleGB module_groebner(const RingPtr& ring, int rank, const std::vector<FreeVector>& gens) {
    require(rank >= 0, ErrorCode::RankMismatch, "negative module rank");
    std::vector<FreeVector> basis = buchberger_core(ring, rank, gens);

    // minimalize: drop elements whose lead is divisible by another kept lead
    MonomialOrder order = ring->order();
    std::vector<ModTerm> leads;
    leads.reserve(basis.size());
    for (const auto& b : basis)
        leads.push_back(lead_modterm(b));
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (k == l || !keep[l])
                continue;
            if (modterm_divides(leads[l], leads[k]) &&
                (modterm_cmp(leads[l], leads[k], order) != Cmp::Equal || l < k)) {
                keep[k] = false;
                break;
            }
        }
    std::vector<FreeVector> min_basis;
    std::vector<ModTerm> min_leads;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (keep[k]) {
            min_basis.push_back(basis[k]);
            min_leads.push_back(leads[k]);
        }

    // tail-reduce each element against the others
    for (std::size_t k = 0; k < min_basis.size(); ++k) {
        std::vector<const FreeVector*> others;
        std::vector<ModTerm> other_leads;
        for (std::size_t l = 0; l < min_basis.size(); ++l)
            if (l != k) {
                others.push_back(&min_basis[l]);
                other_leads.push_back(min_leads[l]);
            }
        min_basis[k] = make_monic(reduce_full(min_basis[k], others, other_leads));
    }

    // canonical order: descending lead
    std::vector<std::size_t> idx(min_basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return modterm_cmp(min_leads[a], min_leads[b], order) == Cmp::Greater;
    });

    ModuleGB gb;
    gb.ring = ring;
    gb.rank = rank;
    for (std::size_t k : idx) {
        gb.basis.push_back(std::move(min_basis[k]));
        gb.leads.push_back(std::move(min_leads[k]));
    }
    return gb;
}

FreeVector normal_form(const FreeVector& v, const ModuleGB& gb) {
    require_same_ring(v.ring, gb.ring);
    require(v.rank() == gb.rank, ErrorCode::RankMismatch,
            "vector rank does not match module rank");
    return reduce_full(v, ptr_view(gb.basis), gb.leads);
}

bool ModuleGB::contains(const FreeVector& v) const { return normal_form(v, *this).is_zero(); }

std::string ModuleGB::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i)
            os << ", ";
        os << basis[i].str();
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Augmented GB: lifts and syzygies

AugmentedGB augmented_groebner(const RingPtr& ring, int head_rank,
                               const std::vector<FreeVector>& gens) {
    int n = static_cast<int>(gens.size());
    std::vector<FreeVector> aug;
    aug.reserve(gens.size());
    for (int j = 0; j < n; ++j) {
        const FreeVector& g = gens[static_cast<std::size_t>(j)];
        require_same_ring(ring, g.ring);
        require(g.rank() == head_rank, ErrorCode::RankMismatch,
                "generator rank does not match module rank");
        FreeVector a = FreeVector::zero(ring, head_rank + n);
        for (int c = 0; c < head_rank; ++c)
            a.entries[static_cast<std::size_t>(c)] = g.entries[static_cast<std::size_t>(c)];
        a.entries[static_cast<std::size_t>(head_rank + j)] = Poly::one(ring);
        aug.push_back(std::move(a));
    }
    ModuleGB full = module_groebner(ring, head_rank + n, aug);

    AugmentedGB out;
    out.ring = ring;
    out.head_rank = head_rank;
    out.ngens = n;
    for (const auto& b : full.basis) {
        bool head_zero = true;
        for (int c = 0; c < head_rank; ++c)
            if (!b.entries[static_cast<std::size_t>(c)].is_zero()) {
                head_zero = false;
                break;
            }
        if (head_zero) {
            FreeVector tail = FreeVector::zero(ring, n);
            for (int j = 0; j < n; ++j)
                tail.entries[static_cast<std::size_t>(j)] =
                    b.entries[static_cast<std::size_t>(head_rank + j)];
            out.syzygies.push_back(std::move(tail));
        } else {
            out.mixed.push_back(b);
        }
    }
    out.head_gb.ring = ring;
    out.head_gb.rank = head_rank;
    for (const auto& m : out.mixed) {
        FreeVector head = FreeVector::zero(ring, head_rank);
        for (int c = 0; c < head_rank; ++c)
            head.entries[static_cast<std::size_t>(c)] = m.entries[static_cast<std::size_t>(c)];
        out.head_gb.leads.push_back(lead_modterm(head));
        out.head_gb.basis.push_back(std::move(head));
    }
    return out;
}

std::optional<std::vector<Poly>> AugmentedGB::lift(const FreeVector& v) const {
    require_same_ring(v.ring, ring);
    require(v.rank() == head_rank, ErrorCode::RankMismatch,
            "vector rank does not match module rank");
    FreeVector a = FreeVector::zero(ring, head_rank + ngens);
    for (int c = 0; c < head_rank; ++c)
        a.entries[static_cast<std::size_t>(c)] = v.entries[static_cast<std::size_t>(c)];
    std::vector<const FreeVector*> all;
    std::vector<ModTerm> all_leads;
    for (const auto& m : mixed) {
        all.push_back(&m);
        all_leads.push_back(lead_modterm(m));
    }
    std::vector<FreeVector> syz_emb;
    syz_emb.reserve(syzygies.size());
    for (const auto& s : syzygies) {
        FreeVector e = FreeVector::zero(ring, head_rank + ngens);
        for (int j = 0; j < ngens; ++j)
            e.entries[static_cast<std::size_t>(head_rank + j)] =
                s.entries[static_cast<std::size_t>(j)];
        syz_emb.push_back(std::move(e));
    }
    for (const auto& s : syz_emb) {
        all.push_back(&s);
        all_leads.push_back(lead_modterm(s));
    }
    FreeVector r = reduce_full(a, all, all_leads);
    for (int c = 0; c < head_rank; ++c)
        if (!r.entries[static_cast<std::size_t>(c)].is_zero())
            return std::nullopt;
    std::vector<Poly> coords;
    coords.reserve(static_cast<std::size_t>(ngens));
    for (int j = 0; j < ngens; ++j)
        coords.push_back(-r.entries[static_cast<std::size_t>(head_rank + j)]);
    return coords;
}

std::optional<std::vector<Poly>> membership_with_lift(const FreeVector& v,
                                                      const std::vector<FreeVector>& gens) {
    const RingPtr& ring = v.ring;
    AugmentedGB aug = augmented_groebner(ring, v.rank(), gens);
    auto coords = aug.lift(v);
    if (!coords)
        return std::nullopt;
    // re-expand exactly
    FreeVector check = FreeVector::zero(ring, v.rank());
    for (std::size_t j = 0; j < gens.size(); ++j)
        check = check + gens[j].mul_poly((*coords)[j]);
    require(check == v, ErrorCode::Internal, "lift re-expansion failed");
    return coords;
}

std::vector<FreeVector> syzygy_generators(const RingPtr& ring, int rank,
                                          const std::vector<FreeVector>& gens) {
    return augmented_groebner(ring, rank, gens).syzygies;
}

FreeMatrix syzygy(const FreeMatrix& m) {
    std::vector<FreeVector> syz = syzygy_generators(m.ring, m.rows, m.columns());
    return FreeMatrix::from_columns(m.ring, m.cols, syz);
}

// ---------------------------------------------------------------------------
// Ideal-level wrappers

namespace {

std::vector<FreeVector> wrap_polys(const RingPtr& ring, const std::vector<Poly>& ps) {
    std::vector<FreeVector> v;
    v.reserve(ps.size());
    for (const auto& p : ps) {
        require_same_ring(ring, p.ring());
        v.push_back(FreeVector::from_poly(p));
    }
    return v;
}

} // namespace

ModuleGB ideal_groebner(const RingPtr& ring, const std::vector<Poly>& gens) {
    return module_groebner(ring, 1, wrap_polys(ring, gens));
}

Poly ideal_normal_form(const Poly& p, const ModuleGB& gb) {
    require(gb.rank == 1, ErrorCode::RankMismatch, "ideal operation on a higher-rank module");
    return normal_form(FreeVector::from_poly(p), gb).entries[0];
}

bool ideal_contains(const ModuleGB& gb, const Poly& p) {
    return ideal_normal_form(p, gb).is_zero();
}

bool ideal_equal(const ModuleGB& a, const ModuleGB& b) {
    if (a.rank != b.rank || a.basis.size() != b.basis.size())
        return false;
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        if (a.basis[i] != b.basis[i])
            return false;
    return true;
}

std::vector<Poly> gb_polys(const ModuleGB& gb) {
    require(gb.rank == 1, ErrorCode::RankMismatch, "ideal operation on a higher-rank module");
    std::vector<Poly> ps;
    ps.reserve(gb.basis.size());
    for (const auto& b : gb.basis)
        ps.push_back(b.entries[0]);
    return ps;
}

std::vector<Poly> ideal_quotient(const RingPtr& ring, const std::vector<Poly>& I, const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroDivisorArgument, "ideal quotient by zero");
    std::vector<Poly> stacked;
    stacked.push_back(f);
    for (const auto& g : I)
        stacked.push_back(g);
    std::vector<FreeVector> syz = syzygy_generators(ring, 1, wrap_polys(ring, stacked));
    std::vector<Poly> quot;
    for (const auto& s : syz) {
        const Poly& first = s.entries[0];
        if (!first.is_zero())
            quot.push_back(first);
    }
    // canonicalize through a reduced GB
    return gb_polys(ideal_groebner(ring, quot));
}

bool is_zero_dimensional(const RingPtr& ring, const std::vector<Poly>& I) {
    if (ring->nvars() == 0)
        return true;
    ModuleGB gb = ideal_groebner(ring, I);
    for (const auto& b : gb.basis)
        if (b.entries[0].is_constant())
            return true;
    for (int v = 0; v < ring->nvars(); ++v) {
        bool found = false;
        for (const auto& lt : gb.leads) {
            bool pure = lt.exp[static_cast<std::size_t>(v)] > 0;
            for (int w = 0; pure && w < ring->nvars(); ++w)
                if (w != v && lt.exp[static_cast<std::size_t>(w)] > 0)
                    pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

namespace {

std::uint64_t count_standard_monomials(const std::vector<Exponents>& leads, int nvars) {
    for (const auto& e : leads)
        if (monomial_is_one(e))
            return 0;
    if (nvars == 0)
        return 1;
    // bound per variable from pure-power leads (caller guarantees existence)
    Exponents bound(static_cast<std::size_t>(nvars), -1);
    for (const auto& e : leads) {
        int nz = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v)
            if (e[static_cast<std::size_t>(v)] > 0) {
                if (nz >= 0) {
                    pure = false;
                    break;
                }
                nz = v;
            }
        if (pure && nz >= 0) {
            int& b = bound[static_cast<std::size_t>(nz)];
            int d = e[static_cast<std::size_t>(nz)];
            if (b < 0 || d < b)
                b = d;
        }
    }
    for (int v = 0; v < nvars; ++v)
        require(bound[static_cast<std::size_t>(v)] > 0, ErrorCode::Internal,
                "standard monomial count on a non-zero-dimensional ideal");

    std::uint64_t count = 0;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    auto divisible = [&]() {
        for (const auto& l : leads)
            if (monomial_divides(l, e))
                return true;
        return false;
    };
    for (;;) {
        if (!divisible())
            ++count;
        int v = 0;
        while (v < nvars) {
            if (++e[static_cast<std::size_t>(v)] < bound[static_cast<std::size_t>(v)])
                break;
            e[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == nvars)
            break;
    }
    return count;
}

} // namespace

std::uint64_t quotient_dim(const RingPtr& ring, const std::vector<Poly>& I) {
    require(is_zero_dimensional(ring, I), ErrorCode::NotFiniteDimensional,
            "quotient is not finite-dimensional");
    ModuleGB gb = ideal_groebner(ring, I);
    std::vector<Exponents> leads;
    leads.reserve(gb.leads.size());
    for (const auto& lt : gb.leads)
        leads.push_back(lt.exp);
    return count_standard_monomials(leads, ring->nvars());
}

std::optional<std::uint64_t> codim_standard_monomials(const RingPtr& ring, int rank,
                                                      const std::vector<FreeVector>& gens) {
    ModuleGB gb = module_groebner(ring, rank, gens);
    std::uint64_t total = 0;
    for (int c = 0; c < rank; ++c) {
        std::vector<Exponents> leads;
        for (const auto& lt : gb.leads)
            if (lt.comp == c)
                leads.push_back(lt.exp);
        bool has_constant = false;
        for (const auto& e : leads)
            if (monomial_is_one(e))
                has_constant = true;
        if (has_constant)
            continue;
        if (ring->nvars() == 0) {
            total += 1;
            continue;
        }
        // finite iff every variable has a pure power among this component's leads
        for (int v = 0; v < ring->nvars(); ++v) {
            bool found = false;
            for (const auto& e : leads) {
                bool pure = e[static_cast<std::size_t>(v)] > 0;
                for (int w = 0; pure && w < ring->nvars(); ++w)
                    if (w != v && e[static_cast<std::size_t>(w)] > 0)
                        pure = false;
                if (pure) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return std::nullopt;
        }
        total += count_standard_monomials(leads, ring->nvars());
    }
    return total;
}

} // namespace multitor

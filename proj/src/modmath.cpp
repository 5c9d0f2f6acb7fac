#include "multitor/modmath.hpp"

#include <sstream>

namespace multitor {

SubquotientModule SubquotientModule::submodule(const RingPtr& ring, int ambient_rank,
                                               std::vector<FreeVector> gens) {
    SubquotientModule m;
    m.ring = ring;
    m.ambient_rank = ambient_rank;
    for (auto& g : gens) {
        require_same_ring(ring, g.ring);
        require(g.rank() == ambient_rank, ErrorCode::AmbientMismatch,
                "generator rank does not match ambient rank");
        if (!g.is_zero())
            m.gens.push_back(std::move(g));
    }
    return m;
}

SubquotientModule SubquotientModule::zero(const RingPtr& ring, int ambient_rank) {
    return submodule(ring, ambient_rank, {});
}

SubquotientModule SubquotientModule::full_free(const RingPtr& ring, int rank) {
    std::vector<FreeVector> gens;
    for (int i = 0; i < rank; ++i)
        gens.push_back(FreeVector::unit(ring, rank, i));
    return submodule(ring, rank, std::move(gens));
}

std::string SubquotientModule::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i)
            os << ", ";
        os << gens[i].str();
    }
    os << ">";
    if (!rels.empty()) {
        os << " / <";
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (i)
                os << ", ";
            os << rels[i].str();
        }
        os << ">";
    }
    return os.str();
}

void require_same_ambient(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ring(a.ring, b.ring);
    require(a.ambient_rank == b.ambient_rank, ErrorCode::AmbientMismatch,
            "modules live in different ambient free modules");
}

bool subquotient_well_formed(const SubquotientModule& m) {
    ModuleGB gb = module_groebner(m.ring, m.ambient_rank, m.gens);
    for (const auto& r : m.rels)
        if (!gb.contains(r))
            return false;
    return true;
}

SubquotientModule kernel_module(const FreeMatrix& m) {
    return SubquotientModule::submodule(m.ring, m.cols,
                                        syzygy_generators(m.ring, m.rows, m.columns()));
}

SubquotientModule image_module(const FreeMatrix& m) {
    return SubquotientModule::submodule(m.ring, m.rows, m.columns());
}

SubquotientModule scale_submodule(const SubquotientModule& m, const Poly& x) {
    require(!m.has_relations(), ErrorCode::HasRelations,
            "scaling is defined for genuine submodules only");
    require_same_ring(m.ring, x.ring());
    std::vector<FreeVector> gens;
    gens.reserve(m.gens.size());
    for (const auto& u : m.gens)
        gens.push_back(u.mul_poly(x));
    return SubquotientModule::submodule(m.ring, m.ambient_rank, std::move(gens));
}

bool submodule_equal(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ambient(a, b);
    ModuleGB ga = module_groebner(a.ring, a.ambient_rank, a.gens);
    ModuleGB gb = module_groebner(b.ring, b.ambient_rank, b.gens);
    return ideal_equal(ga, gb);
}

bool subquotient_equal(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ambient(a, b);
    ModuleGB ua = module_groebner(a.ring, a.ambient_rank, a.gens);
    ModuleGB ub = module_groebner(b.ring, b.ambient_rank, b.gens);
    if (!ideal_equal(ua, ub))
        return false;
    ModuleGB va = module_groebner(a.ring, a.ambient_rank, a.rels);
    ModuleGB vb = module_groebner(b.ring, b.ambient_rank, b.rels);
    return ideal_equal(va, vb);
}

bool submodule_contained(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ambient(a, b);
    ModuleGB gb = module_groebner(b.ring, b.ambient_rank, b.gens);
    for (const auto& g : a.gens)
        if (!gb.contains(g))
            return false;
    return true;
}

SubquotientModule submodule_intersect(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ambient(a, b);
    std::vector<FreeVector> stacked = a.gens;
    stacked.insert(stacked.end(), b.gens.begin(), b.gens.end());
    std::vector<FreeVector> syz = syzygy_generators(a.ring, a.ambient_rank, stacked);
    std::vector<FreeVector> gens;
    for (const auto& s : syz) {
        FreeVector w = FreeVector::zero(a.ring, a.ambient_rank);
        for (std::size_t i = 0; i < a.gens.size(); ++i)
            w = w + a.gens[i].mul_poly(s.entries[i]);
        if (!w.is_zero())
            gens.push_back(std::move(w));
    }
    // canonicalize generators through a reduced GB
    ModuleGB gb = module_groebner(a.ring, a.ambient_rank, gens);
    return SubquotientModule::submodule(a.ring, a.ambient_rank, gb.basis);
}

SubquotientModule submodule_sum(const SubquotientModule& a, const SubquotientModule& b) {
    require_same_ambient(a, b);
    std::vector<FreeVector> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return SubquotientModule::submodule(a.ring, a.ambient_rank, std::move(gens));
}

SubquotientModule quotient_module(const SubquotientModule& n, const SubquotientModule& w) {
    require_same_ambient(n, w);
    require(submodule_contained(w, n), ErrorCode::NotContained,
            "quotient by a module that is not contained");
    SubquotientModule q;
    q.ring = n.ring;
    q.ambient_rank = n.ambient_rank;
    q.gens = n.gens;
    q.rels = n.rels;
    for (const auto& u : w.gens)
        if (!u.is_zero())
            q.rels.push_back(u);
    return q;
}

FreeMatrix presentation(const SubquotientModule& m) {
    AugmentedGB aug = augmented_groebner(m.ring, m.ambient_rank, m.gens);
    std::vector<FreeVector> cols;
    for (const auto& r : m.rels) {
        auto c = aug.lift(r);
        require(c.has_value(), ErrorCode::IllFormed,
                "relation does not lie in the span of the generators: " + r.str());
        cols.push_back(FreeVector(m.ring, std::move(*c)));
    }
    for (const auto& s : aug.syzygies)
        cols.push_back(s);
    return FreeMatrix::from_columns(m.ring, static_cast<int>(m.gens.size()), cols);
}

std::optional<std::uint64_t> module_length(const SubquotientModule& m) {
    FreeMatrix p = presentation(m);
    int ngens = p.rows;
    ModuleGB gb = module_groebner(m.ring, ngens, p.columns());
    std::vector<FreeVector> basis_gens = gb.basis;
    auto d = codim_standard_monomials(m.ring, ngens, basis_gens);
    if (!d.has_value())
        return std::nullopt;
    if (*d == 0)
        return 0;
    // support must be contained in the origin: x_v^d kills the module
    int nv = m.ring->nvars();
    for (int v = 0; v < nv; ++v) {
        Exponents e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(v)] = static_cast<int>(*d);
        Poly xd = Poly::monomial(m.ring, std::move(e), 1);
        for (int j = 0; j < ngens; ++j) {
            FreeVector u = FreeVector::unit(m.ring, ngens, j).mul_poly(xd);
            require(gb.contains(u), ErrorCode::LengthNotLocal,
                    "module has finite dimension but support away from the origin (variable " +
                        m.ring->var_name(v) + ")");
        }
    }
    return d;
}

int generic_rank(const SubquotientModule& m) {
    int ru = matrix_rank(FreeMatrix::from_columns(m.ring, m.ambient_rank, m.gens));
    int rv = matrix_rank(FreeMatrix::from_columns(m.ring, m.ambient_rank, m.rels));
    return ru - rv;
}

// ---------------------------------------------------------------------------
// Maps

ModuleMap ModuleMap::identity(const SubquotientModule& m) {
    ModuleMap f;
    f.source = m;
    f.target = m;
    f.matrix = FreeMatrix::from_columns(m.ring, m.ambient_rank, m.gens);
    return f;
}

std::string ModuleMap::str() const {
    return source.str() + " -> " + target.str() + " via " + matrix.str();
}

bool map_well_defined(const ModuleMap& f, std::string* why) {
    if (!same_ring(f.source.ring, f.target.ring)) {
        if (why)
            *why = "source and target rings differ";
        return false;
    }
    if (f.matrix.rows != f.target.ambient_rank ||
        f.matrix.cols != static_cast<int>(f.source.gens.size())) {
        if (why)
            *why = "matrix shape does not match source generators / target ambient";
        return false;
    }
    ModuleGB ut = module_groebner(f.target.ring, f.target.ambient_rank, f.target.gens);
    for (int j = 0; j < f.matrix.cols; ++j)
        if (!ut.contains(f.matrix.column(j))) {
            if (why)
                *why = "image of generator " + std::to_string(j) +
                       " is not in the target generator span";
            return false;
        }
    ModuleGB vt = module_groebner(f.target.ring, f.target.ambient_rank, f.target.rels);
    FreeMatrix pres = presentation(f.source);
    for (int j = 0; j < pres.cols; ++j) {
        FreeVector img = f.matrix.apply(pres.column(j));
        if (!vt.contains(img)) {
            if (why)
                *why = "image of a source relation is not in the target relation span";
            return false;
        }
    }
    return true;
}

FreeVector map_apply(const ModuleMap& f, const FreeVector& v) {
    auto coords = membership_with_lift(v, f.source.gens);
    require(coords.has_value(), ErrorCode::NotContained,
            "vector is not in the source generator span");
    return f.matrix.apply(FreeVector(f.source.ring, std::move(*coords)));
}

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f) {
    require(subquotient_equal(f.target, g.source), ErrorCode::TargetMismatch,
            "maps are not composable");
    AugmentedGB aug = augmented_groebner(g.source.ring, g.source.ambient_rank, g.source.gens);
    std::vector<FreeVector> cols;
    for (int j = 0; j < f.matrix.cols; ++j) {
        auto c = aug.lift(f.matrix.column(j));
        require(c.has_value(), ErrorCode::IllFormedMap,
                "image column is not in the span of the middle module");
        cols.push_back(g.matrix.apply(FreeVector(g.source.ring, std::move(*c))));
    }
    ModuleMap h;
    h.source = f.source;
    h.target = g.target;
    h.matrix = FreeMatrix::from_columns(g.target.ring, g.target.ambient_rank, cols);
    return h;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
    if (!subquotient_equal(f.source, g.source) || !subquotient_equal(f.target, g.target))
        return false;
    if (f.matrix.cols != g.matrix.cols)
        return false;
    ModuleGB vt = module_groebner(f.target.ring, f.target.ambient_rank, f.target.rels);
    for (int j = 0; j < f.matrix.cols; ++j)
        if (!vt.contains(f.matrix.column(j) - g.matrix.column(j)))
            return false;
    return true;
}

std::vector<FreeVector> colon_by_scalar(const RingPtr& ring, int rank,
                                        const std::vector<FreeVector>& gens, const Poly& x) {
    std::vector<FreeVector> stacked;
    for (int i = 0; i < rank; ++i)
        stacked.push_back(FreeVector::unit(ring, rank, i).mul_poly(x));
    stacked.insert(stacked.end(), gens.begin(), gens.end());
    std::vector<FreeVector> syz = syzygy_generators(ring, rank, stacked);
    std::vector<FreeVector> out;
    for (const auto& s : syz) {
        FreeVector a = FreeVector::zero(ring, rank);
        for (int i = 0; i < rank; ++i)
            a.entries[static_cast<std::size_t>(i)] = s.entries[static_cast<std::size_t>(i)];
        if (!a.is_zero())
            out.push_back(std::move(a));
    }
    ModuleGB gb = module_groebner(ring, rank, out);
    return gb.basis;
}

std::vector<FreeVector> preimage_generators(const FreeMatrix& f,
                                            const std::vector<FreeVector>& w) {
    std::vector<FreeVector> stacked = f.columns();
    stacked.insert(stacked.end(), w.begin(), w.end());
    std::vector<FreeVector> syz = syzygy_generators(f.ring, f.rows, stacked);
    std::vector<FreeVector> out;
    for (const auto& s : syz) {
        FreeVector c = FreeVector::zero(f.ring, f.cols);
        for (int i = 0; i < f.cols; ++i)
            c.entries[static_cast<std::size_t>(i)] = s.entries[static_cast<std::size_t>(i)];
        if (!c.is_zero())
            out.push_back(std::move(c));
    }
    ModuleGB gb = module_groebner(f.ring, f.cols, out);
    return gb.basis;
}

MapCertificate map_is_bijective(const ModuleMap& f) {
    std::string why;
    require(map_well_defined(f, &why), ErrorCode::IllFormedMap, why);

    MapCertificate cert;
    // injectivity: preimage of <V_target> must land in <V_source>
    std::vector<FreeVector> pre = preimage_generators(f.matrix, f.target.rels);
    ModuleGB vs = module_groebner(f.source.ring, f.source.ambient_rank, f.source.rels);
    for (const auto& c : pre) {
        FreeVector u = FreeVector::zero(f.source.ring, f.source.ambient_rank);
        for (std::size_t i = 0; i < f.source.gens.size(); ++i)
            u = u + f.source.gens[i].mul_poly(c.entries[i]);
        if (!vs.contains(u)) {
            cert.verdict = MapVerdict::NotInjective;
            cert.witness = u;
            cert.detail = "nonzero source element maps into the target relations: " + u.str();
            return cert;
        }
    }
    // surjectivity: target generators must lie in image + <V_target>
    std::vector<FreeVector> img = f.matrix.columns();
    img.insert(img.end(), f.target.rels.begin(), f.target.rels.end());
    ModuleGB surj = module_groebner(f.target.ring, f.target.ambient_rank, img);
    for (const auto& u : f.target.gens) {
        if (!surj.contains(u)) {
            cert.verdict = MapVerdict::NotSurjective;
            cert.witness = u;
            cert.detail = "target generator not reached: " + u.str();
            return cert;
        }
    }
    cert.verdict = MapVerdict::Bijective;
    return cert;
}

PullbackResult pullback(const ModuleMap& f, const ModuleMap& g) {
    require(subquotient_equal(f.target, g.target), ErrorCode::TargetMismatch,
            "pullback requires a common target");
    const RingPtr& ring = f.source.ring;
    const SubquotientModule& A = f.source;
    const SubquotientModule& B = g.source;
    const SubquotientModule& C = f.target;
    int p = static_cast<int>(A.gens.size());
    int q = static_cast<int>(B.gens.size());

    std::vector<FreeVector> stacked = f.matrix.columns();
    for (const auto& c : g.matrix.columns())
        stacked.push_back(-c);
    stacked.insert(stacked.end(), C.rels.begin(), C.rels.end());
    std::vector<FreeVector> syz = syzygy_generators(ring, C.ambient_rank, stacked);

    int amb = A.ambient_rank + B.ambient_rank;
    std::vector<FreeVector> gens;
    std::vector<FreeVector> p1_cols, p2_cols;
    for (const auto& s : syz) {
        FreeVector ua = FreeVector::zero(ring, A.ambient_rank);
        for (int i = 0; i < p; ++i)
            ua = ua + A.gens[static_cast<std::size_t>(i)].mul_poly(
                          s.entries[static_cast<std::size_t>(i)]);
        FreeVector ub = FreeVector::zero(ring, B.ambient_rank);
        for (int i = 0; i < q; ++i)
            ub = ub + B.gens[static_cast<std::size_t>(i)].mul_poly(
                          s.entries[static_cast<std::size_t>(p + i)]);
        if (ua.is_zero() && ub.is_zero())
            continue;
        FreeVector w = FreeVector::zero(ring, amb);
        for (int i = 0; i < A.ambient_rank; ++i)
            w.entries[static_cast<std::size_t>(i)] = ua.entries[static_cast<std::size_t>(i)];
        for (int i = 0; i < B.ambient_rank; ++i)
            w.entries[static_cast<std::size_t>(A.ambient_rank + i)] =
                ub.entries[static_cast<std::size_t>(i)];
        gens.push_back(std::move(w));
        p1_cols.push_back(std::move(ua));
        p2_cols.push_back(std::move(ub));
    }

    PullbackResult out;
    out.module.ring = ring;
    out.module.ambient_rank = amb;
    out.module.gens = gens;
    for (const auto& v : A.rels) {
        FreeVector w = FreeVector::zero(ring, amb);
        for (int i = 0; i < A.ambient_rank; ++i)
            w.entries[static_cast<std::size_t>(i)] = v.entries[static_cast<std::size_t>(i)];
        out.module.rels.push_back(std::move(w));
    }
    for (const auto& v : B.rels) {
        FreeVector w = FreeVector::zero(ring, amb);
        for (int i = 0; i < B.ambient_rank; ++i)
            w.entries[static_cast<std::size_t>(A.ambient_rank + i)] =
                v.entries[static_cast<std::size_t>(i)];
        out.module.rels.push_back(std::move(w));
    }

    out.p1.source = out.module;
    out.p1.target = A;
    out.p1.matrix = FreeMatrix::from_columns(ring, A.ambient_rank, p1_cols);
    out.p2.source = out.module;
    out.p2.target = B;
    out.p2.matrix = FreeMatrix::from_columns(ring, B.ambient_rank, p2_cols);
    return out;
}

bool mult_injective(const SubquotientModule& m, const Poly& x) {
    return !mult_injective_witness(m, x).has_value();
}

std::optional<FreeVector> mult_injective_witness(const SubquotientModule& m, const Poly& x) {
    // {u in <U> : x*u in <V>} must be contained in <V>
    std::vector<FreeVector> colon = colon_by_scalar(m.ring, m.ambient_rank, m.rels, x);
    SubquotientModule colon_mod = SubquotientModule::submodule(m.ring, m.ambient_rank, colon);
    SubquotientModule u_mod = SubquotientModule::submodule(m.ring, m.ambient_rank, m.gens);
    SubquotientModule bad = submodule_intersect(colon_mod, u_mod);
    ModuleGB vgb = module_groebner(m.ring, m.ambient_rank, m.rels);
    for (const auto& g : bad.gens)
        if (!vgb.contains(g))
            return g;
    return std::nullopt;
}

} // namespace multitor

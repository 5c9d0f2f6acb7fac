#include "multitor/complexes.hpp"

#include <map>
#include <sstream>

namespace multitor {

int FreeComplex::rank_at(int q) const {
    if (q < 0 || q > length())
        return 0;
    return ranks[static_cast<std::size_t>(q)];
}

const FreeMatrix& FreeComplex::diff(int q) const {
    require(q >= 1 && q <= length(), ErrorCode::DegreeOutOfRange,
            "no differential at degree " + std::to_string(-q));
    return diffs[static_cast<std::size_t>(q - 1)];
}

void FreeComplex::validate() const {
    require(!ranks.empty(), ErrorCode::IllFormed, "complex must contain degree 0");
    require(diffs.size() + 1 == ranks.size(), ErrorCode::IllFormed,
            "differential count does not match degree range");
    for (int q = 1; q <= length(); ++q) {
        const FreeMatrix& d = diff(q);
        require(d.rows == rank_at(q - 1) && d.cols == rank_at(q), ErrorCode::ShapeMismatch,
                "differential shape mismatch at degree " + std::to_string(-q));
    }
    for (int q = 2; q <= length(); ++q)
        require((diff(q - 1) * diff(q)).is_zero(), ErrorCode::IllFormed,
                "d o d != 0 at degree " + std::to_string(-q));
}

std::string FreeComplex::report() const {
    std::ostringstream os;
    for (int q = 0; q <= length(); ++q) {
        os << "degree " << -q << ": rank " << rank_at(q) << "\n";
        if (q >= 1)
            os << "  d^" << -q << " = " << diff(q).str() << "\n";
    }
    return os.str();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return r;
}

std::vector<std::vector<int>> index_subsets(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n)
        return out;
    std::vector<int> s(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        s[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(s);
        int i = q - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - q + i)
            --i;
        if (i < 0)
            break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < q; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Poly>& f) {
    int n = static_cast<int>(f.size());
    for (const auto& p : f)
        require_same_ring(ring, p.ring());

    FreeComplex c;
    c.ring = ring;
    for (int q = 0; q <= n; ++q)
        c.ranks.push_back(static_cast<int>(binomial(n, q)));

    for (int q = 1; q <= n; ++q) {
        std::vector<std::vector<int>> cols = index_subsets(n, q);
        std::vector<std::vector<int>> rows = index_subsets(n, q - 1);
        std::map<std::vector<int>, int> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r)
            row_index[rows[r]] = static_cast<int>(r);

        FreeMatrix d(ring, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
            const std::vector<int>& s = cols[cidx];
            for (int j = 1; j <= q; ++j) {
                std::vector<int> t = s;
                int var = t[static_cast<std::size_t>(j - 1)];
                t.erase(t.begin() + (j - 1));
                int sign = (j % 2 == 0) ? 1 : -1;
                Poly entry = (sign > 0) ? f[static_cast<std::size_t>(var)]
                                        : -f[static_cast<std::size_t>(var)];
                d.at(row_index.at(t), static_cast<int>(cidx)) =
                    d.at(row_index.at(t), static_cast<int>(cidx)) + entry;
            }
        }
        c.diffs.push_back(std::move(d));
    }
    c.validate();
    return c;
}

FreeComplex tensor_complex(const FreeComplex& a, const FreeComplex& b) {
    require_same_ring(a.ring, b.ring);
    const RingPtr& ring = a.ring;
    int na = a.length(), nb = b.length();
    int n = na + nb;

    // offset[k][i] = column offset of block A^{-i} ox B^{-(k-i)} inside degree -k
    std::vector<std::vector<int>> offset(static_cast<std::size_t>(n + 1));
    FreeComplex c;
    c.ring = ring;
    for (int k = 0; k <= n; ++k) {
        int total = 0;
        offset[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k + 1), -1);
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            if (i > na || j > nb)
                continue;
            offset[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = total;
            total += a.rank_at(i) * b.rank_at(j);
        }
        c.ranks.push_back(total);
    }

    for (int k = 1; k <= n; ++k) {
        FreeMatrix d(ring, c.rank_at(k - 1), c.rank_at(k));
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            if (i > na || j > nb)
                continue;
            int src = offset[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            int ra = a.rank_at(i), rb = b.rank_at(j);
            // dA ox id : block (i,j) -> block (i-1,j)
            if (i >= 1 && i - 1 <= na && j <= nb) {
                int dst = offset[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
                const FreeMatrix& da = a.diff(i);
                for (int r = 0; r < da.rows; ++r)
                    for (int cidx = 0; cidx < da.cols; ++cidx) {
                        if (da.at(r, cidx).is_zero())
                            continue;
                        for (int t = 0; t < rb; ++t)
                            d.at(dst + r * rb + t, src + cidx * rb + t) = da.at(r, cidx);
                    }
            }
            // (-1)^i id ox dB : block (i,j) -> block (i,j-1)
            if (j >= 1) {
                int dst = offset[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
                const FreeMatrix& db = b.diff(j);
                bool negate = (i % 2) != 0;
                for (int r = 0; r < db.rows; ++r)
                    for (int cidx = 0; cidx < db.cols; ++cidx) {
                        if (db.at(r, cidx).is_zero())
                            continue;
                        Poly entry = negate ? -db.at(r, cidx) : db.at(r, cidx);
                        for (int s = 0; s < ra; ++s)
                            d.at(dst + s * db.rows + r, src + s * db.cols + cidx) = entry;
                    }
            }
        }
        c.diffs.push_back(std::move(d));
    }
    c.validate();
    return c;
}

FreeComplex mapping_cone(const Poly& t, const FreeComplex& a) {
    require_same_ring(t.ring(), a.ring);
    const RingPtr& ring = a.ring;
    int n = a.length();
    FreeComplex c;
    c.ring = ring;
    for (int q = 0; q <= n + 1; ++q)
        c.ranks.push_back(a.rank_at(q - 1) + a.rank_at(q)); // shifted copy first, then A

    for (int q = 1; q <= n + 1; ++q) {
        FreeMatrix d(ring, c.rank_at(q - 1), c.rank_at(q));
        int shifted_src = a.rank_at(q - 1); // columns: [shifted | plain]
        int shifted_dst = a.rank_at(q - 2); // rows:    [shifted | plain]
        // top-left: d_A^{-(q-1)} on the shifted copy
        if (q - 1 >= 1) {
            const FreeMatrix& da = a.diff(q - 1);
            for (int i = 0; i < da.rows; ++i)
                for (int j = 0; j < da.cols; ++j)
                    d.at(i, j) = da.at(i, j);
        }
        // bottom-left: (-1)^q t * Id connecting shifted to plain
        Poly tq = (q % 2 == 0) ? t : -t;
        for (int i = 0; i < a.rank_at(q - 1); ++i)
            d.at(shifted_dst + i, i) = tq;
        // bottom-right: d_A^{-q} on the plain copy
        if (q <= n) {
            const FreeMatrix& da = a.diff(q);
            for (int i = 0; i < da.rows; ++i)
                for (int j = 0; j < da.cols; ++j)
                    d.at(shifted_dst + i, shifted_src + j) = da.at(i, j);
        }
        c.diffs.push_back(std::move(d));
    }
    c.validate();
    return c;
}

SubquotientModule homology(const FreeComplex& c, int q) {
    require(q <= 0 && -q <= c.length(), ErrorCode::DegreeOutOfRange,
            "homology degree " + std::to_string(q) + " outside [-" +
                std::to_string(c.length()) + ", 0]");
    int k = -q;
    SubquotientModule ker = (k == 0) ? SubquotientModule::full_free(c.ring, c.rank_at(0))
                                     : kernel_module(c.diff(k));
    if (k + 1 <= c.length()) {
        SubquotientModule im = image_module(c.diff(k + 1));
        return quotient_module(ker, im);
    }
    return ker;
}

namespace {

// drop generators contained in the span of the others (deterministic sweep)
std::vector<FreeVector> prune_generators(const RingPtr& ring, int rank,
                                         std::vector<FreeVector> gens) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            std::vector<FreeVector> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i)
                    others.push_back(gens[j]);
            ModuleGB gb = module_groebner(ring, rank, others);
            if (gb.contains(gens[i])) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return gens;
}

} // namespace

FreeComplex free_resolution(const RingPtr& ring, const std::vector<Poly>& I, int max_len) {
    require(max_len >= 1, ErrorCode::ResolutionTruncated, "max_len must be at least 1");
    FreeComplex c;
    c.ring = ring;
    c.ranks.push_back(1);

    std::vector<FreeVector> gens =
        prune_generators(ring, 1, [&] {
            std::vector<FreeVector> v;
            for (const auto& p : I) {
                require_same_ring(ring, p.ring());
                v.push_back(FreeVector::from_poly(p));
            }
            return v;
        }());

    int prev_rank = 1;
    std::vector<FreeVector> current = gens;
    for (int step = 1;; ++step) {
        if (current.empty())
            break;
        FreeMatrix d = FreeMatrix::from_columns(ring, prev_rank, current);
        c.ranks.push_back(d.cols);
        c.diffs.push_back(d);
        require(step <= max_len, ErrorCode::ResolutionTruncated,
                "resolution exceeded max length " + std::to_string(max_len));
        if (step == max_len) {
            std::vector<FreeVector> syz =
                prune_generators(ring, d.cols, syzygy_generators(ring, d.rows, d.columns()));
            require(syz.empty(), ErrorCode::ResolutionTruncated,
                    "resolution not exact at max length " + std::to_string(max_len));
            break;
        }
        std::vector<FreeVector> syz =
            prune_generators(ring, d.cols, syzygy_generators(ring, d.rows, d.columns()));
        prev_rank = d.cols;
        current = std::move(syz);
    }
    c.validate();
    return c;
}

} // namespace multitor

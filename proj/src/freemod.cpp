#include "multitor/freemod.hpp"

#include <sstream>

namespace multitor {

FreeVector FreeVector::zero(RingPtr ring, int rank) {
    std::vector<Poly> e(static_cast<std::size_t>(rank));
    for (auto& p : e)
        p = Poly::zero(ring);
    return FreeVector(std::move(ring), std::move(e));
}

FreeVector FreeVector::unit(RingPtr ring, int rank, int comp) {
    require(comp >= 0 && comp < rank, ErrorCode::RankMismatch, "unit component out of range");
    FreeVector v = zero(ring, rank);
    v.entries[static_cast<std::size_t>(comp)] = Poly::one(ring);
    return v;
}

FreeVector FreeVector::from_poly(Poly p) {
    RingPtr r = p.ring();
    std::vector<Poly> e;
    e.push_back(std::move(p));
    return FreeVector(std::move(r), std::move(e));
}

bool FreeVector::is_zero() const {
    for (const auto& p : entries)
        if (!p.is_zero())
            return false;
    return true;
}

int FreeVector::lead_comp() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

void require_same_rank(const FreeVector& a, const FreeVector& b) {
    require_same_ring(a.ring, b.ring);
    require(a.rank() == b.rank(), ErrorCode::RankMismatch,
            "free vectors of different ranks: " + std::to_string(a.rank()) + " vs " +
                std::to_string(b.rank()));
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
    require_same_rank(*this, o);
    FreeVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = entries[i] + o.entries[i];
    return r;
}

FreeVector FreeVector::operator-(const FreeVector& o) const {
    require_same_rank(*this, o);
    FreeVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = entries[i] - o.entries[i];
    return r;
}

FreeVector FreeVector::operator-() const {
    FreeVector r = *this;
    for (auto& p : r.entries)
        p = -p;
    return r;
}

FreeVector FreeVector::mul_term(const Exponents& e, const Scalar& c) const {
    FreeVector r = *this;
    for (auto& p : r.entries)
        p = p.mul_term(e, c);
    return r;
}

FreeVector FreeVector::mul_poly(const Poly& p) const {
    FreeVector r = *this;
    for (auto& q : r.entries)
        q = q * p;
    return r;
}

FreeVector FreeVector::scaled(const Scalar& c) const {
    FreeVector r = *this;
    for (auto& p : r.entries)
        p = p.scaled(c);
    return r;
}

FreeVector FreeVector::add_mul(const FreeVector& g, const Exponents& e, const Scalar& c) const {
    require_same_rank(*this, g);
    FreeVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = entries[i].add_mul(g.entries[i], e, c);
    return r;
}

bool FreeVector::operator==(const FreeVector& o) const {
    if (!same_ring(ring, o.ring) || rank() != o.rank())
        return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != o.entries[i])
            return false;
    return true;
}

std::string FreeVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            os << ", ";
        os << entries[i].str();
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// FreeMatrix

FreeMatrix::FreeMatrix(RingPtr r, int nrows, int ncols) : ring(std::move(r)), rows(nrows), cols(ncols) {
    require(nrows >= 0 && ncols >= 0, ErrorCode::ShapeMismatch, "negative matrix dimension");
    data.assign(static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols),
                Poly::zero(ring));
}

FreeMatrix FreeMatrix::identity(RingPtr ring, int n) {
    FreeMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Poly::one(ring);
    return m;
}

FreeMatrix FreeMatrix::from_columns(RingPtr ring, int nrows, const std::vector<FreeVector>& cols) {
    FreeMatrix m(ring, nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        const FreeVector& c = cols[static_cast<std::size_t>(j)];
        require_same_ring(ring, c.ring);
        require(c.rank() == nrows, ErrorCode::ShapeMismatch,
                "column rank does not match matrix rows");
        for (int i = 0; i < nrows; ++i)
            m.at(i, j) = c.entries[static_cast<std::size_t>(i)];
    }
    return m;
}

FreeVector FreeMatrix::column(int j) const {
    require(j >= 0 && j < cols, ErrorCode::ShapeMismatch, "column index out of range");
    FreeVector v = FreeVector::zero(ring, rows);
    for (int i = 0; i < rows; ++i)
        v.entries[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

std::vector<FreeVector> FreeMatrix::columns() const {
    std::vector<FreeVector> r;
    r.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j)
        r.push_back(column(j));
    return r;
}

FreeMatrix FreeMatrix::operator*(const FreeMatrix& o) const {
    require_same_ring(ring, o.ring);
    require(cols == o.rows, ErrorCode::ShapeMismatch,
            "matrix shapes not composable: " + std::to_string(rows) + "x" + std::to_string(cols) +
                " * " + std::to_string(o.rows) + "x" + std::to_string(o.cols));
    FreeMatrix r(ring, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < o.cols; ++j) {
            Poly s = Poly::zero(ring);
            for (int k = 0; k < cols; ++k)
                s += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

FreeVector FreeMatrix::apply(const FreeVector& v) const {
    require_same_ring(ring, v.ring);
    require(v.rank() == cols, ErrorCode::ShapeMismatch, "vector rank does not match matrix cols");
    FreeVector r = FreeVector::zero(ring, rows);
    for (int i = 0; i < rows; ++i) {
        Poly s = Poly::zero(ring);
        for (int j = 0; j < cols; ++j)
            s += at(i, j) * v.entries[static_cast<std::size_t>(j)];
        r.entries[static_cast<std::size_t>(i)] = std::move(s);
    }
    return r;
}

FreeMatrix FreeMatrix::scaled(const Poly& p) const {
    FreeMatrix r = *this;
    for (auto& q : r.data)
        q = q * p;
    return r;
}

bool FreeMatrix::is_zero() const {
    for (const auto& p : data)
        if (!p.is_zero())
            return false;
    return true;
}

bool FreeMatrix::operator==(const FreeMatrix& o) const {
    if (!same_ring(ring, o.ring) || rows != o.rows || cols != o.cols)
        return false;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (data[i] != o.data[i])
            return false;
    return true;
}

std::string FreeMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        if (i)
            os << ", ";
        os << "[";
        for (int j = 0; j < cols; ++j) {
            if (j)
                os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free rank (Bareiss)

int matrix_rank(const FreeMatrix& m) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    FreeMatrix a = m;
    const RingPtr& ring = a.ring;
    Poly prev = Poly::one(ring);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows; ++i)
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int j = 0; j < a.cols; ++j)
                std::swap(a.at(row, j), a.at(pivot, j));
        const Poly piv = a.at(row, col);
        for (int i = row + 1; i < a.rows; ++i) {
            Poly factor = a.at(i, col);
            for (int j = 0; j < a.cols; ++j) {
                Poly num = a.at(i, j) * piv - a.at(row, j) * factor;
                auto q = poly_divexact(num, prev);
                require(q.has_value(), ErrorCode::Internal, "Bareiss division not exact");
                a.at(i, j) = std::move(*q);
            }
        }
        prev = piv;
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace multitor

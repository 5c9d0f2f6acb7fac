#pragma once

#include <string>
#include <vector>

#include "multitor/ring.hpp"

namespace multitor {

// Element of a finite free module R^rank.
struct FreeVector {
    RingPtr ring;
    std::vector<Poly> entries;

    FreeVector() = default;
    FreeVector(RingPtr r, std::vector<Poly> e) : ring(std::move(r)), entries(std::move(e)) {}

    static FreeVector zero(RingPtr ring, int rank);
    static FreeVector unit(RingPtr ring, int rank, int comp);
    static FreeVector from_poly(Poly p); // rank-1 wrapper

    int rank() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;
    int lead_comp() const; // first nonzero component, -1 if zero

    FreeVector operator+(const FreeVector& o) const;
    FreeVector operator-(const FreeVector& o) const;
    FreeVector operator-() const;
    FreeVector mul_term(const Exponents& e, const Scalar& c) const;
    FreeVector mul_poly(const Poly& p) const;
    FreeVector scaled(const Scalar& c) const;
    // *this + c * x^e * g
    FreeVector add_mul(const FreeVector& g, const Exponents& e, const Scalar& c) const;

    bool operator==(const FreeVector& o) const;
    bool operator!=(const FreeVector& o) const { return !(*this == o); }

    std::string str() const; // "(p1, ..., pk)"
};

void require_same_rank(const FreeVector& a, const FreeVector& b);

// Matrix over R presenting a map R^cols -> R^rows; column j is the image of e_j.
struct FreeMatrix {
    RingPtr ring;
    int rows = 0;
    int cols = 0;
    std::vector<Poly> data; // row-major, rows*cols entries

    FreeMatrix() = default;
    FreeMatrix(RingPtr r, int nrows, int ncols);

    static FreeMatrix identity(RingPtr ring, int n);
    static FreeMatrix from_columns(RingPtr ring, int nrows, const std::vector<FreeVector>& cols);

    const Poly& at(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
    Poly& at(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }

    FreeVector column(int j) const;
    std::vector<FreeVector> columns() const;

    FreeMatrix operator*(const FreeMatrix& o) const;
    FreeVector apply(const FreeVector& v) const; // matrix * column vector
    FreeMatrix scaled(const Poly& p) const;
    bool is_zero() const;
    bool operator==(const FreeMatrix& o) const;

    std::string str() const; // "[[a, b], [c, d]]"
};

// Rank over the fraction field, by fraction-free Gaussian elimination.
int matrix_rank(const FreeMatrix& m);

} // namespace multitor

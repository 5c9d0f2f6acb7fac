#pragma once

#include <string>
#include <vector>

#include "multitor/modmath.hpp"

namespace multitor {

// Finite complex of free modules in degrees [-N, 0]:
//   C^{-N} -> ... -> C^{-1} -> C^0,   d^{-q} : C^{-q} -> C^{-q+1}.
// ranks[q] is the rank of C^{-q}; diffs[q-1] is d^{-q} for q = 1..N.
struct FreeComplex {
    RingPtr ring;
    std::vector<int> ranks;
    std::vector<FreeMatrix> diffs;

    int length() const { return static_cast<int>(ranks.size()) - 1; } // N
    int rank_at(int q) const; // rank of C^{-q}, 0 outside [0, N]
    const FreeMatrix& diff(int q) const; // d^{-q}, valid for 1 <= q <= N

    // shape consistency and d o d = 0
    void validate() const;
    std::string report() const; // per degree: rank and differential in the poly grammar
};

std::uint64_t binomial(int n, int k);

// Koszul complex K(f_1,...,f_n): rank C(n,q) in degree -q, basis of wedge^q R^n
// indexed by strictly increasing index subsets in lexicographic order, and
// d(e_S) = sum_j (-1)^j f_{i_j} e_{S minus i_j}  (j = 1-based position in S).
FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Poly>& f);

// Subsets of {0..n-1} of size q in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int q);

// Tensor product with the Koszul sign rule d(a ox b) = da ox b + (-1)^{deg a} a ox db.
// Degree -k splits into blocks A^{-i} ox B^{-j}, i + j = k, ordered by ascending i,
// row-major within each block.
FreeComplex tensor_complex(const FreeComplex& a, const FreeComplex& b);

// Cone of multiplication by t on A; realizes adjoining t to a Koszul sequence:
// degree -q is A^{-q+1} (+) A^{-q} with differential
//   [ d_A          0   ]
//   [ (-1)^q t    d_A  ].
FreeComplex mapping_cone(const Poly& t, const FreeComplex& a);

// H^q for -N <= q <= 0, as the subquotient (ker d^q, im d^{q-1}).
SubquotientModule homology(const FreeComplex& c, int q);

// Free resolution of R/I by iterated syzygies with redundant-generator pruning.
FreeComplex free_resolution(const RingPtr& ring, const std::vector<Poly>& I, int max_len);

} // namespace multitor

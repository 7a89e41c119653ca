#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "confhodge/intmatrix.hpp"

namespace confhodge::dg {

// Basis monomial of the exterior algebra on x_1..x_g, y_1..y_g: the product
// of the x_a for a in the S mask and the y_b for b in the T mask, each block
// listed in ascending index order (x's first, then y's). Bit a-1 of a mask
// stands for index a.
struct ExteriorBasisElement {
    std::uint32_t s_mask = 0;
    std::uint32_t t_mask = 0;

    int degree() const;

    friend bool operator==(const ExteriorBasisElement&,
                           const ExteriorBasisElement&) = default;
};

// All size-k subsets of {1..g} as masks, in increasing binary-counter order.
std::vector<std::uint32_t> subsets_of_size(int g, int k);

// Basis of the degree-i part, ordered by |S| ascending, then s_mask, then
// t_mask. This order is fixed; the matrices below index into it.
std::vector<ExteriorBasisElement> exterior_basis(int g, int degree);

// (x_1^y_1 + ... + x_g^y_g) ^ alpha, expanded in the canonical basis. Signs
// are computed by literally sorting the letter word and counting swaps.
std::vector<std::pair<int, ExteriorBasisElement>> wedge_symplectic(
    int g, const ExteriorBasisElement& alpha);

// Matrix of the Lefschetz operator (wedging with the symplectic form) from
// degree i to degree i+2, shape C(2g,i+2) x C(2g,i). Hard Lefschetz: rank
// equals min of the two dimensions.
IntMatrix lefschetz_matrix(int g, int i);

// Its restriction to the bidegree component with |S| = sigma, |T| = tau,
// mapping into (sigma+1, tau+1). Rows and columns are indexed S-major:
// index = s_index * (number of T subsets) + t_index.
IntMatrix lefschetz_block(int g, int sigma, int tau);

}  // namespace confhodge::dg

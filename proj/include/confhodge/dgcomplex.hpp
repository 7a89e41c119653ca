#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "confhodge/exterior.hpp"
#include "confhodge/intmatrix.hpp"

namespace confhodge::dg {

// Index of one distinguished basis class of the invariant page: an optional
// bare two-point class (the arc), singleton points colored by the x- and
// y-classes of the surface (masks over {1..g}), and per-color counts of
// two-point blocks carrying an x- resp. y-class.
struct BasisTuple {
    int genus = 0;
    int arc = 0;                   // 0 or 1
    std::uint32_t x_singles = 0;   // subset of {1..g}
    std::uint32_t y_singles = 0;
    std::vector<int> x_pairs;      // length genus, entries >= 0
    std::vector<int> y_pairs;

    int x_pair_total() const;
    int y_pair_total() const;

    // Number of configuration points consumed: 2*arc + singletons + 2*pairs.
    int length() const;

    // Gradings. (p,q) is the cohomological bidegree, (w1,w2) the Hodge type.
    int p() const;
    int q() const;
    int w1() const;
    int w2() const;

    friend bool operator==(const BasisTuple&, const BasisTuple&) = default;
};

// All tuples with length <= n, each exactly once. Order: arc, then the
// singleton masks (binary-counter), then pair vectors lexicographically.
std::vector<BasisTuple> enumerate_basis(int g, int n);

// The differential, with its overall -2 retained: zero on arc = 0, and on
// arc = 1 the signed sum over colors a not used by a singleton of the tuple
// with both singleton masks extended by a. The pair vectors are spectators.
std::vector<std::pair<Int, BasisTuple>> differential(const BasisTuple& t);

// Matrix of -(1/2) * differential from span{arc=1, |S|=sigma, |T|=tau} to
// span{arc=0, |S|=sigma+1, |T|=tau+1}, pair vectors excluded. Row/column
// order is S-major over subsets_of_size, matching lefschetz_block, so the
// two are entry-comparable.
IntMatrix differential_block(int g, int sigma, int tau);

struct BlockDims {
    int rho1 = 0;  // kernel dimension on the arc side
    int rho0 = 0;  // cokernel dimension on the arc-free side

    friend bool operator==(const BlockDims&, const BlockDims&) = default;
};

// Exact rank route: rho1 = nullity of the (sigma,tau) block, rho0 =
// C(g,sigma)C(g,tau) minus the rank of the (sigma-1,tau-1) block.
BlockDims block_cohomology_dims(int g, int sigma, int tau);

// Binomial route (via hard Lefschetz):
//   rho1 = 0 if sigma+tau <= g-1, else C(g,s)C(g,t) - C(g,s+1)C(g,t+1)
//   rho0 = C(g,s)C(g,t) - C(g,s-1)C(g,t-1) if sigma+tau <= g+1, else 0
BlockDims closed_form_block_dims(int g, int sigma, int tau);

struct GradedKey {
    int p = 0, q = 0, w1 = 0, w2 = 0, n = 0;
    friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
};

struct GradedDimTable {
    std::map<GradedKey, Int> dims;

    Int value(const GradedKey& k) const {
        auto it = dims.find(k);
        return it == dims.end() ? Int(0) : it->second;
    }
};

// Cohomology dimensions of the length-filtered complex at level n, by
// (p,q,w1,w2). Pair multiplicities are counted (compositions into g parts),
// never materialized into matrices.
GradedDimTable cohomology_hilbert(int g, int n);

}  // namespace confhodge::dg

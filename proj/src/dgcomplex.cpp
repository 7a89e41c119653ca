#include "confhodge/dgcomplex.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace confhodge::dg {

int BasisTuple::x_pair_total() const {
    return std::accumulate(x_pairs.begin(), x_pairs.end(), 0);
}

int BasisTuple::y_pair_total() const {
    return std::accumulate(y_pairs.begin(), y_pairs.end(), 0);
}

int BasisTuple::length() const {
    return 2 * arc + std::popcount(x_singles) + std::popcount(y_singles) +
           2 * x_pair_total() + 2 * y_pair_total();
}

int BasisTuple::p() const {
    return std::popcount(x_singles) + std::popcount(y_singles) +
           x_pair_total() + y_pair_total();
}

int BasisTuple::q() const { return arc + x_pair_total() + y_pair_total(); }

int BasisTuple::w1() const {
    return arc + std::popcount(x_singles) + 2 * x_pair_total() + y_pair_total();
}

int BasisTuple::w2() const {
    return arc + std::popcount(y_singles) + x_pair_total() + 2 * y_pair_total();
}

// Vectors of g nonnegative entries with the given sum, lexicographic order.
static void compositions(int g, int sum, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == g - 1) {
        cur.push_back(sum);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= sum; ++k) {
        cur.push_back(k);
        compositions(g, sum - k, cur, out);
        cur.pop_back();
    }
}

static std::vector<std::vector<int>> compositions(int g, int sum) {
    std::vector<std::vector<int>> out;
    if (g == 0) {
        if (sum == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    compositions(g, sum, cur, out);
    return out;
}

std::vector<BasisTuple> enumerate_basis(int g, int n) {
    if (g < 0 || n < 0) throw std::invalid_argument("enumerate_basis: g, n >= 0");
    std::vector<BasisTuple> out;
    const std::uint32_t full = (g == 0) ? 0u : ((1u << g) - 1u);
    for (int arc = 0; arc <= 1; ++arc) {
        if (2 * arc > n) break;
        for (std::uint32_t s = 0;; ++s) {
            for (std::uint32_t t = 0;; ++t) {
                int budget = n - 2 * arc - std::popcount(s) - std::popcount(t);
                if (budget >= 0) {
                    for (int m1 = 0; 2 * m1 <= budget; ++m1) {
                        for (int m2 = 0; 2 * (m1 + m2) <= budget; ++m2) {
                            for (const auto& xp : compositions(g, m1))
                                for (const auto& yp : compositions(g, m2))
                                    out.push_back({g, arc, s, t, xp, yp});
                        }
                    }
                }
                if (t == full) break;
            }
            if (s == full) break;
        }
    }
    return out;
}

// Sign of inserting color a into both singleton blocks: the new x_a letter
// crosses the |S| existing x letters' worth of parity plus the smaller
// members of each block. Identical to the exterior-algebra wedge sign.
static int insertion_sign(std::uint32_t s_mask, std::uint32_t t_mask, int a) {
    const std::uint32_t below = (1u << (a - 1)) - 1u;
    int e = std::popcount(s_mask) + std::popcount(s_mask & below) +
            std::popcount(t_mask & below);
    return (e % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<Int, BasisTuple>> differential(const BasisTuple& t) {
    std::vector<std::pair<Int, BasisTuple>> out;
    if (t.arc == 0) return out;
    for (int a = 1; a <= t.genus; ++a) {
        const std::uint32_t bit = 1u << (a - 1);
        if ((t.x_singles & bit) || (t.y_singles & bit)) continue;
        BasisTuple target = t;
        target.arc = 0;
        target.x_singles |= bit;
        target.y_singles |= bit;
        out.push_back({Int(-2 * insertion_sign(t.x_singles, t.y_singles, a)),
                       std::move(target)});
    }
    return out;
}

IntMatrix differential_block(int g, int sigma, int tau) {
    if (sigma < 0 || tau < 0 || sigma > g || tau > g)
        throw std::invalid_argument("differential_block: 0 <= sigma, tau <= g");
    const auto src_s = subsets_of_size(g, sigma);
    const auto src_t = subsets_of_size(g, tau);
    const auto tgt_s = subsets_of_size(g, sigma + 1);
    const auto tgt_t = subsets_of_size(g, tau + 1);
    std::map<std::uint32_t, int> s_index, t_index;
    for (std::size_t k = 0; k < tgt_s.size(); ++k) s_index[tgt_s[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < tgt_t.size(); ++k) t_index[tgt_t[k]] = static_cast<int>(k);

    IntMatrix m(static_cast<int>(tgt_s.size() * tgt_t.size()),
                static_cast<int>(src_s.size() * src_t.size()));
    int col = 0;
    for (std::uint32_t s : src_s) {
        for (std::uint32_t t : src_t) {
            BasisTuple src{g, 1, s, t, std::vector<int>(g, 0), std::vector<int>(g, 0)};
            for (const auto& [coeff, tgt] : differential(src)) {
                int row = s_index.at(tgt.x_singles) * static_cast<int>(tgt_t.size()) +
                          t_index.at(tgt.y_singles);
                Int halved = coeff / -2;  // the block matrix carries -(1/2) d
                m.at(row, col) = halved;
            }
            ++col;
        }
    }
    return m;
}

static long binom_l(int n, int k) {
    return binomial(n, k).get_si();
}

BlockDims block_cohomology_dims(int g, int sigma, int tau) {
    BlockDims d;
    const IntMatrix block = differential_block(g, sigma, tau);
    d.rho1 = block.nullity();
    long full = binom_l(g, sigma) * binom_l(g, tau);
    long image = 0;
    if (sigma > 0 && tau > 0)
        image = differential_block(g, sigma - 1, tau - 1).rank();
    d.rho0 = static_cast<int>(full - image);
    return d;
}

BlockDims closed_form_block_dims(int g, int sigma, int tau) {
    BlockDims d;
    if (sigma + tau <= g - 1) {
        d.rho1 = 0;
    } else {
        d.rho1 = static_cast<int>(binom_l(g, sigma) * binom_l(g, tau) -
                                  binom_l(g, sigma + 1) * binom_l(g, tau + 1));
    }
    if (sigma + tau <= g + 1) {
        long minus = (sigma > 0 && tau > 0)
                         ? binom_l(g, sigma - 1) * binom_l(g, tau - 1)
                         : 0;
        d.rho0 = static_cast<int>(binom_l(g, sigma) * binom_l(g, tau) - minus);
    } else {
        d.rho0 = 0;
    }
    return d;
}

// Compositions of m into g parts, counted rather than listed.
static Int composition_count(int m, int g) {
    if (g == 0) return m == 0 ? 1 : 0;
    return binomial(m + g - 1, g - 1);
}

GradedDimTable cohomology_hilbert(int g, int n) {
    if (g < 0 || n < 0)
        throw std::invalid_argument("cohomology_hilbert: g, n >= 0");

    // All block dimensions once; the (sigma,tau) ranks are reused across the
    // pair-multiplicity loop.
    std::vector<std::vector<BlockDims>> dims(g + 1, std::vector<BlockDims>(g + 1));
    for (int s = 0; s <= g; ++s)
        for (int t = 0; t <= g; ++t) dims[s][t] = block_cohomology_dims(g, s, t);

    GradedDimTable table;
    for (int arc = 0; arc <= 1; ++arc) {
        for (int s = 0; s <= g; ++s) {
            for (int t = 0; t <= g; ++t) {
                int base_len = 2 * arc + s + t;
                if (base_len > n) continue;
                int dim = arc ? dims[s][t].rho1 : dims[s][t].rho0;
                if (dim == 0) continue;
                for (int m1 = 0; base_len + 2 * m1 <= n; ++m1) {
                    for (int m2 = 0; base_len + 2 * (m1 + m2) <= n; ++m2) {
                        Int mult = composition_count(m1, g) * composition_count(m2, g);
                        if (mult == 0) continue;
                        GradedKey key{s + t + m1 + m2, arc + m1 + m2,
                                      arc + s + 2 * m1 + m2, arc + t + m1 + 2 * m2, n};
                        auto [it, inserted] = table.dims.emplace(key, dim * mult);
                        if (!inserted) it->second += dim * mult;
                    }
                }
            }
        }
    }
    return table;
}

}  // namespace confhodge::dg

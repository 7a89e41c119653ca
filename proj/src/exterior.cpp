#include "confhodge/exterior.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace confhodge::dg {

int ExteriorBasisElement::degree() const {
    return std::popcount(s_mask) + std::popcount(t_mask);
}

std::vector<std::uint32_t> subsets_of_size(int g, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > g) return out;
    const std::uint32_t full = (g == 32) ? ~0u : ((1u << g) - 1u);
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (std::popcount(m) == k) out.push_back(m);
        if (m == full) break;
    }
    return out;
}

std::vector<ExteriorBasisElement> exterior_basis(int g, int degree) {
    std::vector<ExteriorBasisElement> out;
    for (int sigma = 0; sigma <= degree; ++sigma) {
        int tau = degree - sigma;
        if (sigma > g || tau > g) continue;
        for (std::uint32_t s : subsets_of_size(g, sigma))
            for (std::uint32_t t : subsets_of_size(g, tau))
                out.push_back({s, t});
    }
    return out;
}

// Letters are numbered x_a -> a, y_a -> g+a; the canonical word is the
// ascending sequence. The sign of a product is the inversion parity of its
// letter word.
static int word_sign(const std::vector<int>& word) {
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<int, ExteriorBasisElement>> wedge_symplectic(
    int g, const ExteriorBasisElement& alpha) {
    std::vector<std::pair<int, ExteriorBasisElement>> out;
    for (int a = 1; a <= g; ++a) {
        const std::uint32_t bit = 1u << (a - 1);
        if ((alpha.s_mask & bit) || (alpha.t_mask & bit)) continue;

        std::vector<int> word{a, g + a};
        for (int b = 1; b <= g; ++b)
            if (alpha.s_mask & (1u << (b - 1))) word.push_back(b);
        for (int b = 1; b <= g; ++b)
            if (alpha.t_mask & (1u << (b - 1))) word.push_back(g + b);

        out.push_back({word_sign(word),
                       {alpha.s_mask | bit, alpha.t_mask | bit}});
    }
    return out;
}

IntMatrix lefschetz_matrix(int g, int i) {
    if (i < 0 || i > 2 * g)
        throw std::invalid_argument("lefschetz_matrix: degree out of range");
    const auto source = exterior_basis(g, i);
    const auto target = exterior_basis(g, i + 2);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> row_of;
    for (std::size_t r = 0; r < target.size(); ++r)
        row_of[{target[r].s_mask, target[r].t_mask}] = static_cast<int>(r);

    IntMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
    for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [sign, elem] : wedge_symplectic(g, source[c]))
            m.at(row_of.at({elem.s_mask, elem.t_mask}), static_cast<int>(c)) = sign;
    return m;
}

IntMatrix lefschetz_block(int g, int sigma, int tau) {
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
            for (const auto& [sign, elem] : wedge_symplectic(g, {s, t})) {
                int row = s_index.at(elem.s_mask) * static_cast<int>(tgt_t.size()) +
                          t_index.at(elem.t_mask);
                m.at(row, col) = sign;
            }
            ++col;
        }
    }
    return m;
}

}  // namespace confhodge::dg

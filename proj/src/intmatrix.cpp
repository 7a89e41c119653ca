#include "confhodge/intmatrix.hpp"

#include <cassert>
#include <numeric>
#include <utility>

namespace confhodge {

int IntMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    IntMatrix m = *this;
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < cols_; ++c)
                std::swap(m.at(rank, c), m.at(pivot, c));
        }
        const Int p = m.at(rank, col);
        for (int r = rank + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c) {
                Int v = p * m.at(r, c) - m.at(r, col) * m.at(rank, c);
                assert(v % prev == 0);
                m.at(r, c) = v / prev;
            }
            m.at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

bool equal_up_to_diagonal_signs(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;

    // Union-find with sign parity over the nodes {rows} + {cols}. An entry
    // pair (x, y) with y = +-x forces row_sign * col_sign to a fixed value;
    // the matrices are diagonally conjugate iff no cycle contradicts.
    const int n = a.rows() + a.cols();
    std::vector<int> parent(n), parity(n, 0);
    std::iota(parent.begin(), parent.end(), 0);

    auto root_of = [&](int v) {
        int p = 0;
        while (parent[v] != v) {
            p ^= parity[v];
            v = parent[v];
        }
        return std::pair<int, int>{v, p};
    };

    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            const Int& x = a.at(r, c);
            const Int& y = b.at(r, c);
            if ((x == 0) != (y == 0)) return false;
            if (x == 0) continue;
            if (x != y && x != -y) return false;
            int want = (x == y) ? 0 : 1;
            auto [rr, pr] = root_of(r);
            auto [rc, pc] = root_of(a.rows() + c);
            if (rr == rc) {
                if ((pr ^ pc) != want) return false;
            } else {
                parent[rr] = rc;
                parity[rr] = pr ^ pc ^ want;
            }
        }
    }
    return true;
}

}  // namespace confhodge

#pragma once

#include <vector>

#include "confhodge/bigint.hpp"

namespace confhodge {

// Dense integer matrix with exact rank computation. Small enough here that
// density costs nothing; exactness is the point.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    // Fraction-free (Bareiss) elimination; every intermediate entry is a
    // minor of the original matrix, so the divisions are exact.
    int rank() const;

    int nullity() const { return cols_ - rank(); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

// Whether b = D1 * a * D2 for diagonal sign matrices D1, D2. Requires equal
// shapes; zero patterns must coincide and every cycle in the support graph
// must have a consistent sign assignment.
bool equal_up_to_diagonal_signs(const IntMatrix& a, const IntMatrix& b);

}  // namespace confhodge

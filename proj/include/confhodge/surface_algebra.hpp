#pragma once

#include <map>
#include <utility>

#include "confhodge/bigint.hpp"

namespace confhodge::verify {

// Exact integer model of the cohomology ring of a closed genus-g surface and
// of its square. Basis of H*(Sigma): id 0 is the unit, 1..g are the x
// classes, g+1..2g the y classes, 2g+1 the volume form. Products follow
// x_a y_a = vol, all other degree-1 products zero, with Koszul signs; the
// square carries the tensor-product ring structure.
class SurfaceAlgebraModel {
public:
    explicit SurfaceAlgebraModel(int g);

    int genus() const { return g_; }
    int unit() const { return 0; }
    int x(int a) const { return a; }          // 1 <= a <= g
    int y(int a) const { return g_ + a; }
    int volume() const { return 2 * g_ + 1; }
    int degree(int id) const;

    // Product of two basis classes in H*(Sigma): coefficient of the single
    // surviving basis class, or (0, 0) if the product vanishes.
    std::pair<Int, int> mul(int a, int b) const;

    // A class on Sigma x Sigma: sparse combination of basis tensors.
    using Element2 = std::map<std::pair<int, int>, Int>;

    Element2 tensor(int a, int b) const;
    Element2 mul2(const Element2& u, const Element2& v) const;

    // -sum_a (x_a (x) y_a - y_a (x) x_a), the Gysin image of the unit under
    // the diagonal.
    Element2 diagonal_class() const;

    // Integration against the product volume form: coefficient of vol (x) vol.
    Int integrate2(const Element2& e) const;

    // Pullback along the diagonal of a decomposable class a (x) b, then
    // integration on the surface: coefficient of vol in a*b.
    Int integrate_diagonal_pullback(int a, int b) const;

private:
    int g_;
};

}  // namespace confhodge::verify

#include "confhodge/surface_algebra.hpp"

#include <stdexcept>

namespace confhodge::verify {

SurfaceAlgebraModel::SurfaceAlgebraModel(int g) : g_(g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
}

int SurfaceAlgebraModel::degree(int id) const {
    if (id == 0) return 0;
    if (id <= 2 * g_) return 1;
    return 2;
}

std::pair<Int, int> SurfaceAlgebraModel::mul(int a, int b) const {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (degree(a) + degree(b) > 2) return {0, 0};
    // Both degree 1 from here: only x_c * y_c survives (as the volume form),
    // with y_c * x_c picking up the odd-odd sign.
    if (a <= g_ && b == g_ + a) return {1, volume()};
    if (a > g_ && b == a - g_) return {-1, volume()};
    return {0, 0};
}

SurfaceAlgebraModel::Element2 SurfaceAlgebraModel::tensor(int a, int b) const {
    return {{{a, b}, Int(1)}};
}

SurfaceAlgebraModel::Element2 SurfaceAlgebraModel::mul2(const Element2& u,
                                                        const Element2& v) const {
    Element2 out;
    for (const auto& [mu, cu] : u) {
        for (const auto& [mv, cv] : v) {
            auto [c1, left] = mul(mu.first, mv.first);
            if (c1 == 0) continue;
            auto [c2, right] = mul(mu.second, mv.second);
            if (c2 == 0) continue;
            // Koszul sign: the second factor of u crosses the first of v.
            Int c = cu * cv * c1 * c2;
            if ((degree(mu.second) * degree(mv.first)) % 2 != 0) c = -c;
            auto key = std::make_pair(left, right);
            auto [it, inserted] = out.emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

SurfaceAlgebraModel::Element2 SurfaceAlgebraModel::diagonal_class() const {
    Element2 out;
    for (int a = 1; a <= g_; ++a) {
        out[{x(a), y(a)}] = -1;
        out[{y(a), x(a)}] = 1;
    }
    return out;
}

Int SurfaceAlgebraModel::integrate2(const Element2& e) const {
    auto it = e.find({volume(), volume()});
    return it == e.end() ? Int(0) : it->second;
}

Int SurfaceAlgebraModel::integrate_diagonal_pullback(int a, int b) const {
    auto [c, id] = mul(a, b);
    return (id == volume()) ? c : Int(0);
}

}  // namespace confhodge::verify

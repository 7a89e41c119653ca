#include "confhodge/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace confhodge {

Polynomial TruncatedSeries::xy_coefficient(int i, int n) const {
    Polynomial r;
    for (const auto& [m, c] : poly_.terms()) {
        if (m.eu == i && m.et == n) r.add_term({m.ex, m.ey, 0, 0}, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int tmax) const {
    return TruncatedSeries(std::min(tmax, tmax_), poly_.truncated_t(tmax));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int bound = std::min(tmax_, o.tmax_);
    return TruncatedSeries(bound, poly_.truncated_t(bound) + o.poly_.truncated_t(bound));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int bound = std::min(tmax_, o.tmax_);
    return TruncatedSeries(bound, poly_.truncated_t(bound) - o.poly_.truncated_t(bound));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int bound = std::min(tmax_, o.tmax_);
    return TruncatedSeries(bound, poly_.mul_truncated(o.poly_, bound));
}

TruncatedSeries TruncatedSeries::operator*(const Polynomial& p) const {
    return TruncatedSeries(tmax_, poly_.mul_truncated(p, tmax_));
}

static void validate_factor(const DenominatorFactor& f) {
    if (f.base.coefficient(Monomial{}) != 1)
        throw std::invalid_argument(
            "denominator factor must have constant term 1");
    if (f.multiplicity < 1)
        throw std::invalid_argument("factor multiplicity must be positive");
    for (const auto& [m, c] : f.base.terms()) {
        if (m == Monomial{}) continue;
        if (m.et < 1)
            throw std::invalid_argument(
                "denominator factor has a non-constant term of t-degree 0; "
                "its inverse does not truncate");
    }
}

TruncatedSeries expand_factor_inverse(const DenominatorFactor& f, int tmax) {
    validate_factor(f);

    // base = 1 + R with R supported in t-degree >= 1, so
    // 1/base = sum_k (-R)^k terminates at k = tmax.
    Polynomial neg_rest;
    for (const auto& [m, c] : f.base.terms()) {
        if (m != Monomial{}) neg_rest.add_term(m, -c);
    }

    Polynomial inv = Polynomial::one();
    Polynomial power = Polynomial::one();
    for (int k = 1; k <= tmax; ++k) {
        power = power.mul_truncated(neg_rest, tmax);
        if (power.is_zero()) break;
        inv += power;
    }

    Polynomial result = Polynomial::one();
    for (int k = 0; k < f.multiplicity; ++k)
        result = result.mul_truncated(inv, tmax);
    return TruncatedSeries(tmax, result);
}

TruncatedSeries expand_rational(const RationalGF& gf, int tmax) {
    TruncatedSeries s(tmax, gf.numerator);
    for (const auto& f : gf.denominator) s = s * expand_factor_inverse(f, tmax);
    return s;
}

Polynomial factor_one_minus_t() {
    Polynomial p = Polynomial::one();
    p.add_term({0, 0, 0, 1}, -1);
    return p;
}

Polynomial factor_one_plus_xyut() {
    Polynomial p = Polynomial::one();
    p.add_term({1, 1, 1, 1}, 1);
    return p;
}

Polynomial factor_one_minus_x2yu2t2() {
    Polynomial p = Polynomial::one();
    p.add_term({2, 1, 2, 2}, -1);
    return p;
}

Polynomial factor_one_minus_xy2u2t2() {
    Polynomial p = Polynomial::one();
    p.add_term({1, 2, 2, 2}, -1);
    return p;
}

Polynomial rename_ut_to_z(const Polynomial& p) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        if (m.eu != m.et)
            throw std::invalid_argument(
                "rename_ut_to_z: term is not a polynomial in ut");
        r.add_term({m.ex, m.ey, 0, m.et}, c);
    }
    return r;
}

}  // namespace confhodge

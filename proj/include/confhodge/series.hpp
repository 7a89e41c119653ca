#pragma once

#include <vector>

#include "confhodge/polynomial.hpp"

namespace confhodge {

// One factor of a structured denominator, kept factored and inverted by
// geometric expansion. `base` must have constant term 1 and every other
// monomial must carry positive t-degree, so the inverse terminates under
// truncation.
struct DenominatorFactor {
    Polynomial base;
    int multiplicity = 1;
};

// Numerator over a product of invertible factors. The denominator is never
// multiplied out.
struct RationalGF {
    Polynomial numerator;
    std::vector<DenominatorFactor> denominator;
};

// Power series truncated at a total t-degree bound. Arithmetic re-truncates;
// combining two series lands at the smaller bound.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int tmax) : tmax_(tmax) {}
    TruncatedSeries(int tmax, const Polynomial& p)
        : tmax_(tmax), poly_(p.truncated_t(tmax)) {}

    int tmax() const { return tmax_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    Int coefficient(const Monomial& m) const { return poly_.coefficient(m); }

    // The coefficient of u^i t^n, as a polynomial in x,y.
    Polynomial xy_coefficient(int i, int n) const;

    TruncatedSeries truncated(int tmax) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Polynomial& p) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int tmax_ = 0;
    Polynomial poly_;
};

// Inverse of base^multiplicity as a series up to t-degree tmax. Rejects a
// base whose constant term is not 1.
TruncatedSeries expand_factor_inverse(const DenominatorFactor& f, int tmax);

// numerator * product of factor inverses, truncated. The result does not
// depend on the order of the factors.
TruncatedSeries expand_rational(const RationalGF& gf, int tmax);

// The denominator factors of the four-variable generating function.
Polynomial factor_one_minus_t();        // 1 - t
Polynomial factor_one_plus_xyut();      // 1 + xyut
Polynomial factor_one_minus_x2yu2t2();  // 1 - x^2 y u^2 t^2
Polynomial factor_one_minus_xy2u2t2();  // 1 - x y^2 u^2 t^2

// Renames ut -> z on a polynomial whose every term has eu == et, dropping
// the u-exponent (z lives in the t slot). This is how the strand
// denominators are produced from the four-variable ones.
Polynomial rename_ut_to_z(const Polynomial& p);

}  // namespace confhodge

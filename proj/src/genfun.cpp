#include "confhodge/genfun.hpp"

#include <stdexcept>

namespace confhodge::genfun {

ZPolynomial base_polynomial(int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    ZPolynomial p = Polynomial::one();
    p.add_term({1, 1, 0, 2}, -1);  // 1 - x y z^2
    Polynomial xz = Polynomial::one();
    xz.add_term({1, 0, 0, 1}, -1);  // 1 - x z
    Polynomial yz = Polynomial::one();
    yz.add_term({0, 1, 0, 1}, -1);  // 1 - y z
    for (int a = 0; a < g; ++a) p *= xz;
    for (int a = 0; a < g; ++a) p *= yz;
    return p;
}

Polynomial apply_shift(ShiftKind kind, int g, const ZPolynomial& p) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        if (m.eu != 0)
            throw std::invalid_argument("shift input must be a polynomial in x,y,z");
        int j = m.et;
        if (j == g + 1)
            throw std::invalid_argument("shift undefined at j=g+1");
        if (j > 2 * g + 2)
            throw std::invalid_argument("shift undefined beyond z-degree 2g+2");
        Monomial out = m;
        if (kind == ShiftKind::to_ut) {
            out.eu = (j <= g) ? j : j - 1;
            out.et = j;
        } else {
            out.et = (j <= g) ? j : j - 1;
        }
        r.add_term(out, c);
    }
    return r;
}

ZPolynomial truncate_z(const ZPolynomial& p, int zmax) {
    return p.truncated_t(zmax);
}

static void require_punctured(int punctures) {
    if (punctures < 1)
        throw std::invalid_argument(
            "punctures must be >= 1; the closed-surface generating function "
            "is out of scope");
}

RationalGF mixed_hodge_gf(int genus, int punctures) {
    require_punctured(punctures);
    RationalGF gf;
    gf.numerator = apply_shift(ShiftKind::to_ut, genus, base_polynomial(genus));
    if (punctures > 1)
        gf.denominator.push_back({factor_one_plus_xyut(), punctures - 1});
    gf.denominator.push_back({factor_one_minus_t(), 1});
    if (genus > 0) {
        gf.denominator.push_back({factor_one_minus_x2yu2t2(), genus});
        gf.denominator.push_back({factor_one_minus_xy2u2t2(), genus});
    }
    return gf;
}

RationalGF strand_gf(Strand which, int genus, int punctures) {
    require_punctured(punctures);
    RationalGF gf;
    const ZPolynomial base = base_polynomial(genus);
    gf.numerator = (which == Strand::diagonal)
                       ? truncate_z(base, genus)
                       : apply_shift(ShiftKind::in_z, genus, base);
    // Same factors as the four-variable denominator with ut renamed to z;
    // the 1/(1-t) strand-summation factor does not appear.
    if (punctures > 1)
        gf.denominator.push_back({rename_ut_to_z(factor_one_plus_xyut()), punctures - 1});
    if (genus > 0) {
        gf.denominator.push_back({rename_ut_to_z(factor_one_minus_x2yu2t2()), genus});
        gf.denominator.push_back({rename_ut_to_z(factor_one_minus_xy2u2t2()), genus});
    }
    return gf;
}

HodgeTable hodge_table_from_series(int genus, int punctures,
                                   const TruncatedSeries& s) {
    HodgeTable table;
    table.genus = genus;
    table.punctures = punctures;
    for (const auto& [m, c] : s.poly().terms()) {
        Int h = (m.eu % 2 == 0) ? c : -c;
        if (h < 0)
            throw std::logic_error(
                "coefficient sign pattern violated: negative Hodge number at "
                "u-degree " + std::to_string(m.eu));
        if (m.et < m.eu)
            throw std::logic_error("expansion produced a term with n < i");
        table.entries.emplace(HodgeKey{m.et, m.eu, m.ex, m.ey}, h);
    }
    return table;
}

HodgeTable hodge_table(int genus, int punctures, int tmax) {
    return hodge_table_from_series(
        genus, punctures, expand_rational(mixed_hodge_gf(genus, punctures), tmax));
}

TruncatedSeries specialize(const TruncatedSeries& s, Specialization mode) {
    switch (mode) {
        case Specialization::betti:
            return TruncatedSeries(s.tmax(), s.poly().with_ones(true, true, false));
        case Specialization::euler:
            return TruncatedSeries(s.tmax(), s.poly().with_ones(true, true, true));
        case Specialization::epoly:
            return TruncatedSeries(s.tmax(), s.poly().with_ones(false, false, true));
    }
    throw std::invalid_argument("unknown specialization");
}

}  // namespace confhodge::genfun

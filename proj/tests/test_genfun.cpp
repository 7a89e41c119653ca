#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "confhodge/genfun.hpp"

using namespace confhodge;
using namespace confhodge::genfun;

namespace {

ZPolynomial z_term(int ex, int ey, int ez, int c) {
    return Polynomial::term({ex, ey, 0, ez}, c);
}

}  // namespace

TEST_CASE("base polynomial at genus 0 and 1") {
    CHECK(base_polynomial(0) == Polynomial::one() + z_term(1, 1, 2, -1));

    ZPolynomial want = Polynomial::one();
    want += z_term(1, 0, 1, -1);
    want += z_term(0, 1, 1, -1);
    want += z_term(2, 1, 3, 1);
    want += z_term(1, 2, 3, 1);
    want += z_term(2, 2, 4, -1);
    CHECK(base_polynomial(1) == want);  // no z^2 term
}

TEST_CASE("base polynomial coefficient via the binomial formula") {
    CHECK(base_polynomial(2).coefficient({1, 1, 0, 2}) == 3);
}

TEST_CASE("the z^(g+1) part vanishes for g <= 12") {
    for (int g = 0; g <= 12; ++g) {
        const auto base = base_polynomial(g);
        for (const auto& [m, c] : base.terms()) CHECK(m.et != g + 1);
    }
}

TEST_CASE("shift to u,t at genus 0 and 1") {
    Polynomial want0 = Polynomial::one();
    want0.add_term({1, 1, 1, 2}, -1);
    CHECK(apply_shift(ShiftKind::to_ut, 0, base_polynomial(0)) == want0);

    Polynomial want1 = Polynomial::one();
    want1.add_term({1, 0, 1, 1}, -1);
    want1.add_term({0, 1, 1, 1}, -1);
    want1.add_term({2, 1, 2, 3}, 1);
    want1.add_term({1, 2, 2, 3}, 1);
    want1.add_term({2, 2, 3, 4}, -1);
    CHECK(apply_shift(ShiftKind::to_ut, 1, base_polynomial(1)) == want1);
}

TEST_CASE("shift in z at genus 1") {
    ZPolynomial want = Polynomial::one();
    want += z_term(1, 0, 1, -1);
    want += z_term(0, 1, 1, -1);
    want += z_term(2, 1, 2, 1);
    want += z_term(1, 2, 2, 1);
    want += z_term(2, 2, 3, -1);
    CHECK(apply_shift(ShiftKind::in_z, 1, base_polynomial(1)) == want);
}

TEST_CASE("shift rejects a nonzero gap coefficient") {
    // a corrupted input with a z^(g+1) term must not be silently mapped
    CHECK_THROWS_WITH_AS(apply_shift(ShiftKind::to_ut, 1, z_term(0, 0, 2, 1)),
                         "shift undefined at j=g+1", std::invalid_argument);
    CHECK_THROWS_AS(apply_shift(ShiftKind::to_ut, 0, z_term(0, 0, 9, 1)),
                    std::invalid_argument);
    // and inputs carrying u are not z-polynomials
    CHECK_THROWS_AS(apply_shift(ShiftKind::in_z, 1, Polynomial::term({0, 0, 1, 1}, 1)),
                    std::invalid_argument);
}

TEST_CASE("generating function shapes") {
    auto gf01 = mixed_hodge_gf(0, 1);
    Polynomial num = Polynomial::one();
    num.add_term({1, 1, 1, 2}, -1);
    CHECK(gf01.numerator == num);
    REQUIRE(gf01.denominator.size() == 1);
    CHECK(gf01.denominator[0].base == factor_one_minus_t());

    auto gf02 = mixed_hodge_gf(0, 2);
    REQUIRE(gf02.denominator.size() == 2);
    CHECK(gf02.denominator[0].base == factor_one_plus_xyut());
    CHECK(gf02.denominator[0].multiplicity == 1);

    auto gf11 = mixed_hodge_gf(1, 1);
    REQUIRE(gf11.denominator.size() == 3);
    CHECK(gf11.denominator[1].base == factor_one_minus_x2yu2t2());
    CHECK(gf11.denominator[2].base == factor_one_minus_xy2u2t2());

    CHECK_THROWS_AS(mixed_hodge_gf(0, 0), std::invalid_argument);
}

TEST_CASE("hodge table for the plane at n=2") {
    auto table = hodge_table(0, 1, 2);
    CHECK(table.value({2, 0, 0, 0}) == 1);
    CHECK(table.value({2, 1, 1, 1}) == 1);
    int at_n2 = 0;
    for (const auto& [k, h] : table.entries)
        if (k.n == 2) ++at_n2;
    CHECK(at_n2 == 2);
}

TEST_CASE("hodge table for the punctured torus at n=2") {
    auto table = hodge_table(1, 1, 2);
    CHECK(table.value({2, 0, 0, 0}) == 1);
    CHECK(table.value({2, 1, 1, 0}) == 1);
    CHECK(table.value({2, 1, 0, 1}) == 1);
    CHECK(table.value({2, 2, 2, 1}) == 1);
    CHECK(table.value({2, 2, 1, 2}) == 1);
    int at_n2 = 0;
    for (const auto& [k, h] : table.entries)
        if (k.n == 2) ++at_n2;
    CHECK(at_n2 == 5);
}

TEST_CASE("a violated sign pattern is reported, not stored") {
    // h = (-1)^i c must come out nonnegative; feed a series that breaks it
    TruncatedSeries bad(1, Polynomial::term({0, 0, 1, 1}, 1));
    CHECK_THROWS_AS(hodge_table_from_series(0, 1, bad), std::logic_error);
}

TEST_CASE("n=0 always carries exactly the unit class") {
    for (int g : {0, 2, 5}) {
        auto table = hodge_table(g, 1, 0);
        CHECK(table.entries.size() == 1);
        CHECK(table.value({0, 0, 0, 0}) == 1);
    }
}

TEST_CASE("strand generating functions") {
    auto diag01 = strand_gf(Strand::diagonal, 0, 1);
    CHECK(diag01.numerator == Polynomial::one());
    CHECK(diag01.denominator.empty());
    CHECK(expand_rational(diag01, 9).poly() == Polynomial::one());

    auto diag11 = strand_gf(Strand::diagonal, 1, 1);
    ZPolynomial num = Polynomial::one();
    num += z_term(1, 0, 1, -1);
    num += z_term(0, 1, 1, -1);
    CHECK(diag11.numerator == num);
    REQUIRE(diag11.denominator.size() == 2);
    CHECK(diag11.denominator[0].base == rename_ut_to_z(factor_one_minus_x2yu2t2()));

    auto super11 = strand_gf(Strand::superdiagonal, 1, 1);
    CHECK(super11.numerator == apply_shift(ShiftKind::in_z, 1, base_polynomial(1)));

    CHECK_THROWS_AS(strand_gf(Strand::diagonal, 1, 0), std::invalid_argument);
}

TEST_CASE("euler specialization") {
    auto s01 = specialize(expand_rational(mixed_hodge_gf(0, 1), 5),
                          Specialization::euler);
    Polynomial want01;
    want01.add_term({0, 0, 0, 0}, 1);
    want01.add_term({0, 0, 0, 1}, 1);
    CHECK(s01.poly() == want01);

    auto s11 = specialize(expand_rational(mixed_hodge_gf(1, 1), 4),
                          Specialization::euler);
    Polynomial want11;
    for (int k = 0; k <= 4; ++k) want11.add_term({0, 0, 0, k}, (k % 2 == 0) ? 1 : -1);
    CHECK(s11.poly() == want11);
}

TEST_CASE("betti specialization of the punctured torus at t^1") {
    auto s = specialize(expand_rational(mixed_hodge_gf(1, 1), 1),
                        Specialization::betti);
    CHECK(s.coefficient({0, 0, 0, 1}) == 1);
    CHECK(s.coefficient({0, 0, 1, 1}) == -2);
}

TEST_CASE("epoly keeps the x,y grading") {
    auto s = specialize(expand_rational(mixed_hodge_gf(1, 1), 2),
                        Specialization::epoly);
    CHECK(s.coefficient({1, 0, 0, 1}) == -1);
    for (const auto& [m, c] : s.poly().terms()) CHECK(m.eu == 0);
}

TEST_CASE("numerator is cancellation-free for g <= 10") {
    for (int g = 0; g <= 10; ++g) {
        const auto numerator = apply_shift(ShiftKind::to_ut, g, base_polynomial(g));
        const auto flipped = numerator.negate_u();
        for (const auto& [m, c] : flipped.terms()) CHECK(c > 0);
    }
}

TEST_CASE("sign coherence: u-degree determines the coefficient sign") {
    auto s = expand_rational(mixed_hodge_gf(2, 2), 6);
    for (const auto& [m, c] : s.poly().terms()) {
        if (m.eu % 2 == 0)
            CHECK(c > 0);
        else
            CHECK(c < 0);
    }
}

TEST_CASE("puncture recursion at genus 1") {
    auto lhs = expand_rational(mixed_hodge_gf(1, 2), 8) * factor_one_plus_xyut();
    auto rhs = expand_rational(mixed_hodge_gf(1, 1), 8);
    CHECK(lhs.poly() == rhs.poly());
}

TEST_CASE("strand series agree with the full expansion, g=1") {
    auto diag = expand_rational(strand_gf(Strand::diagonal, 1, 1), 6);
    auto super = expand_rational(strand_gf(Strand::superdiagonal, 1, 1), 6);
    auto full = expand_rational(mixed_hodge_gf(1, 1), 7);
    for (int i = 0; i <= 6; ++i) {
        CHECK(diag.xy_coefficient(0, i) == full.xy_coefficient(i, i));
        CHECK(super.xy_coefficient(0, i) == full.xy_coefficient(i, i + 1));
    }
}

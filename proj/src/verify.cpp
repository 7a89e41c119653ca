#include "confhodge/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace confhodge::verify {

namespace {

std::string istr(const Int& v) { return v.get_str(); }

CheckReport fail(CheckReport r, std::string location, std::string expected,
                 std::string actual) {
    r.pass = false;
    r.witness = CheckWitness{std::move(location), std::move(expected),
                             std::move(actual)};
    return r;
}

CheckReport make_report(std::string suite, std::string params) {
    CheckReport r;
    r.suite = std::move(suite);
    r.params = std::move(params);
    return r;
}

std::optional<std::tuple<Monomial, Int, Int>> first_difference(
    const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return std::tuple{ia->first, ia->second, Int(0)};
        }
        if (ia == ea || ib->first < ia->first) {
            return std::tuple{ib->first, Int(0), ib->second};
        }
        if (ia->second != ib->second)
            return std::tuple{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

}  // namespace

CheckReport check_oracle_equivalence(int g_max, int n_max) {
    CheckReport r = make_report("oracle", "g_max=" + std::to_string(g_max) +
                               " n_max=" + std::to_string(n_max));
    for (int g = 0; g <= g_max; ++g) {
        const auto series =
            expand_rational(genfun::mixed_hodge_gf(g, 1), n_max);
        for (int n = 0; n <= n_max; ++n) {
            // Oracle side: (-1)^i sum over p+q=i of the graded dimensions.
            std::map<std::tuple<int, int, int>, Int> oracle;  // (w1,w2,i)
            for (const auto& [key, dim] : dg::cohomology_hilbert(g, n).dims) {
                int i = key.p + key.q;
                Int signed_dim = (i % 2 == 0) ? dim : -dim;
                oracle[{key.w1, key.w2, i}] += signed_dim;
            }
            std::erase_if(oracle, [](const auto& kv) { return kv.second == 0; });

            // Formula side: the t^n slice of the expansion.
            std::map<std::tuple<int, int, int>, Int> formula;
            for (const auto& [m, c] : series.poly().terms())
                if (m.et == n) formula[{m.ex, m.ey, m.eu}] = c;

            std::set<std::tuple<int, int, int>> keys;
            for (const auto& [k, v] : oracle) keys.insert(k);
            for (const auto& [k, v] : formula) keys.insert(k);
            for (const auto& k : keys) {
                Int want = oracle.count(k) ? oracle.at(k) : Int(0);
                Int got = formula.count(k) ? formula.at(k) : Int(0);
                if (want != got) {
                    auto [w1, w2, i] = k;
                    return fail(std::move(r),
                                "g=" + std::to_string(g) + " n=" + std::to_string(n) +
                                    " w1=" + std::to_string(w1) +
                                    " w2=" + std::to_string(w2) +
                                    " i=" + std::to_string(i),
                                istr(want), istr(got));
                }
            }
        }
    }
    return r;
}

CheckReport check_truncation_identity(int g_max) {
    CheckReport r = make_report("identity", "g_max=" + std::to_string(g_max));
    for (int g = 0; g <= g_max; ++g) {
        // P and Q from their binomial-sum definitions, already substituted
        // x -> -xut, y -> -yut (the substitution preserves total xy-degree).
        Polynomial p_sub, q_sub;
        for (int s = 0; s <= g; ++s) {
            for (int t = 0; t <= g; ++t) {
                Int sign = ((s + t) % 2 == 0) ? 1 : -1;
                Monomial m{s, t, s + t, s + t};
                if (s + t >= g - 1) {
                    Int c = binomial(g, s) * binomial(g, t) -
                            binomial(g, s + 1) * binomial(g, t + 1);
                    p_sub.add_term(m, sign * c);
                }
                if (s + t <= g) {
                    Int c = binomial(g, s) * binomial(g, t) -
                            binomial(g, s - 1) * binomial(g, t - 1);
                    q_sub.add_term(m, sign * c);
                }
            }
        }
        Polynomial lhs = Polynomial::term({1, 1, 1, 2}, -1) * p_sub + q_sub;
        Polynomial rhs = genfun::apply_shift(genfun::ShiftKind::to_ut, g,
                                             genfun::base_polynomial(g));
        if (auto diff = first_difference(lhs, rhs)) {
            auto [m, a, b] = *diff;
            return fail(std::move(r), "g=" + std::to_string(g) + " term " + monomial_text(m),
                        istr(b), istr(a));
        }
    }
    return r;
}

CheckReport check_lefschetz(int g_max) {
    CheckReport r = make_report("lefschetz-ranks", "g_max=" + std::to_string(g_max));
    for (int g = 0; g <= g_max; ++g) {
        for (int i = 0; i <= 2 * g; ++i) {
            long want = std::min(binomial(2 * g, i), binomial(2 * g, i + 2)).get_si();
            int got = dg::lefschetz_matrix(g, i).rank();
            if (got != want)
                return fail(std::move(r), "g=" + std::to_string(g) + " i=" + std::to_string(i),
                            std::to_string(want), std::to_string(got));
        }
    }
    return r;
}

CheckReport check_block_dims(int g_max) {
    CheckReport r = make_report("block-dims", "g_max=" + std::to_string(g_max));
    // 0 = identical, 1 = diagonally conjugate, 2 = rank-equal only
    int weakest = 0;
    for (int g = 0; g <= g_max; ++g) {
        for (int s = 0; s <= g; ++s) {
            for (int t = 0; t <= g; ++t) {
                auto rank_route = dg::block_cohomology_dims(g, s, t);
                auto closed = dg::closed_form_block_dims(g, s, t);
                std::string loc = "g=" + std::to_string(g) + " sigma=" + std::to_string(s) +
                                  " tau=" + std::to_string(t);
                if (rank_route.rho1 != closed.rho1)
                    return fail(std::move(r), loc + " rho=1",
                                std::to_string(closed.rho1),
                                std::to_string(rank_route.rho1));
                if (rank_route.rho0 != closed.rho0)
                    return fail(std::move(r), loc + " rho=0",
                                std::to_string(closed.rho0),
                                std::to_string(rank_route.rho0));

                const auto d_block = dg::differential_block(g, s, t);
                const auto l_block = dg::lefschetz_block(g, s, t);
                if (d_block == l_block) {
                    // identical
                } else if (equal_up_to_diagonal_signs(d_block, l_block)) {
                    weakest = std::max(weakest, 1);
                } else if (d_block.rank() == l_block.rank()) {
                    weakest = std::max(weakest, 2);
                } else {
                    return fail(std::move(r), loc + " block-matrix comparison",
                                "equal ranks for differential and Lefschetz blocks",
                                "rank mismatch");
                }
            }
        }
    }
    r.notes = weakest == 0
                  ? "differential and Lefschetz blocks are entrywise identical"
                  : (weakest == 1
                         ? "blocks agree up to diagonal sign conjugation"
                         : "blocks agree in rank only");
    return r;
}

CheckReport check_stability(int g_max, int r_max, int n_max) {
    CheckReport r = make_report("stability", "g_max=" + std::to_string(g_max) +
                                   " r_max=" + std::to_string(r_max) +
                                   " n_max=" + std::to_string(n_max));
    for (int g = 0; g <= g_max; ++g) {
        for (int punctures = 1; punctures <= r_max; ++punctures) {
            const auto table = genfun::hodge_table(g, punctures, n_max);
            std::string base = "g=" + std::to_string(g) + " r=" + std::to_string(punctures);
            std::set<std::tuple<int, int, int>> gradings;  // (w1,w2,i)
            for (const auto& [k, h] : table.entries) {
                if (k.n < k.i)
                    return fail(std::move(r),
                                base + " n=" + std::to_string(k.n) + " i=" + std::to_string(k.i),
                                "0 (vanishing above the diagonal)", istr(h));
                gradings.insert({k.w1, k.w2, k.i});
            }
            for (const auto& [w1, w2, i] : gradings) {
                for (int n = i + 1; n < n_max; ++n) {
                    Int a = table.value({n, i, w1, w2});
                    Int b = table.value({n + 1, i, w1, w2});
                    if (a != b)
                        return fail(std::move(r),
                                    base + " w1=" + std::to_string(w1) +
                                        " w2=" + std::to_string(w2) +
                                        " i=" + std::to_string(i) +
                                        " n=" + std::to_string(n) + "->" +
                                        std::to_string(n + 1),
                                    istr(a), istr(b));
                }
            }
        }
    }
    return r;
}

CheckReport check_strands(int g_max, int r_max, int i_max) {
    CheckReport r = make_report("strands", "g_max=" + std::to_string(g_max) +
                                 " r_max=" + std::to_string(r_max) +
                                 " i_max=" + std::to_string(i_max));
    for (int g = 0; g <= g_max; ++g) {
        for (int punctures = 1; punctures <= r_max; ++punctures) {
            const auto diag = expand_rational(
                genfun::strand_gf(genfun::Strand::diagonal, g, punctures), i_max);
            const auto super = expand_rational(
                genfun::strand_gf(genfun::Strand::superdiagonal, g, punctures), i_max);
            const auto full = expand_rational(
                genfun::mixed_hodge_gf(g, punctures), i_max + 1);
            std::string base = "g=" + std::to_string(g) + " r=" + std::to_string(punctures);
            for (int i = 0; i <= i_max; ++i) {
                Polynomial want = full.xy_coefficient(i, i);
                Polynomial got = diag.xy_coefficient(0, i);
                if (auto diff = first_difference(want, got)) {
                    auto [m, a, b] = *diff;
                    return fail(std::move(r),
                                base + " diagonal z^" + std::to_string(i) + " term " +
                                    monomial_text(m),
                                istr(a), istr(b));
                }
                want = full.xy_coefficient(i, i + 1);
                got = super.xy_coefficient(0, i);
                if (auto diff = first_difference(want, got)) {
                    auto [m, a, b] = *diff;
                    return fail(std::move(r),
                                base + " superdiagonal z^" + std::to_string(i) + " term " +
                                    monomial_text(m),
                                istr(a), istr(b));
                }
            }
        }
    }
    return r;
}

static bool pure_key(const genfun::HodgeKey& k) {
    return k.w1 + k.w2 == (3 * k.i) / 2;
}

CheckReport check_purity(int n_max) {
    CheckReport r = make_report("purity", "n_max=" + std::to_string(n_max));
    for (const auto& [k, h] : genfun::hodge_table(1, 1, n_max).entries) {
        if (!pure_key(k))
            return fail(std::move(r),
                        "g=1 r=1 n=" + std::to_string(k.n) + " i=" + std::to_string(k.i) +
                            " w1=" + std::to_string(k.w1) + " w2=" + std::to_string(k.w2),
                        "w1+w2 = " + std::to_string((3 * k.i) / 2),
                        "w1+w2 = " + std::to_string(k.w1 + k.w2));
    }

    // g = r = 2 must have at least one impure entry within n <= 8.
    bool impure_found = false;
    genfun::HodgeKey impure_at{};
    for (const auto& [k, h] : genfun::hodge_table(2, 2, 8).entries) {
        if (!pure_key(k)) {
            impure_found = true;
            impure_at = k;
            break;
        }
    }
    if (!impure_found)
        return fail(std::move(r), "g=2 r=2 n<=8",
                    "at least one impure nonzero entry", "all entries pure");
    r.notes = "g=2 r=2 first impure entry: n=" + std::to_string(impure_at.n) +
              " i=" + std::to_string(impure_at.i) + " w1=" + std::to_string(impure_at.w1) +
              " w2=" + std::to_string(impure_at.w2);

    // Measured only: whether g=2, r=1 is pure within n <= 8.
    int impure21 = 0;
    genfun::HodgeKey first21{};
    for (const auto& [k, h] : genfun::hodge_table(2, 1, 8).entries) {
        if (!pure_key(k)) {
            if (impure21 == 0) first21 = k;
            ++impure21;
        }
    }
    if (impure21 > 0) {
        r.notes += "; g=2 r=1 impure entries within n<=8: " + std::to_string(impure21) +
                   " (first: n=" + std::to_string(first21.n) + " i=" + std::to_string(first21.i) +
                   " w1=" + std::to_string(first21.w1) + " w2=" + std::to_string(first21.w2) + ")";
    } else {
        r.notes += "; g=2 r=1 has no impure entries within n<=8";
    }
    return r;
}

CheckReport check_euler_characteristic(int g_max, int r_max, int tmax) {
    CheckReport r = make_report("euler", "g_max=" + std::to_string(g_max) +
                               " r_max=" + std::to_string(r_max) +
                               " tmax=" + std::to_string(tmax));
    for (int g = 0; g <= g_max; ++g) {
        for (int punctures = 1; punctures <= r_max; ++punctures) {
            const auto got = genfun::specialize(
                expand_rational(genfun::mixed_hodge_gf(g, punctures), tmax),
                genfun::Specialization::euler);
            const int chi = 2 - 2 * g - punctures;
            Polynomial want;
            if (chi >= 0) {
                for (int k = 0; k <= std::min(chi, tmax); ++k)
                    want.add_term({0, 0, 0, k}, binomial(chi, k));
            } else {
                for (int k = 0; k <= tmax; ++k) {
                    Int c = binomial(-chi + k - 1, k);
                    want.add_term({0, 0, 0, k}, (k % 2 == 0) ? c : -c);
                }
            }
            if (auto diff = first_difference(want, got.poly())) {
                auto [m, a, b] = *diff;
                return fail(std::move(r),
                            "g=" + std::to_string(g) + " r=" + std::to_string(punctures) +
                                " term " + monomial_text(m),
                            istr(a), istr(b));
            }
        }
    }
    return r;
}

CheckReport check_positivity(int g_max) {
    CheckReport r = make_report("positivity", "g_max=" + std::to_string(g_max));
    for (int g = 0; g <= g_max; ++g) {
        const std::string base = "g=" + std::to_string(g);
        const auto numerator = genfun::apply_shift(genfun::ShiftKind::to_ut, g,
                                                   genfun::base_polynomial(g));
        const auto unsigned_numerator = numerator.negate_u();
        for (const auto& [m, c] : unsigned_numerator.terms()) {
            if (c < 0)
                return fail(std::move(r), base + " numerator(u->-u) term " + monomial_text(m),
                            "coefficient >= 0", istr(c));
        }

        const auto poly = genfun::base_polynomial(g);
        for (const auto& [m, c] : poly.terms()) {
            if (m.ex + m.ey != m.et || m.ex > g + 1 || m.ey > g + 1)
                return fail(std::move(r), base + " term " + monomial_text(m, true),
                            "x^p y^q z^(p+q) with p,q <= g+1", "out-of-shape term");
        }
        for (int p = 0; p <= g + 1; ++p) {
            for (int q = 0; q <= g + 1; ++q) {
                const int n = p + q;
                Int expr = binomial(g, p) * binomial(g, q) -
                           binomial(g, p - 1) * binomial(g, q - 1);
                Int want = (n % 2 == 0) ? expr : -expr;
                Int got = poly.coefficient({p, q, 0, n});
                std::string loc = base + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                if (want != got)
                    return fail(std::move(r), loc + " coefficient", istr(want), istr(got));
                bool sign_ok = (n <= g)       ? expr > 0
                               : (n == g + 1) ? expr == 0
                                              : expr < 0;
                if (!sign_ok)
                    return fail(std::move(r), loc + " sign table",
                                (n <= g ? "+" : (n == g + 1 ? "0" : "-")), istr(expr));
            }
        }
    }
    return r;
}

CheckReport check_diagonal_class(int g_max) {
    CheckReport r = make_report("diagonal", "g_max=" + std::to_string(g_max));
    for (int g = 0; g <= g_max; ++g) {
        const SurfaceAlgebraModel model(g);
        const auto delta = model.diagonal_class();
        const std::vector<std::pair<int, int>> lift_shifts = {
            {0, 0}, {1, 0}, {0, 1}, {-1, 1}, {2, -3}};
        for (int a = 1; a <= 2 * g; ++a) {
            for (int b = 1; b <= 2 * g; ++b) {
                const Int lhs = model.integrate_diagonal_pullback(a, b);
                const auto gamma = model.tensor(a, b);
                std::string loc = "g=" + std::to_string(g) + " gamma=(" +
                                  std::to_string(a) + "," + std::to_string(b) + ")";
                for (const auto& [c1, c2] : lift_shifts) {
                    auto lift = delta;
                    if (c1 != 0) lift[{model.volume(), model.unit()}] += c1;
                    if (c2 != 0) lift[{model.unit(), model.volume()}] += c2;
                    const Int rhs = model.integrate2(model.mul2(lift, gamma));
                    if (lhs != rhs)
                        return fail(std::move(r),
                                    loc + " lift=(" + std::to_string(c1) + "," +
                                        std::to_string(c2) + ")",
                                    istr(lhs), istr(rhs));
                }
            }
        }
    }
    return r;
}

CheckReport check_puncture_recursion(int g_max, int r_max, int tmax) {
    CheckReport r = make_report("recursion", "g_max=" + std::to_string(g_max) +
                                   " r_max=" + std::to_string(r_max) +
                                   " tmax=" + std::to_string(tmax));
    for (int g = 0; g <= g_max; ++g) {
        for (int punctures = 1; punctures <= r_max; ++punctures) {
            const auto more = expand_rational(
                genfun::mixed_hodge_gf(g, punctures + 1), tmax);
            const auto fewer = expand_rational(
                genfun::mixed_hodge_gf(g, punctures), tmax);
            const auto product = more * factor_one_plus_xyut();
            if (auto diff = first_difference(fewer.poly(), product.poly())) {
                auto [m, a, b] = *diff;
                return fail(std::move(r),
                            "g=" + std::to_string(g) + " r=" + std::to_string(punctures) +
                                "->" + std::to_string(punctures + 1) + " term " +
                                monomial_text(m),
                            istr(a), istr(b));
            }
        }
    }
    return r;
}

}  // namespace confhodge::verify

#pragma once

#include <compare>
#include <map>
#include <string>

#include "confhodge/bigint.hpp"

namespace confhodge {

// Exponent vector of one term of Z[x,y,u,t]. Polynomials in x,y,z (the
// strand direction) reuse the same carrier with the z-exponent stored in
// `et` and `eu` identically zero.
//
// The ordering is lexicographic on (et, eu, ex, ey), so iteration visits
// terms grouped by t-degree. All serialization and test diffs rely on it.
struct Monomial {
    int ex = 0;
    int ey = 0;
    int eu = 0;
    int et = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.et <=> b.et; c != 0) return c;
        if (auto c = a.eu <=> b.eu; c != 0) return c;
        if (auto c = a.ex <=> b.ex; c != 0) return c;
        return a.ey <=> b.ey;
    }

    Monomial operator*(const Monomial& o) const {
        return {ex + o.ex, ey + o.ey, eu + o.eu, et + o.et};
    }
};

// Sparse polynomial with exact integer coefficients. Zero coefficients are
// never stored; the term map is kept sorted in the canonical monomial order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int>;

    Polynomial() = default;

    static Polynomial constant(Int c);
    static Polynomial term(const Monomial& m, Int c);
    static Polynomial one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const;

    // Adds c * m, erasing the entry if the sum cancels.
    void add_term(const Monomial& m, const Int& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    // Product discarding every term of t-degree > tmax as it is formed.
    Polynomial mul_truncated(const Polynomial& o, int tmax) const;

    // Keeps only terms with et <= tmax.
    Polynomial truncated_t(int tmax) const;

    int max_t_degree() const;  // -1 for the zero polynomial

    // u |-> -u.
    Polynomial negate_u() const;

    // Substitutes 1 for the selected variables, merging the collapsed terms.
    Polynomial with_ones(bool x, bool y, bool u) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

// Plain-text renderings in the canonical term order. With zmode the t slot
// prints as z and u is suppressed (strand-direction polynomials).
std::string monomial_text(const Monomial& m, bool zmode = false);
std::string polynomial_text(const Polynomial& p, bool zmode = false);

}  // namespace confhodge

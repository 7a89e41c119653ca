#include "confhodge/polynomial.hpp"

namespace confhodge {

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, Int c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::mul_truncated(const Polynomial& o, int tmax) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_) {
        if (ma.et > tmax) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.et + mb.et > tmax) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::truncated_t(int tmax) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.et <= tmax) r.terms_.emplace(m, c);
    }
    return r;
}

int Polynomial::max_t_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.et;  // map is ordered by et first
}

Polynomial Polynomial::negate_u() const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, (m.eu % 2 == 0) ? c : -c);
    return r;
}

Polynomial Polynomial::with_ones(bool x, bool y, bool u) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        if (x) mm.ex = 0;
        if (y) mm.ey = 0;
        if (u) mm.eu = 0;
        r.add_term(mm, c);
    }
    return r;
}

static void append_power(std::string& s, const char* var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m, bool zmode) {
    std::string s;
    append_power(s, "x", m.ex);
    append_power(s, "y", m.ey);
    if (!zmode) append_power(s, "u", m.eu);
    append_power(s, zmode ? "z" : "t", m.et);
    return s.empty() ? "1" : s;
}

std::string polynomial_text(const Polynomial& p, bool zmode) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Int a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = monomial_text(m, zmode);
        if (a != 1) {
            out += a.get_str();
            if (mono != "1") out += "*" + mono;
        } else {
            out += mono;
        }
    }
    return out;
}

}  // namespace confhodge

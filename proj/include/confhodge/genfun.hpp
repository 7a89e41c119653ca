#pragma once

#include <map>

#include "confhodge/series.hpp"

namespace confhodge::genfun {

// Polynomial in x, y and an auxiliary variable z (stored in the t slot,
// u unused). The numerator of every generating function here starts life
// in these variables and is pushed to u,t by a degree shift.
using ZPolynomial = Polynomial;

// (1 - xyz^2)(1 - xz)^g(1 - yz)^g, expanded exactly. For p+q = n the
// x^p y^q z^n coefficient is (-1)^n (C(g,p)C(g,q) - C(g,p-1)C(g,q-1));
// in particular the whole z^(g+1) part vanishes.
ZPolynomial base_polynomial(int g);

// The two degree shifts that close the vanishing gap at z-degree g+1.
//   to_ut: z^j -> u^j t^j for j <= g,  z^j -> u^(j-1) t^j for j >= g+2
//   in_z:  z^j -> z^j     for j <= g,  z^j -> z^(j-1)     for j >= g+2
// Both are undefined at j = g+1; a nonzero z^(g+1) part signals a corrupted
// input and is rejected rather than mapped to anything.
enum class ShiftKind { to_ut, in_z };
Polynomial apply_shift(ShiftKind kind, int g, const ZPolynomial& p);

// Keeps only the terms of z-degree <= zmax.
ZPolynomial truncate_z(const ZPolynomial& p, int zmax);

// The closed rational form of the signed four-variable generating function
//   sum (-1)^i h^{w1,w2;i}(Conf_n) x^w1 y^w2 u^i t^n
// for the genus-g surface with `punctures` >= 1 punctures:
//
//   shift{base_polynomial(g)}
//   -------------------------------------------------------------
//   (1+xyut)^(punctures-1) (1-t) (1-x^2yu^2t^2)^g (1-xy^2u^2t^2)^g
RationalGF mixed_hodge_gf(int genus, int punctures);

// Generating functions along the two linear strands: coefficients of
// u^i t^i (diagonal) and u^i t^(i+1) (superdiagonal), as series in x,y,z.
enum class Strand { diagonal, superdiagonal };
RationalGF strand_gf(Strand which, int genus, int punctures);

struct HodgeKey {
    int n = 0, i = 0, w1 = 0, w2 = 0;
    friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};

// Sign-corrected mixed Hodge numbers h = (-1)^i * coefficient, all > 0;
// zero values are not stored, and no entry has n < i.
struct HodgeTable {
    int genus = 0;
    int punctures = 1;
    std::map<HodgeKey, Int> entries;

    Int value(const HodgeKey& k) const {
        auto it = entries.find(k);
        return it == entries.end() ? Int(0) : it->second;
    }
};

HodgeTable hodge_table(int genus, int punctures, int tmax);
HodgeTable hodge_table_from_series(int genus, int punctures,
                                   const TruncatedSeries& s);

// betti: x=y=1 (coefficient of u^i t^n is the signed Betti number)
// euler: x=y=u=1 (coefficient of t^n is the Euler characteristic)
// epoly: u=1 (the E-polynomial specialization, x,y grading kept)
enum class Specialization { betti, euler, epoly };
TruncatedSeries specialize(const TruncatedSeries& s, Specialization mode);

}  // namespace confhodge::genfun

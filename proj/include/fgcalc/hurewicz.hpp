#pragma once

#include "fgcalc/biseries.hpp"
#include "fgcalc/partition.hpp"

#include <map>

namespace fgc {

// The orientation series B(z) = z + h_1 z^2 + h_2 z^3 + ... over Z[h_*].
TruncSeries orientation_series(unsigned order);

// Characteristic-number class of CP_n in Z[h_*]: the coefficient of z^n in
// (B(z)/z)^{-(n+1)}, equivalently (n+1) times coefficient n of the
// compositional inverse of B. Integer coefficients.
MultiPoly hurewicz_cp(unsigned n);

// Independent oracle for hurewicz_cp: in H^*(CP_n) = Z[x]/(x^{n+1}) with
// stable normal bundle Chern class (1+x)^{-(n+1)}, pair every monomial
// symmetric function m_lambda of the Chern roots against the fundamental
// class and return sum_lambda <m_lambda, [CP_n]> h_lambda.
MultiPoly chern_oracle_cp(unsigned n);

// CP_i -> hurewicz_cp(i) applied to every generator occurrence.
MultiPoly hurewicz_substitute(const MultiPoly& p);
TruncSeries hurewicz_image(const TruncSeries& f);
BiTruncSeries hurewicz_image(const BiTruncSeries& f);

// True iff every coefficient of hurewicz_cp(k-1) is an integer divisible by k.
bool divisibility_check(unsigned k);

// An element of S_* (x) Z[b_(*)]: a finite table from divided-power index r
// to a polynomial coefficient. deg b_(r) = 2r.
class DividedExpr {
public:
    DividedExpr() = default;

    static DividedExpr divided_power(unsigned r) {
        DividedExpr e;
        e.add_entry(r, MultiPoly::one());
        return e;
    }

    bool is_zero() const { return table_.empty(); }
    const std::map<unsigned, MultiPoly>& table() const { return table_; }
    MultiPoly entry(unsigned r) const;
    void add_entry(unsigned r, const MultiPoly& p);

    DividedExpr operator+(const DividedExpr& o) const;
    DividedExpr operator-(const DividedExpr& o) const;
    // Divided-power product rule: b_(i) b_(j) = C(i+j, i) b_(i+j).
    DividedExpr operator*(const DividedExpr& o) const;
    DividedExpr scale(const Rational& c) const;

    // Every entry r homogeneous of degree d - 2r (so the whole expression is
    // homogeneous of degree d).
    bool degree_check(int d) const;
    bool has_integer_coefficients() const;

    bool operator==(const DividedExpr& o) const { return table_ == o.table_; }

private:
    std::map<unsigned, MultiPoly> table_;
};

// Rewrite a polynomial in b and other generators through b^r = r! b_(r):
// the term c * b^r * m becomes an entry r with coefficient r! * c * m.
DividedExpr from_b_polynomial(const MultiPoly& p);

// The partition expansion of the Hurewicz image of the n-th projective-space
// class of the grouplike series:
//   sum_{|pi|=n} multinomial(pi) prod_k (k^{-1} h(CP_{k-1}))^{r_k} b_(r).
// Lands in S_* (x) Z[b_(*)]; throws IntegralityViolationError if a
// fractional coefficient survives assembly.
DividedExpr hurewicz_bmu(unsigned n);

// Augmentation h_i -> 0 (i > 0); constant parts survive.
DividedExpr cycle_map(const DividedExpr& e);
// The pre-Hurewicz analogue CP_i -> 0 (i > 0).
DividedExpr cp_augment(const DividedExpr& e);

// The heat-kernel-style expansion of the twisted class: entry r of the
// result carries the coefficient of t^r b_(r), with CP classes symbolic:
//   sum_{|pi|=n} multinomial(pi) prod_k (k^{-1} CP_{k-1})^{r_k} t^{r(pi)} b_(r).
// The divided power b_(r) is rendered as vol(CP_r, w) in display output.
DividedExpr twist_expansion(unsigned n);
// Same with the powers of a concrete t > 0 folded into the coefficients.
DividedExpr twist_expansion(unsigned n, const Rational& t);

// Moments from cumulants: with K(z) = sum kappa_k z^k / k!, returns
// m_n = n! [z^n] exp(K(z)) for n = 0..N (complete Bell evaluation).
std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& kappa);

} // namespace fgc

#pragma once

#include "fgcalc/multipoly.hpp"

#include <vector>

namespace fgc {

// Power series in one formal variable truncated at a fixed order N, with
// MultiPoly coefficients. The order is part of the value; mixing orders is
// an error, never a silent re-truncation.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order);

    static TruncSeries constant(unsigned order, const MultiPoly& c);
    // The identity curve z.
    static TruncSeries identity(unsigned order);

    unsigned order() const { return order_; }
    const MultiPoly& coeff(unsigned k) const;
    void set_coeff(unsigned k, const MultiPoly& p);

    bool is_zero() const;
    bool operator==(const TruncSeries& o) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    // Exact Cauchy product truncated at the shared order.
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;

    TruncSeries scale(const MultiPoly& c) const;
    TruncSeries scale(const Rational& c) const;

    // f(g(z)); g must have zero constant term. Horner evaluation.
    TruncSeries compose(const TruncSeries& g) const;

    // 1/f for a series with constant term 1.
    TruncSeries reciprocal() const;

    TruncSeries derivative() const;

    // exp of a series with zero constant term.
    TruncSeries exp() const;
    // log of a series with constant term 1.
    TruncSeries log() const;

    // Compositional inverse of a normalized curve (c0 = 0, c1 = 1), solved
    // degree by degree. inverse_newton computes the same thing by Newton
    // iteration; the two are cross-checked in the test suite.
    TruncSeries inverse() const;
    TruncSeries inverse_newton() const;

    TruncSeries pow(unsigned k) const;

private:
    void require_same_order(const TruncSeries& o) const;

    unsigned order_;
    std::vector<MultiPoly> c_;
};

// Coefficient n of exp(sum_{k>=1} c_k z^k) as the partition sum
//   out[n] = sum_{|pi|=n} prod_k c_k^{r_k} / r_k!,   out[0] = 1.
// Input c is indexed 1..N via c[k-1]; output is indexed 0..N.
std::vector<MultiPoly> exp_partition_expansion(const std::vector<MultiPoly>& c);

// Grading bookkeeping with deg z = -2: a series is homogeneous of internal
// degree d iff coefficient k is homogeneous of degree d + 2k for every k.
bool is_homogeneous_series(const TruncSeries& f, int internal_degree);

} // namespace fgc

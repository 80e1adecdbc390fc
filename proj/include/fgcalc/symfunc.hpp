#pragma once

#include "fgcalc/multipoly.hpp"

#include <vector>

namespace fgc {

// Exact conversions between the classical symmetric-function bases h, e, p,
// named by what they produce: X_in_Y(n) is the generator X_n written as a
// polynomial in the Y-generators.

// h_n = sum_{|pi|=n} prod_k (p_k/k)^{r_k} / r_k!  (the exp identity
// H(t) = exp(sum p_k/k t^k), evaluated through the partition expansion).
MultiPoly h_in_p(unsigned n);
// e_n via E(t) = exp(sum (-1)^{k-1} p_k/k t^k).
MultiPoly e_in_p(unsigned n);
// Newton recurrence p_n = n h_n - sum_{i=1}^{n-1} p_i h_{n-i}.
MultiPoly p_in_h(unsigned n);
// Newton recurrence p_n = e_1 p_{n-1} - e_2 p_{n-2} + ... + (-1)^{n-1} n e_n.
MultiPoly p_in_e(unsigned n);
// Alternating convolution sum_{i=0}^{n} (-1)^i e_i h_{n-i} = 0, solved for e_n.
MultiPoly e_in_h(unsigned n);
// The same relation solved for h_n.
MultiPoly h_in_e(unsigned n);

// A symmetric-function value tagged with the single basis its generators are
// drawn from. The factory rejects mixed-family polynomials.
struct SymExpr {
    Family basis;
    MultiPoly value;

    static SymExpr make(Family basis, MultiPoly value);
};

// Generator `from`_n expressed in `to`-basis generators; from == to returns
// the generator itself. Families restricted to H, P, E.
SymExpr sym_convert(Family from, Family to, unsigned n);

// Specialization x_1 = ... = x_m = 1: h_n -> C(m+n-1, n), e_n -> C(m, n),
// p_n -> m. Non-symmetric generators are rejected.
Rational finite_model_value(Generator g, unsigned m);
MultiPoly finite_model(const MultiPoly& p, unsigned m);

struct SymfuncReport {
    bool ok = true;
    std::vector<std::string> lines; // one deterministic line per sub-check
};

// Degree-by-degree verification up to max_degree: the h->p->h roundtrip,
// the alternating e/h convolution, the exp identity against the generic
// series engine, and the finite-model specializations for m <= 4.
SymfuncReport verify_symfunc(unsigned max_degree);

} // namespace fgc

#pragma once

#include "fgcalc/biseries.hpp"

namespace fgc {

// The universal formal group law of complex cobordism, modeled rationally:
// the coefficient ring is Q[CP_1, CP_2, ...] with CP_0 = 1.

// log_MU(z) = sum_{k>=1} CP_{k-1}/k z^k.
TruncSeries miscenko_log(unsigned order);

// The formal inverse exp_MU of log_MU.
TruncSeries fgl_exp(unsigned order);

// The logarithm/exponential pair at a fixed truncation order. The factory
// certifies the defining roundtrip compose(log, exp) = z = compose(exp, log)
// before handing the context out.
class FglContext {
public:
    static FglContext create(unsigned order);

    unsigned order() const { return order_; }
    const TruncSeries& log_series() const { return log_; }
    const TruncSeries& exp_series() const { return exp_; }

private:
    FglContext(unsigned order, TruncSeries log, TruncSeries exp);

    unsigned order_;
    TruncSeries log_;
    TruncSeries exp_;
};

// The formal group sum z0 +_MU z1 = exp_MU(log_MU(z0) + log_MU(z1)),
// truncated by total degree.
BiTruncSeries fgl_sum(unsigned order);

// The grouplike series exp(b log_MU(z)) over Q[CP_*, b].
TruncSeries bmu_series(unsigned order);

struct CheckResult {
    bool ok;
    std::optional<BiDiff> diff; // set on failure
};

// Coefficientwise comparison of b(z0) * b(z1) with b evaluated at the formal
// group sum, both as bivariate series of the given total degree.
CheckResult hopf_check(unsigned order);

// Compares the Hurewicz image of the formal group sum with the additive law
// conjugated by the orientation series: B(B^{-1}(z0) + B^{-1}(z1)).
CheckResult additive_image_check(unsigned order);

// The logarithm linearizes the group sum: log_MU(F(z0,z1)) = log_MU(z0) +
// log_MU(z1). Certifying this up to the truncation order also certifies
// associativity without a trivariate expansion.
CheckResult log_linearization_check(unsigned order);

} // namespace fgc

#include "fgcalc/fgl.hpp"

#include "fgcalc/hurewicz.hpp"

#include <stdexcept>
#include <utility>

namespace fgc {

TruncSeries miscenko_log(unsigned order) {
    TruncSeries f(order);
    for (unsigned k = 1; k <= order; ++k) {
        // CP_0 = 1, so the linear coefficient is 1.
        MultiPoly cp = MultiPoly::generator(Generator::cp(k - 1));
        f.set_coeff(k, cp.scale(Rational(1, static_cast<long>(k))));
    }
    return f;
}

TruncSeries fgl_exp(unsigned order) { return miscenko_log(order).inverse(); }

FglContext::FglContext(unsigned order, TruncSeries log, TruncSeries exp)
    : order_(order), log_(std::move(log)), exp_(std::move(exp)) {}

FglContext FglContext::create(unsigned order) {
    TruncSeries log = miscenko_log(order);
    TruncSeries exp = log.inverse();
    TruncSeries id = TruncSeries::identity(order);
    if (!(log.compose(exp) == id) || !(exp.compose(log) == id))
        throw std::logic_error("FglContext: log/exp roundtrip failed");
    return FglContext(order, std::move(log), std::move(exp));
}

BiTruncSeries fgl_sum(unsigned order) {
    FglContext ctx = FglContext::create(order);
    BiTruncSeries logs =
        bi_lift(ctx.log_series(), BiVar::Z0) + bi_lift(ctx.log_series(), BiVar::Z1);
    return compose_bi(ctx.exp_series(), logs);
}

TruncSeries bmu_series(unsigned order) {
    return miscenko_log(order).scale(MultiPoly::generator(Generator::b())).exp();
}

static CheckResult from_diff(std::optional<BiDiff> diff) {
    return CheckResult{!diff.has_value(), std::move(diff)};
}

CheckResult hopf_check(unsigned order) {
    TruncSeries bmu = bmu_series(order);
    BiTruncSeries lhs = bi_lift(bmu, BiVar::Z0) * bi_lift(bmu, BiVar::Z1);
    BiTruncSeries rhs = compose_bi(bmu, fgl_sum(order));
    return from_diff(first_discrepancy(lhs, rhs));
}

CheckResult additive_image_check(unsigned order) {
    BiTruncSeries lhs = hurewicz_image(fgl_sum(order));
    TruncSeries orient = orientation_series(order);
    TruncSeries inv = orient.inverse();
    BiTruncSeries rhs =
        compose_bi(orient, bi_lift(inv, BiVar::Z0) + bi_lift(inv, BiVar::Z1));
    return from_diff(first_discrepancy(lhs, rhs));
}

CheckResult log_linearization_check(unsigned order) {
    TruncSeries log = miscenko_log(order);
    BiTruncSeries lhs = compose_bi(log, fgl_sum(order));
    BiTruncSeries rhs = bi_lift(log, BiVar::Z0) + bi_lift(log, BiVar::Z1);
    return from_diff(first_discrepancy(lhs, rhs));
}

} // namespace fgc

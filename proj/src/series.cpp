#include "fgcalc/series.hpp"

#include "fgcalc/partition.hpp"

#include <stdexcept>

namespace fgc {

TruncSeries::TruncSeries(unsigned order) : order_(order), c_(order + 1) {
    if (order == 0) throw std::invalid_argument("TruncSeries: order must be >= 1");
}

TruncSeries TruncSeries::constant(unsigned order, const MultiPoly& c) {
    TruncSeries f(order);
    f.c_[0] = c;
    return f;
}

TruncSeries TruncSeries::identity(unsigned order) {
    TruncSeries f(order);
    f.c_[1] = MultiPoly::one();
    return f;
}

const MultiPoly& TruncSeries::coeff(unsigned k) const {
    if (k > order_) throw std::out_of_range("TruncSeries: coefficient beyond order");
    return c_[k];
}

void TruncSeries::set_coeff(unsigned k, const MultiPoly& p) {
    if (k > order_) throw std::out_of_range("TruncSeries: coefficient beyond order");
    c_[k] = p;
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

void TruncSeries::require_same_order(const TruncSeries& o) const {
    if (order_ != o.order_)
        throw OrderMismatchError("series orders differ: " + std::to_string(order_) + " vs " +
                                 std::to_string(o.order_));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries r(order_);
    for (unsigned k = 0; k <= order_; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries r(order_);
    for (unsigned k = 0; k <= order_; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(order_);
    for (unsigned k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries r(order_);
    for (unsigned i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= order_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scale(const MultiPoly& c) const {
    TruncSeries r(order_);
    for (unsigned k = 0; k <= order_; ++k) r.c_[k] = c_[k] * c;
    return r;
}

TruncSeries TruncSeries::scale(const Rational& c) const {
    TruncSeries r(order_);
    for (unsigned k = 0; k <= order_; ++k) r.c_[k] = c_[k].scale(c);
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& g) const {
    require_same_order(g);
    if (!g.c_[0].is_zero())
        throw NonzeroConstantTermError("compose: inner series has nonzero constant term");
    TruncSeries r = constant(order_, c_[order_]);
    for (unsigned k = order_; k-- > 0;) {
        r = r * g;
        r.c_[0] += c_[k];
    }
    return r;
}

TruncSeries TruncSeries::reciprocal() const {
    if (!c_[0].is_one())
        throw ConstantTermNotOneError("reciprocal: constant term must be 1");
    // 1/(1+u) with u = f - 1: coefficients solved degree by degree.
    TruncSeries r(order_);
    r.c_[0] = MultiPoly::one();
    for (unsigned n = 1; n <= order_; ++n) {
        MultiPoly acc;
        for (unsigned j = 0; j < n; ++j) acc += r.c_[j] * c_[n - j];
        r.c_[n] = -acc;
    }
    return r;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries r(order_);
    for (unsigned k = 1; k <= order_; ++k) r.c_[k - 1] = c_[k].scale(Rational(static_cast<long>(k)));
    return r;
}

TruncSeries TruncSeries::exp() const {
    if (!c_[0].is_zero())
        throw NonzeroConstantTermError("exp: series has nonzero constant term");
    TruncSeries r = constant(order_, MultiPoly::one());
    TruncSeries term = constant(order_, MultiPoly::one());
    for (unsigned k = 1; k <= order_; ++k) {
        term = (term * *this).scale(Rational(1, static_cast<long>(k)));
        r = r + term;
    }
    return r;
}

TruncSeries TruncSeries::log() const {
    if (!c_[0].is_one())
        throw ConstantTermNotOneError("log: constant term must be 1");
    TruncSeries u = *this;
    u.c_[0] = MultiPoly::zero();
    TruncSeries r(order_);
    TruncSeries upow = constant(order_, MultiPoly::one());
    for (unsigned k = 1; k <= order_; ++k) {
        upow = upow * u;
        Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
        r = r + upow.scale(sign / Rational(static_cast<long>(k)));
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (!c_[0].is_zero() || !c_[1].is_one())
        throw NotNormalizedError("inverse: series must be a normalized curve (c0=0, c1=1)");
    TruncSeries g = identity(order_);
    for (unsigned k = 2; k <= order_; ++k) {
        // With g fixed below degree k and g_k unset, [z^k] f(g) is linear in
        // g_k with unit coefficient.
        TruncSeries h = compose(g);
        g.c_[k] = -h.c_[k];
    }
    return g;
}

TruncSeries TruncSeries::inverse_newton() const {
    if (!c_[0].is_zero() || !c_[1].is_one())
        throw NotNormalizedError("inverse: series must be a normalized curve (c0=0, c1=1)");
    TruncSeries g = identity(order_);
    TruncSeries df = derivative();
    for (;;) {
        TruncSeries err = compose(g) - identity(order_);
        if (err.is_zero()) break;
        TruncSeries correction = err * df.compose(g).reciprocal();
        g = g - correction;
    }
    return g;
}

TruncSeries TruncSeries::pow(unsigned k) const {
    TruncSeries r = constant(order_, MultiPoly::one());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::vector<MultiPoly> exp_partition_expansion(const std::vector<MultiPoly>& c) {
    const unsigned n_max = static_cast<unsigned>(c.size());
    std::vector<MultiPoly> out(n_max + 1);
    out[0] = MultiPoly::one();
    for (unsigned n = 1; n <= n_max; ++n) {
        MultiPoly acc;
        for (const Partition& pi : enumerate_partitions(n)) {
            MultiPoly term = MultiPoly::one();
            Int weight = 1;
            for (unsigned k = 1; k <= pi.max_part(); ++k) {
                unsigned rk = pi.rep(k);
                if (rk == 0) continue;
                term = term * c[k - 1].pow(rk);
                weight *= factorial(rk);
            }
            acc += term.scale(Rational(Int(1), weight));
        }
        out[n] = acc;
    }
    return out;
}

bool is_homogeneous_series(const TruncSeries& f, int internal_degree) {
    for (unsigned k = 0; k <= f.order(); ++k)
        if (!f.coeff(k).degree_check(internal_degree + 2 * static_cast<int>(k))) return false;
    return true;
}

} // namespace fgc

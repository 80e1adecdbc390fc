#include "fgcalc/biseries.hpp"

#include <stdexcept>

namespace fgc {

BiTruncSeries::BiTruncSeries(unsigned order)
    : order_(order), c_(static_cast<std::size_t>(order + 1) * (order + 2) / 2) {
    if (order == 0) throw std::invalid_argument("BiTruncSeries: order must be >= 1");
}

BiTruncSeries BiTruncSeries::constant(unsigned order, const MultiPoly& c) {
    BiTruncSeries f(order);
    f.set_coeff(0, 0, c);
    return f;
}

std::size_t BiTruncSeries::slot(unsigned i, unsigned j) const {
    if (i + j > order_) throw std::out_of_range("BiTruncSeries: coefficient beyond order");
    // row i holds order_+1-i entries
    std::size_t base = static_cast<std::size_t>(i) * (order_ + 1) - static_cast<std::size_t>(i) * (i - 1) / 2;
    return base + j;
}

const MultiPoly& BiTruncSeries::coeff(unsigned i, unsigned j) const { return c_[slot(i, j)]; }

void BiTruncSeries::set_coeff(unsigned i, unsigned j, const MultiPoly& p) { c_[slot(i, j)] = p; }

bool BiTruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

bool BiTruncSeries::operator==(const BiTruncSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

void BiTruncSeries::require_same_order(const BiTruncSeries& o) const {
    if (order_ != o.order_)
        throw OrderMismatchError("bivariate series orders differ: " + std::to_string(order_) +
                                 " vs " + std::to_string(o.order_));
}

BiTruncSeries BiTruncSeries::operator+(const BiTruncSeries& o) const {
    require_same_order(o);
    BiTruncSeries r(order_);
    for (std::size_t s = 0; s < c_.size(); ++s) r.c_[s] = c_[s] + o.c_[s];
    return r;
}

BiTruncSeries BiTruncSeries::operator-(const BiTruncSeries& o) const {
    require_same_order(o);
    BiTruncSeries r(order_);
    for (std::size_t s = 0; s < c_.size(); ++s) r.c_[s] = c_[s] - o.c_[s];
    return r;
}

BiTruncSeries BiTruncSeries::operator*(const BiTruncSeries& o) const {
    require_same_order(o);
    BiTruncSeries r(order_);
    for (unsigned i1 = 0; i1 <= order_; ++i1)
        for (unsigned j1 = 0; i1 + j1 <= order_; ++j1) {
            const MultiPoly& a = coeff(i1, j1);
            if (a.is_zero()) continue;
            for (unsigned i2 = 0; i1 + j1 + i2 <= order_; ++i2)
                for (unsigned j2 = 0; i1 + j1 + i2 + j2 <= order_; ++j2) {
                    const MultiPoly& b = o.coeff(i2, j2);
                    if (b.is_zero()) continue;
                    r.set_coeff(i1 + i2, j1 + j2, r.coeff(i1 + i2, j1 + j2) + a * b);
                }
        }
    return r;
}

BiTruncSeries BiTruncSeries::scale(const Rational& c) const {
    BiTruncSeries r(order_);
    for (std::size_t s = 0; s < c_.size(); ++s) r.c_[s] = c_[s].scale(c);
    return r;
}

BiTruncSeries bi_lift(const TruncSeries& f, BiVar which) {
    BiTruncSeries r(f.order());
    for (unsigned k = 0; k <= f.order(); ++k) {
        if (which == BiVar::Z0)
            r.set_coeff(k, 0, f.coeff(k));
        else
            r.set_coeff(0, k, f.coeff(k));
    }
    return r;
}

BiTruncSeries compose_bi(const TruncSeries& f, const BiTruncSeries& g) {
    if (f.order() != g.order())
        throw OrderMismatchError("compose_bi: orders differ");
    if (!g.coeff(0, 0).is_zero())
        throw NonzeroConstantTermError("compose_bi: inner series has nonzero constant term");
    const unsigned n = f.order();
    BiTruncSeries r = BiTruncSeries::constant(n, f.coeff(n));
    for (unsigned k = n; k-- > 0;) {
        r = r * g;
        r.set_coeff(0, 0, r.coeff(0, 0) + f.coeff(k));
    }
    return r;
}

TruncSeries bi_substitute(const BiTruncSeries& F, const TruncSeries& g0, const TruncSeries& g1) {
    const unsigned n = F.order();
    if (g0.order() != n || g1.order() != n)
        throw OrderMismatchError("bi_substitute: orders differ");
    if (!g0.coeff(0).is_zero() || !g1.coeff(0).is_zero())
        throw NonzeroConstantTermError("bi_substitute: arguments must have zero constant term");
    // Cache powers of the substitution arguments.
    std::vector<TruncSeries> p0(n + 1, TruncSeries::constant(n, MultiPoly::one()));
    std::vector<TruncSeries> p1(n + 1, TruncSeries::constant(n, MultiPoly::one()));
    for (unsigned k = 1; k <= n; ++k) {
        p0[k] = p0[k - 1] * g0;
        p1[k] = p1[k - 1] * g1;
    }
    TruncSeries r(n);
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; i + j <= n; ++j) {
            const MultiPoly& c = F.coeff(i, j);
            if (c.is_zero()) continue;
            r = r + (p0[i] * p1[j]).scale(c);
        }
    return r;
}

std::optional<BiDiff> first_discrepancy(const BiTruncSeries& a, const BiTruncSeries& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("first_discrepancy: orders differ");
    for (unsigned d = 0; d <= a.order(); ++d)
        for (unsigned i = d + 1; i-- > 0;) {
            unsigned j = d - i;
            if (!(a.coeff(i, j) == b.coeff(i, j)))
                return BiDiff{i, j, a.coeff(i, j), b.coeff(i, j)};
        }
    return std::nullopt;
}

bool is_homogeneous_biseries(const BiTruncSeries& f, int internal_degree) {
    for (unsigned i = 0; i <= f.order(); ++i)
        for (unsigned j = 0; i + j <= f.order(); ++j)
            if (!f.coeff(i, j).degree_check(internal_degree + 2 * static_cast<int>(i + j)))
                return false;
    return true;
}

} // namespace fgc

#include "fgcalc/hurewicz.hpp"

#include "fgcalc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgc {

TruncSeries orientation_series(unsigned order) {
    TruncSeries b(order);
    b.set_coeff(1, MultiPoly::one());
    for (unsigned k = 2; k <= order; ++k)
        b.set_coeff(k, MultiPoly::generator(Generator::h(k - 1)));
    return b;
}

MultiPoly hurewicz_cp(unsigned n) {
    if (n == 0) return MultiPoly::one();
    // u = B(z)/z = 1 + h_1 z + h_2 z^2 + ...; answer is [z^n] u^{-(n+1)}.
    TruncSeries u(n);
    u.set_coeff(0, MultiPoly::one());
    for (unsigned k = 1; k <= n; ++k) u.set_coeff(k, MultiPoly::generator(Generator::h(k)));
    return u.reciprocal().pow(n + 1).coeff(n);
}

namespace {

// Dense exponent-vector polynomial in x_1..x_n, used only by the oracle.
using XPoly = std::map<std::vector<int>, Int>;

XPoly xp_mul(const XPoly& a, const XPoly& b, unsigned nvars) {
    XPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(nvars);
            for (unsigned v = 0; v < nvars; ++v) e[v] = ea[v] + eb[v];
            r[e] += ca * cb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

// Elementary symmetric polynomial e_i(x_1..x_n) by iterating
// prod (1 + x_v t) and collecting the t^i coefficient.
XPoly elementary_sym(unsigned i, unsigned nvars) {
    std::vector<XPoly> by_tdeg(i + 1);
    by_tdeg[0][std::vector<int>(nvars, 0)] = 1;
    for (unsigned v = 0; v < nvars; ++v) {
        for (unsigned d = std::min(i, v + 1); d >= 1; --d) {
            for (const auto& [e, c] : by_tdeg[d - 1]) {
                std::vector<int> e2 = e;
                e2[v] += 1;
                by_tdeg[d][e2] += c;
            }
        }
    }
    return by_tdeg[i];
}

// Exact Gaussian elimination solve of M q = rhs.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("solve_linear: singular basis-change matrix");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv = m[col][col].reciprocal();
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational factor = m[row][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

} // namespace

MultiPoly chern_oracle_cp(unsigned n) {
    if (n == 0) return MultiPoly::one();
    const auto partitions = enumerate_partitions(n);
    const std::size_t np = partitions.size();

    // Transition matrix M: e_mu = sum_lambda M[mu][lambda] m_lambda, read off
    // as the coefficient of the sorted monomial x_1^{l_1} x_2^{l_2} ... in
    // the expanded product of elementary symmetric polynomials.
    std::vector<std::vector<Rational>> m(np, std::vector<Rational>(np, Rational(0)));
    for (std::size_t mu = 0; mu < np; ++mu) {
        XPoly prod;
        prod[std::vector<int>(n, 0)] = 1;
        for (unsigned part : partitions[mu].parts())
            prod = xp_mul(prod, elementary_sym(part, n), n);
        for (std::size_t lam = 0; lam < np; ++lam) {
            std::vector<int> key(n, 0);
            auto parts = partitions[lam].parts();
            for (std::size_t i = 0; i < parts.size(); ++i) key[i] = static_cast<int>(parts[i]);
            auto it = prod.find(key);
            if (it != prod.end()) m[mu][lam] = Rational(it->second);
        }
    }

    // Pairings of Chern monomials of the stable normal bundle: with
    // c(nu) = (1+x)^{-(n+1)} each c_j(nu) is the single monomial
    // (-1)^j C(n+j, j) x^j, so <c_mu(nu), [CP_n]> is a signed product of
    // binomials.
    std::vector<Rational> pairings(np, Rational(0));
    for (std::size_t mu = 0; mu < np; ++mu) {
        Int val = 1;
        for (unsigned part : partitions[mu].parts()) {
            Int c = binomial(n + part, part);
            if (part % 2 == 1) c = -c;
            val *= c;
        }
        pairings[mu] = Rational(val);
    }

    // Solve M q = pairings; q_lambda = <m_lambda(nu roots), [CP_n]>.
    std::vector<Rational> q = solve_linear(std::move(m), std::move(pairings));

    MultiPoly result;
    for (std::size_t lam = 0; lam < np; ++lam) {
        MultiPoly h_lambda = MultiPoly::one();
        for (unsigned part : partitions[lam].parts())
            h_lambda = h_lambda * MultiPoly::generator(Generator::h(part));
        result += h_lambda.scale(q[lam]);
    }
    return result;
}

MultiPoly hurewicz_substitute(const MultiPoly& p) {
    return p.substitute([](Generator g) -> std::optional<MultiPoly> {
        if (g.family == Family::CP) return hurewicz_cp(g.index);
        return std::nullopt;
    });
}

TruncSeries hurewicz_image(const TruncSeries& f) {
    TruncSeries r(f.order());
    for (unsigned k = 0; k <= f.order(); ++k) r.set_coeff(k, hurewicz_substitute(f.coeff(k)));
    return r;
}

BiTruncSeries hurewicz_image(const BiTruncSeries& f) {
    BiTruncSeries r(f.order());
    for (unsigned i = 0; i <= f.order(); ++i)
        for (unsigned j = 0; i + j <= f.order(); ++j)
            r.set_coeff(i, j, hurewicz_substitute(f.coeff(i, j)));
    return r;
}

bool divisibility_check(unsigned k) {
    if (k == 0) throw std::invalid_argument("divisibility_check: k must be >= 1");
    MultiPoly p = hurewicz_cp(k - 1);
    return p.has_integer_coefficients() && is_divisible_over_Z(p, Int(static_cast<long>(k)));
}

MultiPoly DividedExpr::entry(unsigned r) const {
    auto it = table_.find(r);
    return it == table_.end() ? MultiPoly::zero() : it->second;
}

void DividedExpr::add_entry(unsigned r, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = table_.emplace(r, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) table_.erase(it);
    }
}

DividedExpr DividedExpr::operator+(const DividedExpr& o) const {
    DividedExpr r = *this;
    for (const auto& [k, p] : o.table_) r.add_entry(k, p);
    return r;
}

DividedExpr DividedExpr::operator-(const DividedExpr& o) const {
    DividedExpr r = *this;
    for (const auto& [k, p] : o.table_) r.add_entry(k, -p);
    return r;
}

DividedExpr DividedExpr::operator*(const DividedExpr& o) const {
    DividedExpr r;
    for (const auto& [i, p] : table_)
        for (const auto& [j, q] : o.table_)
            r.add_entry(i + j, (p * q).scale(Rational(binomial(i + j, i))));
    return r;
}

DividedExpr DividedExpr::scale(const Rational& c) const {
    DividedExpr r;
    if (c.is_zero()) return r;
    for (const auto& [k, p] : table_) r.add_entry(k, p.scale(c));
    return r;
}

bool DividedExpr::degree_check(int d) const {
    for (const auto& [r, p] : table_)
        if (!p.degree_check(d - 2 * static_cast<int>(r))) return false;
    return true;
}

bool DividedExpr::has_integer_coefficients() const {
    for (const auto& [r, p] : table_)
        if (!p.has_integer_coefficients()) return false;
    return true;
}

DividedExpr from_b_polynomial(const MultiPoly& p) {
    DividedExpr out;
    for (const auto& [mono, coeff] : p.terms()) {
        unsigned r = 0;
        Monomial rest;
        for (const auto& [g, e] : mono.factors()) {
            if (g.family == Family::B)
                r = static_cast<unsigned>(e);
            else
                rest = rest * Monomial::generator(g, e);
        }
        MultiPoly piece;
        piece.add_term(rest, coeff * Rational(factorial(r)));
        out.add_entry(r, piece);
    }
    return out;
}

DividedExpr hurewicz_bmu(unsigned n) {
    if (n == 0) throw std::invalid_argument("hurewicz_bmu: n must be >= 1");
    DividedExpr out;
    for (const Partition& pi : enumerate_partitions(n)) {
        MultiPoly factor = MultiPoly::one();
        for (unsigned k = 1; k <= pi.max_part(); ++k) {
            unsigned rk = pi.rep(k);
            if (rk == 0) continue;
            MultiPoly base = exact_div_int(hurewicz_cp(k - 1), Int(static_cast<long>(k)));
            factor = factor * base.pow(rk);
        }
        out.add_entry(pi.part_count(), factor.scale(Rational(pi.multinomial())));
    }
    if (!out.has_integer_coefficients())
        throw IntegralityViolationError("hurewicz_bmu: fractional coefficient at n=" +
                                        std::to_string(n));
    return out;
}

namespace {

DividedExpr augment_family(const DividedExpr& e, Family killed) {
    DividedExpr out;
    for (const auto& [r, p] : e.table()) {
        MultiPoly q = p.substitute([killed](Generator g) -> std::optional<MultiPoly> {
            if (g.family == killed) return MultiPoly::zero();
            return std::nullopt;
        });
        out.add_entry(r, q);
    }
    return out;
}

} // namespace

DividedExpr cycle_map(const DividedExpr& e) { return augment_family(e, Family::H); }

DividedExpr cp_augment(const DividedExpr& e) { return augment_family(e, Family::CP); }

DividedExpr twist_expansion(unsigned n) {
    if (n == 0) throw std::invalid_argument("twist_expansion: n must be >= 1");
    DividedExpr out;
    for (const Partition& pi : enumerate_partitions(n)) {
        MultiPoly factor = MultiPoly::one();
        for (unsigned k = 1; k <= pi.max_part(); ++k) {
            unsigned rk = pi.rep(k);
            if (rk == 0) continue;
            MultiPoly base =
                MultiPoly::generator(Generator::cp(k - 1)).scale(Rational(1, static_cast<long>(k)));
            factor = factor * base.pow(rk);
        }
        out.add_entry(pi.part_count(), factor.scale(Rational(pi.multinomial())));
    }
    return out;
}

DividedExpr twist_expansion(unsigned n, const Rational& t) {
    if (!t.is_positive()) throw std::invalid_argument("twist_expansion: t must be > 0");
    DividedExpr sym = twist_expansion(n);
    DividedExpr out;
    for (const auto& [r, p] : sym.table()) out.add_entry(r, p.scale(t.pow(r)));
    return out;
}

std::vector<Rational> cumulants_to_moments(const std::vector<Rational>& kappa) {
    std::vector<MultiPoly> c(kappa.size());
    for (std::size_t k = 1; k <= kappa.size(); ++k)
        c[k - 1] = MultiPoly(kappa[k - 1] / Rational(factorial(static_cast<unsigned long>(k))));
    std::vector<MultiPoly> expansion = exp_partition_expansion(c);
    std::vector<Rational> m(expansion.size());
    for (std::size_t n = 0; n < expansion.size(); ++n)
        m[n] = expansion[n].constant_term() * Rational(factorial(static_cast<unsigned long>(n)));
    return m;
}

} // namespace fgc

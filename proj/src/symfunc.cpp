#include "fgcalc/symfunc.hpp"

#include "fgcalc/series.hpp"

#include <stdexcept>

namespace fgc {

namespace {

void require_positive(unsigned n, const char* who) {
    if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

std::vector<MultiPoly> power_sum_exp_input(unsigned n, bool alternating) {
    std::vector<MultiPoly> c(n);
    for (unsigned k = 1; k <= n; ++k) {
        Rational coeff(1, static_cast<long>(k));
        if (alternating && k % 2 == 0) coeff = -coeff;
        c[k - 1] = MultiPoly::generator(Generator::p(k)).scale(coeff);
    }
    return c;
}

} // namespace

MultiPoly h_in_p(unsigned n) {
    require_positive(n, "h_in_p");
    return exp_partition_expansion(power_sum_exp_input(n, false))[n];
}

MultiPoly e_in_p(unsigned n) {
    require_positive(n, "e_in_p");
    return exp_partition_expansion(power_sum_exp_input(n, true))[n];
}

MultiPoly p_in_h(unsigned n) {
    require_positive(n, "p_in_h");
    std::vector<MultiPoly> p(n + 1);
    for (unsigned m = 1; m <= n; ++m) {
        MultiPoly acc =
            MultiPoly::generator(Generator::h(m)).scale(Rational(static_cast<long>(m)));
        for (unsigned i = 1; i < m; ++i)
            acc -= p[i] * MultiPoly::generator(Generator::h(m - i));
        p[m] = acc;
    }
    return p[n];
}

MultiPoly p_in_e(unsigned n) {
    require_positive(n, "p_in_e");
    std::vector<MultiPoly> p(n + 1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
        MultiPoly acc =
            MultiPoly::generator(Generator::e(m)).scale(sign * Rational(static_cast<long>(m)));
        for (unsigned i = 1; i < m; ++i) {
            Rational s = (i % 2 == 1) ? Rational(1) : Rational(-1);
            acc += (MultiPoly::generator(Generator::e(i)) * p[m - i]).scale(s);
        }
        p[m] = acc;
    }
    return p[n];
}

MultiPoly e_in_h(unsigned n) {
    require_positive(n, "e_in_h");
    std::vector<MultiPoly> e(n + 1);
    e[0] = MultiPoly::one();
    for (unsigned m = 1; m <= n; ++m) {
        // sum_{i=0}^{m} (-1)^i e_i h_{m-i} = 0 solved for e_m.
        MultiPoly acc;
        for (unsigned i = 0; i < m; ++i) {
            Rational s = (i % 2 == 0) ? Rational(1) : Rational(-1);
            acc += (e[i] * MultiPoly::generator(Generator::h(m - i))).scale(s);
        }
        Rational solve_sign = (m % 2 == 0) ? Rational(-1) : Rational(1);
        e[m] = acc.scale(solve_sign);
    }
    return e[n];
}

MultiPoly h_in_e(unsigned n) {
    require_positive(n, "h_in_e");
    std::vector<MultiPoly> h(n + 1);
    h[0] = MultiPoly::one();
    for (unsigned m = 1; m <= n; ++m) {
        MultiPoly acc;
        for (unsigned i = 1; i <= m; ++i) {
            Rational s = (i % 2 == 1) ? Rational(1) : Rational(-1);
            acc += (MultiPoly::generator(Generator::e(i)) * h[m - i]).scale(s);
        }
        h[m] = acc;
    }
    return h[n];
}

SymExpr SymExpr::make(Family basis, MultiPoly value) {
    for (const auto& [m, c] : value.terms())
        for (const auto& [g, e] : m.factors())
            if (g.family != basis)
                throw std::invalid_argument("SymExpr: generator " + generator_name(g) +
                                            " is not in the declared basis");
    return SymExpr{basis, std::move(value)};
}

SymExpr sym_convert(Family from, Family to, unsigned n) {
    require_positive(n, "sym_convert");
    auto bad = [](Family f) { return f != Family::H && f != Family::P && f != Family::E; };
    if (bad(from) || bad(to))
        throw std::invalid_argument("sym_convert: families must be h, p or e");
    MultiPoly value;
    if (from == to) {
        switch (from) {
            case Family::H: value = MultiPoly::generator(Generator::h(n)); break;
            case Family::P: value = MultiPoly::generator(Generator::p(n)); break;
            default: value = MultiPoly::generator(Generator::e(n)); break;
        }
    } else if (from == Family::H && to == Family::P) {
        value = h_in_p(n);
    } else if (from == Family::E && to == Family::P) {
        value = e_in_p(n);
    } else if (from == Family::P && to == Family::H) {
        value = p_in_h(n);
    } else if (from == Family::P && to == Family::E) {
        value = p_in_e(n);
    } else if (from == Family::E && to == Family::H) {
        value = e_in_h(n);
    } else {
        value = h_in_e(n);
    }
    return SymExpr::make(to, std::move(value));
}

Rational finite_model_value(Generator g, unsigned m) {
    switch (g.family) {
        case Family::H: return Rational(binomial(m + g.index - 1, g.index));
        case Family::E: return Rational(binomial(m, g.index));
        case Family::P: return Rational(static_cast<long>(m));
        default:
            throw std::invalid_argument("finite_model_value: not a symmetric-function generator");
    }
}

MultiPoly finite_model(const MultiPoly& p, unsigned m) {
    return p.substitute([m](Generator g) -> std::optional<MultiPoly> {
        return MultiPoly(finite_model_value(g, m));
    });
}

namespace {

void check(SymfuncReport& rep, bool ok, const std::string& what) {
    rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    rep.ok = rep.ok && ok;
}

} // namespace

SymfuncReport verify_symfunc(unsigned max_degree) {
    require_positive(max_degree, "verify_symfunc");
    SymfuncReport rep;

    // h -> p -> h roundtrip: substituting p_k = p_in_h(k) into h_in_p(n)
    // must recover h_n.
    for (unsigned n = 1; n <= max_degree; ++n) {
        MultiPoly back = h_in_p(n).substitute([](Generator g) -> std::optional<MultiPoly> {
            if (g.family == Family::P) return p_in_h(g.index);
            return std::nullopt;
        });
        check(rep, back == MultiPoly::generator(Generator::h(n)),
              "roundtrip h->p->h degree " + std::to_string(n));
    }

    // Alternating convolution sum (-1)^i e_i h_{n-i} = 0 with e in h-basis.
    for (unsigned n = 1; n <= max_degree; ++n) {
        MultiPoly acc;
        for (unsigned i = 0; i <= n; ++i) {
            MultiPoly ei = (i == 0) ? MultiPoly::one() : e_in_h(i);
            MultiPoly hni =
                (i == n) ? MultiPoly::one() : MultiPoly::generator(Generator::h(n - i));
            Rational s = (i % 2 == 0) ? Rational(1) : Rational(-1);
            acc += (ei * hni).scale(s);
        }
        check(rep, acc.is_zero(), "alternating e/h convolution degree " + std::to_string(n));
    }

    // The exp identity, checked against the generic series engine rather
    // than the partition expansion that h_in_p uses.
    {
        TruncSeries logh(max_degree);
        for (unsigned k = 1; k <= max_degree; ++k)
            logh.set_coeff(
                k, MultiPoly::generator(Generator::p(k)).scale(Rational(1, static_cast<long>(k))));
        TruncSeries h = logh.exp();
        bool ok = true;
        for (unsigned n = 1; n <= max_degree; ++n) ok = ok && h.coeff(n) == h_in_p(n);
        check(rep, ok, "exp identity H(t) = exp(sum p_k/k t^k) to degree " +
                           std::to_string(max_degree));
    }

    // Finite-model specializations x_1 = ... = x_m = 1 for m <= 4.
    for (unsigned m = 1; m <= 4; ++m) {
        bool ok = true;
        for (unsigned n = 1; n <= max_degree; ++n) {
            Rational h_val = finite_model_value(Generator::h(n), m);
            Rational e_val = finite_model_value(Generator::e(n), m);
            ok = ok && finite_model(h_in_p(n), m).constant_term() == h_val;
            ok = ok && finite_model(e_in_h(n), m).constant_term() == e_val;
            ok = ok && finite_model(p_in_h(n), m).constant_term() == Rational(static_cast<long>(m));
            ok = ok && finite_model(h_in_e(n), m).constant_term() == h_val;
            ok = ok && finite_model(e_in_p(n), m).constant_term() == e_val;
            ok = ok && finite_model(p_in_e(n), m).constant_term() == Rational(static_cast<long>(m));
        }
        check(rep, ok, "finite model m=" + std::to_string(m));
    }

    return rep;
}

} // namespace fgc

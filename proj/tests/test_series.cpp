#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgcalc/io.hpp"
#include "fgcalc/series.hpp"
#include "fgcalc/biseries.hpp"

#include <random>

using namespace fgc;

namespace {

MultiPoly h1() { return MultiPoly::generator(Generator::h(1)); }
MultiPoly h2() { return MultiPoly::generator(Generator::h(2)); }
MultiPoly b() { return MultiPoly::generator(Generator::b()); }

// Coefficients from the {-2..2}-span of {1, h1, h2, b}.
MultiPoly random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    MultiPoly p(Rational(c(rng)));
    p += h1().scale(Rational(c(rng)));
    p += h2().scale(Rational(c(rng)));
    p += b().scale(Rational(c(rng)));
    return p;
}

// A normalized curve: c0 = 0, c1 = 1, higher coefficients random.
TruncSeries random_curve(std::mt19937& rng, unsigned order) {
    TruncSeries f = TruncSeries::identity(order);
    for (unsigned k = 2; k <= order; ++k) f.set_coeff(k, random_coeff(rng));
    return f;
}

// Zero-constant-term series, not necessarily normalized.
TruncSeries random_zero_const(std::mt19937& rng, unsigned order) {
    TruncSeries f(order);
    for (unsigned k = 1; k <= order; ++k) f.set_coeff(k, random_coeff(rng));
    return f;
}

TruncSeries geometric(unsigned order, int sign) {
    // z / (1 - sign*z) = z + sign z^2 + z^3 + ...
    TruncSeries f(order);
    Rational s(1);
    for (unsigned k = 1; k <= order; ++k) {
        f.set_coeff(k, MultiPoly(s));
        s *= Rational(sign);
    }
    return f;
}

} // namespace

TEST_CASE("series multiplication") {
    TruncSeries one = TruncSeries::constant(4, MultiPoly::one());
    std::mt19937 rng(1);
    TruncSeries f = random_zero_const(rng, 4);
    f.set_coeff(0, random_coeff(rng));
    CHECK(f * one == f);

    // (1 + z)(1 - z) at order 3 is 1 - z^2.
    TruncSeries a(3), bb(3);
    a.set_coeff(0, MultiPoly::one());
    a.set_coeff(1, MultiPoly::one());
    bb.set_coeff(0, MultiPoly::one());
    bb.set_coeff(1, MultiPoly(Rational(-1)));
    TruncSeries prod = a * bb;
    CHECK(io::text(prod) == "1 - z^2");

    // Grouplike square: [z^2] f^2 = 2 f_2 + f_1^2 with symbolic coefficients.
    TruncSeries g(2);
    g.set_coeff(0, MultiPoly::one());
    g.set_coeff(1, h1());
    g.set_coeff(2, h2());
    CHECK((g * g).coeff(2) == h2().scale(Rational(2)) + h1() * h1());

    TruncSeries wrong(5);
    CHECK_THROWS_AS(a * wrong, OrderMismatchError);
}

TEST_CASE("series composition") {
    std::mt19937 rng(2);
    TruncSeries f = random_zero_const(rng, 6);
    f.set_coeff(0, random_coeff(rng));
    CHECK(f.compose(TruncSeries::identity(6)) == f);

    // compose(z + z^2, z) = z + z^2
    TruncSeries q(4);
    q.set_coeff(1, MultiPoly::one());
    q.set_coeff(2, MultiPoly::one());
    CHECK(q.compose(TruncSeries::identity(4)) == q);

    // z/(1-z) composed with z/(1+z) is z (Moebius cancellation).
    CHECK(geometric(6, 1).compose(geometric(6, -1)) == TruncSeries::identity(6));

    TruncSeries bad = TruncSeries::constant(6, MultiPoly::one());
    CHECK_THROWS_AS(f.compose(bad), NonzeroConstantTermError);
}

TEST_CASE("composition is associative on random triples") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        TruncSeries f = random_zero_const(rng, 8);
        TruncSeries g = random_zero_const(rng, 8);
        TruncSeries h = random_zero_const(rng, 8);
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    }
}

TEST_CASE("compositional inverse") {
    CHECK(TruncSeries::identity(5).inverse() == TruncSeries::identity(5));

    // inverse(z + b z^2) = z - b z^2 + 2 b^2 z^3 at order 3.
    TruncSeries f(3);
    f.set_coeff(1, MultiPoly::one());
    f.set_coeff(2, b());
    TruncSeries g = f.inverse();
    CHECK(g.coeff(1) == MultiPoly::one());
    CHECK(g.coeff(2) == -b());
    CHECK(g.coeff(3) == (b() * b()).scale(Rational(2)));
    CHECK(f.compose(g) == TruncSeries::identity(3));
    CHECK(g.compose(f) == TruncSeries::identity(3));

    // inverse(z + h1 z^2 + h2 z^3) = z - h1 z^2 + (2 h1^2 - h2) z^3.
    TruncSeries o(3);
    o.set_coeff(1, MultiPoly::one());
    o.set_coeff(2, h1());
    o.set_coeff(3, h2());
    TruncSeries oi = o.inverse();
    CHECK(oi.coeff(2) == -h1());
    CHECK(oi.coeff(3) == (h1() * h1()).scale(Rational(2)) - h2());
    CHECK(o.compose(oi) == TruncSeries::identity(3));

    TruncSeries not_normalized(3);
    not_normalized.set_coeff(1, MultiPoly(Rational(2)));
    CHECK_THROWS_AS(not_normalized.inverse(), NotNormalizedError);
    CHECK_THROWS_AS(not_normalized.inverse_newton(), NotNormalizedError);
}

TEST_CASE("degreewise and Newton inversion agree on random curves") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 6; ++trial) {
        TruncSeries f = random_curve(rng, 9);
        TruncSeries a = f.inverse();
        TruncSeries bn = f.inverse_newton();
        CHECK(a == bn);
        CHECK(f.compose(a) == TruncSeries::identity(9));
        CHECK(a.compose(f) == TruncSeries::identity(9));
    }
}

TEST_CASE("roundtrips at order 12") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2; ++trial) {
        TruncSeries f = random_curve(rng, 12);
        TruncSeries g = f.inverse();
        CHECK(f.compose(g) == TruncSeries::identity(12));
        CHECK(g.compose(f) == TruncSeries::identity(12));

        TruncSeries u = random_zero_const(rng, 12);
        CHECK(u.exp().log() == u);
        TruncSeries v = u;
        v.set_coeff(0, MultiPoly::one());
        CHECK(v.log().exp() == v);
    }
}

TEST_CASE("exp and log expansions") {
    // log(1/(1-z)) = z + z^2/2 + z^3/3 + z^4/4.
    TruncSeries geom(4);
    geom.set_coeff(0, MultiPoly::one());
    for (unsigned k = 1; k <= 4; ++k) geom.set_coeff(k, MultiPoly::one());
    TruncSeries lg = geom.log();
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(lg.coeff(k) == MultiPoly(Rational(1, static_cast<long>(k))));

    // exp(log(1 + h1 z)) = 1 + h1 z.
    TruncSeries lin(4);
    lin.set_coeff(0, MultiPoly::one());
    lin.set_coeff(1, h1());
    CHECK(lin.log().exp() == lin);

    // exp(b z) = 1 + b z + b^2 z^2/2 + b^3 z^3/6.
    TruncSeries bz(3);
    bz.set_coeff(1, b());
    TruncSeries e = bz.exp();
    CHECK(e.coeff(0) == MultiPoly::one());
    CHECK(e.coeff(1) == b());
    CHECK(e.coeff(2) == (b() * b()).scale(Rational(1, 2)));
    CHECK(e.coeff(3) == (b() * b() * b()).scale(Rational(1, 6)));

    TruncSeries with_const = TruncSeries::constant(3, MultiPoly::one());
    CHECK_THROWS_AS(with_const.exp(), NonzeroConstantTermError);
    CHECK_THROWS_AS(TruncSeries(3).log(), ConstantTermNotOneError);
    CHECK_THROWS_AS(TruncSeries(3).reciprocal(), ConstantTermNotOneError);
}

TEST_CASE("exp_partition_expansion") {
    // All zero input.
    std::vector<MultiPoly> zeros(6);
    auto out = exp_partition_expansion(zeros);
    CHECK(out[0] == MultiPoly::one());
    for (unsigned n = 1; n <= 6; ++n) CHECK(out[n].is_zero());

    // Agrees with the generic series exponential, coefficient by coefficient.
    std::mt19937 rng(6);
    for (int trial = 0; trial < 4; ++trial) {
        const unsigned order = 12;
        std::vector<MultiPoly> c(order);
        TruncSeries f(order);
        for (unsigned k = 1; k <= order; ++k) {
            c[k - 1] = random_coeff(rng);
            f.set_coeff(k, c[k - 1]);
        }
        TruncSeries viaseries = f.exp();
        auto viapartitions = exp_partition_expansion(c);
        for (unsigned n = 0; n <= order; ++n) CHECK(viapartitions[n] == viaseries.coeff(n));
    }
}

TEST_CASE("bivariate lift and substitute") {
    TruncSeries z = TruncSeries::identity(4);
    BiTruncSeries z0 = bi_lift(z, BiVar::Z0);
    CHECK(io::text(z0) == "z0");
    CHECK(z0.coeff(1, 0) == MultiPoly::one());
    CHECK(z0.coeff(0, 1).is_zero());

    // bi_substitute(z0 + z1, g, 0) = g.
    std::mt19937 rng(7);
    TruncSeries g = random_zero_const(rng, 4);
    BiTruncSeries sum = bi_lift(z, BiVar::Z0) + bi_lift(z, BiVar::Z1);
    CHECK(bi_substitute(sum, g, TruncSeries(4)) == g);

    // bi_substitute(z0*z1, z, z) = z^2.
    BiTruncSeries prod = bi_lift(z, BiVar::Z0) * bi_lift(z, BiVar::Z1);
    TruncSeries z_sq(4);
    z_sq.set_coeff(2, MultiPoly::one());
    CHECK(bi_substitute(prod, z, z) == z_sq);

    TruncSeries with_const = TruncSeries::constant(4, MultiPoly::one());
    CHECK_THROWS_AS(bi_substitute(sum, with_const, z), NonzeroConstantTermError);
    CHECK_THROWS_AS(compose_bi(z, BiTruncSeries::constant(4, MultiPoly::one())),
                    NonzeroConstantTermError);
}

TEST_CASE("bivariate multiplication truncates by total degree") {
    std::mt19937 rng(8);
    TruncSeries f = random_zero_const(rng, 6);
    TruncSeries g = random_zero_const(rng, 6);
    BiTruncSeries lhs = bi_lift(f * g, BiVar::Z0);
    BiTruncSeries rhs = bi_lift(f, BiVar::Z0) * bi_lift(g, BiVar::Z0);
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(lhs + BiTruncSeries(5), OrderMismatchError);
}

TEST_CASE("first_discrepancy reports the earliest slot") {
    BiTruncSeries a(3), bb(3);
    CHECK_FALSE(first_discrepancy(a, bb).has_value());
    bb.set_coeff(1, 1, h1());
    auto d = first_discrepancy(a, bb);
    REQUIRE(d.has_value());
    CHECK(d->i == 1);
    CHECK(d->j == 1);
    CHECK(d->lhs.is_zero());
    CHECK(d->rhs == h1());
}

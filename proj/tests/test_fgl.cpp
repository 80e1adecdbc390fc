#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgcalc/fgl.hpp"
#include "fgcalc/hurewicz.hpp"
#include "fgcalc/io.hpp"

using namespace fgc;

namespace {

MultiPoly cp(unsigned i) { return MultiPoly::generator(Generator::cp(i)); }
MultiPoly h(unsigned i) { return MultiPoly::generator(Generator::h(i)); }
MultiPoly b() { return MultiPoly::generator(Generator::b()); }

} // namespace

TEST_CASE("miscenko log coefficients") {
    CHECK(miscenko_log(1) == TruncSeries::identity(1));

    TruncSeries f = miscenko_log(3);
    CHECK(f.coeff(0).is_zero());
    CHECK(f.coeff(1) == MultiPoly::one());
    CHECK(f.coeff(2) == cp(1).scale(Rational(1, 2)));
    CHECK(f.coeff(3) == cp(2).scale(Rational(1, 3)));
    CHECK(io::text(f) == "z + (1/2)*CP1*z^2 + (1/3)*CP2*z^3");

    // Hurewicz image at order 2: z - h1 z^2.
    TruncSeries img = hurewicz_image(miscenko_log(2));
    CHECK(img.coeff(1) == MultiPoly::one());
    CHECK(img.coeff(2) == -h(1));

    // Homogeneity of internal degree -2 with deg z = -2.
    CHECK(is_homogeneous_series(miscenko_log(10), -2));
}

TEST_CASE("fgl exponential") {
    TruncSeries e2 = fgl_exp(2);
    CHECK(e2.coeff(2) == cp(1).scale(Rational(-1, 2)));

    TruncSeries e3 = fgl_exp(3);
    CHECK(e3.coeff(2) == cp(1).scale(Rational(-1, 2)));
    CHECK(e3.coeff(3) == (cp(1) * cp(1)).scale(Rational(1, 2)) - cp(2).scale(Rational(1, 3)));

    TruncSeries id = TruncSeries::identity(12);
    CHECK(miscenko_log(12).compose(fgl_exp(12)) == id);
    CHECK(fgl_exp(12).compose(miscenko_log(12)) == id);
    CHECK(is_homogeneous_series(fgl_exp(10), -2));
}

TEST_CASE("formal group sum") {
    // Unit and commutativity at every checked order.
    for (unsigned order : {1u, 2u, 4u, 6u}) {
        BiTruncSeries F = fgl_sum(order);
        for (unsigned i = 0; i <= order; ++i) {
            if (i == 1)
                CHECK(F.coeff(i, 0) == MultiPoly::one());
            else
                CHECK(F.coeff(i, 0).is_zero());
        }
        TruncSeries z = TruncSeries::identity(order);
        CHECK(bi_substitute(F, z, TruncSeries(order)) == z);
        CHECK(bi_substitute(F, TruncSeries(order), z) == z);
        for (unsigned i = 0; i <= order; ++i)
            for (unsigned j = 0; i + j <= order; ++j) CHECK(F.coeff(i, j) == F.coeff(j, i));
        // Grading: coefficient (i,j) homogeneous of degree 2(i+j-1).
        CHECK(is_homogeneous_biseries(F, -2));
    }

    // First interaction coefficient.
    CHECK(fgl_sum(2).coeff(1, 1) == -cp(1));
}

TEST_CASE("fgl context certifies its own roundtrip") {
    FglContext ctx = FglContext::create(10);
    CHECK(ctx.order() == 10);
    CHECK(ctx.log_series() == miscenko_log(10));
    CHECK(ctx.exp_series() == fgl_exp(10));
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(ctx.log_series().coeff(k) ==
              cp(k - 1).scale(Rational(1, static_cast<long>(k))));
}

TEST_CASE("bmu series") {
    TruncSeries f = bmu_series(3);
    CHECK(f.coeff(0) == MultiPoly::one());
    CHECK(f.coeff(1) == b());
    CHECK(f.coeff(2) == (b() * b()).scale(Rational(1, 2)) + (b() * cp(1)).scale(Rational(1, 2)));
    CHECK(is_homogeneous_series(bmu_series(8), 0));
}

TEST_CASE("bmu coefficients through divided powers match the twist table") {
    // b^r = r! b_(r) applied to [z^n] exp(b logMU) reproduces the partition
    // sum with symbolic CP classes; denominators come only from the 1/k
    // factors on the CP side.
    TruncSeries f = bmu_series(8);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(from_b_polynomial(f.coeff(n)) == twist_expansion(n));
}

TEST_CASE("hopf relation") {
    CHECK(hopf_check(1).ok);
    CHECK(hopf_check(4).ok);

    // Negative control: a perturbed side must be caught at the first slot of
    // total degree 2.
    TruncSeries bmu = bmu_series(4);
    BiTruncSeries lhs = bi_lift(bmu, BiVar::Z0) * bi_lift(bmu, BiVar::Z1);
    BiTruncSeries rhs = compose_bi(bmu, fgl_sum(4));
    CHECK_FALSE(first_discrepancy(lhs, rhs).has_value());
    BiTruncSeries perturbed = lhs;
    perturbed.set_coeff(2, 0, perturbed.coeff(2, 0) + MultiPoly::one());
    auto d = first_discrepancy(perturbed, rhs);
    REQUIRE(d.has_value());
    CHECK(d->i + d->j == 2);
    CHECK((d->i == 2 || (d->i == 1 && d->j == 1)));
}

TEST_CASE("log linearization certifies associativity") {
    CHECK(log_linearization_check(8).ok);
}

TEST_CASE("additive image") {
    // Coefficient of z0 z1 at order 2 is 2 h1 on both sides.
    BiTruncSeries img = hurewicz_image(fgl_sum(2));
    CHECK(img.coeff(1, 1) == h(1).scale(Rational(2)));

    TruncSeries orient = orientation_series(2);
    TruncSeries inv = orient.inverse();
    BiTruncSeries additive =
        compose_bi(orient, bi_lift(inv, BiVar::Z0) + bi_lift(inv, BiVar::Z1));
    CHECK(additive.coeff(1, 1) == h(1).scale(Rational(2)));

    // Unit law survives the image.
    BiTruncSeries img6 = hurewicz_image(fgl_sum(6));
    TruncSeries z = TruncSeries::identity(6);
    CHECK(bi_substitute(img6, z, TruncSeries(6)) == z);

    CHECK(additive_image_check(6).ok);
}

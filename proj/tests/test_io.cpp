#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgcalc/fgl.hpp"
#include "fgcalc/hurewicz.hpp"
#include "fgcalc/io.hpp"

#include <random>

using namespace fgc;

namespace {

MultiPoly random_poly(std::mt19937& rng) {
    static const std::vector<Generator> gens = {Generator::cp(1), Generator::cp(2),
                                                Generator::h(1), Generator::h(2),
                                                Generator::p(3), Generator::e(2),
                                                Generator::b()};
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> exp(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> nfactors(0, 2);
    std::uniform_int_distribution<int> nterms(0, 5);
    MultiPoly p;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
        Monomial m;
        for (int f = 0, k = nfactors(rng); f < k; ++f)
            m = m * Monomial::generator(gens[pick(rng)], exp(rng));
        p.add_term(m, Rational(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("text rendering") {
    CHECK(io::text(MultiPoly::zero()) == "0");
    CHECK(io::text(MultiPoly::one()) == "1");
    CHECK(io::text(MultiPoly(Rational(-1, 2))) == "-(1/2)");
    CHECK(io::text(TruncSeries::identity(3)) == "z");
    CHECK(io::text(TruncSeries(4)) == "0");
    CHECK(io::text(miscenko_log(3)) == "z + (1/2)*CP1*z^2 + (1/3)*CP2*z^3");
    CHECK(io::text(fgl_sum(2)) == "z0 + z1 - CP1*z0*z1");
    CHECK(io::text(hurewicz_bmu(2)) == "b(2) - h1*b(1)");
    CHECK(io::text(hurewicz_bmu(3)) == "b(3) - 2*h1*b(2) + 2*h1^2*b(1) - h2*b(1)");
    CHECK(io::text(twist_expansion(2, Rational(1)), io::DividedStyle::Vol) ==
          "vol(CP_2,w) + (1/2)*CP1*vol(CP_1,w)");
}

TEST_CASE("json roundtrip for polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = random_poly(rng);
        CHECK(io::poly_from_json(io::to_json(p)) == p);
    }
    CHECK(io::poly_from_json(io::to_json(MultiPoly::zero())) == MultiPoly::zero());
}

TEST_CASE("json roundtrip for series") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        TruncSeries f(6);
        for (unsigned k = 0; k <= 6; ++k) f.set_coeff(k, random_poly(rng));
        CHECK(io::series_from_json(io::to_json(f)) == f);
    }
    TruncSeries named = miscenko_log(5);
    std::string j = io::to_json(named);
    CHECK(io::series_from_json(j) == named);
    // Emission is deterministic.
    CHECK(io::to_json(named) == j);
}

TEST_CASE("json roundtrip for bivariate series") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        BiTruncSeries f(5);
        for (unsigned i = 0; i <= 5; ++i)
            for (unsigned j = 0; i + j <= 5; ++j) f.set_coeff(i, j, random_poly(rng));
        CHECK(io::biseries_from_json(io::to_json(f)) == f);
    }
    BiTruncSeries F = fgl_sum(4);
    CHECK(io::biseries_from_json(io::to_json(F)) == F);
}

TEST_CASE("json roundtrip for divided expressions") {
    for (unsigned n = 1; n <= 8; ++n) {
        DividedExpr e = hurewicz_bmu(n);
        CHECK(io::divided_from_json(io::to_json(e)) == e);
    }
}

TEST_CASE("json roundtrip for twist values") {
    DividedExpr e = twist_expansion(4, Rational(3, 2));
    std::string j = io::twist_to_json(4, Rational(3, 2), e);
    io::TwistValue v = io::twist_from_json(j);
    CHECK(v.n == 4);
    CHECK(v.t == Rational(3, 2));
    CHECK(v.entries == e);
}

TEST_CASE("json roundtrip for the cp oracle pair") {
    MultiPoly value = hurewicz_cp(3);
    MultiPoly oracle = chern_oracle_cp(3);
    std::string j = io::hurewicz_cp_to_json(3, value, oracle, value == oracle);
    io::HurewiczCpValue v = io::hurewicz_cp_from_json(j);
    CHECK(v.n == 3);
    CHECK(v.value == value);
    CHECK(v.oracle == oracle);
    CHECK(v.agree);
}

TEST_CASE("json and text render the same underlying value") {
    // Re-parsing the JSON and re-rendering text must reproduce the direct text.
    TruncSeries f = bmu_series(6);
    CHECK(io::text(io::series_from_json(io::to_json(f))) == io::text(f));
    BiTruncSeries F = fgl_sum(5);
    CHECK(io::text(io::biseries_from_json(io::to_json(F))) == io::text(F));
    DividedExpr e = hurewicz_bmu(5);
    CHECK(io::text(io::divided_from_json(io::to_json(e))) == io::text(e));
}

TEST_CASE("json schema fields") {
    std::string j = io::to_json(miscenko_log(2));
    CHECK(j.find("\"variable\": \"z\"") != std::string::npos);
    CHECK(j.find("\"order\": 2") != std::string::npos);
    CHECK(j.find("\"power\": 0") != std::string::npos);
    CHECK(j.find("\"coeff\": \"1/2\"") != std::string::npos);
    CHECK(j.find("\"CP1\": 1") != std::string::npos);

    std::string bj = io::to_json(fgl_sum(2));
    CHECK(bj.find("\"powers\": [") != std::string::npos);

    std::string dj = io::to_json(hurewicz_bmu(2));
    CHECK(dj.find("\"divided_index\": 2") != std::string::npos);

    CHECK_THROWS_AS(io::series_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(io::series_from_json("{\"order\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(io::series_from_json("{\"variable\":\"z\",\"order\":0,\"coefficients\":[]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::biseries_from_json("{\"order\":2,\"coefficients\":[{\"powers\":[9,9],"
                                           "\"terms\":[]}]}"),
                    std::invalid_argument);
}

TEST_CASE("rational list parsing") {
    auto v = io::parse_rational_list("1, -1/2 ,0");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Rational(1));
    CHECK(v[1] == Rational(-1, 2));
    CHECK(v[2] == Rational(0));
    CHECK_THROWS_AS(io::parse_rational_list(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_rational_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_rational_list("1,x"), std::invalid_argument);
}

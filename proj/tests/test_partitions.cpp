#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgcalc/partition.hpp"

#include <algorithm>
#include <set>

using namespace fgc;

namespace {

// Oracle 1: partition counts from the pentagonal-number recurrence,
// independent of the enumerator.
std::vector<Int> pentagonal_counts(unsigned max_n) {
    std::vector<Int> p(max_n + 1, Int(0));
    p[0] = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long>(n) && g2 > static_cast<long>(n)) break;
            Int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long>(n)) p[n] += sign * p[n - g1];
            if (g2 <= static_cast<long>(n)) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

// Oracle 2: a different generation algorithm — ascending part lists built
// iteratively (smallest part first).
std::vector<std::vector<unsigned>> ascending_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<unsigned> a(n + 1, 0);
    unsigned k = 1;
    a[1] = n;
    while (k != 0) {
        unsigned x = a[k - 1] + 1;
        unsigned y = a[k] - 1;
        --k;
        while (x <= y) {
            a[k] = x;
            y -= x;
            ++k;
        }
        a[k] = x + y;
        out.emplace_back(a.begin(), a.begin() + k + 1);
    }
    return out;
}

} // namespace

TEST_CASE("basic partition structure") {
    Partition p = Partition::from_parts({3, 1, 1});
    CHECK(p.weight() == 5);
    CHECK(p.part_count() == 3);
    CHECK(p.rep(1) == 2);
    CHECK(p.rep(2) == 0);
    CHECK(p.rep(3) == 1);
    CHECK(p.rep(100) == 0);
    CHECK(p.parts() == std::vector<unsigned>{3, 1, 1});
    CHECK(p.str() == "1^2 3^1");
    CHECK(Partition::from_reps({2, 0, 1}) == p);
    // Trailing zeros trim away.
    CHECK(Partition::from_reps({2, 0, 1, 0, 0}).reps() == std::vector<unsigned>{2, 0, 1});
    CHECK_THROWS_AS(Partition::from_parts({0}), std::invalid_argument);
}

TEST_CASE("enumeration order and small counts") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].weight() == 0);
    CHECK(p0[0].part_count() == 0);
    CHECK(p0[0].multinomial() == 1);

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<unsigned>{4});
    CHECK(p4[1].parts() == std::vector<unsigned>{3, 1});
    CHECK(p4[2].parts() == std::vector<unsigned>{2, 2});
    CHECK(p4[3].parts() == std::vector<unsigned>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<unsigned>{1, 1, 1, 1});

    CHECK(enumerate_partitions(10).size() == 42);
}

TEST_CASE("counts against the pentagonal oracle up to 30") {
    auto counts = pentagonal_counts(30);
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(Int(static_cast<long>(enumerate_partitions(n).size())) == counts[n]);
}

TEST_CASE("enumeration agrees with the ascending-generation oracle") {
    for (unsigned n = 0; n <= 18; ++n) {
        std::set<std::vector<unsigned>> ours, oracle;
        for (const auto& p : enumerate_partitions(n)) ours.insert(p.parts());
        for (auto parts : ascending_partitions(n)) {
            std::sort(parts.begin(), parts.end(), std::greater<>());
            oracle.insert(parts);
        }
        CHECK(ours == oracle);
        CHECK(ours.size() == enumerate_partitions(n).size()); // no duplicates
    }
}

TEST_CASE("multinomial weights") {
    CHECK(Partition::from_reps({3}).multinomial() == 1);           // pi = 1^3, r = 3
    CHECK(Partition::from_reps({3}).part_count() == 3);
    CHECK(Partition::from_reps({0, 0, 0, 0, 1}).multinomial() == 1); // pi = 5^1, r = 1
    CHECK(Partition::from_reps({0, 0, 0, 0, 1}).part_count() == 1);
    CHECK(Partition::from_parts({2, 1}).multinomial() == 2);       // 2!/(1! 1!)
    CHECK(Partition::from_parts({3, 2, 2, 1, 1, 1}).multinomial() ==
          factorial(6) / (factorial(3) * factorial(2)));
}

TEST_CASE("weight identity and positivity") {
    for (unsigned n = 0; n <= 16; ++n)
        for (const auto& pi : enumerate_partitions(n)) {
            unsigned total = 0, rsum = 0;
            for (unsigned k = 1; k <= pi.max_part(); ++k) {
                total += k * pi.rep(k);
                rsum += pi.rep(k);
            }
            CHECK(total == n);
            CHECK(rsum == pi.part_count());
            CHECK(pi.multinomial() >= 1);
        }
}

TEST_CASE("cycle-index normalization") {
    // sum over |pi| = n of prod 1/(k^{r_k} r_k!) = 1, from exp(sum t^k/k) = 1/(1-t).
    for (unsigned n = 0; n <= 12; ++n) {
        Rational sum(0);
        for (const auto& pi : enumerate_partitions(n)) {
            Int denom = 1;
            for (unsigned k = 1; k <= pi.max_part(); ++k) {
                unsigned rk = pi.rep(k);
                denom *= int_pow(Int(static_cast<long>(k)), rk) * factorial(rk);
            }
            sum += Rational(Int(1), denom);
        }
        CHECK(sum == Rational(1));
    }
}

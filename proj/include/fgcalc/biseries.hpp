#pragma once

#include "fgcalc/series.hpp"

#include <optional>

namespace fgc {

// Power series in two formal variables z0, z1 truncated by total degree
// i + j <= N, stored as a triangular table of MultiPoly coefficients.
class BiTruncSeries {
public:
    explicit BiTruncSeries(unsigned order);

    static BiTruncSeries constant(unsigned order, const MultiPoly& c);

    unsigned order() const { return order_; }
    const MultiPoly& coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const MultiPoly& p);

    bool is_zero() const;
    bool operator==(const BiTruncSeries& o) const;

    BiTruncSeries operator+(const BiTruncSeries& o) const;
    BiTruncSeries operator-(const BiTruncSeries& o) const;
    BiTruncSeries operator*(const BiTruncSeries& o) const;

    BiTruncSeries scale(const Rational& c) const;

private:
    void require_same_order(const BiTruncSeries& o) const;
    std::size_t slot(unsigned i, unsigned j) const;

    unsigned order_;
    std::vector<MultiPoly> c_; // triangular, row-major in i
};

enum class BiVar { Z0, Z1 };

// Embed a univariate series as a series in z0 (or z1) alone.
BiTruncSeries bi_lift(const TruncSeries& f, BiVar which);

// f(G(z0, z1)) for univariate f and bivariate G with G(0,0) = 0.
BiTruncSeries compose_bi(const TruncSeries& f, const BiTruncSeries& g);

// F(g0(z), g1(z)) truncated at the shared order; both substitution
// arguments must have zero constant term.
TruncSeries bi_substitute(const BiTruncSeries& F, const TruncSeries& g0, const TruncSeries& g1);

// First coefficient where two bivariate series differ, scanning by total
// degree and then by descending z0-power. nullopt means equal.
struct BiDiff {
    unsigned i;
    unsigned j;
    MultiPoly lhs;
    MultiPoly rhs;
};
std::optional<BiDiff> first_discrepancy(const BiTruncSeries& a, const BiTruncSeries& b);

// Grading bookkeeping with deg z0 = deg z1 = -2: homogeneous of internal
// degree d iff coefficient (i, j) is homogeneous of degree d + 2(i + j).
bool is_homogeneous_biseries(const BiTruncSeries& f, int internal_degree);

} // namespace fgc

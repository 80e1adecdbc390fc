#pragma once

#include "fgcalc/errors.hpp"
#include "fgcalc/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fgc {

// Generator families, listed in canonical display order.
enum class Family : int { CP = 0, H = 1, P = 2, E = 3, B = 4 };

// A named graded generator. Grading: deg CP_i = deg h_i = deg p_i = deg e_i = 2i,
// deg b = 2. The b family carries no index. CP_0 is the ring unit and is never
// stored inside a monomial (see Monomial).
struct Generator {
    Family family;
    unsigned index;

    static Generator cp(unsigned i) { return {Family::CP, i}; }
    static Generator h(unsigned i) { return checked(Family::H, i); }
    static Generator p(unsigned i) { return checked(Family::P, i); }
    static Generator e(unsigned i) { return checked(Family::E, i); }
    static Generator b() { return {Family::B, 0}; }

    int degree() const { return family == Family::B ? 2 : 2 * static_cast<int>(index); }

    auto operator<=>(const Generator&) const = default;

private:
    static Generator checked(Family f, unsigned i) {
        if (i == 0) throw std::invalid_argument("Generator: index must be >= 1 for h/p/e");
        return {f, i};
    }
};

// "CP3", "h2", "p1", "e4", "b".
std::string generator_name(Generator g);
// Inverse of generator_name. Throws std::invalid_argument.
Generator parse_generator(std::string_view name);

// A finite product of generators with positive exponents, kept sorted by
// (family, index). The unit CP_0 is dropped on insertion, so "CP_0 = 1"
// holds structurally.
class Monomial {
public:
    Monomial() = default;

    static Monomial generator(Generator g, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    int degree() const;
    const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
    int exponent_of(Generator g) const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(int k) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    // Canonical term order: by total degree, then by exponent vector, larger
    // exponent on the earliest generator first (so h1^2 precedes h2).
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<Generator, int>> factors_;
};

// Sparse multivariate polynomial over Rational: a finite map from monomials
// to nonzero coefficients. Values are immutable in spirit; every operation
// returns a normalized result with no zero terms stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) { add_term(Monomial{}, c); } // NOLINT
    MultiPoly(long c) : MultiPoly(Rational(c)) {} // NOLINT

    static MultiPoly zero() { return MultiPoly{}; }
    static MultiPoly one() { return MultiPoly{Rational(1)}; }
    static MultiPoly generator(Generator g, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_term().is_one(); }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);

    MultiPoly scale(const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    // Accumulate c on monomial m, dropping the entry if it cancels to zero.
    void add_term(const Monomial& m, const Rational& c);

    // Replace generators by polynomials. `image(g)` returning nullopt keeps g.
    MultiPoly substitute(const std::function<std::optional<MultiPoly>(Generator)>& image) const;

    // True iff every stored term has graded degree exactly d (vacuously true
    // for the zero polynomial).
    bool degree_check(int d) const;
    bool is_homogeneous() const;

    bool has_integer_coefficients() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scale(c); }

// Divisibility witness for integer polynomials: true iff every coefficient
// of a is an integer multiple of k. Requires k >= 1.
bool is_divisible_over_Z(const MultiPoly& a, const Int& k);

// Exact division by a positive integer. For an integer-coefficient input the
// division must be exact over Z (throws NotDivisibleError otherwise, which
// witnesses a divisibility failure); an input that already has fractional
// coefficients is scaled by 1/k exactly.
MultiPoly exact_div_int(const MultiPoly& a, const Int& k);

} // namespace fgc

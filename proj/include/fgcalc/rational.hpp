#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fgc {

using Int = mpz_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact arbitrary-precision fraction, always canonical: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. All arithmetic is exact; there is no floating mode.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(Int(std::string(s)));
            Int num{std::string(s.substr(0, slash))};
            Int den{std::string(s.substr(slash + 1))};
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return v_ > 0; }
    int sign() const { return sgn(v_); }

    // Integer divisibility witness: true iff the value is an integer and a
    // multiple of k.
    bool divisible_by(const Int& k) const {
        if (!is_integer()) return false;
        return mpz_divisible_p(v_.get_num().get_mpz_t(), k.get_mpz_t()) != 0;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational pow(unsigned long e) const {
        return Rational(int_pow(v_.get_num(), e), int_pow(v_.get_den(), e));
    }
    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(v_.get_den(), v_.get_num());
    }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p/q", or "p" when q = 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_; // canonical at all times
};

} // namespace fgc

#include "fgcalc/multipoly.hpp"

#include <algorithm>
#include <charconv>

namespace fgc {

std::string generator_name(Generator g) {
    switch (g.family) {
        case Family::CP: return "CP" + std::to_string(g.index);
        case Family::H: return "h" + std::to_string(g.index);
        case Family::P: return "p" + std::to_string(g.index);
        case Family::E: return "e" + std::to_string(g.index);
        case Family::B: return "b";
    }
    throw std::logic_error("generator_name: bad family");
}

Generator parse_generator(std::string_view name) {
    if (name == "b") return Generator::b();
    Family fam;
    std::string_view digits;
    if (name.size() >= 3 && name.substr(0, 2) == "CP") {
        fam = Family::CP;
        digits = name.substr(2);
    } else if (name.size() >= 2 && (name[0] == 'h' || name[0] == 'p' || name[0] == 'e')) {
        fam = name[0] == 'h' ? Family::H : name[0] == 'p' ? Family::P : Family::E;
        digits = name.substr(1);
    } else {
        throw std::invalid_argument("parse_generator: bad name '" + std::string(name) + "'");
    }
    unsigned idx = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("parse_generator: bad index in '" + std::string(name) + "'");
    switch (fam) {
        case Family::CP: return Generator::cp(idx);
        case Family::H: return Generator::h(idx);
        case Family::P: return Generator::p(idx);
        case Family::E: return Generator::e(idx);
        default: break;
    }
    throw std::invalid_argument("parse_generator: bad name");
}

Monomial Monomial::generator(Generator g, int exp) {
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    if (exp == 0) return m;
    if (g.family == Family::CP && g.index == 0) return m; // CP_0 = 1
    m.factors_.emplace_back(g, exp);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [g, e] : factors_) d += e * g.degree();
    return d;
}

int Monomial::exponent_of(Generator g) const {
    for (const auto& [gen, e] : factors_)
        if (gen == g) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Monomial: negative power");
    Monomial r;
    if (k == 0) return r;
    r.factors_ = factors_;
    for (auto& [g, e] : r.factors_) e *= k;
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // Same degree: walk the merged generator sequence; the monomial with the
    // larger exponent on the earliest generator sorts first.
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second > b->second;
        ++a;
        ++b;
    }
    if (a != factors_.end()) return true; // remaining factors on *this only
    if (b != o.factors_.end()) return false;
    return false;
}

MultiPoly MultiPoly::generator(Generator g, int exp) {
    MultiPoly p;
    p.add_term(Monomial::generator(g, exp), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = one();
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::substitute(
    const std::function<std::optional<MultiPoly>(Generator)>& image) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        MultiPoly term{c};
        for (const auto& [g, e] : m.factors()) {
            if (auto img = image(g))
                term = term * img->pow(static_cast<unsigned>(e));
            else
                term = term * MultiPoly::generator(g, e);
        }
        r += term;
    }
    return r;
}

bool MultiPoly::degree_check(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return degree_check(terms_.begin()->first.degree());
}

bool MultiPoly::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

bool is_divisible_over_Z(const MultiPoly& a, const Int& k) {
    if (k < 1) throw std::invalid_argument("is_divisible_over_Z: k must be >= 1");
    for (const auto& [m, c] : a.terms())
        if (!c.divisible_by(k)) return false;
    return true;
}

MultiPoly exact_div_int(const MultiPoly& a, const Int& k) {
    if (k < 1) throw std::invalid_argument("exact_div_int: k must be >= 1");
    Rational inv_k = Rational(Int(1), k);
    if (a.has_integer_coefficients() && !is_divisible_over_Z(a, k))
        throw NotDivisibleError("exact_div_int: polynomial is not divisible by " + k.get_str() +
                                " over Z");
    return a.scale(inv_k);
}

} // namespace fgc

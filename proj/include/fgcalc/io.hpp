#pragma once

#include "fgcalc/biseries.hpp"
#include "fgcalc/hurewicz.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fgc::io {

// Canonical ASCII text rendering. Terms appear in the canonical monomial
// order (graded, then by exponent vector); identical values always render
// to identical bytes.
std::string text(const MultiPoly& p);
std::string text(const TruncSeries& f, const std::string& var = "z");
std::string text(const BiTruncSeries& f);

enum class DividedStyle {
    B,         // b(r)
    Vol,       // vol(CP_r,w), numeric t already folded into coefficients
    VolSymbolic // t^r * ... * vol(CP_r,w)
};
std::string text(const DividedExpr& e, DividedStyle style = DividedStyle::B);

std::string text_moments(const std::vector<Rational>& moments);

// JSON rendering (2-space indent, schema field order preserved).
std::string to_json(const MultiPoly& p);
std::string to_json(const TruncSeries& f, const std::string& var = "z");
std::string to_json(const BiTruncSeries& f);
std::string to_json(const DividedExpr& e);
std::string twist_to_json(unsigned n, const Rational& t, const DividedExpr& e);
std::string moments_to_json(const std::vector<Rational>& kappa,
                            const std::vector<Rational>& moments);
std::string hurewicz_cp_to_json(unsigned n, const MultiPoly& value, const MultiPoly& oracle,
                                bool agree);
std::string report_to_json(bool ok, const std::string& report);

// Parsers for the schemas above. Throw std::invalid_argument on malformed
// input.
MultiPoly poly_from_json(const std::string& s);
TruncSeries series_from_json(const std::string& s);
BiTruncSeries biseries_from_json(const std::string& s);
DividedExpr divided_from_json(const std::string& s);
struct TwistValue {
    unsigned n;
    Rational t;
    DividedExpr entries;
};
TwistValue twist_from_json(const std::string& s);
struct HurewiczCpValue {
    unsigned n;
    MultiPoly value;
    MultiPoly oracle;
    bool agree;
};
HurewiczCpValue hurewicz_cp_from_json(const std::string& s);
std::vector<Rational> rational_list_from_json(const std::string& s, const std::string& key);

// Comma-separated rationals, e.g. "1,-1/2,0". Whitespace around entries ok.
std::vector<Rational> parse_rational_list(const std::string& csv);

} // namespace fgc::io

namespace fgc {
// doctest-friendly printers.
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const TruncSeries& f);
std::ostream& operator<<(std::ostream& os, const BiTruncSeries& f);
std::ostream& operator<<(std::ostream& os, const DividedExpr& e);
std::ostream& operator<<(std::ostream& os, const Rational& r);
} // namespace fgc

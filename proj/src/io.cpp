#include "fgcalc/io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace fgc::io {

namespace {

using ordered_json = nlohmann::ordered_json;

// One fully expanded display term: a rational coefficient and a list of
// symbolic factors ("CP1^2", "z^3", "b(2)", ...).
struct FlatTerm {
    Rational coeff;
    std::vector<std::string> factors;
};

std::string power_factor(const std::string& base, int exp) {
    return exp == 1 ? base : base + "^" + std::to_string(exp);
}

void append_monomial_factors(const Monomial& m, std::vector<std::string>& out) {
    for (const auto& [g, e] : m.factors()) out.push_back(power_factor(generator_name(g), e));
}

std::string render_terms(const std::vector<FlatTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = t.coeff.abs();
        std::string piece;
        if (!mag.is_one() || t.factors.empty()) {
            piece = mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        }
        for (const auto& f : t.factors) {
            if (!piece.empty()) piece += "*";
            piece += f;
        }
        out += piece;
    }
    return out;
}

std::vector<FlatTerm> flatten(const MultiPoly& p, const std::vector<std::string>& suffix = {}) {
    std::vector<FlatTerm> out;
    for (const auto& [m, c] : p.terms()) {
        FlatTerm t{c, {}};
        append_monomial_factors(m, t.factors);
        for (const auto& s : suffix) t.factors.push_back(s);
        out.push_back(std::move(t));
    }
    return out;
}

std::string vol_label(unsigned r) { return "vol(CP_" + std::to_string(r) + ",w)"; }

ordered_json terms_to_json(const MultiPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json mono = ordered_json::object();
        for (const auto& [g, e] : m.factors()) mono[generator_name(g)] = e;
        arr.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return arr;
}

MultiPoly terms_from_json(const ordered_json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("json: \"terms\" must be an array");
    MultiPoly p;
    for (const auto& t : arr) {
        Rational c = Rational::parse(t.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& [name, exp] : t.at("monomial").items())
            m = m * Monomial::generator(parse_generator(name), exp.get<int>());
        p.add_term(m, c);
    }
    return p;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& s) {
    auto j = ordered_json::parse(s, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("json: malformed input");
    return j;
}

// Schema violations surface as invalid_argument regardless of which layer
// (json library, series constructors) rejected them.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

} // namespace

std::string text(const MultiPoly& p) { return render_terms(flatten(p)); }

std::string text(const TruncSeries& f, const std::string& var) {
    std::vector<FlatTerm> terms;
    for (unsigned k = 0; k <= f.order(); ++k) {
        std::vector<std::string> suffix;
        if (k >= 1) suffix.push_back(power_factor(var, static_cast<int>(k)));
        for (auto& t : flatten(f.coeff(k), suffix)) terms.push_back(std::move(t));
    }
    return render_terms(terms);
}

std::string text(const BiTruncSeries& f) {
    std::vector<FlatTerm> terms;
    for (unsigned d = 0; d <= f.order(); ++d)
        for (unsigned i = d + 1; i-- > 0;) {
            unsigned j = d - i;
            std::vector<std::string> suffix;
            if (i >= 1) suffix.push_back(power_factor("z0", static_cast<int>(i)));
            if (j >= 1) suffix.push_back(power_factor("z1", static_cast<int>(j)));
            for (auto& t : flatten(f.coeff(i, j), suffix)) terms.push_back(std::move(t));
        }
    return render_terms(terms);
}

std::string text(const DividedExpr& e, DividedStyle style) {
    std::vector<FlatTerm> terms;
    // Leading divided power first, matching the displayed expansions.
    for (auto it = e.table().rbegin(); it != e.table().rend(); ++it) {
        const auto& [r, p] = *it;
        std::vector<std::string> suffix;
        switch (style) {
            case DividedStyle::B:
                if (r > 0) suffix.push_back("b(" + std::to_string(r) + ")");
                break;
            case DividedStyle::Vol:
                if (r > 0) suffix.push_back(vol_label(r));
                break;
            case DividedStyle::VolSymbolic:
                if (r > 0) {
                    suffix.push_back(power_factor("t", static_cast<int>(r)));
                    suffix.push_back(vol_label(r));
                }
                break;
        }
        // The t factor precedes the CP monomial in display order.
        if (style == DividedStyle::VolSymbolic && r > 0) {
            for (const auto& [m, c] : p.terms()) {
                FlatTerm t{c, {suffix[0]}};
                append_monomial_factors(m, t.factors);
                t.factors.push_back(suffix[1]);
                terms.push_back(std::move(t));
            }
        } else {
            for (auto& t : flatten(p, suffix)) terms.push_back(std::move(t));
        }
    }
    return render_terms(terms);
}

std::string text_moments(const std::vector<Rational>& moments) {
    std::string out;
    for (std::size_t n = 0; n < moments.size(); ++n)
        out += "m" + std::to_string(n) + " = " + moments[n].str() + "\n";
    return out;
}

std::string to_json(const MultiPoly& p) {
    ordered_json j;
    j["terms"] = terms_to_json(p);
    return dump(j);
}

std::string to_json(const TruncSeries& f, const std::string& var) {
    ordered_json j;
    j["variable"] = var;
    j["order"] = f.order();
    ordered_json coeffs = ordered_json::array();
    for (unsigned k = 0; k <= f.order(); ++k)
        coeffs.push_back({{"power", k}, {"terms", terms_to_json(f.coeff(k))}});
    j["coefficients"] = coeffs;
    return dump(j);
}

std::string to_json(const BiTruncSeries& f) {
    ordered_json j;
    j["variables"] = {"z0", "z1"};
    j["order"] = f.order();
    ordered_json coeffs = ordered_json::array();
    for (unsigned d = 0; d <= f.order(); ++d)
        for (unsigned i = d + 1; i-- > 0;) {
            unsigned jj = d - i;
            coeffs.push_back({{"powers", {i, jj}}, {"terms", terms_to_json(f.coeff(i, jj))}});
        }
    j["coefficients"] = coeffs;
    return dump(j);
}

std::string to_json(const DividedExpr& e) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (auto it = e.table().rbegin(); it != e.table().rend(); ++it)
        entries.push_back({{"divided_index", it->first}, {"terms", terms_to_json(it->second)}});
    j["entries"] = entries;
    return dump(j);
}

std::string twist_to_json(unsigned n, const Rational& t, const DividedExpr& e) {
    ordered_json j;
    j["n"] = n;
    j["t"] = t.str();
    ordered_json entries = ordered_json::array();
    for (auto it = e.table().rbegin(); it != e.table().rend(); ++it)
        entries.push_back({{"divided_index", it->first},
                           {"label", vol_label(it->first)},
                           {"terms", terms_to_json(it->second)}});
    j["entries"] = entries;
    return dump(j);
}

std::string moments_to_json(const std::vector<Rational>& kappa,
                            const std::vector<Rational>& moments) {
    ordered_json j;
    ordered_json ks = ordered_json::array();
    for (const auto& k : kappa) ks.push_back(k.str());
    ordered_json ms = ordered_json::array();
    for (const auto& m : moments) ms.push_back(m.str());
    j["kappa"] = ks;
    j["moments"] = ms;
    return dump(j);
}

std::string hurewicz_cp_to_json(unsigned n, const MultiPoly& value, const MultiPoly& oracle,
                                bool agree) {
    ordered_json j;
    j["n"] = n;
    j["value"] = {{"terms", terms_to_json(value)}};
    j["oracle"] = {{"terms", terms_to_json(oracle)}};
    j["agree"] = agree;
    return dump(j);
}

std::string report_to_json(bool ok, const std::string& report) {
    ordered_json j;
    j["ok"] = ok;
    j["report"] = report;
    return dump(j);
}

MultiPoly poly_from_json(const std::string& s) {
    return guarded("poly json", [&] { return terms_from_json(parse_json(s).at("terms")); });
}

TruncSeries series_from_json(const std::string& s) {
    return guarded("series json", [&] {
        ordered_json j = parse_json(s);
        TruncSeries f(j.at("order").get<unsigned>());
        for (const auto& c : j.at("coefficients"))
            f.set_coeff(c.at("power").get<unsigned>(), terms_from_json(c.at("terms")));
        return f;
    });
}

BiTruncSeries biseries_from_json(const std::string& s) {
    return guarded("bivariate series json", [&] {
        ordered_json j = parse_json(s);
        BiTruncSeries f(j.at("order").get<unsigned>());
        for (const auto& c : j.at("coefficients")) {
            auto powers = c.at("powers");
            f.set_coeff(powers.at(0).get<unsigned>(), powers.at(1).get<unsigned>(),
                        terms_from_json(c.at("terms")));
        }
        return f;
    });
}

namespace {

DividedExpr entries_from_json(const ordered_json& entries) {
    DividedExpr e;
    for (const auto& entry : entries)
        e.add_entry(entry.at("divided_index").get<unsigned>(),
                    terms_from_json(entry.at("terms")));
    return e;
}

} // namespace

DividedExpr divided_from_json(const std::string& s) {
    return guarded("divided json", [&] { return entries_from_json(parse_json(s).at("entries")); });
}

TwistValue twist_from_json(const std::string& s) {
    return guarded("twist json", [&] {
        ordered_json j = parse_json(s);
        return TwistValue{j.at("n").get<unsigned>(),
                          Rational::parse(j.at("t").get<std::string>()),
                          entries_from_json(j.at("entries"))};
    });
}

HurewiczCpValue hurewicz_cp_from_json(const std::string& s) {
    return guarded("hurewicz cp json", [&] {
        ordered_json j = parse_json(s);
        return HurewiczCpValue{j.at("n").get<unsigned>(),
                               terms_from_json(j.at("value").at("terms")),
                               terms_from_json(j.at("oracle").at("terms")),
                               j.at("agree").get<bool>()};
    });
}

std::vector<Rational> rational_list_from_json(const std::string& s, const std::string& key) {
    return guarded("rational list json", [&] {
        ordered_json j = parse_json(s);
        std::vector<Rational> out;
        for (const auto& v : j.at(key)) out.push_back(Rational::parse(v.get<std::string>()));
        return out;
    });
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("parse_rational_list: empty entry");
        out.push_back(Rational::parse(item.substr(first, last - first + 1)));
    }
    if (out.empty()) throw std::invalid_argument("parse_rational_list: empty list");
    return out;
}

} // namespace fgc::io

namespace fgc {

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << io::text(p); }
std::ostream& operator<<(std::ostream& os, const TruncSeries& f) { return os << io::text(f); }
std::ostream& operator<<(std::ostream& os, const BiTruncSeries& f) { return os << io::text(f); }
std::ostream& operator<<(std::ostream& os, const DividedExpr& e) { return os << io::text(e); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace fgc

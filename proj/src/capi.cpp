#include "fgcalc/fgcalc.h"

#include "fgcalc/fgl.hpp"
#include "fgcalc/hurewicz.hpp"
#include "fgcalc/io.hpp"
#include "fgcalc/symfunc.hpp"
#include "fgcalc/verify.hpp"

#include <cstring>
#include <variant>

namespace {

using namespace fgc;

struct CpPair {
    unsigned n;
    MultiPoly value;
    MultiPoly oracle;
    bool agree;
};

struct TwistPayload {
    unsigned n;
    Rational t;
    DividedExpr entries;
};

struct MomentsPayload {
    std::vector<Rational> kappa;
    std::vector<Rational> moments;
};

struct ReportPayload {
    bool ok;
    std::string report;
};

using Payload = std::variant<TruncSeries, BiTruncSeries, DividedExpr, MultiPoly, CpPair,
                             TwistPayload, MomentsPayload, ReportPayload>;

thread_local std::string g_last_error;

} // namespace

struct fgc_value {
    Payload payload;
};

namespace {

fgc_status fail(fgc_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
fgc_status wrap(fgc_value** out, Fn&& fn) {
    if (out == nullptr) return fail(FGC_INVALID_ARGUMENT, "output handle is null");
    try {
        *out = new fgc_value{fn()};
        return FGC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(FGC_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(FGC_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FGC_INTERNAL_ERROR, e.what());
    }
}

unsigned checked_order(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return static_cast<unsigned>(order);
}

std::string render_text(const Payload& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TruncSeries> || std::is_same_v<T, BiTruncSeries> ||
                          std::is_same_v<T, DividedExpr> || std::is_same_v<T, MultiPoly>) {
                return io::text(v) + "\n";
            } else if constexpr (std::is_same_v<T, CpPair>) {
                std::string name = "CP" + std::to_string(v.n);
                return "hurewicz(" + name + ") = " + io::text(v.value) + "\noracle(" + name +
                       ")   = " + io::text(v.oracle) +
                       "\nagree: " + (v.agree ? "true" : "false") + "\n";
            } else if constexpr (std::is_same_v<T, TwistPayload>) {
                return io::text(v.entries, io::DividedStyle::Vol) + "\n";
            } else if constexpr (std::is_same_v<T, MomentsPayload>) {
                return io::text_moments(v.moments);
            } else {
                return v.report;
            }
        },
        p);
}

std::string render_json(const Payload& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TruncSeries> || std::is_same_v<T, BiTruncSeries> ||
                          std::is_same_v<T, DividedExpr> || std::is_same_v<T, MultiPoly>) {
                return io::to_json(v);
            } else if constexpr (std::is_same_v<T, CpPair>) {
                return io::hurewicz_cp_to_json(v.n, v.value, v.oracle, v.agree);
            } else if constexpr (std::is_same_v<T, TwistPayload>) {
                return io::twist_to_json(v.n, v.t, v.entries);
            } else if constexpr (std::is_same_v<T, MomentsPayload>) {
                return io::moments_to_json(v.kappa, v.moments);
            } else {
                return io::report_to_json(v.ok, v.report);
            }
        },
        p);
}

} // namespace

extern "C" {

const char* fgc_version(void) { return "0.1.0"; }

const char* fgc_last_error(void) { return g_last_error.c_str(); }

fgc_status fgc_logmu(int order, int image, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        TruncSeries f = miscenko_log(checked_order(order));
        if (image) f = hurewicz_image(f);
        return f;
    });
}

fgc_status fgc_expmu(int order, int image, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        TruncSeries f = fgl_exp(checked_order(order));
        if (image) f = hurewicz_image(f);
        return f;
    });
}

fgc_status fgc_bmu(int order, int image, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        TruncSeries f = bmu_series(checked_order(order));
        if (image) f = hurewicz_image(f);
        return f;
    });
}

fgc_status fgc_fgl_sum(int order, int image, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        BiTruncSeries f = fgl_sum(checked_order(order));
        if (image) f = hurewicz_image(f);
        return f;
    });
}

fgc_status fgc_hurewicz_bmu(int n, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        return hurewicz_bmu(static_cast<unsigned>(n));
    });
}

fgc_status fgc_hurewicz_cp(int n, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        if (n < 0) throw std::invalid_argument("n must be >= 0");
        MultiPoly value = hurewicz_cp(static_cast<unsigned>(n));
        MultiPoly oracle = chern_oracle_cp(static_cast<unsigned>(n));
        return CpPair{static_cast<unsigned>(n), value, oracle, value == oracle};
    });
}

fgc_status fgc_twist(int n, const char* t, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (t == nullptr) throw std::invalid_argument("t is required");
        Rational tv = Rational::parse(t);
        // Computed before the aggregate so a throw cannot strand members.
        DividedExpr entries = twist_expansion(static_cast<unsigned>(n), tv);
        return TwistPayload{static_cast<unsigned>(n), std::move(tv), std::move(entries)};
    });
}

fgc_status fgc_cumulants(const char* kappa_csv, int max_n, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        if (kappa_csv == nullptr) throw std::invalid_argument("kappa list is required");
        if (max_n < 0) throw std::invalid_argument("max-n must be >= 0");
        std::vector<Rational> kappa = io::parse_rational_list(kappa_csv);
        kappa.resize(static_cast<std::size_t>(max_n), Rational(0));
        std::vector<Rational> moments = cumulants_to_moments(kappa);
        return MomentsPayload{std::move(kappa), std::move(moments)};
    });
}

fgc_status fgc_symfunc_convert(const char* from, const char* to, int degree, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        auto family = [](const char* s) {
            if (s == nullptr) throw std::invalid_argument("basis is required");
            std::string b = s;
            if (b == "h") return Family::H;
            if (b == "p") return Family::P;
            if (b == "e") return Family::E;
            throw std::invalid_argument("basis must be one of h, p, e");
        };
        if (degree < 1) throw std::invalid_argument("degree must be >= 1");
        return sym_convert(family(from), family(to), static_cast<unsigned>(degree)).value;
    });
}

fgc_status fgc_verify(const char* suite, int param, fgc_value** out) {
    return wrap(out, [&]() -> Payload {
        if (suite == nullptr) throw std::invalid_argument("suite name is required");
        std::string name = suite;
        auto pick = [&](unsigned dflt) {
            return param <= 0 ? dflt : static_cast<unsigned>(param);
        };
        SuiteResult r;
        if (name == "hopf")
            r = verify_hopf(pick(8));
        else if (name == "additive")
            r = verify_additive(pick(8));
        else if (name == "integrality")
            r = verify_integrality(pick(10));
        else if (name == "divisibility")
            r = verify_divisibility(pick(12));
        else if (name == "symfunc")
            r = verify_symfunc_suite(pick(12));
        else if (name == "roundtrip")
            r = verify_roundtrip(pick(12));
        else
            throw std::invalid_argument("unknown verify suite '" + name + "'");
        return ReportPayload{r.ok, r.report};
    });
}

fgc_status fgc_value_render(const fgc_value* v, fgc_format format, char** out) {
    if (v == nullptr || out == nullptr) return fail(FGC_INVALID_ARGUMENT, "null argument");
    try {
        std::string s = format == FGC_JSON ? render_json(v->payload) : render_text(v->payload);
        *out = new char[s.size() + 1];
        std::memcpy(*out, s.c_str(), s.size() + 1);
        return FGC_OK;
    } catch (const std::exception& e) {
        return fail(FGC_INTERNAL_ERROR, e.what());
    }
}

int fgc_value_ok(const fgc_value* v) {
    if (v == nullptr) return 0;
    if (const auto* rep = std::get_if<ReportPayload>(&v->payload)) return rep->ok ? 1 : 0;
    if (const auto* cp = std::get_if<CpPair>(&v->payload)) return cp->agree ? 1 : 0;
    return 1;
}

void fgc_value_free(fgc_value* v) { delete v; }

void fgc_string_free(char* s) { delete[] s; }

} // extern "C"

#include "fgcalc/verify.hpp"

#include "fgcalc/fgl.hpp"
#include "fgcalc/hurewicz.hpp"
#include "fgcalc/io.hpp"
#include "fgcalc/symfunc.hpp"

namespace fgc {

namespace {

std::string diff_detail(const BiDiff& d) {
    return "  first discrepancy at z0^" + std::to_string(d.i) + "*z1^" + std::to_string(d.j) +
           ": lhs = " + io::text(d.lhs) + ", rhs = " + io::text(d.rhs) + "\n";
}

SuiteResult from_check(const CheckResult& c, const std::string& what) {
    SuiteResult r{c.ok, {}};
    r.report = std::string(c.ok ? "PASS " : "FAIL ") + what + "\n";
    if (!c.ok && c.diff) r.report += diff_detail(*c.diff);
    return r;
}

} // namespace

SuiteResult verify_hopf(unsigned order) {
    return from_check(hopf_check(order), "hopf relation b(z0)*b(z1) = b(z0 +MU z1) at total degree " +
                                             std::to_string(order));
}

SuiteResult verify_additive(unsigned order) {
    return from_check(additive_image_check(order),
                      "additive image of the group sum at total degree " + std::to_string(order));
}

SuiteResult verify_integrality(unsigned max_n) {
    SuiteResult r{true, {}};
    for (unsigned n = 1; n <= max_n; ++n) {
        bool ok;
        std::string note;
        try {
            ok = hurewicz_bmu(n).has_integer_coefficients();
        } catch (const IntegralityViolationError& e) {
            ok = false;
            note = std::string("  ") + e.what() + "\n";
        }
        r.ok = r.ok && ok;
        r.report += std::string(ok ? "PASS " : "FAIL ") + "integrality of hurewicz bmu n=" +
                    std::to_string(n) + "\n" + note;
    }
    return r;
}

SuiteResult verify_divisibility(unsigned max_k) {
    SuiteResult r{true, {}};
    for (unsigned k = 1; k <= max_k; ++k) {
        bool ok = divisibility_check(k);
        r.ok = r.ok && ok;
        r.report += std::string(ok ? "PASS " : "FAIL ") + "hurewicz(CP" + std::to_string(k - 1) +
                    ") divisible by " + std::to_string(k) + "\n";
        if (!ok) r.report += "  value = " + io::text(hurewicz_cp(k - 1)) + "\n";
    }
    return r;
}

SuiteResult verify_symfunc_suite(unsigned max_deg) {
    SymfuncReport rep = verify_symfunc(max_deg);
    SuiteResult r{rep.ok, {}};
    for (const auto& line : rep.lines) r.report += line + "\n";
    return r;
}

SuiteResult verify_roundtrip(unsigned order) {
    TruncSeries log = miscenko_log(order);
    TruncSeries exp = fgl_exp(order);
    TruncSeries id = TruncSeries::identity(order);
    bool left = log.compose(exp) == id;
    bool right = exp.compose(log) == id;
    SuiteResult r{left && right, {}};
    r.report += std::string(left ? "PASS " : "FAIL ") + "compose(logMU, expMU) = z at order " +
                std::to_string(order) + "\n";
    r.report += std::string(right ? "PASS " : "FAIL ") + "compose(expMU, logMU) = z at order " +
                std::to_string(order) + "\n";
    return r;
}

} // namespace fgc

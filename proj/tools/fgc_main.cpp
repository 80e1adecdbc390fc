// fgc: command-line front end for the fgcalc library. Parses arguments,
// drives the C API, prints the rendered value. Exit codes: 0 success,
// 1 verification failure, 2 usage error.

#include "fgcalc/fgcalc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int emit(fgc_status status, fgc_value* value, const std::string& format) {
    if (status != FGC_OK) {
        std::fprintf(stderr, "fgc: %s\n", fgc_last_error());
        return kExitUsage;
    }
    char* rendered = nullptr;
    fgc_format fmt = format == "json" ? FGC_JSON : FGC_TEXT;
    if (fgc_value_render(value, fmt, &rendered) != FGC_OK) {
        std::fprintf(stderr, "fgc: %s\n", fgc_last_error());
        fgc_value_free(value);
        return kExitUsage;
    }
    std::fputs(rendered, stdout);
    int ok = fgc_value_ok(value);
    fgc_string_free(rendered);
    fgc_value_free(value);
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact formal-group-law calculus for complex cobordism"};
    app.require_subcommand(1);

    const int kDefaultUnivariate = 10;
    const int kDefaultBivariate = 8;

    int order_uni = kDefaultUnivariate;
    int order_bi = kDefaultBivariate;
    std::string image;
    std::string format = "text";
    int nval = 1;
    std::string t_value;
    std::string kappa;
    int max_n = 10;
    std::string from_basis, to_basis;
    int degree = 1;
    std::string suite;
    int verify_order = 0, verify_max_n = 0, verify_max_k = 0;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_image = [&image](CLI::App* cmd) {
        cmd->add_option("--image", image, "Apply a coefficient image")
            ->check(CLI::IsMember({"hurewicz"}));
    };

    CLI::App* logmu = app.add_subcommand("logmu", "The logarithm of the formal group law");
    logmu->add_option("--order", order_uni, "Truncation order")->check(CLI::PositiveNumber);
    add_image(logmu);
    add_format(logmu);

    CLI::App* expmu = app.add_subcommand("expmu", "The exponential (formal inverse of logmu)");
    expmu->add_option("--order", order_uni, "Truncation order")->check(CLI::PositiveNumber);
    add_image(expmu);
    add_format(expmu);

    CLI::App* bmu = app.add_subcommand("bmu", "The grouplike series exp(b*logmu(z))");
    bmu->add_option("--order", order_uni, "Truncation order")->check(CLI::PositiveNumber);
    add_image(bmu);
    add_format(bmu);

    CLI::App* fglsum = app.add_subcommand("fgl-sum", "The formal group sum z0 +MU z1");
    fglsum->add_option("--order", order_bi, "Total-degree truncation")->check(CLI::PositiveNumber);
    add_image(fglsum);
    add_format(fglsum);

    CLI::App* hur = app.add_subcommand("hurewicz", "Characteristic-number expansions");
    hur->require_subcommand(1);
    CLI::App* hur_bmu = hur->add_subcommand("bmu", "Partition expansion of the n-th class");
    hur_bmu->add_option("n", nval, "Class index")->required()->check(CLI::PositiveNumber);
    add_format(hur_bmu);
    CLI::App* hur_cp = hur->add_subcommand("cp", "Class of CP_n, with the Chern oracle");
    hur_cp->add_option("n", nval, "Projective-space dimension")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(hur_cp);

    CLI::App* twist = app.add_subcommand("twist", "Twisted-class expansion at rational t");
    twist->add_option("n", nval, "Class index")->required()->check(CLI::PositiveNumber);
    twist->add_option("--t", t_value, "Twist parameter, rational > 0")->required();
    add_format(twist);

    CLI::App* cum = app.add_subcommand("cumulants", "Moments from cumulants");
    cum->add_option("--kappa", kappa, "Comma-separated rational cumulants")->required();
    cum->add_option("--max-n", max_n, "Largest moment index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(cum);

    CLI::App* sym = app.add_subcommand("symfunc", "Symmetric-function utilities");
    sym->require_subcommand(1);
    CLI::App* conv = sym->add_subcommand("convert", "Rewrite a basis generator in another basis");
    conv->add_option("--from", from_basis, "Source basis")
        ->required()
        ->check(CLI::IsMember({"p", "h", "e"}));
    conv->add_option("--to", to_basis, "Target basis")
        ->required()
        ->check(CLI::IsMember({"p", "h", "e"}));
    conv->add_option("--degree", degree, "Generator degree")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(conv);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(
            {"hopf", "additive", "integrality", "divisibility", "symfunc", "roundtrip"}));
    verify->add_option("--order", verify_order, "Truncation order")->check(CLI::PositiveNumber);
    verify->add_option("--max-n", verify_max_n, "Largest class index")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-k", verify_max_k, "Largest divisor")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "fgc: %s\n", e.what());
        return kExitUsage;
    }

    int image_flag = image == "hurewicz" ? 1 : 0;
    fgc_value* value = nullptr;
    // emit must read `value` only after the compute call has filled it.
    auto run = [&](fgc_status status) { return emit(status, value, format); };

    if (app.got_subcommand(logmu)) return run(fgc_logmu(order_uni, image_flag, &value));
    if (app.got_subcommand(expmu)) return run(fgc_expmu(order_uni, image_flag, &value));
    if (app.got_subcommand(bmu)) return run(fgc_bmu(order_uni, image_flag, &value));
    if (app.got_subcommand(fglsum)) return run(fgc_fgl_sum(order_bi, image_flag, &value));
    if (app.got_subcommand(hur)) {
        if (hur->got_subcommand(hur_bmu)) return run(fgc_hurewicz_bmu(nval, &value));
        return run(fgc_hurewicz_cp(nval, &value));
    }
    if (app.got_subcommand(twist)) return run(fgc_twist(nval, t_value.c_str(), &value));
    if (app.got_subcommand(cum)) return run(fgc_cumulants(kappa.c_str(), max_n, &value));
    if (app.got_subcommand(sym))
        return run(fgc_symfunc_convert(from_basis.c_str(), to_basis.c_str(), degree, &value));
    if (app.got_subcommand(verify)) {
        int param = verify_order > 0 ? verify_order
                  : verify_max_n > 0 ? verify_max_n
                  : verify_max_k > 0 ? verify_max_k
                                     : 0;
        return run(fgc_verify(suite.c_str(), param, &value));
    }

    std::fprintf(stderr, "fgc: no subcommand\n");
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fgc: %s\n", e.what());
        return kExitUsage;
    }
}

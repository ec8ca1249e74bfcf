// Command-line front end: coefficient tables, identity suites, order and
// polynomial evaluation, with text or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gup/gup.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

gup::Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return gup::Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

gup::Rational parse_alpha(const std::string& text) {
    gup::Rational alpha = parse_rational_flag(text, "--alpha");
    if (!(alpha > gup::Rational(-1))) {
        throw UsageError("--alpha must be greater than -1, got " + alpha.str());
    }
    return alpha;
}

gup::Rational parse_mass(const std::string& text) {
    gup::Rational m = parse_rational_flag(text, "--m");
    if (m < 0) {
        throw UsageError("--m must be nonnegative, got " + m.str());
    }
    return m;
}

json poly_json(const gup::UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

json failures_json(const gup::VerifyReport& rep) {
    json fs = json::array();
    for (const auto& f : rep.failures) {
        fs.push_back({{"where", f.where}, {"residual", poly_json(f.residual)}});
    }
    return fs;
}

struct CoeffsOptions {
    std::string alpha = "0";
    std::string a01 = "0";
    int max_i = 6;
    int n_max = 10;
    std::string format = "text";
};

int run_coeffs(const CoeffsOptions& opt) {
    gup::Rational alpha = parse_alpha(opt.alpha);
    gup::Rational a01 = parse_rational_flag(opt.a01, "--a01");
    if (opt.max_i < 1) throw UsageError("--max-i must be at least 1");
    if (opt.n_max < 0) throw UsageError("--n-max must be nonnegative");

    gup::CoeffSet set = gup::coeffs_closed(alpha, a01, opt.max_i);
    if (opt.format == "json") {
        json a0 = json::array();
        for (int n = 0; n <= opt.n_max; ++n) {
            a0.push_back({{"n", n}, {"value", gup::a0_closed(n, alpha, a01).str()}});
        }
        json coeffs = json::array();
        for (int i = 1; i <= opt.max_i; ++i) {
            coeffs.push_back({{"i", i},
                              {"b", poly_json(set.b_at(i))},
                              {"c", poly_json(set.c_at(i))},
                              {"a", poly_json(set.a_at(i))}});
        }
        json doc = {{"alpha", alpha.str()}, {"a01", a01.str()}, {"a0", a0}, {"coeffs", coeffs}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "alpha = " << alpha << "\n";
        std::cout << "a01 = " << a01 << "\n";
        for (int n = 0; n <= opt.n_max; ++n) {
            std::cout << "a0(" << n << ") = " << gup::a0_closed(n, alpha, a01) << "\n";
        }
        for (int i = 1; i <= opt.max_i; ++i) {
            std::cout << "b(" << i << ") = " << set.b_at(i) << "\n";
            std::cout << "c(" << i << ") = " << set.c_at(i) << "\n";
            std::cout << "a(" << i << ") = " << set.a_at(i) << "\n";
        }
    }
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    std::string alpha;  // empty: built-in grid
    int max_i = -1;     // -1: suite default
    int max_n = -1;
    std::string format = "text";
    bool inject_fault = false;
};

struct SuiteRun {
    std::string name;
    gup::VerifyReport report;
};

int run_verify(const VerifyOptions& opt) {
    const bool all = opt.suite == "all";
    std::vector<gup::Rational> alphas;
    if (!opt.alpha.empty() && !all) {
        alphas.push_back(parse_alpha(opt.alpha));
    } else {
        if (!opt.alpha.empty()) {
            std::cerr << "note: --alpha is ignored for --suite all; the built-in grid applies\n";
        }
        alphas = gup::default_alpha_grid();
    }
    auto mi = [&](int dflt) { return opt.max_i > 0 ? opt.max_i : dflt; };
    auto mn = [&](int dflt) { return opt.max_n >= 0 ? opt.max_n : dflt; };
    const auto& a01s = gup::default_a01_grid();

    std::vector<SuiteRun> runs;
    auto want = [&](const char* name) { return all || opt.suite == name; };
    if (want("definitions")) runs.push_back({"definitions", gup::suite_definitions(alphas, mn(12))});
    if (want("relations")) runs.push_back({"relations", gup::suite_relations(alphas, mn(12))});
    if (want("inversion")) runs.push_back({"inversion", gup::suite_inversion(alphas, mi(12))});
    if (want("spec")) runs.push_back({"spec", gup::suite_power(alphas, mi(12))});
    if (want("systems")) runs.push_back({"systems", gup::suite_systems(alphas, a01s, mn(10))});
    if (want("telescope")) runs.push_back({"telescope", gup::suite_telescope(alphas, mn(20))});
    if (want("cc")) runs.push_back({"cc", gup::suite_collapse(alphas, mi(12))});
    if (want("alt")) runs.push_back({"alt", gup::suite_alt(alphas, mi(10))});
    if (all) {
        runs.push_back({"ode", gup::suite_ode(alphas, gup::default_m_grid(), a01s, mn(10))});
        runs.push_back({"order", gup::suite_order()});
        runs.push_back({"solver", gup::suite_solver_roundtrip(alphas)});
    }

    if (opt.inject_fault) {
        // Self-test hook: corrupt one solved coefficient so the failure
        // path (report payload, exit code 1) can be exercised end to end.
        gup::Rational alpha(1, 2);
        gup::RhsSequence rhs{alpha, {}};
        for (int n = 1; n <= 3; ++n) {
            rhs.entries.push_back(gup::ultra_poly(n, alpha).derivative(2));
        }
        gup::SolutionSequence sol = gup::solve_derivative_system(rhs);
        sol.entries[1] += gup::UniPoly::constant(1);
        runs.push_back({"fault-injection", gup::verify_derivative_system(rhs, sol)});
    }

    std::size_t total = 0;
    std::size_t failed = 0;
    for (const auto& run : runs) {
        total += run.report.checked;
        failed += run.report.failures.size();
    }

    if (opt.format == "json") {
        json suites = json::array();
        for (const auto& run : runs) {
            suites.push_back({{"suite", run.name},
                              {"checked", run.report.checked},
                              {"failures", failures_json(run.report)}});
        }
        json doc = {{"pass", failed == 0}, {"checked", total}, {"failed", failed}, {"suites", suites}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& run : runs) {
            std::cout << "suite " << run.name << ": " << run.report.checked << " checks, "
                      << run.report.failures.size() << " failures\n";
        }
        const gup::VerifyFailure* first = nullptr;
        for (const auto& run : runs) {
            if (!run.report.failures.empty()) {
                first = run.report.first_failure();
                break;
            }
        }
        if (first != nullptr) {
            std::cout << "first counterexample: " << first->where
                      << "; residual = " << first->residual << "\n";
        }
        std::cout << "overall: " << (failed == 0 ? "PASS" : "FAIL") << " (" << total
                  << " checks, " << failed << " failures)\n";
    }
    return failed == 0 ? 0 : 1;
}

struct OdeCheckOptions {
    std::string alpha = "0";
    std::string m = "0";
    std::string a01 = "0";
    int n = 0;
    std::string format = "text";
};

int run_ode_check(const OdeCheckOptions& opt) {
    gup::Rational alpha = parse_alpha(opt.alpha);
    gup::Rational m = parse_mass(opt.m);
    gup::Rational a01 = parse_rational_flag(opt.a01, "--a01");
    if (opt.n < 0) throw UsageError("--n must be nonnegative");

    gup::UniPoly residual = gup::ode_residual(alpha, m, opt.n, a01);
    bool pass = residual.is_zero();
    if (opt.format == "json") {
        json doc = {{"alpha", alpha.str()}, {"m", m.str()}, {"n", opt.n},
                    {"a01", a01.str()},     {"residual", poly_json(residual)}, {"pass", pass}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "alpha = " << alpha << ", m = " << m << ", n = " << opt.n
                  << ", a01 = " << a01 << "\n";
        std::cout << "residual = " << residual << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

struct OrderOptions {
    std::string alpha = "0";
    int probe_bound = -1;
    std::string format = "text";
};

int run_order(const OrderOptions& opt) {
    gup::Rational alpha = parse_rational_flag(opt.alpha, "--alpha");
    if (!alpha.is_integer() || alpha.is_negative()) {
        throw UsageError("finite order requires a nonnegative integer --alpha (and a01 = 0); got " +
                         alpha.str());
    }
    int a = alpha.to_int();
    int probe = opt.probe_bound > 0 ? opt.probe_bound : 2 * a + 12;
    if (probe < 2 * a + 5) throw UsageError("--probe-bound must be at least 2*alpha + 5");

    gup::FiniteOrder fo = gup::finite_order(alpha, probe);
    if (opt.format == "json") {
        json doc = {{"alpha", alpha.str()},
                    {"order", fo.order},
                    {"leading", poly_json(fo.leading)},
                    {"probe_bound", probe}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "alpha = " << alpha << "\n";
        std::cout << "order = " << fo.order << "\n";
        std::cout << "leading = " << fo.leading << "\n";
    }
    return 0;
}

struct EvalOptions {
    std::string alpha = "0";
    std::string m = "0";
    std::string x;
    int n = 0;
    std::string format = "text";
};

int run_eval(const EvalOptions& opt) {
    gup::Rational alpha = parse_alpha(opt.alpha);
    gup::Rational m = parse_mass(opt.m);
    if (opt.n < 0) throw UsageError("--n must be nonnegative");
    std::optional<gup::Rational> x;
    if (!opt.x.empty()) x = parse_rational_flag(opt.x, "--x");

    gup::UniPoly p = gup::gen_poly(opt.n, alpha, m);
    if (opt.format == "json") {
        json doc = {{"alpha", alpha.str()}, {"m", m.str()}, {"n", opt.n}, {"poly", poly_json(p)}};
        if (x) {
            doc["x"] = x->str();
            doc["value"] = p.eval(*x).str();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "alpha = " << alpha << ", m = " << m << ", n = " << opt.n << "\n";
        std::cout << "poly = " << p << "\n";
        if (x) std::cout << "value at x=" << *x << ": " << p.eval(*x) << "\n";
    }
    return 0;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized ultraspherical polynomials: differential-equation "
                 "coefficients and exact identity verification"};
    app.require_subcommand(1);

    CoeffsOptions coeffs;
    CLI::App* coeffs_cmd = app.add_subcommand(
        "coeffs", "Emit a0(n), b_i, c_i and a_i = a01*b_i + c_i");
    coeffs_cmd->add_option("--alpha", coeffs.alpha, "Parameter alpha as p/q or integer, > -1")
        ->required();
    coeffs_cmd->add_option("--a01", coeffs.a01, "Free coefficient a0(1)")->capture_default_str();
    coeffs_cmd->add_option("--max-i", coeffs.max_i, "Highest coefficient order")
        ->capture_default_str();
    coeffs_cmd->add_option("--n-max", coeffs.n_max, "Table bound for a0(n)")->capture_default_str();
    add_format_flag(coeffs_cmd, coeffs.format);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity suites over built-in grids");
    verify_cmd->add_option("--suite", verify.suite, "Suite to run")
        ->check(CLI::IsMember({"inversion", "spec", "definitions", "relations", "systems",
                               "telescope", "cc", "alt", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--alpha", verify.alpha,
                           "Restrict to one alpha (ignored for --suite all)");
    verify_cmd->add_option("--max-i", verify.max_i, "Override index bound where applicable");
    verify_cmd->add_option("--max-n", verify.max_n, "Override degree bound where applicable");
    verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                         "Self-test hook: corrupt one coefficient to exercise the failure path");
    add_format_flag(verify_cmd, verify.format);

    OdeCheckOptions ode;
    CLI::App* ode_cmd = app.add_subcommand("ode-check", "Check the differential equation at one point");
    ode_cmd->add_option("--alpha", ode.alpha, "Parameter alpha, > -1")->required();
    ode_cmd->add_option("--m", ode.m, "Point mass M >= 0")->capture_default_str();
    ode_cmd->add_option("--n", ode.n, "Polynomial degree")->capture_default_str();
    ode_cmd->add_option("--a01", ode.a01, "Free coefficient a0(1)")->capture_default_str();
    add_format_flag(ode_cmd, ode.format);

    OrderOptions order;
    CLI::App* order_cmd = app.add_subcommand("order", "Report the finite operator order 2*alpha + 4");
    order_cmd->add_option("--alpha", order.alpha, "Nonnegative integer alpha")->required();
    order_cmd->add_option("--probe-bound", order.probe_bound,
                          "Verify c_i = 0 up to this index (default 2*alpha + 12)");
    add_format_flag(order_cmd, order.format);

    EvalOptions eval;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Construct a generalized polynomial");
    eval_cmd->add_option("--alpha", eval.alpha, "Parameter alpha, > -1")->required();
    eval_cmd->add_option("--m", eval.m, "Point mass M >= 0")->capture_default_str();
    eval_cmd->add_option("--n", eval.n, "Polynomial degree")->capture_default_str();
    eval_cmd->add_option("--x", eval.x, "Optional rational evaluation point");
    add_format_flag(eval_cmd, eval.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs_cmd->parsed()) return run_coeffs(coeffs);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (ode_cmd->parsed()) return run_ode_check(ode);
        if (order_cmd->parsed()) return run_order(order);
        if (eval_cmd->parsed()) return run_eval(eval);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gup::consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const gup::pole_error& e) {
        std::cerr << "pole encountered: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

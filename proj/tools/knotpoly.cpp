// knotpoly: command-line front end for the Conway polynomial engine and the
// verification suite.
//
// Exit codes: 0 success, 1 failed verification or evaluation error,
// 2 usage or parse error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotpoly/diagram.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace knotpoly;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::optional<std::string> pd;
    std::optional<std::string> file;
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> max_n;
    std::optional<int> max_l;
    std::optional<int> max_r;
    std::string format = "text";
    bool verbose = false;
    std::optional<std::uint64_t> budget;
};

// Usage problems detected after CLI11 parsing (bad file, bad PD text).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_pd(const Options& o) {
    if (o.pd) return *o.pd;
    if (!o.file) throw UsageError("one of --pd or --file is required");
    std::ifstream in(*o.file);
    if (!in) throw UsageError("cannot read " + *o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string s = buf.str();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

Diagram load_diagram(const Options& o, std::string& text) {
    text = read_pd(o);
    try {
        return parse_pd(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad PD code: ") + e.what());
    } catch (const ValidationError& e) {
        throw UsageError(std::string("bad PD code: ") + e.what());
    }
}

void emit(const Options& o, const std::string& command, const json& input, const json& result,
          const std::string& text) {
    if (o.format == "json") {
        std::cout << json{{"command", command}, {"input", input}, {"result", result}}.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
}

void print_stats(const Options& o, const SkeinContext& ctx) {
    if (!o.verbose) return;
    std::cerr << "nodes expanded: " << ctx.stats().nodes_expanded << ", cache hits: " << ctx.stats().cache_hits
              << ", memo entries: " << ctx.memo_size() << '\n';
}

SkeinContext make_context(const Options& o) { return SkeinContext(o.budget.value_or(kDefaultNodeBudget)); }

int run_conway(const Options& o) {
    std::string text;
    Diagram d = load_diagram(o, text);
    SkeinContext ctx = make_context(o);
    std::string p = format_poly(conway(d, ctx));
    emit(o, "conway", text, p, p);
    print_stats(o, ctx);
    return kOk;
}

int run_a2(const Options& o) {
    std::string text;
    Diagram d = load_diagram(o, text);
    if (d.component_count() != 1) throw UsageError("a2 needs a knot, got " + std::to_string(d.component_count()) +
                                                   " components");
    SkeinContext ctx = make_context(o);
    std::string v = a2(d, ctx).str();
    emit(o, "a2", text, v, v);
    print_stats(o, ctx);
    return kOk;
}

int run_lk(const Options& o) {
    std::string text;
    Diagram d = load_diagram(o, text);
    json pairs = json::array();
    std::string lines;
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        for (std::size_t j = i + 1; j < d.component_count(); ++j) {
            int lk = linking_number(d, i, j);
            pairs.push_back({{"components", {i, j}}, {"lk", lk}});
            if (!lines.empty()) lines += '\n';
            lines += "lk(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(lk);
        }
    }
    if (lines.empty()) lines = "no component pairs";
    emit(o, "lk", text, pairs, lines);
    return kOk;
}

int run_torus(const Options& o) {
    std::string p = format_poly(conway_torus2(*o.m));
    emit(o, "torus", json{{"m", *o.m}}, p, p);
    return kOk;
}

int run_kn(const Options& o) {
    std::string p = format_poly(conway_Kn(*o.n));
    emit(o, "kn", json{{"n", *o.n}}, p, p);
    return kOk;
}

int run_verify(const Options& o) {
    VerifyConfig cfg;
    if (o.max_n) cfg.max_n = *o.max_n;
    if (o.max_l) cfg.max_l = *o.max_l;
    if (o.max_r) cfg.max_r = *o.max_r;
    if (o.budget) cfg.properties.node_budget = *o.budget;

    std::vector<VerificationReport> reports = run_all(cfg);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        if (!r.passed) ++failed;
        if (o.format == "json") {
            std::cout << json{{"check_name", r.check_name},
                              {"inputs", r.inputs},
                              {"expected", r.expected},
                              {"computed", r.computed},
                              {"passed", r.passed}}
                             .dump()
                      << '\n';
        } else if (!r.passed || o.verbose) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_name << "\n  inputs:   " << r.inputs
                      << "\n  expected: " << r.expected << "\n  computed: " << r.computed << '\n';
        } else {
            std::cout << "PASS " << r.check_name << ": " << r.computed << '\n';
        }
    }
    std::string verdict = failed == 0 ? "ALL CHECKS PASSED" : std::to_string(failed) + " CHECKS FAILED";
    json input{{"max_n", cfg.max_n}, {"max_l", cfg.max_l}, {"max_r", cfg.max_r}};
    emit(o, "verify", input, {{"checks", reports.size()}, {"failed", failed}, {"verdict", verdict}},
         std::to_string(reports.size()) + " checks, " + std::to_string(failed) + " failed\n" + verdict);
    return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway polynomials of PD-coded links and the K_n verification suite"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("-v,--verbose", o.verbose, "Print skein statistics to stderr, all reports for verify");
    app.add_option("--budget", o.budget, "Node budget for skein evaluation")->check(CLI::PositiveNumber);

    auto add_pd_input = [&o](CLI::App* sub) {
        auto* pd = sub->add_option("--pd", o.pd, "PD code, e.g. \"X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)\"");
        auto* file = sub->add_option("--file", o.file, "File holding a PD code");
        pd->excludes(file);
        file->excludes(pd);
    };

    auto* conway_cmd = app.add_subcommand("conway", "Conway polynomial of a diagram");
    add_pd_input(conway_cmd);
    auto* a2_cmd = app.add_subcommand("a2", "z^2 coefficient of a knot's Conway polynomial");
    add_pd_input(a2_cmd);
    auto* lk_cmd = app.add_subcommand("lk", "Pairwise linking numbers");
    add_pd_input(lk_cmd);
    auto* torus_cmd = app.add_subcommand("torus", "Closed-form Conway polynomial of T(2,m)");
    torus_cmd->add_option("--m", o.m, "Number of half twists")->required()->check(CLI::NonNegativeNumber);
    auto* kn_cmd = app.add_subcommand("kn", "Conway polynomial of T(2,2n+3) # mirror T(2,2n+1)");
    kn_cmd->add_option("--n", o.n, "Family index")->required()->check(CLI::PositiveNumber);
    auto* verify_cmd = app.add_subcommand("verify", "Run every verification check");
    verify_cmd->add_option("--max-n", o.max_n, "Upper bound on n")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-l", o.max_l, "Upper bound on l")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-r", o.max_r, "Upper bound on r")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*conway_cmd) return run_conway(o);
        if (*a2_cmd) return run_a2(o);
        if (*lk_cmd) return run_lk(o);
        if (*torus_cmd) return run_torus(o);
        if (*kn_cmd) return run_kn(o);
        return run_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "knotpoly: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "knotpoly: error: " << e.what() << '\n';
        return kFailed;
    }
}

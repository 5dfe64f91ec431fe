// ivcalc: interval-calculus front door.
//
// Subcommands: classify, integrate, reconstruct, verify, list. Reports are
// JSON (schema "ivcalc/1") on stdout; CSV traces and best-effort SVG plots
// go to --out. Exit codes: 0 verdict delivered, 1 precondition or usage
// error, 2 verification-suite failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivcalc/corpus.hpp"
#include "ivcalc/derivative.hpp"
#include "ivcalc/integral.hpp"
#include "ivcalc/serialize.hpp"
#include "ivcalc/verify.hpp"

namespace {

using namespace ivcalc;

double default_atol() {
    if (const char* env = std::getenv("IVCALC_DEFAULT_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0)
                return v;
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return 1e-4;
}

Params parse_params(const std::vector<std::string>& kvs) {
    Params p;
    for (const auto& kv : kvs) {
        const auto pos = kv.find('=');
        if (pos == std::string::npos)
            throw std::invalid_argument("expected key=value parameter, got '" + kv + "'");
        p[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
    }
    return p;
}

Json params_json(const Params& p) { return Json(p); }

std::string slug(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ScheduleFlags {
    double h0 = 1e-2;
    double ratio = 0.7;
    int count = 30;
    double atol = default_atol();

    void attach(CLI::App* cmd) {
        cmd->add_option("--h0", h0, "initial step of the limit schedule");
        cmd->add_option("--ratio", ratio, "step contraction ratio in (0,1)");
        cmd->add_option("--count", count, "number of schedule steps");
        cmd->add_option("--atol", atol, "residual tolerance for limit verdicts");
    }

    ClassifyConfig config() const {
        ClassifyConfig cfg;
        cfg.schedule = HSchedule{h0, ratio, count};
        cfg.atol = atol;
        return cfg;
    }
};

struct QuadFlags {
    int cells = 16;
    int doublings = 16;
    double tol = 1e-8;
    std::string tag = "midpoint";

    void attach(CLI::App* cmd) {
        cmd->add_option("--cells", cells, "initial partition cells");
        cmd->add_option("--doublings", doublings, "maximum refinement doublings");
        cmd->add_option("--tol", tol, "successive-refinement Hausdorff tolerance");
        cmd->add_option("--tag", tag, "tag rule: left|right|midpoint")
            ->check(CLI::IsMember({"left", "right", "midpoint"}));
    }

    QuadConfig config() const {
        QuadConfig cfg;
        cfg.initial_cells = cells;
        cfg.max_doublings = doublings;
        cfg.tol = tol;
        cfg.tag_rule = tag == "left" ? TagRule::left
                                     : tag == "right" ? TagRule::right : TagRule::midpoint;
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ivcalc: calculus for interval-valued functions"};
    app.require_subcommand(1);

    std::string fn_name, format = "json", out_dir = ".", mode = "h1", suite = "laws";
    std::vector<std::string> param_kvs;
    double t0 = 0.0, range_a = 0.0, range_b = 1.0;
    bool plot = false;
    long cases = 1000;
    std::uint64_t seed = 0;
    ScheduleFlags sched;
    QuadFlags quad;

    auto* classify = app.add_subcommand("classify", "classify differentiability at a point");
    classify->add_option("--fn", fn_name, "corpus entry name")->required();
    classify->add_option("--t", t0, "evaluation point")->required();
    classify->add_option("--param", param_kvs, "corpus parameter override key=value");
    classify->add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    classify->add_flag("--plot", plot, "write SVG plots to --out");
    classify->add_option("--out", out_dir, "artifact directory");
    sched.attach(classify);

    auto* integrate_cmd = app.add_subcommand("integrate", "Riemann integral over [a, b]");
    integrate_cmd->add_option("--fn", fn_name, "corpus entry name")->required();
    integrate_cmd->add_option("--a", range_a, "lower limit")->required();
    integrate_cmd->add_option("--b", range_b, "upper limit")->required();
    integrate_cmd->add_option("--param", param_kvs, "corpus parameter override key=value");
    integrate_cmd->add_option("--format", format, "output format: json|csv (csv = partition audit)")
        ->check(CLI::IsMember({"json", "csv"}));
    integrate_cmd->add_option("--out", out_dir, "artifact directory");
    integrate_cmd->add_flag("--plot", plot, "write SVG endpoint plot to --out");
    quad.attach(integrate_cmd);

    auto* reconstruct = app.add_subcommand("reconstruct", "Newton-Leibniz reconstruction of F(t)");
    reconstruct->add_option("--fn", fn_name, "corpus entry name")->required();
    reconstruct->add_option("--mode", mode, "reconstruction mode: h1|h2")
        ->check(CLI::IsMember({"h1", "h2"}));
    reconstruct->add_option("--a", range_a, "anchor point")->required();
    reconstruct->add_option("--t", t0, "target point")->required();
    reconstruct->add_option("--param", param_kvs, "corpus parameter override key=value");
    sched.attach(reconstruct);
    quad.attach(reconstruct);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite: laws|derivative|integral")
        ->check(CLI::IsMember({"laws", "derivative", "integral"}));
    verify->add_option("--cases", cases, "seeded cases per law");
    verify->add_option("--seed", seed, "suite seed");

    auto* list = app.add_subcommand("list", "list the corpus registry");
    (void)list;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) {
            const Params params = parse_params(param_kvs);
            const IntervalFn fn = corpus_build(fn_name, params);
            const ClassifyConfig cfg = sched.config();
            const DerivativeReport rep = classify_point(fn, t0, cfg);
            if (format == "csv") {
                std::cout << traces_to_csv(rep);
            } else {
                Json j;
                j["schema"] = kSchemaTag;
                j["command"] = "classify";
                j["fn"] = fn_name;
                j["params"] = params_json(params);
                j["report"] = to_json(rep);
                emit(j);
            }
            if (plot) {
                // plotting is best-effort and never changes the exit code
                try {
                    const std::string base = out_dir + "/classify_" + fn_name + "_t" + slug(t0);
                    write_file(base + "_traces.svg",
                               traces_to_svg(rep, fn_name + " residual traces at t=" + slug(t0)));
                    write_file(base + "_endpoints.svg",
                               endpoints_to_svg(fn, 257, fn_name + " endpoint curves"));
                } catch (const std::exception& e) {
                    std::cerr << "plot skipped: " << e.what() << "\n";
                }
            }
            return 0;
        }
        if (integrate_cmd->parsed()) {
            const Params params = parse_params(param_kvs);
            const IntervalFn fn = corpus_build(fn_name, params);
            const QuadConfig cfg = quad.config();
            const QuadResult res = integrate(fn, range_a, range_b, cfg);
            if (format == "csv") {
                if (res.cells > 0)
                    std::cout << partition_to_csv(Partition::uniform(
                        range_a, range_b, static_cast<int>(res.cells), cfg.tag_rule));
                else
                    std::cout << "node,tag\n";
            } else {
                Json j;
                j["schema"] = kSchemaTag;
                j["command"] = "integrate";
                j["fn"] = fn_name;
                j["params"] = params_json(params);
                j["a"] = range_a;
                j["b"] = range_b;
                j["result"] = to_json(res);
                emit(j);
            }
            if (plot) {
                try {
                    write_file(out_dir + "/integrate_" + fn_name + "_endpoints.svg",
                               endpoints_to_svg(fn, 257, fn_name + " endpoint curves"));
                } catch (const std::exception& e) {
                    std::cerr << "plot skipped: " << e.what() << "\n";
                }
            }
            return 0;
        }
        if (reconstruct->parsed()) {
            const Params params = parse_params(param_kvs);
            const IntervalFn fn = corpus_build(fn_name, params);
            ReconstructConfig cfg;
            cfg.quad = quad.config();
            cfg.classify = sched.config();
            const Interval value = mode == "h1" ? reconstruct_h1(fn, range_a, t0, cfg)
                                                : reconstruct_h2(fn, range_a, t0, cfg);
            const Interval direct = fn(t0);
            Json j;
            j["schema"] = kSchemaTag;
            j["command"] = "reconstruct";
            j["fn"] = fn_name;
            j["params"] = params_json(params);
            j["mode"] = mode;
            j["a"] = range_a;
            j["t"] = t0;
            j["value"] = to_json(value);
            j["eval"] = to_json(direct);
            j["residual"] = hausdorff(value, direct);
            emit(j);
            return 0;
        }
        if (verify->parsed()) {
            const SuiteReport rep = run_suite(suite, cases, seed);
            Json j;
            j["schema"] = kSchemaTag;
            j["command"] = "verify";
            j["report"] = to_json(rep);
            emit(j);
            return rep.all_pass ? 0 : 2;
        }
        if (list->parsed()) {
            Json j;
            j["schema"] = kSchemaTag;
            j["command"] = "list";
            j["corpus"] = corpus_listing();
            emit(j);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

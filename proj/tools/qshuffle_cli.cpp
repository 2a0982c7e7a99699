// command-line front end: verification suites, point evaluation, dimension
// tables. JSON report on stdout, human summary on stderr.
// exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qshuffle/serialize.hpp"
#include "qshuffle/suites.hpp"

using namespace qshuffle;

namespace {

RunConfig config_from_env() {
    RunConfig cfg;
    if (const char* s = std::getenv("QSHUFFLE_SEED")) cfg.seed = std::strtoull(s, nullptr, 10);
    return cfg;
}

json load_json_arg(const std::string& arg) {
    // a path if the file exists, otherwise inline JSON
    std::ifstream in(arg);
    if (in.good()) return json::parse(in);
    return json::parse(arg);
}

int cmd_verify(const std::string& suite, SuiteOptions opt, const std::string& report_path,
               const std::string& echo) {
    Stopwatch sw;
    Report rep;
    rep.command = echo;
    rep.config = opt.cfg;
    try {
        rep.checks = run_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    rep.wall_ms = sw.ms();
    std::string payload = rep.to_json().dump(2);
    if (report_path.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream out(report_path);
        out << payload << "\n";
    }
    int failed = 0, skipped = 0;
    for (const auto& c : rep.checks) {
        if (c.skipped) {
            ++skipped;
            std::cerr << "SKIP " << c.name << " (" << c.witness << ")\n";
        } else if (!c.passed) {
            ++failed;
            std::cerr << "FAIL " << c.name << ": " << c.witness << "\n";
        }
    }
    std::cerr << "suite '" << suite << "': " << rep.checks.size() << " checks, " << failed
              << " failed, " << skipped << " skipped, " << static_cast<long>(rep.wall_ms)
              << " ms\n";
    return failed == 0 ? 0 : 1;
}

int cmd_eval(const std::string& element_arg, const std::string& point_arg) {
    try {
        json je = load_json_arg(element_arg);
        json jp = load_json_arg(point_arg);
        ElemPtr e = element_from_json(je);
        auto [p, x] = point_from_json(jp);
        Rat v = evaluate<Rat>(*e, p, x);
        std::cout << v.str() << "\n";
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}

int cmd_dims(int K, int N) {
    auto t = dim_R_table(K, N);
    for (int i = 0; i <= N; ++i) std::cout << (i ? ", " : "") << t[i];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for the gl(m|n) shuffle algebra and its Bethe subalgebra"};
    app.require_subcommand(1);

    SuiteOptions opt;
    opt.cfg = config_from_env();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::string report_path;
    bool as_printed = false;
    verify->add_option("--suite", suite,
                       "identities|wheel|membership|commutativity|fusion|example211|classical|"
                       "series|all");
    verify->add_option("--seed", opt.cfg.seed, "master seed");
    verify->add_option("--trials", opt.cfg.trials, "random points per check");
    verify->add_option("--bound", opt.cfg.bound, "bound for random rationals");
    verify->add_option("--resample-budget", opt.cfg.resample_budget,
                       "retries at degenerate points");
    verify->add_option("--parallelism", opt.cfg.parallelism, "worker threads");
    verify->add_option("--max-mn", opt.max_mn, "identity suite M,N cap");
    verify->add_option("--max-c", opt.max_c, "identity suite |c| cap");
    verify->add_option("--max-N", opt.comm_max_N, "commutativity degree cap");
    verify->add_option("--max-r", opt.comm_max_r, "commutativity order cap");
    verify->add_option("--report", report_path, "write the JSON report to a file");
    verify->add_flag("--fusion-as-printed", as_printed,
                     "evaluate the fusion correction factors verbatim");
    int m_flag = 0, n_flag = -1;
    verify->add_option("--m", m_flag, "restrict the commutativity suite to one signature (m)");
    verify->add_option("--n", n_flag, "restrict the commutativity suite to one signature (n)");

    auto* eval = app.add_subcommand("eval", "evaluate an element at an exact point");
    std::string element_arg, point_arg;
    eval->add_option("--element", element_arg, "element JSON (inline or file)")->required();
    eval->add_option("--point", point_arg, "point JSON (inline or file)")->required();

    auto* dims = app.add_subcommand("dims", "dimension table of the free polynomial algebra");
    int K = 1, N = 0;
    dims->add_option("--k", K, "number of generators per degree")->required();
    dims->add_option("--n", N, "maximum degree")->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        if (as_printed) opt.fusion_variant = FusionVariant::as_printed;
        if (m_flag > 0) opt.comm_sigs = {{m_flag, n_flag >= 0 ? n_flag : 0}};
        std::string echo = "verify --suite " + suite;
        return cmd_verify(suite, opt, report_path, echo);
    }
    if (eval->parsed()) return cmd_eval(element_arg, point_arg);
    if (dims->parsed()) {
        if (K < 1 || N < 0) {
            std::cerr << "error: need k >= 1, n >= 0\n";
            return 2;
        }
        return cmd_dims(K, N);
    }
    return 2;
}

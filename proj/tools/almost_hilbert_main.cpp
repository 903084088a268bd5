#include <chrono>
#include <cmath>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "almost_hilbert/cli.hpp"
#include "almost_hilbert/integral_ops.hpp"
#include "almost_hilbert/ks2.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t seed_from_env() {
    const char* env = std::getenv("ALMOST_HILBERT_SEED");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    errno = 0;
    const auto v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || *env == '-') throw UsageError("ALMOST_HILBERT_SEED is not an unsigned integer");
    return v;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw IoError("cannot write to standard output");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    f << text;
    f.close();
    if (!f) throw IoError("cannot write " + path);
}

std::string hilbert_demo(const std::string& op, std::size_t m) {
    const auto f = ah::PeriodicSignal::sample(m, [](double t) {
        return ah::Complex{std::cos(2 * std::numbers::pi * t) + 0.5 * std::sin(6 * std::numbers::pi * t)};
    });
    ah::PeriodicSignal h = f;
    if (op == "hilbert")
        h = ah::hilbert_multiplier(f);
    else if (op == "hilbert-pv")
        h = ah::hilbert_pv(f, 4.0 / static_cast<double>(m));
    else
        throw UsageError("unknown operator: " + op);
    std::ostringstream out;
    out << "t,input,output\n";
    char buf[96];
    for (std::size_t j = 0; j < m; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.point(j), f[j].real(), h[j].real());
        out << buf;
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-truncation verification suites for the natural Hilbert embedding of Banach spaces"};
    app.set_version_flag("--version", "almost-hilbert 1.0");

    ah::SuiteParams params;
    std::string suite = "all";
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    bool list = false;
    bool timing = false;

    app.add_option("--suite", suite, "embedding, adjoint, schatten, ks2, integral or all")->capture_default_str();
    app.add_option("--dim", params.dim, "basis dimension N (default sweeps 4, 8, 16)");
    app.add_option("--grid", params.grid, "grid resolution M")->capture_default_str();
    app.add_option("--p", params.p, "Banach exponent p")->capture_default_str();
    app.add_option("--q", params.q, "extra KS2 embedding exponent q")->capture_default_str();
    app.add_option("--alpha", params.alpha, "Riesz order alpha")->capture_default_str();
    app.add_option("--trials", params.trials, "trial count for every sweep (default per check)");
    auto* seed_opt = app.add_option("--seed", seed, "master seed (falls back to ALMOST_HILBERT_SEED, then 0)");
    app.add_option("--tol", params.tol_scale, "scale applied to every tolerance")->capture_default_str();
    app.add_option("--cubes", params.cubes, "KS2 truncation K")->capture_default_str();
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--out", out_path, "output path (default standard output)");
    app.add_flag("--list", list, "print every check name of the suite and exit");
    app.add_flag("--timing", timing, "include wall-clock duration in the report");

    auto* ks2 = app.add_subcommand("ks2", "KS2 utilities");
    auto* dump = ks2->add_subcommand("dump-cubes", "CSV of the first K cubes: k,l,i,center...,side");
    int dump_n = 1;
    std::size_t dump_count = 16;
    dump->add_option("--n", dump_n, "ambient dimension (1 or 2)")->check(CLI::Range(1, 2))->capture_default_str();
    dump->add_option("--count", dump_count, "number of cubes")->check(CLI::Range(1, 100000))->capture_default_str();
    ks2->require_subcommand(1);

    auto* integral = app.add_subcommand("integral", "integral operator utilities");
    auto* demo = integral->add_subcommand("demo", "CSV of t, input, output for a reference signal");
    std::string demo_op = "hilbert";
    std::size_t demo_m = 1024;
    demo->add_option("--op", demo_op, "hilbert or hilbert-pv")->capture_default_str();
    demo->add_option("--m", demo_m, "number of samples (power of two)")->capture_default_str();
    integral->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dump->parsed()) {
            std::ostringstream out;
            ah::write_cube_csv(out, ah::CubeSystem::unit(dump_n), dump_count);
            write_output(out_path, out.str());
            return kExitPass;
        }
        if (demo->parsed()) {
            if (demo_m < 4 || (demo_m & (demo_m - 1)) != 0) throw UsageError("--m must be a power of two >= 4");
            write_output(out_path, hilbert_demo(demo_op, demo_m));
            return kExitPass;
        }
        if (list) {
            std::string text;
            for (const auto& name : ah::check_names(suite)) text += name + '\n';
            write_output(out_path, text);
            return kExitPass;
        }

        params.seed = seed_opt->count() > 0 ? seed : seed_from_env();
        const auto start = std::chrono::steady_clock::now();
        auto report = ah::run_suite(suite, params);
        report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::ostringstream out;
        ah::emit_report(report, ah::parse_format(format), out, timing);
        write_output(out_path, out.str());
        return report.passed() ? kExitPass : kExitFail;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}

// Command-line front end: diagram composition, traces, modified dimensions,
// the ambidexterity verifier and solver, negligibility queries, framed-knot
// evaluation, and the matrix-model self-check.
//
// Conventions shared by every command:
//   * results go to stdout; progress, timing, and notes go to stderr
//   * exit 0 on success, 1 on bad input (one-line diagnostic), 2 when a
//     verification command finds failures
//   * --format machine prints stable key=value lines instead of prose

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <delrep/enumerate.hpp>
#include <delrep/error.hpp>
#include <delrep/knots.hpp>
#include <delrep/modtrace.hpp>
#include <delrep/morphism_io.hpp>
#include <delrep/oracle.hpp>
#include <delrep/scalar_io.hpp>

namespace {

using namespace delrep;

std::optional<Rational> parse_t_flag(const std::string& text) {
    if (text == "generic")
        return std::nullopt;
    return parse_rational(text);
}

std::optional<Rational> parse_q_flag(const std::string& text) {
    if (text == "symbolic")
        return std::nullopt;
    Rational q0 = parse_rational(text);
    if (q0 == 0)
        throw error("q must be nonzero");
    return q0;
}

// With a concrete t every coefficient collapses to a rational constant.
Morphism<TPoly> evaluated(const Morphism<TPoly>& f, const std::optional<Rational>& t0) {
    if (!t0)
        return f;
    Morphism<TPoly> out = Morphism<TPoly>::zero(f.src, f.dst);
    for (const auto& [d, c] : f.terms)
        out.add_term(d, TPoly(c.eval(*t0)));
    return out;
}

std::string scalar_text(const TPoly& p, const std::optional<Rational>& t0) {
    return t0 ? to_string(p.eval(*t0)) : to_string(p);
}

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_elapsed(double seconds) {
    std::cerr << "elapsed: " << seconds << " s\n";
}

struct CommonFlags {
    std::string t = "generic";
    std::string format = "text";
    bool machine() const { return format == "machine"; }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_t = true) {
    if (with_t)
        cmd->add_option("--t", flags.t, "value for t: a rational, or \"generic\"")
            ->capture_default_str();
    cmd->add_option("--format", flags.format, "output style")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
}

int cmd_compose(const std::string& upper, const std::string& lower, const CommonFlags& flags) {
    const auto t0 = parse_t_flag(flags.t);
    Morphism<TPoly> top = parse_morphism(upper);
    Morphism<TPoly> bottom = parse_morphism(lower);
    // Stacking reads top to bottom, so the upper morphism is applied first.
    Morphism<TPoly> result = evaluated(mor_compose(bottom, top), t0);
    if (flags.machine())
        std::cout << "result=" << to_string(result) << "\n";
    else
        std::cout << to_string(result) << "\n";
    return 0;
}

int cmd_trace(const std::string& text, const CommonFlags& flags) {
    const auto t0 = parse_t_flag(flags.t);
    Morphism<TPoly> f = parse_morphism(text);
    TPoly tr = categorical_trace(f);
    if (flags.machine())
        std::cout << "value=" << scalar_text(tr, t0) << "\n";
    else
        std::cout << scalar_text(tr, t0) << "\n";
    return 0;
}

int cmd_dims(int max_n, const CommonFlags& flags) {
    if (max_n < 1)
        throw error("--n must be at least 1");
    const auto t0 = parse_t_flag(flags.t);
    for (int n = 1; n <= max_n; ++n) {
        TPoly d = mod_trace(antisymmetrizer(n), 1, n - 1);
        if (flags.machine())
            std::cout << "n=" << n << " value=" << scalar_text(d, t0) << "\n";
        else
            std::cout << n << " " << scalar_text(d, t0) << "\n";
    }
    return 0;
}

int cmd_verify_amb(int n, int jobs, int cap, bool paranoid, const CommonFlags& flags) {
    VerifyOptions opts;
    opts.t0 = parse_t_flag(flags.t);
    opts.jobs = jobs;
    opts.cap = cap;
    opts.paranoid = paranoid;

    std::mutex progress_mutex;
    std::uint64_t next_mark = 100'000;
    opts.progress = [&](std::uint64_t done, std::uint64_t total) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        while (done >= next_mark) {
            std::cerr << "progress: " << next_mark << "/" << total << " diagrams\n";
            next_mark += 100'000;
        }
    };

    AmbidexterityReport report = verify_ambidextrous(n, opts);
    print_elapsed(report.seconds);

    const std::string mode = report.t0 ? "t=" + to_string(*report.t0) : "generic";
    if (flags.machine()) {
        std::cout << "n=" << report.n << " mode=" << mode << " checked=" << report.checked
                  << " failures=" << report.failure_count
                  << " verdict=" << (report.ok() ? "ok" : "fail") << "\n";
        for (const auto& f : report.failures)
            std::cout << "failure pi=" << to_string(f.pi) << " lhs=" << to_string(f.lhs)
                      << " rhs=" << to_string(f.rhs) << "\n";
    } else if (report.ok()) {
        std::cout << "OK: " << report.checked << " diagrams, 0 failures\n";
    } else {
        std::cout << "FAIL: " << report.checked << " diagrams, " << report.failure_count
                  << " failures\n";
        for (const auto& f : report.failures)
            std::cout << "  " << to_string(f.pi) << ": right " << to_string(f.lhs)
                      << " vs left " << to_string(f.rhs) << "\n";
    }
    return report.ok() ? 0 : 2;
}

int cmd_solve_amb(const CommonFlags& flags) {
    SolutionSpace space = ambidextrous_solution_space(parse_t_flag(flags.t));
    if (flags.machine()) {
        std::cout << "dimension=" << space.dimension << "\n";
        for (const auto& v : space.basis)
            std::cout << "vector=" << to_string(v[0]) << ";" << to_string(v[1]) << "\n";
    } else {
        std::cout << "dimension: " << space.dimension << "\n";
        for (const auto& v : space.basis)
            std::cout << "basis: (" << to_string(v[0]) << ", " << to_string(v[1]) << ")\n";
    }
    return 0;
}

int cmd_negligible(const std::string& text, int antisym, const CommonFlags& flags) {
    const auto t0 = parse_t_flag(flags.t);
    if (!t0)
        throw error("negligibility needs a concrete t; pass --t <rational>");
    if (text.empty() == (antisym == 0))
        throw error("give exactly one of a morphism argument or --antisym <n>");
    Morphism<TPoly> f = antisym > 0 ? antisymmetrizer(antisym) : parse_morphism(text);
    const bool neg = is_negligible(f, *t0);
    if (flags.machine())
        std::cout << "negligible=" << (neg ? "true" : "false") << "\n";
    else
        std::cout << "negligible: " << (neg ? "true" : "false") << "\n";
    return 0;
}

int cmd_knot(const std::string& path, const std::string& label, const std::string& q,
             const CommonFlags& flags) {
    const auto q0 = parse_q_flag(q);

    int a = -1, b = -1;
    {
        std::istringstream in(label);
        char comma = 0;
        if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
            throw error("--label wants the form a,b (for example 1,0)");
    }

    std::ifstream file(path);
    if (!file)
        throw error("cannot open tangle file " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();

    TangleWord word = parse_tangle(buffer.str());
    KnotResult result = evaluate_knot(word, a, b);
    if (result.degenerate)
        std::cerr << "note: label " << a << "," << b
                  << " has degree zero, so the invariant collapses to 1\n";

    const std::string value =
        q0 ? to_string(result.value.eval_q(*q0)) : to_string(result.value);
    if (flags.machine())
        std::cout << "value=" << value << " writhe=" << result.writhe << "\n";
    else
        std::cout << value << " (writhe oracle: " << result.writhe << ")\n";
    return 0;
}

int cmd_oracle(int dimension, int samples, std::uint64_t seed, const CommonFlags& flags) {
    OracleOptions opts;
    opts.dimension = dimension;
    opts.samples = samples;
    opts.seed = seed;
    OracleReport report = oracle_check(opts);
    print_elapsed(report.seconds);
    if (flags.machine()) {
        std::cout << "dimension=" << dimension << " checked=" << report.checked
                  << " verdict=" << (report.ok ? "ok" : "fail") << "\n";
        if (!report.ok)
            std::cout << "mismatch=" << report.first_mismatch << "\n";
    } else if (report.ok) {
        std::cout << "OK: " << report.checked << " checks\n";
    } else {
        std::cout << "FAIL after " << report.checked << " checks: " << report.first_mismatch
                  << "\n";
    }
    return report.ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-diagram calculus: composition, modified traces, and knot evaluation"};
    app.require_subcommand(1);

    CommonFlags flags;
    int ret = 0;
    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("compose", "stack two morphisms (first above second)");
        auto upper = std::make_shared<std::string>();
        auto lower = std::make_shared<std::string>();
        cmd->add_option("upper", *upper, "morphism applied first")->required();
        cmd->add_option("lower", *lower, "morphism applied second")->required();
        add_common(cmd, flags);
        cmd->callback([&, upper, lower] { action = [&, upper, lower] {
            return cmd_compose(*upper, *lower, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand("trace", "categorical trace of an endomorphism");
        auto text = std::make_shared<std::string>();
        cmd->add_option("morphism", *text, "endomorphism in text form")->required();
        add_common(cmd, flags);
        cmd->callback([&, text] { action = [&, text] { return cmd_trace(*text, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand("dims", "modified dimensions of the exterior-power objects");
        auto max_n = std::make_shared<int>(5);
        cmd->add_option("--n", *max_n, "largest strand count")->required();
        add_common(cmd, flags);
        cmd->callback([&, max_n] { action = [&, max_n] { return cmd_dims(*max_n, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand(
            "verify-amb", "check both closures of every doubled diagram agree");
        auto n = std::make_shared<int>(1);
        auto jobs = std::make_shared<int>(default_jobs());
        auto cap = std::make_shared<int>(DiagramEnumerator::default_cap);
        auto paranoid = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "strand count per tensor factor")->required();
        cmd->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
        cmd->add_option("--cap", *cap, "safety cap on enumerated strand count")
            ->capture_default_str();
        cmd->add_flag("--paranoid", *paranoid,
                      "re-derive every diagram through the unoptimized route");
        add_common(cmd, flags);
        cmd->callback([&, n, jobs, cap, paranoid] { action = [&, n, jobs, cap, paranoid] {
            return cmd_verify_amb(*n, *jobs, *cap, *paranoid, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand(
            "solve-amb", "solve for all trace functionals on one strand");
        add_common(cmd, flags);
        cmd->callback([&] { action = [&] { return cmd_solve_amb(flags); }; });
    }
    {
        auto* cmd = app.add_subcommand("negligible", "does the morphism vanish under all traces?");
        auto text = std::make_shared<std::string>();
        auto antisym = std::make_shared<int>(0);
        cmd->add_option("morphism", *text, "morphism in text form");
        cmd->add_option("--antisym", *antisym, "test the antisymmetrizer on n strands instead");
        add_common(cmd, flags);
        cmd->callback([&, text, antisym] { action = [&, text, antisym] {
            return cmd_negligible(*text, *antisym, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand("knot", "evaluate a closed framed-knot word");
        auto path = std::make_shared<std::string>();
        auto label = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>("symbolic");
        cmd->add_option("--file", *path, "tangle word file")->required();
        cmd->add_option("--label", *label, "object label a,b")->required();
        cmd->add_option("--q", *q, "value for q: a nonzero rational, or \"symbolic\"")
            ->capture_default_str();
        add_common(cmd, flags, /*with_t=*/false);
        cmd->callback([&, path, label, q] { action = [&, path, label, q] {
            return cmd_knot(*path, *label, *q, flags); }; });
    }
    {
        auto* cmd = app.add_subcommand("oracle-check", "replay the calculus inside matrices");
        auto dimension = std::make_shared<int>(4);
        auto samples = std::make_shared<int>(50);
        auto seed = std::make_shared<std::uint64_t>(0x5eed5eedULL);
        cmd->add_option("--t", *dimension, "matrix color count (also the value of t)")
            ->capture_default_str();
        cmd->add_option("--samples", *samples, "random three-strand pairs")
            ->capture_default_str();
        cmd->add_option("--seed", *seed, "random seed")->capture_default_str();
        add_common(cmd, flags, /*with_t=*/false);
        cmd->callback([&, dimension, samples, seed] { action = [&, dimension, samples, seed] {
            return cmd_oracle(*dimension, *samples, *seed, flags); }; });
    }

    try {
        app.parse(argc, argv);
        if (action)
            ret = action();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return ret;
}

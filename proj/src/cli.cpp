#include "orbitkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hash_util.hpp"
#include "orbitkit/cycles.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/lifepoly.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/turing.hpp"

namespace orbitkit::cli {

namespace {

// Key-value report. Everything except the trailing wall-time line is a pure
// function of the inputs and seed.
class Report {
public:
    Report(std::ostream& out, const std::vector<std::string>& args) : out_(out), start_(Clock::now()) {
        std::string echo;
        for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
        out_ << "command=" << echo << '\n';
    }

    void input(const std::string& path, const std::string& bytes) {
        std::ostringstream h;
        h << std::hex << std::setw(16) << std::setfill('0') << detail::fnv1a64(bytes);
        out_ << "input=" << path << " fnv1a64=" << h.str() << '\n';
    }

    std::ostream& line() { return out_; }

    void finish() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        out_ << "wall_ms=" << ms << '\n';
    }

private:
    using Clock = std::chrono::steady_clock;
    std::ostream& out_;
    Clock::time_point start_;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
}

// --- life ---------------------------------------------------------------------

struct LifeArgs {
    std::string pattern;
    std::uint64_t steps = 1;
    std::string output;
    bool trace = false;
    bool show = false;
};

int life_cmd(const LifeArgs& a, Report& report, std::istream& in, std::ostream& out) {
    const std::string text = read_input(a.pattern, in);
    report.input(a.pattern, text);
    auto c = life::parse_rle(text);
    auto describe = [&](std::uint64_t gen, const life::LifeConfig& cfg) {
        const auto box = cfg.bounding_box();
        report.line() << "generation=" << gen << " population=" << cfg.population();
        if (cfg.empty()) {
            report.line() << " bbox=empty\n";
        } else {
            report.line() << " bbox=" << box.min_x << ',' << box.min_y << ',' << box.max_x << ',' << box.max_y
                          << '\n';
        }
    };
    if (a.trace) describe(0, c);
    for (std::uint64_t k = 1; k <= a.steps; ++k) {
        c = life::step(c);
        if (a.trace) describe(k, c);
    }
    if (!a.trace) describe(a.steps, c);
    if (a.show) report.line() << life::render_grid(c);
    const std::string rle = life::emit_rle(c) + "\n";
    if (a.output.empty() || a.output == "-") {
        report.line() << "output=-\n";
        write_output("", rle, out);
    } else {
        write_output(a.output, rle, out);
        report.line() << "output=" << a.output << '\n';
    }
    return kOk;
}

// --- poly ---------------------------------------------------------------------

int poly_rule_cmd(bool expanded, Report& report) {
    const auto& rule = lifepoly::local_rule();
    bool ok = true;
    std::array<BigInt, 9> values;
    for (unsigned bits = 0; bits < 512; ++bits) {
        for (unsigned i = 0; i < 9; ++i) values[i] = (bits >> i) & 1u;
        const BigInt want = lifepoly::next_state(lifepoly::pattern_from_bits(bits)) ? 1 : 0;
        BigInt factored = 0;
        for (const auto& s : rule.factored.summands) {
            BigInt t = 1;
            for (const auto& f : s.factors) t *= poly::evaluate(f, std::span<const BigInt>(values));
            factored += t;
        }
        const BigInt flat = poly::evaluate(rule.expanded, std::span<const BigInt>(values));
        if (factored != want || flat != want) ok = false;
    }
    if (expanded) {
        report.line() << "form=expanded terms=" << rule.expanded.term_count()
                      << " degree=" << rule.expanded.degree() << '\n';
        report.line() << "polynomial=" << poly::to_string(rule.expanded) << '\n';
    } else {
        report.line() << "form=factored summands=" << rule.factored.summands.size() << '\n';
        report.line() << "polynomial=" << poly::to_string(rule.factored) << '\n';
    }
    const std::array<BigInt, 9> birth{0, 1, 1, 1, 0, 0, 0, 0, 0};
    report.line() << "eval_at=0,1,1,1,0,0,0,0,0 value="
                  << poly::evaluate(rule.expanded, std::span<const BigInt>(birth)) << '\n';
    report.line() << "truth_table=" << (ok ? "ok" : "mismatch") << '\n';
    return ok ? kOk : kInternalError;
}

// --- tm -----------------------------------------------------------------------

struct TmArgs {
    std::string machine;
    std::string input;
    std::uint64_t budget = 10000;
    std::uint64_t max_steps = 100;
    std::string algorithm = "hashset";
    bool halting_fixed_point = false;
};

int tm_run_cmd(const TmArgs& a, Report& report, std::istream& in) {
    const std::string text = read_input(a.machine, in);
    report.input(a.machine, text);
    const auto m = turing::parse_tm(text);
    const auto traj = turing::trajectory(m, turing::split_word(a.input));
    std::uint64_t k = 0;
    turing::StateId last = m.start();
    auto it = traj.begin();
    for (; it != traj.end() && k <= a.max_steps; ++it, ++k) {
        report.line() << "step=" << k << ' ' << turing::format_config(m, *it) << '\n';
        last = it->state();
    }
    if (it == traj.end()) {
        report.line() << "halted=" << (last == m.accept() ? "accept" : "reject") << " steps=" << (k - 1) << '\n';
    } else {
        report.line() << "halted=unknown truncated_after=" << a.max_steps << '\n';
    }
    return kOk;
}

cycles::Algorithm parse_algorithm(const std::string& name) {
    if (name == "hashset") return cycles::Algorithm::HashSet;
    if (name == "brent") return cycles::Algorithm::Brent;
    throw Error("unknown algorithm '" + name + "' (expected hashset or brent)");
}

int tm_periodicity_cmd(const TmArgs& a, Report& report, std::istream& in) {
    const std::string text = read_input(a.machine, in);
    report.input(a.machine, text);
    const auto m = turing::parse_tm(text);
    const auto start = turing::initial_config(m, turing::split_word(a.input));
    const auto algo = parse_algorithm(a.algorithm);
    std::uint64_t calls = 0;
    cycles::Options opt;
    opt.halting_is_fixed_point = a.halting_fixed_point;
    opt.step_calls = &calls;
    auto step = [&m](const turing::Configuration& c) -> std::optional<turing::Configuration> {
        auto r = turing::tm_step(m, c);
        if (auto* next = std::get_if<turing::Configuration>(&r)) return std::move(*next);
        return std::nullopt;
    };
    const auto v = cycles::detect<turing::Configuration>(algo, step, start, a.budget, opt);
    report.line() << cycles::report_line(v) << '\n';
    report.line() << "algorithm=" << a.algorithm << " step_calls=" << calls << '\n';
    return kOk;
}

// --- orbit --------------------------------------------------------------------

struct OrbitArgs {
    std::string point;
    std::string encode;
    std::vector<std::int64_t> translate;
    std::vector<std::string> maps;
    std::uint64_t max_steps = 10000;
    std::uint64_t max_points = 100000;
    std::uint64_t max_depth = 10000;
    bool closure = false;
    std::string algorithm = "hashset";
};

int orbit_cmd(const OrbitArgs& a, Report& report, std::istream& in) {
    SparsePoint x;
    if (!a.encode.empty()) {
        const std::string text = read_input(a.encode, in);
        report.input(a.encode, text);
        auto c = life::parse_rle(text);
        if (!a.translate.empty()) c = c.translated(a.translate.at(0), a.translate.at(1));
        try {
            x = lifepoly::encode(c);
        } catch (const lifepoly::OutOfQuadrant& e) {
            throw Error(std::string(e.what()) + "; use --translate DX DY to move the pattern into the quadrant");
        }
        report.line() << "encoded_cells=" << c.population()
                      << " quadrant_safe=" << (lifepoly::quadrant_safe(c) ? "true" : "false") << '\n';
    } else {
        const std::string text = read_input(a.point, in);
        report.input(a.point, text);
        x = parse_point(text);
    }

    std::vector<PolyMapDesc> maps;
    for (const auto& m : a.maps) {
        if (m == "gol") {
            maps.emplace_back(lifepoly::build_gol_map());
        } else {
            const std::string text = read_input(m, in);
            report.input(m, text);
            maps.emplace_back(parse_component_map(text));
        }
    }

    if (maps.size() == 1 && !a.closure) {
        const auto v = orbit::is_stable_singleton(maps[0], x, a.max_steps, parse_algorithm(a.algorithm));
        report.line() << orbit::report_line(v) << '\n';
    } else {
        const auto v = orbit::orbit_closure(orbit::GeneratorSet(std::move(maps)), x, a.max_points, a.max_depth);
        report.line() << orbit::report_line(v) << '\n';
    }
    return kOk;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::uint64_t trials = 1000;
    int size = 16;
    double density = 0.3;
    std::uint64_t seed = 1;
};

int verify_cmd(const VerifyArgs& a, Report& report) {
    if (a.size < 1) throw Error("--size must be positive");
    if (a.density < 0.0 || a.density > 1.0) throw Error("--density must lie in [0, 1]");
    const auto s = verify_commuting_square(lifepoly::build_gol_map(), a.trials, a.size, a.density, a.seed);
    report.line() << "seed=" << a.seed << " size=" << a.size << " density=" << a.density << '\n';
    report.line() << "trials=" << s.trials << " passed=" << (s.trials - s.failures) << " failures=" << s.failures
                  << '\n';
    if (s.failures) report.line() << "first_failure=" << s.first_failure << '\n';
    return s.failures ? kInternalError : kOk;
}

}  // namespace

life::LifeConfig random_soup(std::mt19937_64& rng, int size, double density, std::int64_t offset_x,
                             std::int64_t offset_y) {
    life::LifeConfig c;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            // 53-bit uniform in [0, 1), independent of the library's distributions.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) c.insert({offset_x + x, offset_y + y});
        }
    return c;
}

VerifySummary verify_commuting_square(const GridRuleMap& map, std::uint64_t trials, int size, double density,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VerifySummary s;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto ox = static_cast<std::int64_t>(1 + rng() % 8);
        const auto oy = static_cast<std::int64_t>(1 + rng() % 8);
        const auto c = random_soup(rng, size, density, ox, oy);
        ++s.trials;
        bool ok = false;
        if (lifepoly::quadrant_safe(c)) {
            try {
                ok = lifepoly::decode(orbitkit::apply(map, lifepoly::encode(c))) == life::step(c);
            } catch (const Error&) {
                ok = false;
            }
        }
        if (!ok) {
            if (s.failures == 0) s.first_failure = "trial " + std::to_string(t);
            ++s.failures;
        }
    }
    return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Game of Life, Turing machines and polynomial orbits", "orbitkit"};
    app.require_subcommand(1);

    LifeArgs life_args;
    auto* life_cmd_app = app.add_subcommand("life", "Game of Life on Z^2");
    life_cmd_app->require_subcommand(1);
    auto* life_step = life_cmd_app->add_subcommand("step", "advance one generation");
    auto* life_run = life_cmd_app->add_subcommand("run", "advance several generations");
    for (auto* sub : {life_step, life_run}) {
        sub->add_option("pattern", life_args.pattern, "RLE file, - for stdin")->required();
        sub->add_option("-o,--output", life_args.output, "write the evolved RLE here");
        sub->add_flag("--trace", life_args.trace, "population and bounding box per generation");
        sub->add_flag("--show", life_args.show, "print the final grid");
    }
    life_run->add_option("--steps", life_args.steps, "generations")->required();

    bool expanded = false;
    auto* poly_app = app.add_subcommand("poly", "polynomial form of the Life rule");
    poly_app->require_subcommand(1);
    auto* poly_rule = poly_app->add_subcommand("rule", "print the local rule polynomial");
    poly_rule->add_flag("--expanded", expanded, "canonical expanded form instead of the pattern sum");

    TmArgs tm_args;
    auto* tm_app = app.add_subcommand("tm", "Turing machines");
    tm_app->require_subcommand(1);
    auto* tm_run = tm_app->add_subcommand("run", "print the trajectory");
    auto* tm_per = tm_app->add_subcommand("periodicity", "search for a revisited configuration");
    for (auto* sub : {tm_run, tm_per}) {
        sub->add_option("machine", tm_args.machine, "machine description, - for stdin")->required();
        sub->add_option("--input", tm_args.input, "input word");
    }
    tm_run->add_option("--max-steps", tm_args.max_steps, "trajectory length bound");
    tm_per->add_option("--budget", tm_args.budget, "trajectory horizon");
    tm_per->add_option("--algorithm", tm_args.algorithm, "hashset or brent");
    tm_per->add_flag("--halting-as-fixed-point", tm_args.halting_fixed_point,
                     "report a halt after n steps as periodic with preperiod n and period 1");

    OrbitArgs orbit_args;
    auto* orbit_app = app.add_subcommand("orbit", "orbit finiteness under polynomial maps");
    orbit_app->require_subcommand(1);
    auto* orbit_check = orbit_app->add_subcommand("check", "semi-decide S-stability of a point");
    auto* point_opt = orbit_check->add_option("--point", orbit_args.point, "sparse point file");
    auto* encode_opt = orbit_check->add_option("--encode", orbit_args.encode, "RLE pattern to encode");
    point_opt->excludes(encode_opt);
    orbit_check->add_option("--translate", orbit_args.translate, "shift the pattern by DX DY before encoding")
        ->expected(2)
        ->needs(encode_opt);
    orbit_check->add_option("--map", orbit_args.maps, "gol or a component-map file; repeat for several")
        ->required();
    orbit_check->add_option("--max-steps", orbit_args.max_steps, "trajectory horizon for a single map");
    orbit_check->add_option("--max-points", orbit_args.max_points, "orbit size bound for closure");
    orbit_check->add_option("--max-depth", orbit_args.max_depth, "expansion rounds for closure");
    orbit_check->add_flag("--closure", orbit_args.closure, "breadth-first closure even for a single map");
    orbit_check->add_option("--algorithm", orbit_args.algorithm, "hashset or brent");

    VerifyArgs verify_args;
    auto* verify_app = app.add_subcommand("verify", "check the polynomial map against the Life engine");
    verify_app->add_option("--trials", verify_args.trials);
    verify_app->add_option("--size", verify_args.size);
    verify_app->add_option("--density", verify_args.density);
    verify_app->add_option("--seed", verify_args.seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    if (orbit_check->parsed() && orbit_args.point.empty() && orbit_args.encode.empty()) {
        err << "orbit check: one of --point or --encode is required\n";
        return kInputError;
    }

    try {
        Report report(out, args);
        int status = kOk;
        if (life_step->parsed()) {
            life_args.steps = 1;
            status = life_cmd(life_args, report, in, out);
        } else if (life_run->parsed()) {
            status = life_cmd(life_args, report, in, out);
        } else if (poly_rule->parsed()) {
            status = poly_rule_cmd(expanded, report);
        } else if (tm_run->parsed()) {
            status = tm_run_cmd(tm_args, report, in);
        } else if (tm_per->parsed()) {
            status = tm_periodicity_cmd(tm_args, report, in);
        } else if (orbit_check->parsed()) {
            status = orbit_cmd(orbit_args, report, in);
        } else if (verify_app->parsed()) {
            status = verify_cmd(verify_args, report);
        }
        report.finish();
        return status;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace orbitkit::cli

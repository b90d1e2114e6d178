#include <doctest.h>

#include <sstream>

#include "orbitkit/cli.hpp"
#include "orbitkit/lifepoly.hpp"

using namespace orbitkit;

namespace {

const std::string kData = ORBITKIT_DATA_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string without_wall_time(const std::string& report) {
    std::istringstream in(report);
    std::string line, body;
    while (std::getline(in, line))
        if (line.rfind("wall_ms=", 0) != 0) body += line + '\n';
    return body;
}

bool has_line(const std::string& report, const std::string& line) {
    std::istringstream in(report);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

// Everything after the `output=-` marker up to the wall-time line.
std::string emitted_rle(const std::string& report) {
    const auto start = report.find("output=-\n");
    const auto end = report.find("wall_ms=");
    REQUIRE(start != std::string::npos);
    return report.substr(start + 9, end - start - 9);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("life run returns the blinker after two generations") {
    const auto r = run({"life", "run", kData + "/patterns/blinker.rle", "--steps", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("command=life run", 0) == 0);
    CHECK(r.out.find("fnv1a64=") != std::string::npos);
    CHECK(life::parse_rle(emitted_rle(r.out)) == life::parse_rle("#CXRLE Pos=4,4\nx = 3, y = 1\n3o!"));
}

TEST_CASE("life step from stdin, four times, translates the glider") {
    std::string pattern = "x = 3, y = 3\nbob$2bo$3o!";
    const auto original = life::parse_rle(pattern);
    for (int k = 0; k < 4; ++k) {
        const auto r = run({"life", "step", "-"}, pattern);
        REQUIRE(r.code == cli::kOk);
        pattern = emitted_rle(r.out);
    }
    CHECK(life::parse_rle(pattern) == original.translated(1, 1));
}

TEST_CASE("reports are deterministic apart from wall time") {
    const std::vector<std::vector<std::string>> commands{
        {"life", "run", kData + "/patterns/toad.rle", "--steps", "5", "--trace"},
        {"tm", "periodicity", kData + "/machines/looper.tm"},
        {"orbit", "check", "--encode", kData + "/patterns/blinker.rle", "--map", "gol"},
        {"verify", "--trials", "20", "--seed", "9"},
    };
    for (const auto& c : commands) {
        const auto a = run(c), b = run(c);
        CHECK(a.code == cli::kOk);
        CHECK(without_wall_time(a.out) == without_wall_time(b.out));
        CHECK(a.out.find("wall_ms=") != std::string::npos);
    }
}

TEST_CASE("orbit check verdicts") {
    auto verdict = [](std::vector<std::string> args) {
        const auto r = run(args);
        CHECK(r.code == cli::kOk);
        return r.out;
    };
    CHECK(has_line(verdict({"orbit", "check", "--encode", kData + "/patterns/block.rle", "--map", "gol"}),
                   "verdict=stable orbit_size=1 preperiod=0 period=1"));
    CHECK(has_line(verdict({"orbit", "check", "--encode", kData + "/patterns/blinker.rle", "--map", "gol"}),
                   "verdict=stable orbit_size=2 preperiod=0 period=2"));
    CHECK(has_line(verdict({"orbit", "check", "--encode", kData + "/patterns/toad.rle", "--map", "gol", "--algorithm",
                            "brent"}),
                   "verdict=stable orbit_size=2 preperiod=0 period=2"));
    CHECK(has_line(verdict({"orbit", "check", "--encode", kData + "/patterns/glider.rle", "--map", "gol",
                            "--max-steps", "1000"}),
                   "verdict=unknown points=1001 limit=max_steps"));
    CHECK(has_line(verdict({"orbit", "check", "--point", kData + "/points/five.pt", "--map",
                            kData + "/maps/negate.map", "--map", kData + "/maps/identity.map"}),
                   "verdict=stable orbit_size=2"));
    CHECK(has_line(verdict({"orbit", "check", "--point", kData + "/points/five.pt", "--map",
                            kData + "/maps/increment.map", "--max-steps", "500"}),
                   "verdict=unknown points=501 limit=max_steps"));
    CHECK(has_line(verdict({"orbit", "check", "--encode", kData + "/patterns/block.rle", "--translate", "3", "3",
                            "--map", "gol", "--closure"}),
                   "verdict=stable orbit_size=1"));
}

TEST_CASE("tm verdicts") {
    CHECK(has_line(run({"tm", "periodicity", kData + "/machines/looper.tm"}).out, "verdict=periodic preperiod=0 period=1"));
    CHECK(has_line(run({"tm", "periodicity", kData + "/machines/right_mover.tm", "--budget", "300"}).out,
                   "verdict=exhausted budget=300"));
    CHECK(has_line(run({"tm", "periodicity", kData + "/machines/right_mover.tm", "--budget", "300", "--algorithm",
                        "brent"})
                       .out,
                   "verdict=exhausted budget=300"));
    CHECK(has_line(run({"tm", "periodicity", kData + "/machines/accept_on_start.tm"}).out,
                   "verdict=terminated steps=0"));
    CHECK(has_line(run({"tm", "periodicity", kData + "/machines/accept_on_start.tm", "--halting-as-fixed-point"}).out,
                   "verdict=periodic preperiod=0 period=1"));
    const auto r = run({"tm", "run", kData + "/machines/parity.tm", "--input", "aa"});
    CHECK(has_line(r.out, "step=0 q=even head=0 tape=a@0,a@1"));
    CHECK(has_line(r.out, "halted=accept steps=3"));
}

TEST_CASE("poly rule") {
    const auto r = run({"poly", "rule"});
    CHECK(r.code == cli::kOk);
    CHECK(has_line(r.out, "truth_table=ok"));
    CHECK(has_line(r.out, "eval_at=0,1,1,1,0,0,0,0,0 value=1"));
    const auto e = run({"poly", "rule", "--expanded"});
    CHECK(has_line(e.out, "truth_table=ok"));
}

TEST_CASE("verify") {
    const auto zero = run({"verify", "--trials", "0"});
    CHECK(zero.code == cli::kOk);
    CHECK(has_line(zero.out, "trials=0 passed=0 failures=0"));
    const auto some = run({"verify", "--trials", "50", "--seed", "3"});
    CHECK(some.code == cli::kOk);
    CHECK(has_line(some.out, "trials=50 passed=50 failures=0"));
}

TEST_CASE("a rule missing one pattern fails the commuting square") {
    const auto& rule = lifepoly::local_rule();
    // drop the first birth pattern
    poly::SumOfProducts broken = rule.factored;
    broken.summands.erase(broken.summands.begin());
    const GridRuleMap bad(broken.expand(), lifepoly::cantor_pairing());
    const auto summary = cli::verify_commuting_square(bad, 200, 16, 0.3, 1);
    CHECK(summary.trials == 200);
    CHECK(summary.failures > 0);
    CHECK_FALSE(summary.first_failure.empty());
    CHECK(cli::verify_commuting_square(lifepoly::build_gol_map(), 200, 16, 0.3, 1).failures == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"life", "step", kData + "/patterns/missing.rle"}).code == cli::kInputError);
    CHECK(run({"life", "step", "-"}, "no header here").code == cli::kInputError);
    CHECK(run({"tm", "run", "-"}, "states: q\n").code == cli::kInputError);
    CHECK(run({"orbit", "check", "--point", kData + "/points/five.pt"}).code == cli::kInputError);
    CHECK(run({"orbit", "check", "--encode", kData + "/patterns/glider.rle", "--translate", "-10", "0", "--map", "gol"})
              .code == cli::kInputError);
    CHECK(run({"verify", "--trials", "abc"}).code == cli::kInputError);
    const auto e = run({"tm", "run", kData + "/machines/parity.tm", "--input", "b"});
    CHECK(e.code == cli::kInputError);
    CHECK_FALSE(e.err.empty());
}

}  // TEST_SUITE

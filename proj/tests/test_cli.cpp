#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "revlatch/cli.hpp"

using namespace revlatch;

namespace {

struct CliRun {
    int status = 0;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_netlist(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

size_t count_lines(const std::string& text) {
    size_t n = 0;
    for (char ch : text)
        if (ch == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("gate table SG prints 16 rows") {
    CliRun r = cli({"gate", "table", "SG"});
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 17); // header + 16 rows

    // row for input 1010, ignoring column padding
    std::string squeezed;
    for (char ch : r.out)
        if (!isspace(static_cast<unsigned char>(ch)))
            squeezed.push_back(ch);
    CHECK(squeezed.find("1010|1110") != std::string::npos);
}

TEST_CASE("gate verify and nand") {
    CliRun verify = cli({"gate", "verify", "FRG"});
    CHECK(verify.status == 0);
    CHECK(verify.out.find("bijective") != std::string::npos);

    CliRun nand = cli({"gate", "nand", "SG"});
    CHECK(nand.status == 0);
    CHECK(nand.out.find("NAND") != std::string::npos);

    CliRun inverse = cli({"gate", "inverse", "FG"});
    CHECK(inverse.status == 0);

    CliRun unknown = cli({"gate", "table", "ZZZ"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("ZZZ") != std::string::npos);

    CliRun not_4x4 = cli({"gate", "nand", "FG"});
    CHECK(not_4x4.status == 1);
}

TEST_CASE("gate --gates loads custom definitions") {
    const auto path = temp_netlist("revlatch_cli_gates.json");
    {
        std::ofstream out(path);
        out << R"({"gates_custom": [
                {"name": "CSWAP", "arity": 3,
                 "outputs": ["A", "NOT A AND B XOR A AND C", "NOT A AND C XOR A AND B"]}
            ]})";
    }
    CliRun table = cli({"gate", "table", "CSWAP", "--gates", path.string()});
    CHECK(table.status == 0);
    CHECK(count_lines(table.out) == 9);

    CliRun verify = cli({"gate", "verify", "CSWAP", "--gates", path.string()});
    CHECK(verify.status == 0);
    CHECK(verify.out.find("bijective") != std::string::npos);

    // a non-reversible definition is rejected at load
    {
        std::ofstream out(path);
        out << R"({"gates_custom": [{"name": "BAD", "arity": 2, "outputs": ["A", "A*B"]}]})";
    }
    CliRun bad = cli({"gate", "table", "BAD", "--gates", path.string()});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("not reversible") != std::string::npos);

    std::filesystem::remove(path);
}

TEST_CASE("circuit builtin, validate, metrics") {
    const auto path = temp_netlist("revlatch_cli_d_qq.json");
    CliRun emit = cli({"circuit", "builtin", "d-latch-qq", "-o", path.string()});
    REQUIRE(emit.status == 0);

    CliRun valid = cli({"circuit", "validate", path.string()});
    CHECK(valid.status == 0);
    CHECK(valid.out.find("valid") != std::string::npos);

    CliRun metrics = cli({"circuit", "metrics", path.string()});
    CHECK(metrics.status == 0);
    CHECK(metrics.out.find("gates: 2") != std::string::npos);
    CHECK(metrics.out.find("garbage outputs: 2") != std::string::npos);
    CHECK(metrics.out.find("delay: 2") != std::string::npos);
    CHECK(metrics.out.find("5a+6b+4d") != std::string::npos);

    CliRun json = cli({"circuit", "metrics", path.string(), "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"gates\": 2") != std::string::npos);

    CliRun strict = cli({"circuit", "metrics", path.string(), "--convention", "strict"});
    CHECK(strict.status == 0);
    CliRun bad_conv = cli({"circuit", "metrics", path.string(), "--convention", "loose"});
    CHECK(bad_conv.status == 1);

    std::filesystem::remove(path);
    CliRun missing = cli({"circuit", "validate", path.string()});
    CHECK(missing.status == 1);
}

TEST_CASE("circuit metrics on the JK latch reproduces the published triple") {
    const auto path = temp_netlist("revlatch_cli_jk_qq.json");
    REQUIRE(cli({"circuit", "builtin", "jk-latch-qq", "-o", path.string()}).status == 0);
    CliRun metrics = cli({"circuit", "metrics", path.string(), "--convention", "paper"});
    CHECK(metrics.status == 0);
    CHECK(metrics.out.find("7a+10b+7d") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("simulate: characteristic checks and traces") {
    const auto path = temp_netlist("revlatch_cli_d_q.json");
    REQUIRE(cli({"circuit", "builtin", "d-latch-q", "-o", path.string()}).status == 0);

    CliRun holds = cli({"simulate", path.string(), "--check", "D*E + !E*Q"});
    CHECK(holds.status == 0);
    CHECK(holds.out.find("holds (8/8)") != std::string::npos);

    CliRun fails = cli({"simulate", path.string(), "--check", "D"});
    CHECK(fails.status == 2);
    CHECK(fails.out.find("counterexample") != std::string::npos);
    CHECK(fails.out.find("E=0 D=1 Q=0") != std::string::npos);

    CliRun trace = cli({"simulate", path.string(), "--init", "Q=0", "--inputs",
                        "E=1,D=1;E=0,D=0"});
    CHECK(trace.status == 0);
    REQUIRE(count_lines(trace.out) == 2);
    CHECK(trace.out.find("\"state_after\":{\"Q\":1}") != std::string::npos);

    CliRun bad_symbol = cli({"simulate", path.string(), "--check", "X*E"});
    CHECK(bad_symbol.status == 1);

    CliRun nothing = cli({"simulate", path.string()});
    CHECK(nothing.status == 1);

    // no implicit power-on state: --init is mandatory for stateful circuits
    CliRun no_init = cli({"simulate", path.string(), "--inputs", "E=1,D=1"});
    CHECK(no_init.status == 1);

    std::filesystem::remove(path);
}

TEST_CASE("reproduce: all five tables") {
    for (const char* id : {"I", "II", "III", "IV", "V"}) {
        CAPTURE(id);
        CliRun r = cli({"reproduce", id});
        CHECK(r.status == 0);
    }

    CliRun ii = cli({"reproduce", "II"});
    CHECK(ii.out.find("match") != std::string::npos);

    // the D-latch hardware row is annotated, not failed
    CliRun iii = cli({"reproduce", "III"});
    CHECK(iii.status == 0);
    CHECK(iii.out.find("annotated") != std::string::npos);
    CHECK(iii.out.find("5a+6b+4d") != std::string::npos);
    CHECK(iii.out.find("5a+6b+3d") != std::string::npos);

    CliRun v_json = cli({"reproduce", "V", "--json"});
    CHECK(v_json.status == 0);
    CHECK(v_json.out.find("\"paper\"") != std::string::npos);

    CliRun bad = cli({"reproduce", "VI"});
    CHECK(bad.status == 1);
}

TEST_CASE("reproduce output is byte-stable") {
    for (const char* id : {"I", "II", "III", "IV", "V"}) {
        CAPTURE(id);
        CliRun a = cli({"reproduce", id});
        CliRun b = cli({"reproduce", id});
        CHECK(a.out == b.out);
        CliRun aj = cli({"reproduce", id, "--json"});
        CliRun bj = cli({"reproduce", id, "--json"});
        CHECK(aj.out == bj.out);
    }
}

TEST_CASE("search: verdict-to-exit-status contract") {
    CliRun found = cli({"search", "--target", "d-latch-q", "--max-gates", "1"});
    CHECK(found.status == 0);
    CHECK(found.out.find("min gates = 1") != std::string::npos);

    CliRun step = cli({"search", "--target", "d-latch-qq", "--max-gates", "1"});
    CHECK(step.status == 0); // exhausted below the claim is consistent
    CHECK(step.out.find("exhausted") != std::string::npos);

    CliRun jk = cli({"search", "--target", "jk-latch-q", "--max-gates", "1",
                     "--allow-complemented", "true"});
    CHECK(jk.status == 0);
    CHECK(jk.out.find("exhausted") != std::string::npos);

    CliRun capacity = cli({"search", "--target", "d-latch-q", "--max-gates", "4"});
    CHECK(capacity.status == 3);

    CliRun json = cli({"search", "--target", "d-latch-q", "--max-gates", "1", "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"verdict\": \"found\"") != std::string::npos);

    CliRun bad_target = cli({"search", "--target", "t-latch", "--max-gates", "1"});
    CHECK(bad_target.status == 1);

    CliRun bad_lib = cli({"search", "--target", "d-latch-q", "--max-gates", "1",
                          "--library", "FG,XYZ"});
    CHECK(bad_lib.status == 1);
}

TEST_CASE("REVLATCH_MAX_LINES controls the search line capacity") {
    setenv("REVLATCH_MAX_LINES", "nonsense", 1);
    CliRun bad = cli({"search", "--target", "d-latch-q", "--max-gates", "1"});
    CHECK(bad.status == 1);

    setenv("REVLATCH_MAX_LINES", "8", 1);
    CliRun wide = cli({"search", "--target", "d-latch-q", "--max-gates", "1"});
    CHECK(wide.status == 0);
    CHECK(wide.out.find("max_lines=8") != std::string::npos);
    unsetenv("REVLATCH_MAX_LINES");
}

TEST_CASE("usage errors exit 1") {
    CHECK(cli({}).status == 1);
    CHECK(cli({"frobnicate"}).status == 1);
    CHECK(cli({"circuit", "builtin", "d-latch-q", "--bogus"}).status == 1);
    CHECK(cli({"--help"}).status == 0);
}

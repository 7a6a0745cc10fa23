#include "doctest.h"

#include <algorithm>

#include "revlatch/builders.hpp"
#include "revlatch/errors.hpp"
#include "revlatch/metrics.hpp"
#include "revlatch/reference_tables.hpp"

using namespace revlatch;

namespace {

GateRef gate(const char* name) { return Library::builtins().find(name); }

/// Independent delay oracle: walk every line-to-primary path explicitly.
int delay_by_path_enumeration(const Circuit& c) {
    int best = 0;
    // longest continuation starting AT gate i (counting gate i)
    std::function<void(int, int)> walk = [&](int i, int depth) {
        const GateInstance& g = c.gates()[static_cast<size_t>(i)];
        for (const Disposition& d : g.outputs) {
            if (d.kind == Disposition::Kind::primary)
                best = std::max(best, depth);
            else if (d.kind == Disposition::Kind::consumed)
                walk(d.instance, depth + 1);
        }
    };
    for (int i = 0; i < static_cast<int>(c.gates().size()); ++i) {
        for (const Driver& d : c.gates()[static_cast<size_t>(i)].inputs)
            if (d.kind == Driver::Kind::line)
                walk(i, 1);
    }
    return best;
}

Circuit lone_fg(Disposition first, Disposition second) {
    Circuit c;
    c.add_line(Line{"a", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"b", LineRole::primary_input, std::nullopt});
    c.add_gate(gate("FG"), {Driver::from_line("a"), Driver::from_line("b")},
               {std::move(first), std::move(second)});
    return c;
}

} // namespace

TEST_CASE("builder cost triples match the published tables") {
    struct Row {
        const char* builder;
        int gates, garbage, delay;
    };
    const Row rows[] = {
        {"d-latch-q", 1, 2, 1},
        {"d-latch-qq", 2, 2, 2},
        {"jk-latch-q", 2, 3, 2},
        {"jk-latch-qq", 3, 3, 3},
    };
    for (const Row& r : rows) {
        CAPTURE(r.builder);
        Circuit c = build_named_latch(r.builder);
        CHECK(gate_count(c) == r.gates);
        CHECK(garbage_count(c) == r.garbage);
        CHECK(delay(c) == r.delay);
    }
}

TEST_CASE("empty circuit costs nothing") {
    Circuit empty;
    CHECK(gate_count(empty) == 0);
    CHECK(garbage_count(empty) == 0);
    CHECK(delay(empty) == 0);
    CHECK(hw_complexity(empty) == OpCounts{0, 0, 0});
}

TEST_CASE("single FG delay is 1; parallel gates do not add up") {
    Circuit one = lone_fg(Disposition::primary("p"), Disposition::primary("x"));
    CHECK(delay(one) == 1);

    Circuit parallel;
    parallel.add_line(Line{"a", LineRole::primary_input, std::nullopt});
    parallel.add_line(Line{"b", LineRole::primary_input, std::nullopt});
    parallel.add_line(Line{"c", LineRole::primary_input, std::nullopt});
    parallel.add_line(Line{"d", LineRole::primary_input, std::nullopt});
    parallel.add_gate(gate("FG"), {Driver::from_line("a"), Driver::from_line("b")},
                      {Disposition::primary("p"), Disposition::garbage()});
    parallel.add_gate(gate("FG"), {Driver::from_line("c"), Driver::from_line("d")},
                      {Disposition::primary("q"), Disposition::garbage()});
    CHECK(delay(parallel) == 1);
}

TEST_CASE("garbage marks, not feedback, count as garbage") {
    CHECK(garbage_count(lone_fg(Disposition::primary("p"), Disposition::primary("x"))) == 0);
    CHECK(garbage_count(lone_fg(Disposition::garbage(), Disposition::primary("x"))) == 1);
}

TEST_CASE("constant inputs are counted when consumed") {
    CHECK(constant_input_count(build_named_latch("d-latch-q")) == 1);
    CHECK(constant_input_count(build_named_latch("d-latch-qq")) == 2);
    CHECK(constant_input_count(build_named_latch("jk-latch-q")) == 1);
    CHECK(constant_input_count(build_named_latch("jk-latch-qq")) == 2);
}

TEST_CASE("hardware complexity of the builders") {
    CHECK(hw_complexity(d_latch_q()) == OpCounts{5, 6, 3});
    CHECK(hw_complexity(d_latch_qq()) == OpCounts{5, 6, 4});
    CHECK(hw_complexity(jk_latch_q()) == OpCounts{7, 10, 6});
    CHECK(hw_complexity(jk_latch_qq()) == OpCounts{7, 10, 7});

    // the two conventions price identically; they differ in report notes
    for (const std::string& name : latch_builder_names()) {
        Circuit c = build_named_latch(name);
        CHECK(hw_complexity(c, HwConvention::strict) == hw_complexity(c, HwConvention::paper));
    }
}

TEST_CASE("FG is priced by usage") {
    // constant-1 control: inverter, 1 delta
    Circuit inv;
    inv.add_line(Line{"a", LineRole::primary_input, std::nullopt});
    inv.add_line(Line{"one", LineRole::constant_one, std::nullopt});
    inv.add_gate(gate("FG"), {Driver::from_line("a"), Driver::from_line("one")},
                 {Disposition::garbage(), Disposition::primary("x")});
    CHECK(hw_complexity(inv) == OpCounts{0, 0, 1});

    // constant-0 control: free copy
    Circuit copy;
    copy.add_line(Line{"a", LineRole::primary_input, std::nullopt});
    copy.add_line(Line{"z", LineRole::constant_zero, std::nullopt});
    copy.add_gate(gate("FG"), {Driver::from_line("a"), Driver::from_line("z")},
                  {Disposition::primary("x"), Disposition::primary("y")});
    CHECK(hw_complexity(copy) == OpCounts{0, 0, 0});

    // both inputs live: one XOR
    CHECK(hw_complexity(lone_fg(Disposition::garbage(), Disposition::primary("x"))) ==
          OpCounts{1, 0, 0});
}

TEST_CASE("delay paths may start at constant lines") {
    Circuit c;
    c.add_line(Line{"z", LineRole::constant_zero, std::nullopt});
    c.add_gate(gate("NOT"), {Driver::from_line("z")}, {Disposition::primary("x")});
    CHECK(delay(c) == 1);
    CHECK(delay_by_path_enumeration(c) == 1);
}

TEST_CASE("delay: dynamic program equals path enumeration on the builders") {
    for (const std::string& name : latch_builder_names()) {
        Circuit c = build_named_latch(name);
        CHECK(delay(c) == delay_by_path_enumeration(c));
    }
}

TEST_CASE("delay never exceeds gate count; cascades meet it") {
    for (const std::string& name : latch_builder_names()) {
        Circuit c = build_named_latch(name);
        CHECK(delay(c) <= gate_count(c));
        CHECK(delay(c) == gate_count(c)); // each builder is a pure cascade
    }
}

TEST_CASE("compare_report: tables match") {
    ComparisonReport ii = compare_report(build_named_latch("d-latch-q"), "II");
    CHECK(ii.all_match());
    for (const CompareLine& l : ii.lines)
        CHECK(l.match);
    REQUIRE(ii.prior.size() == 1);
    CHECK(ii.prior[0].gates == 2);

    ComparisonReport v = compare_report(build_named_latch("jk-latch-qq"), "V");
    CHECK(v.all_match());
    REQUIRE(v.prior.size() == 2);
    CHECK(v.prior[0].gates == 4);
    CHECK(v.prior[0].garbage == 3);
    CHECK(v.prior[0].delay == 4);
    CHECK(v.prior[1].gates == 10);
    CHECK(v.prior[1].garbage == 12);
    CHECK(v.prior[1].delay == 10);

    // the JK hardware row matches outright
    bool saw_hw = false;
    for (const CompareLine& l : v.lines) {
        if (l.metric == "hardware complexity") {
            saw_hw = true;
            CHECK(l.match);
            CHECK(l.computed == "7a+10b+7d");
        }
    }
    CHECK(saw_hw);
}

TEST_CASE("compare_report: the D-latch hardware delta is annotated, not failed") {
    ComparisonReport iii = compare_report(build_named_latch("d-latch-qq"), "III");
    CHECK(iii.all_match());
    bool saw_hw = false;
    for (const CompareLine& l : iii.lines) {
        if (l.metric == "hardware complexity") {
            saw_hw = true;
            CHECK_FALSE(l.match);
            CHECK(l.annotated);
            CHECK(l.computed == "5a+6b+4d");
            CHECK(l.claimed == "5a+6b+3d");
            CHECK_FALSE(l.note.empty());
        }
    }
    CHECK(saw_hw);
    CHECK(iii.render_text().find("annotated") != std::string::npos);
    CHECK(iii.render_json().find("\"match\": false") != std::string::npos);

    // prior hardware triple rides along
    REQUIRE(iii.prior_hw.size() == 1);
    CHECK(iii.prior_hw[0].second == OpCounts{4, 8, 4});
}

TEST_CASE("compare_report: mismatches are loud") {
    // wrong circuit against table II
    ComparisonReport r = compare_report(build_named_latch("jk-latch-qq"), "II");
    CHECK_FALSE(r.all_match());
    CHECK(r.render_text().find("MISMATCH") != std::string::npos);
}

TEST_CASE("unknown table id") {
    CHECK_THROWS_AS(compare_report(d_latch_q(), "VI"), InputError);
    CHECK_THROWS_AS(cost_table("X"), InputError);
}

TEST_CASE("hw_complexity is additive over instances") {
    // d_latch_qq = d_latch_q plus one FG-as-inverter
    OpCounts lhs = hw_complexity(d_latch_qq());
    OpCounts rhs = hw_complexity(d_latch_q()) + OpCounts{0, 0, 1};
    CHECK(lhs == rhs);
    // jk_latch_qq = jk_latch_q plus one FG-as-inverter
    CHECK(hw_complexity(jk_latch_qq()) == hw_complexity(jk_latch_q()) + OpCounts{0, 0, 1});
}

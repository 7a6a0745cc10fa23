#include "doctest.h"

#include "revlatch/errors.hpp"
#include "revlatch/gate.hpp"
#include "revlatch/reference_tables.hpp"

using namespace revlatch;

namespace {

GateRef gate(const char* name) {
    GateRef g = Library::builtins().find(name);
    REQUIRE(g);
    return g;
}

// Hand oracle for the Peres gate, written from its defining equations.
BitVector peres_by_hand(bool a, bool b, bool c) {
    return BitVector{a, a != b, (a && b) != c};
}

} // namespace

TEST_CASE("SG truth table matches the reference, bit for bit") {
    TruthTable t = truth_table(*gate("SG"));
    REQUIRE(t.rows.size() == 16);
    const auto& reference = sg_reference_rows();
    for (unsigned i = 0; i < 16; ++i) {
        CAPTURE(i);
        CHECK(t.rows[i].to_index() == reference[i]);
    }
}

TEST_CASE("eval_gate: published examples") {
    CHECK(eval_gate(*gate("FG"), BitVector{1, 1}) == BitVector{1, 0});
    CHECK(eval_gate(*gate("SG"), BitVector{1, 0, 1, 0}) == BitVector{1, 1, 1, 0});
    CHECK(eval_gate(*gate("TG"), BitVector{1, 1, 0}) == BitVector{1, 1, 1});

    // A=0 turns the Fredkin gate into the identity on B, C
    for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= 1; ++c)
            CHECK(eval_gate(*gate("FRG"), BitVector{0, b, c}) == BitVector{0, b, c});
}

TEST_CASE("truth_table: NOT and a hand-checked PG row") {
    TruthTable n = truth_table(*gate("NOT"));
    CHECK(n.rows == std::vector<BitVector>{BitVector{1}, BitVector{0}});

    TruthTable pg = truth_table(*gate("PG"));
    CHECK(pg.rows[0b111] == BitVector{1, 0, 0});
    for (unsigned i = 0; i < 8; ++i) {
        BitVector in = BitVector::from_index(i, 3);
        CHECK(pg.rows[i] == peres_by_hand(in.bit(0), in.bit(1), in.bit(2)));
    }
}

TEST_CASE("every built-in gate is bijective") {
    for (const GateRef& g : Library::builtins().gates()) {
        CAPTURE(g->name());
        CHECK(check_bijective(truth_table(*g)).bijective);
    }
}

TEST_CASE("collision witness on a raw non-bijective table") {
    TruthTable bad;
    bad.arity = 1;
    bad.rows = {BitVector{0}, BitVector{0}};
    BijectionVerdict v = check_bijective(bad);
    CHECK_FALSE(v.bijective);
    CHECK(v.collision == std::make_pair(0u, 1u));
}

TEST_CASE("inverse tables compose to the identity") {
    for (const GateRef& g : Library::builtins().gates()) {
        CAPTURE(g->name());
        TruthTable forward = truth_table(*g);
        TruthTable inverse = inverse_gate(*g);
        for (unsigned i = 0; i < forward.rows.size(); ++i)
            CHECK(inverse.rows[forward.rows[i].to_index()].to_index() == i);
    }
}

TEST_CASE("FG and NOT are involutions") {
    CHECK(inverse_gate(*gate("FG")) == truth_table(*gate("FG")));
    CHECK(inverse_gate(*gate("NOT")) == truth_table(*gate("NOT")));
}

TEST_CASE("SG with C=0, D=1 computes NAND at output 4") {
    NandVerdict v = check_nand_universality(*gate("SG"));
    CHECK(v.is_nand);

    // the two endpoint rows, spelled out
    CHECK(eval_gate(*gate("SG"), BitVector{1, 1, 0, 1}).bit(3) == false);
    CHECK(eval_gate(*gate("SG"), BitVector{0, 0, 0, 1}).bit(3) == true);

    CHECK_THROWS_AS(check_nand_universality(*gate("FRG")), InputError);
    CHECK_THROWS_AS(check_nand_universality(*gate("SG"), {{4, false}}), InputError);
}

TEST_CASE("SG structure: outputs 2 and 3 differ exactly by D") {
    GateRef sg = gate("SG");
    for (unsigned i = 0; i < 16; ++i) {
        BitVector in = BitVector::from_index(i, 4);
        BitVector out = sg->eval(in);
        CHECK(out.bit(2) == (out.bit(1) != in.bit(3)));
        if (!in.bit(3))
            CHECK(out.bit(1) == out.bit(2));
    }
}

TEST_CASE("1-through: output 1 copies input A") {
    for (const char* name : {"FG", "TG", "FRG", "PG", "SG"}) {
        GateRef g = gate(name);
        for (unsigned i = 0; i < (1u << g->arity()); ++i) {
            BitVector in = BitVector::from_index(i, g->arity());
            CHECK(g->eval(in).bit(0) == in.bit(0));
        }
    }
}

TEST_CASE("PG agrees with FG on outputs 1,2 and with TG on output 3") {
    GateRef pg = gate("PG"), fg = gate("FG"), tg = gate("TG");
    for (unsigned i = 0; i < 8; ++i) {
        BitVector in = BitVector::from_index(i, 3);
        BitVector out = pg->eval(in);
        BitVector fg_out = fg->eval(BitVector{in.bit(0), in.bit(1)});
        CHECK(out.bit(0) == fg_out.bit(0));
        CHECK(out.bit(1) == fg_out.bit(1));
        CHECK(out.bit(2) == tg->eval(in).bit(2));
    }
}

TEST_CASE("per-gate complexity entries") {
    CHECK(gate("SG")->complexity() == OpCounts{5, 6, 3});
    CHECK(gate("FRG")->complexity() == OpCounts{2, 4, 2});
    CHECK(gate("TG")->complexity() == OpCounts{1, 1, 0});
    CHECK(gate("PG")->complexity() == OpCounts{2, 1, 0});
    CHECK(gate("FG")->complexity() == OpCounts{1, 0, 0});
    CHECK(gate("NOT")->complexity() == OpCounts{0, 0, 1});
}

TEST_CASE("gate construction errors") {
    CHECK_THROWS_AS(eval_gate(*gate("SG"), BitVector{1, 0}), InputError);
    CHECK_THROWS_AS(truth_table(*gate("SG"), 3), CapacityError);
    CHECK_THROWS_AS(GateSpec::create("X", 9, std::vector<std::string>(9, "A")), CapacityError);
    CHECK_THROWS_AS(GateSpec::create("X", 2, std::vector<std::string>{"A"}), InputError);
    CHECK_THROWS_AS(GateSpec::create("X", 2, std::vector<std::string>{"A", "C"}), InputError);
    // A*B is not injective
    CHECK_THROWS_AS(GateSpec::create("X", 2, std::vector<std::string>{"A", "A*B"}), InputError);
}

TEST_CASE("user-defined gates join the library") {
    Library lib = Library::builtins();
    lib.add(GateSpec::create("SWAP", 2, std::vector<std::string>{"B", "A"}));
    GateRef swap = lib.find("SWAP");
    REQUIRE(swap);
    CHECK(eval_gate(*swap, BitVector{1, 0}) == BitVector{0, 1});
    CHECK(check_bijective(truth_table(*swap)).bijective);
    CHECK_THROWS_AS(lib.add(GateSpec::create("FG", 2, std::vector<std::string>{"A", "A^B"})),
                    InputError);
}

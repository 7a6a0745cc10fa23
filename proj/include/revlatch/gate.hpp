#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revlatch/bits.hpp"
#include "revlatch/expr.hpp"

namespace revlatch {

/// Gates wider than this are rejected (tables of 256 rows at most).
inline constexpr int max_gate_arity = 8;

/// Full enumeration of a k-input gate: rows[i] is the output pattern for
/// input pattern i, with input A read as the most significant bit of i.
struct TruthTable {
    int arity = 0;
    std::vector<BitVector> rows;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// A named k x k reversible gate defined by one boolean expression per
/// output over the input symbols A..H. Construction verifies that the
/// induced map on {0,1}^k is a bijection. Immutable once created.
class GateSpec {
  public:
    /// Throws InputError if the shape is wrong or the map is not a bijection;
    /// throws CapacityError if arity exceeds max_gate_arity.
    static GateSpec create(std::string name, int arity, std::vector<Expr> outputs);

    /// Convenience overload parsing each output expression.
    static GateSpec create(std::string name, int arity,
                           const std::vector<std::string>& output_exprs);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    const std::vector<Expr>& outputs() const { return outputs_; }

    /// Naive per-output operation counts of the defining expressions,
    /// each output counted on its own (no subexpression sharing).
    const OpCounts& complexity() const { return complexity_; }

    /// Output pattern for one input pattern, straight off the expressions.
    BitVector eval(const BitVector& input) const;

    /// Permuted output pattern as a row index (precomputed table).
    unsigned map_index(unsigned input_index) const {
        return table_[input_index];
    }

    bool operator==(const GateSpec& other) const;

  private:
    GateSpec() = default;

    std::string name_;
    int arity_ = 0;
    std::vector<Expr> outputs_;
    OpCounts complexity_;
    std::vector<unsigned> table_; // input index -> output index
};

using GateRef = std::shared_ptr<const GateSpec>;

/// Named collection of gate specs. Starts from the built-in set
/// {NOT, FG, TG, FRG, PG, SG}; user gates can be added on top.
class Library {
  public:
    /// The built-in gates of the toolkit.
    static const Library& builtins();

    Library() = default;

    GateRef find(std::string_view name) const;

    /// Throws InputError on duplicate names.
    void add(GateSpec gate);

    const std::vector<GateRef>& gates() const { return gates_; }

  private:
    std::vector<GateRef> gates_;
};

/// Evaluates one gate on one input vector; throws InputError on arity
/// mismatch.
BitVector eval_gate(const GateSpec& gate, const BitVector& input);

/// Enumerates all 2^k rows. Throws CapacityError if arity > max_arity.
TruthTable truth_table(const GateSpec& gate, int max_arity = max_gate_arity);

/// Outcome of a distinctness check over truth-table rows.
struct BijectionVerdict {
    bool bijective = false;
    /// Two input indices mapping to the same output, when not bijective.
    std::optional<std::pair<unsigned, unsigned>> collision;
};

/// True iff all rows are pairwise distinct (a permutation of the patterns).
BijectionVerdict check_bijective(const TruthTable& table);

/// Inverse permutation table; throws InputError if the gate's table is not
/// a bijection (unreachable for GateSpec-backed tables, which are checked).
TruthTable inverse_gate(const GateSpec& gate);

TruthTable invert_table(const TruthTable& table);

/// Outcome of the two-input-universality check on a 4x4 gate.
struct NandVerdict {
    bool is_nand = false;
    std::string detail; // first failing (A,B) case, when any
};

/// With the given constant bindings (defaults C=0, D=1) the 4th output must
/// equal NAND(A, B) on all four free assignments.
/// `const_bindings` maps input port index -> bit; throws InputError for
/// out-of-range ports or non-4x4 gates.
NandVerdict check_nand_universality(const GateSpec& gate,
                                    const std::vector<std::pair<int, bool>>& const_bindings = {
                                        {2, false},
                                        {3, true}});

} // namespace revlatch

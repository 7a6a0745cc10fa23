#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revlatch/circuit.hpp"
#include "revlatch/expr.hpp"

namespace revlatch {

/// Hard cap on exhaustive search depth.
inline constexpr int max_search_gates = 3;
/// Default cap on line records per candidate (REVLATCH_MAX_LINES at the CLI).
inline constexpr int default_line_capacity = 6;

/// What a candidate circuit must compute. required_outputs[0] is the
/// next-state equation of the single feedback state; further entries are
/// additional primary outputs (the complement, for the two-output latches).
struct TargetSpec {
    std::string name;
    std::vector<std::string> input_names;
    std::vector<std::string> state_names;
    std::vector<Expr> required_outputs;
    std::vector<std::string> output_names;
    bool allow_complemented_inputs = false;
    bool allow_constants = true;
    /// Published gate count, when the target corresponds to a built-in
    /// design; drives the CLI verdict.
    std::optional<int> claimed_min_gates;
};

/// Built-in targets: d-latch-q, d-latch-qq, jk-latch-q, jk-latch-qq.
/// JK targets allow complemented inputs by default, D targets do not.
TargetSpec builtin_target(std::string_view name);
const std::vector<std::string>& builtin_target_names();

struct SearchBounds {
    int max_gates = 1;
    int max_lines = default_line_capacity;
};

struct SearchResult {
    enum class Verdict { found, exhausted };
    Verdict verdict = Verdict::exhausted;
    int min_gates = -1;              // set when found
    std::optional<Circuit> witness;  // set when found
    uint64_t explored = 0;           // complete gate wirings examined
    SearchBounds bounds;
    double wall_seconds = 0.0;
};

/// Yields every valid fan-out-free candidate with up to bounds.max_gates
/// gates from `library`: input ports bound to fresh primary-input lines
/// (each symbol at most once plain, at most once complemented when
/// allowed), fresh constant lines, earlier unconsumed outputs, or the
/// feedback target of each state; one feedback arc per state; exactly
/// |required_outputs| primary outputs. Construction is canonical, so no
/// two yielded circuits coincide under line renaming. The visitor returns
/// false to stop. Throws CapacityError when the bounds exceed
/// (max_search_gates, line_capacity).
void enumerate_candidates(const TargetSpec& target, const std::vector<GateRef>& library,
                          SearchBounds bounds, const std::function<bool(const Circuit&)>& visit,
                          int line_capacity = default_line_capacity);

/// True iff on every assignment of the target's inputs and state the
/// candidate's next state matches required_outputs[0] and each primary
/// output matches its required function.
bool realizes(const Circuit& candidate, const TargetSpec& target);

/// Smallest gate count within bounds admitting a realizing candidate,
/// with a verified witness, or proof of exhaustion. Behaviorally
/// equivalent partial wirings are explored once (circuits whose open
/// output ports compute identical function multisets admit identical
/// completions), which keeps multi-gate searches tractable without
/// affecting the verdict.
SearchResult min_gates(const TargetSpec& target, const std::vector<GateRef>& library,
                       SearchBounds bounds, int line_capacity = default_line_capacity);

/// JSON rendering of a search outcome with the witness netlist embedded.
std::string search_result_json(const SearchResult& result, const TargetSpec& target);

} // namespace revlatch

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revlatch/circuit.hpp"
#include "revlatch/expr.hpp"

namespace revlatch {

using Binding = std::map<std::string, bool>;

/// One bit per feedback state name.
struct LatchState {
    Binding values;

    friend bool operator==(const LatchState&, const LatchState&) = default;
};

struct EvalResult {
    Binding outputs;
    LatchState next_state;
    /// port_values[i][p] = value of gate i's output port p.
    std::vector<std::vector<bool>> port_values;
};

/// Single topological evaluation pass. Feedback targets read from `state`;
/// the returned next_state reads the feedback source ports. `inputs` must
/// bind exactly the circuit's input symbols (a complemented line sees the
/// inverse of its base symbol's binding). Throws InputError on missing or
/// unknown bindings.
EvalResult eval_combinational(const Circuit& circuit, const Binding& inputs,
                              const LatchState& state);

/// One level-sensitive input event: evaluate once, return the next state.
LatchState step(const Circuit& circuit, const Binding& inputs, const LatchState& state);

struct SimStep {
    Binding inputs;
    LatchState state_before;
    Binding outputs;
    LatchState state_after;
};

struct SimTrace {
    std::vector<SimStep> steps;
    /// Indices of events whose state did not reach a one-step fixpoint
    /// (cannot happen for the built-in latches; reported for user circuits).
    std::vector<size_t> unstable_steps;
};

/// Folds step over the events; errors are rethrown with the event index.
SimTrace simulate_sequence(const Circuit& circuit, const std::vector<Binding>& input_events,
                           const LatchState& initial);

/// Assignment enumeration order: bit j (least significant) of the index is
/// the value of symbol j in [input_symbols..., state_names...].
struct CharacteristicVerdict {
    bool holds = false;
    unsigned assignments = 0;
    std::optional<Binding> counterexample; // lowest-index failure
    std::string message;
};

/// Exhaustively compares the next state against `equation` over all input
/// and state assignments. The circuit must have exactly one feedback state;
/// the equation may reference input symbols and state names only.
CharacteristicVerdict check_characteristic(const Circuit& circuit, const Expr& equation);

struct ComplementVerdict {
    bool complementary = false;
    std::optional<Binding> counterexample;
    std::string message;
};

/// True iff the circuit's two primary outputs differ on every assignment.
/// Throws InputError unless the circuit has exactly two primary outputs.
ComplementVerdict check_complementarity(const Circuit& circuit);

/// Truth masks of every primary output (in declaration order) followed by
/// every next-state bit (in state order), over the assignment enumeration
/// above. Circuits with equal signatures are behaviorally interchangeable
/// for a target with matching symbol order.
std::vector<uint64_t> behavior_signature(const Circuit& circuit);

} // namespace revlatch

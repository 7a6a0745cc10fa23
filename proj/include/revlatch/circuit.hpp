#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revlatch/gate.hpp"

namespace revlatch {

enum class LineRole { primary_input, constant_zero, constant_one, internal };

std::string_view to_string(LineRole role);
std::optional<LineRole> line_role_from_string(std::string_view s);

/// A named wire entering the circuit. A primary input may carry the
/// complement of another symbol (complement_of set), in which case its
/// simulated value is the inverse of that symbol's binding.
struct Line {
    std::string id;
    LineRole role = LineRole::primary_input;
    std::optional<std::string> complement_of;

    friend bool operator==(const Line&, const Line&) = default;
};

/// Source feeding one gate input port.
struct Driver {
    enum class Kind { line, gate_output, feedback };

    Kind kind = Kind::line;
    std::string name; // line id | feedback state name
    int instance = -1;
    int port = -1;

    static Driver from_line(std::string id) {
        Driver d;
        d.kind = Kind::line;
        d.name = std::move(id);
        return d;
    }
    static Driver from_output(int instance, int port) {
        Driver d;
        d.kind = Kind::gate_output;
        d.instance = instance;
        d.port = port;
        return d;
    }
    static Driver from_feedback(std::string state) {
        Driver d;
        d.kind = Kind::feedback;
        d.name = std::move(state);
        return d;
    }

    friend bool operator==(const Driver&, const Driver&) = default;
};

/// The single use of one gate output port.
struct Disposition {
    enum class Kind { garbage, primary, feedback, consumed };

    Kind kind = Kind::garbage;
    std::string name; // primary output name | feedback state name
    int instance = -1; // consumed: consumer gate
    int port = -1;     // consumed: consumer input port

    static Disposition garbage() { return Disposition{}; }
    static Disposition primary(std::string name) {
        Disposition d;
        d.kind = Kind::primary;
        d.name = std::move(name);
        return d;
    }
    static Disposition feedback(std::string state) {
        Disposition d;
        d.kind = Kind::feedback;
        d.name = std::move(state);
        return d;
    }
    static Disposition consumed_by(int instance, int port) {
        Disposition d;
        d.kind = Kind::consumed;
        d.instance = instance;
        d.port = port;
        return d;
    }

    friend bool operator==(const Disposition&, const Disposition&) = default;
};

struct GateInstance {
    GateRef gate;
    std::vector<Driver> inputs;
    std::vector<Disposition> outputs;
};

bool operator==(const GateInstance& a, const GateInstance& b);

/// One bit of sequential state: a gate output wired back to a gate input
/// that may precede it in evaluation order.
struct FeedbackArc {
    int source_instance = -1;
    int source_port = -1;
    int target_instance = -1;
    int target_port = -1;
    std::string state;

    friend bool operator==(const FeedbackArc&, const FeedbackArc&) = default;
};

/// Identifies one gate output port.
struct PortRef {
    int instance = -1;
    int port = -1;

    friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct PrimaryOutput {
    std::string name;
    PortRef source;
};

/// Fan-out-free netlist of reversible gate instances over named lines.
/// Gates are stored in evaluation (topological) order; feedback arcs are
/// the only backward edges and are represented by paired feedback marks on
/// the source output port and the target input port.
class Circuit {
  public:
    void add_line(Line line) { lines_.push_back(std::move(line)); }

    /// Appends a gate instance; returns its index. Shape errors throw
    /// InputError; structural rule violations are left to validate().
    int add_gate(GateRef gate, std::vector<Driver> inputs, std::vector<Disposition> outputs);

    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<GateInstance>& gates() const { return gates_; }

    const Line* find_line(std::string_view id) const;

    /// Feedback arcs derived from the port marks, ordered by state's first
    /// appearance on a source port.
    std::vector<FeedbackArc> feedbacks() const;

    /// Distinct input symbols in order of line declaration; a line with
    /// complement_of contributes the complemented symbol.
    std::vector<std::string> input_symbols() const;

    /// Feedback state names in order of first appearance.
    std::vector<std::string> state_names() const;

    /// Named outputs in (instance, port) order.
    std::vector<PrimaryOutput> primary_outputs() const;

    bool operator==(const Circuit& other) const;

  private:
    std::vector<Line> lines_;
    std::vector<GateInstance> gates_;
};

/// Diagnostic codes for structural rule violations.
enum class Diag {
    ok,
    fan_out_violation,   // one driver feeds two consumers
    dangling_port,       // mirror of a consumed/driver link is absent or wrong
    arity_mismatch,      // binding counts differ from gate arity
    cyclic_order,        // forward reference not routed through a feedback arc
    unknown_line,        // driver names an undeclared line
    duplicate_line,      // two lines share an id
    bad_line_role,       // internal line used as a driver, or bad complement_of
    duplicate_primary,   // two primary outputs share a name
    feedback_mismatch,   // state with missing/duplicate source or target mark
};

std::string_view to_string(Diag code);

struct ValidationResult {
    bool ok = true;
    Diag code = Diag::ok;
    std::string message;
};

/// Checks every structural invariant: single driver per input, single
/// consumer per driver, one disposition per output with consistent mirror
/// links, topological gate order, and one source plus one target per
/// feedback state. Returns the first violation found.
ValidationResult validate(const Circuit& circuit);

} // namespace revlatch

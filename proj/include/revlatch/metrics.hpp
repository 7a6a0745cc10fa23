#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revlatch/circuit.hpp"
#include "revlatch/expr.hpp"

namespace revlatch {

/// Reporting convention for hardware complexity. Both conventions charge
/// complemented primary inputs and FG-as-inverter 1 delta each, so the
/// computed triples are identical; the name only selects which footnotes a
/// comparison report attaches (see the reference tables).
enum class HwConvention { strict, paper };

HwConvention hw_convention_from_string(std::string_view s);

/// Cost summary of one circuit.
struct CostReport {
    int gate_count = 0;
    int garbage_count = 0;
    int constant_inputs = 0;
    int delay = 0;
    OpCounts hw;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

int gate_count(const Circuit& circuit);

/// Output ports marked garbage; feedback sources are not garbage.
int garbage_count(const Circuit& circuit);

/// Constant lines consumed by some gate input.
int constant_input_count(const Circuit& circuit);

/// Longest gate path from any line (primary or constant) to any primary
/// output, one unit per gate. Feedback arcs do not extend paths.
int delay(const Circuit& circuit);

/// Sum of per-gate operation counts, each output expression counted on its
/// own. FG is charged by usage: fed a constant 1 it is an inverter (1
/// delta), fed a constant 0 it is a free copy, otherwise 1 alpha. Every
/// consumed complemented input line adds 1 delta.
OpCounts hw_complexity(const Circuit& circuit, HwConvention convention = HwConvention::paper);

CostReport cost_report(const Circuit& circuit, HwConvention convention = HwConvention::paper);

/// One reference cost row: a design name with its published
/// (gates, garbage, delay) triple.
struct ReferenceEntry {
    std::string design;
    int gates = 0;
    int garbage = 0;
    int delay = 0;
};

/// A published comparison table: the claimed costs of the design this
/// toolkit builds plus the prior designs it was measured against.
struct CostTableRef {
    std::string id;
    std::string title;
    std::string builder; // build_named_latch name of the subject design
    ReferenceEntry claimed;
    std::vector<ReferenceEntry> prior;
};

/// Published hardware-complexity triples attached to a builder, with an
/// optional annotation where the claimed value is known to disagree with
/// the counting rule.
struct HwReference {
    std::string builder;
    OpCounts claimed;
    std::vector<std::pair<std::string, OpCounts>> prior;
    std::string annotation; // empty when the claim matches the rule
};

/// One computed-vs-claimed comparison line.
struct CompareLine {
    std::string metric;
    std::string computed;
    std::string claimed;
    bool match = false;
    bool annotated = false; // known discrepancy, documented not failing
    std::string note;
};

struct ComparisonReport {
    std::string table_id;
    std::string title;
    std::string design;
    std::vector<CompareLine> lines;
    std::vector<ReferenceEntry> prior;
    std::vector<std::pair<std::string, OpCounts>> prior_hw;

    /// True when every line matches or carries a documented annotation.
    bool all_match() const;

    std::string render_text() const;
    /// Machine-readable form: array of {design, metric, computed, paper,
    /// match} objects, serialized.
    std::string render_json() const;
};

/// Compares a circuit's computed costs against a reference table; attaches
/// the hardware-complexity comparison when the table has one on file.
ComparisonReport compare_report(const Circuit& circuit, const CostTableRef& reference,
                                HwConvention convention = HwConvention::paper);

/// Convenience lookup by table id (II..V). Throws InputError on unknown id.
ComparisonReport compare_report(const Circuit& circuit, std::string_view table_id,
                                HwConvention convention = HwConvention::paper);

} // namespace revlatch

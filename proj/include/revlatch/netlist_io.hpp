#pragma once

#include <string>
#include <string_view>

#include "revlatch/circuit.hpp"

namespace revlatch {

/// Renders a circuit as the netlist JSON document (UTF-8, 2-space indent).
///
/// Document shape:
///   {
///     "gates_custom": [{"name", "arity", "outputs": ["expr", ...]}, ...],
///     "lines":     [{"id", "role", "complement_of"?}, ...],
///     "instances": [{"gate", "inputs": [ref...], "outputs": [ref...]}, ...],
///     "feedbacks": [{"source": "out:i:p", "target": "in:j:q", "state"}, ...]
///   }
/// Input refs: "line:<id>" | "out:<instance>:<port>" | "feedback:<state>".
/// Output refs: "garbage" | "primary:<name>" | "feedback:<state>" |
/// "out:<instance>:<port>" (the consuming gate input) | "line:<id>" (an
/// internal line consumed by a later "line:<id>" input ref).
/// gates_custom is omitted when only built-in gates appear.
std::string serialize(const Circuit& circuit);

struct ParsedNetlist {
    Circuit circuit;
    /// Built-ins plus every gates_custom entry, whether instantiated or not.
    Library library;
};

/// Parses a netlist document. Unknown fields, unknown gate names, malformed
/// refs and inconsistent feedback records are InputErrors naming the
/// offending element. Internal-line wiring is resolved to direct
/// gate-to-gate links, so the result never contains internal lines. Every
/// top-level field may be omitted (a gate-library file carries only
/// gates_custom).
ParsedNetlist parse_document(std::string_view text);

/// The circuit alone.
Circuit parse(std::string_view text);

} // namespace revlatch

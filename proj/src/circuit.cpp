#include "revlatch/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "revlatch/errors.hpp"

namespace revlatch {

std::string_view to_string(LineRole role) {
    switch (role) {
    case LineRole::primary_input: return "primary_input";
    case LineRole::constant_zero: return "constant_zero";
    case LineRole::constant_one: return "constant_one";
    case LineRole::internal: return "internal";
    }
    return "?";
}

std::optional<LineRole> line_role_from_string(std::string_view s) {
    if (s == "primary_input") return LineRole::primary_input;
    if (s == "constant_zero") return LineRole::constant_zero;
    if (s == "constant_one") return LineRole::constant_one;
    if (s == "internal") return LineRole::internal;
    return std::nullopt;
}

bool operator==(const GateInstance& a, const GateInstance& b) {
    if (a.inputs != b.inputs || a.outputs != b.outputs)
        return false;
    if (a.gate == b.gate)
        return true;
    return a.gate && b.gate && *a.gate == *b.gate;
}

int Circuit::add_gate(GateRef gate, std::vector<Driver> inputs,
                      std::vector<Disposition> outputs) {
    if (!gate)
        throw InputError("circuit: gate reference must not be null");
    if (inputs.size() != static_cast<size_t>(gate->arity()) ||
        outputs.size() != static_cast<size_t>(gate->arity()))
        throw InputError("circuit: instance of '" + gate->name() + "' needs exactly " +
                         std::to_string(gate->arity()) + " input and output bindings");
    gates_.push_back(GateInstance{std::move(gate), std::move(inputs), std::move(outputs)});
    return static_cast<int>(gates_.size()) - 1;
}

const Line* Circuit::find_line(std::string_view id) const {
    for (const Line& l : lines_)
        if (l.id == id)
            return &l;
    return nullptr;
}

std::vector<FeedbackArc> Circuit::feedbacks() const {
    std::vector<FeedbackArc> arcs;
    for (int i = 0; i < static_cast<int>(gates_.size()); ++i) {
        const GateInstance& g = gates_[static_cast<size_t>(i)];
        for (int p = 0; p < static_cast<int>(g.outputs.size()); ++p) {
            const Disposition& d = g.outputs[static_cast<size_t>(p)];
            if (d.kind != Disposition::Kind::feedback)
                continue;
            FeedbackArc arc;
            arc.source_instance = i;
            arc.source_port = p;
            arc.state = d.name;
            for (int j = 0; j < static_cast<int>(gates_.size()); ++j) {
                const GateInstance& h = gates_[static_cast<size_t>(j)];
                for (int q = 0; q < static_cast<int>(h.inputs.size()); ++q) {
                    const Driver& drv = h.inputs[static_cast<size_t>(q)];
                    if (drv.kind == Driver::Kind::feedback && drv.name == d.name) {
                        arc.target_instance = j;
                        arc.target_port = q;
                    }
                }
            }
            arcs.push_back(std::move(arc));
        }
    }
    return arcs;
}

std::vector<std::string> Circuit::input_symbols() const {
    std::vector<std::string> symbols;
    for (const Line& l : lines_) {
        if (l.role != LineRole::primary_input)
            continue;
        const std::string& sym = l.complement_of ? *l.complement_of : l.id;
        if (std::find(symbols.begin(), symbols.end(), sym) == symbols.end())
            symbols.push_back(sym);
    }
    return symbols;
}

std::vector<std::string> Circuit::state_names() const {
    std::vector<std::string> names;
    for (const GateInstance& g : gates_) {
        for (const Disposition& d : g.outputs) {
            if (d.kind == Disposition::Kind::feedback &&
                std::find(names.begin(), names.end(), d.name) == names.end())
                names.push_back(d.name);
        }
    }
    return names;
}

std::vector<PrimaryOutput> Circuit::primary_outputs() const {
    std::vector<PrimaryOutput> outs;
    for (int i = 0; i < static_cast<int>(gates_.size()); ++i) {
        const GateInstance& g = gates_[static_cast<size_t>(i)];
        for (int p = 0; p < static_cast<int>(g.outputs.size()); ++p) {
            const Disposition& d = g.outputs[static_cast<size_t>(p)];
            if (d.kind == Disposition::Kind::primary)
                outs.push_back(PrimaryOutput{d.name, PortRef{i, p}});
        }
    }
    return outs;
}

bool Circuit::operator==(const Circuit& other) const {
    return lines_ == other.lines_ && gates_ == other.gates_;
}

std::string_view to_string(Diag code) {
    switch (code) {
    case Diag::ok: return "ok";
    case Diag::fan_out_violation: return "fan_out_violation";
    case Diag::dangling_port: return "dangling_port";
    case Diag::arity_mismatch: return "arity_mismatch";
    case Diag::cyclic_order: return "cyclic_order";
    case Diag::unknown_line: return "unknown_line";
    case Diag::duplicate_line: return "duplicate_line";
    case Diag::bad_line_role: return "bad_line_role";
    case Diag::duplicate_primary: return "duplicate_primary";
    case Diag::feedback_mismatch: return "feedback_mismatch";
    }
    return "?";
}

namespace {

ValidationResult fail(Diag code, std::string message) {
    return ValidationResult{false, code, std::move(message)};
}

std::string port_name(int instance, int port) {
    return "gate #" + std::to_string(instance) + " port " + std::to_string(port + 1);
}

} // namespace

ValidationResult validate(const Circuit& circuit) {
    const auto& lines = circuit.lines();
    const auto& gates = circuit.gates();

    std::set<std::string> line_ids;
    for (const Line& l : lines) {
        if (!line_ids.insert(l.id).second)
            return fail(Diag::duplicate_line, "two lines named '" + l.id + "'");
        if (l.complement_of && l.role != LineRole::primary_input)
            return fail(Diag::bad_line_role,
                        "line '" + l.id + "': complement_of requires a primary input");
        if (l.complement_of && *l.complement_of == l.id)
            return fail(Diag::bad_line_role,
                        "line '" + l.id + "' cannot be its own complement");
    }

    // Any plain primary input doubling as some complement's base symbol is
    // fine; two complements of the same symbol are fan-out of that symbol.
    std::set<std::string> complemented;
    for (const Line& l : lines) {
        if (l.complement_of && !complemented.insert(*l.complement_of).second)
            return fail(Diag::fan_out_violation,
                        "symbol '" + *l.complement_of + "' is complemented by two lines");
    }

    std::map<std::string, int> line_consumers;
    std::map<std::pair<int, int>, int> output_consumers;
    std::map<std::string, std::pair<int, int>> feedback_targets; // state -> (inst, port)

    for (const GateInstance& g : gates) {
        for (const Driver& d : g.inputs) {
            if (d.kind == Driver::Kind::gate_output &&
                ++output_consumers[{d.instance, d.port}] > 1)
                return fail(Diag::fan_out_violation,
                            port_name(d.instance, d.port) + " drives more than one gate input");
        }
    }

    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
        const GateInstance& g = gates[static_cast<size_t>(i)];
        const int arity = g.gate->arity();
        if (static_cast<int>(g.inputs.size()) != arity ||
            static_cast<int>(g.outputs.size()) != arity)
            return fail(Diag::arity_mismatch, "gate #" + std::to_string(i) + " ('" +
                                                  g.gate->name() + "') has " +
                                                  std::to_string(g.inputs.size()) + " inputs and " +
                                                  std::to_string(g.outputs.size()) +
                                                  " outputs, arity is " + std::to_string(arity));

        for (int q = 0; q < arity; ++q) {
            const Driver& d = g.inputs[static_cast<size_t>(q)];
            switch (d.kind) {
            case Driver::Kind::line: {
                const Line* l = circuit.find_line(d.name);
                if (!l)
                    return fail(Diag::unknown_line, port_name(i, q) + " is driven by undeclared line '" +
                                                        d.name + "'");
                if (l->role == LineRole::internal)
                    return fail(Diag::bad_line_role,
                                "line '" + d.name +
                                    "' is internal; wire gate outputs directly to gate inputs");
                if (++line_consumers[d.name] > 1)
                    return fail(Diag::fan_out_violation,
                                "line '" + d.name + "' drives more than one gate input");
                break;
            }
            case Driver::Kind::gate_output: {
                if (d.instance < 0 || d.instance >= static_cast<int>(gates.size()) ||
                    d.port < 0 ||
                    d.port >= gates[static_cast<size_t>(d.instance)].gate->arity())
                    return fail(Diag::dangling_port,
                                port_name(i, q) + " is driven by nonexistent output " +
                                    port_name(d.instance, d.port));
                if (d.instance >= i)
                    return fail(Diag::cyclic_order,
                                port_name(i, q) + " is driven by " + port_name(d.instance, d.port) +
                                    ", which does not precede it; only feedback arcs may go backward");
                const Disposition& src =
                    gates[static_cast<size_t>(d.instance)].outputs[static_cast<size_t>(d.port)];
                if (src.kind != Disposition::Kind::consumed || src.instance != i || src.port != q)
                    return fail(Diag::dangling_port,
                                port_name(d.instance, d.port) + " does not record " +
                                    port_name(i, q) + " as its consumer");
                break;
            }
            case Driver::Kind::feedback: {
                auto [it, inserted] = feedback_targets.emplace(d.name, std::make_pair(i, q));
                (void)it;
                if (!inserted)
                    return fail(Diag::fan_out_violation,
                                "feedback state '" + d.name + "' feeds more than one gate input");
                break;
            }
            }
        }
    }

    std::map<std::string, std::pair<int, int>> feedback_sources;
    std::set<std::string> primary_names;
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
        const GateInstance& g = gates[static_cast<size_t>(i)];
        for (int p = 0; p < static_cast<int>(g.outputs.size()); ++p) {
            const Disposition& d = g.outputs[static_cast<size_t>(p)];
            switch (d.kind) {
            case Disposition::Kind::garbage:
                break;
            case Disposition::Kind::primary:
                if (!primary_names.insert(d.name).second)
                    return fail(Diag::duplicate_primary,
                                "two primary outputs named '" + d.name + "'");
                break;
            case Disposition::Kind::feedback: {
                auto [it, inserted] = feedback_sources.emplace(d.name, std::make_pair(i, p));
                (void)it;
                if (!inserted)
                    return fail(Diag::feedback_mismatch,
                                "feedback state '" + d.name + "' has two source ports");
                break;
            }
            case Disposition::Kind::consumed: {
                if (d.instance < 0 || d.instance >= static_cast<int>(gates.size()) ||
                    d.port < 0 ||
                    d.port >= gates[static_cast<size_t>(d.instance)].gate->arity())
                    return fail(Diag::dangling_port,
                                port_name(i, p) + " claims a nonexistent consumer " +
                                    port_name(d.instance, d.port));
                const Driver& mirror = gates[static_cast<size_t>(d.instance)]
                                           .inputs[static_cast<size_t>(d.port)];
                if (mirror.kind != Driver::Kind::gate_output || mirror.instance != i ||
                    mirror.port != p)
                    return fail(Diag::dangling_port,
                                port_name(i, p) + " claims consumer " +
                                    port_name(d.instance, d.port) +
                                    ", which is not driven by it");
                break;
            }
            }
        }
    }

    // Pair every feedback target with exactly one source and vice versa.
    for (const auto& [state, target] : feedback_targets) {
        (void)target;
        if (!feedback_sources.count(state))
            return fail(Diag::feedback_mismatch,
                        "feedback state '" + state + "' is consumed but never produced");
    }
    for (const auto& [state, source] : feedback_sources) {
        (void)source;
        if (!feedback_targets.count(state))
            return fail(Diag::feedback_mismatch,
                        "feedback state '" + state + "' is produced but never consumed");
    }

    return ValidationResult{};
}

} // namespace revlatch

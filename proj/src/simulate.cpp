#include "revlatch/simulate.hpp"

#include <algorithm>

#include "revlatch/errors.hpp"

namespace revlatch {

namespace {

void require_bindings(const Binding& given, const std::vector<std::string>& required,
                      const char* what) {
    for (const std::string& name : required) {
        if (!given.count(name))
            throw InputError(std::string(what) + " binding for '" + name + "' is missing");
    }
    for (const auto& [name, value] : given) {
        (void)value;
        if (std::find(required.begin(), required.end(), name) == required.end())
            throw InputError(std::string(what) + " binding '" + name +
                             "' does not match any symbol of the circuit");
    }
}

bool line_value(const Line& line, const Binding& inputs) {
    switch (line.role) {
    case LineRole::constant_zero: return false;
    case LineRole::constant_one: return true;
    case LineRole::primary_input:
        return line.complement_of ? !inputs.at(*line.complement_of) : inputs.at(line.id);
    case LineRole::internal:
        throw InputError("line '" + line.id + "' is internal and carries no value");
    }
    return false;
}

Binding assignment_from_index(const std::vector<std::string>& symbols, unsigned index) {
    Binding b;
    for (size_t j = 0; j < symbols.size(); ++j)
        b[symbols[j]] = ((index >> j) & 1u) != 0;
    return b;
}

} // namespace

EvalResult eval_combinational(const Circuit& circuit, const Binding& inputs,
                              const LatchState& state) {
    require_bindings(inputs, circuit.input_symbols(), "input");
    require_bindings(state.values, circuit.state_names(), "state");

    const auto& gates = circuit.gates();
    EvalResult result;
    result.port_values.resize(gates.size());

    for (size_t i = 0; i < gates.size(); ++i) {
        const GateInstance& g = gates[i];
        BitVector in = BitVector::from_index(0, g.gate->arity());
        for (int q = 0; q < g.gate->arity(); ++q) {
            const Driver& d = g.inputs[static_cast<size_t>(q)];
            bool v = false;
            switch (d.kind) {
            case Driver::Kind::line: {
                const Line* l = circuit.find_line(d.name);
                if (!l)
                    throw InputError("gate #" + std::to_string(i) + " reads undeclared line '" +
                                     d.name + "'");
                v = line_value(*l, inputs);
                break;
            }
            case Driver::Kind::gate_output:
                if (d.instance < 0 || d.instance >= static_cast<int>(i) || d.port < 0 ||
                    d.port >= static_cast<int>(result.port_values[static_cast<size_t>(
                                  d.instance)].size()))
                    throw InputError("gate #" + std::to_string(i) +
                                     " reads a port that is not evaluated yet; run validate");
                v = result.port_values[static_cast<size_t>(d.instance)]
                                      [static_cast<size_t>(d.port)];
                break;
            case Driver::Kind::feedback:
                v = state.values.at(d.name);
                break;
            }
            in.set_bit(q, v);
        }
        BitVector out = g.gate->eval(in);
        auto& values = result.port_values[i];
        values.resize(static_cast<size_t>(g.gate->arity()));
        for (int p = 0; p < g.gate->arity(); ++p)
            values[static_cast<size_t>(p)] = out.bit(p);
    }

    for (size_t i = 0; i < gates.size(); ++i) {
        const GateInstance& g = gates[i];
        for (int p = 0; p < g.gate->arity(); ++p) {
            const Disposition& d = g.outputs[static_cast<size_t>(p)];
            bool v = result.port_values[i][static_cast<size_t>(p)];
            if (d.kind == Disposition::Kind::primary)
                result.outputs[d.name] = v;
            else if (d.kind == Disposition::Kind::feedback)
                result.next_state.values[d.name] = v;
        }
    }
    return result;
}

LatchState step(const Circuit& circuit, const Binding& inputs, const LatchState& state) {
    return eval_combinational(circuit, inputs, state).next_state;
}

SimTrace simulate_sequence(const Circuit& circuit, const std::vector<Binding>& input_events,
                           const LatchState& initial) {
    SimTrace trace;
    LatchState state = initial;
    for (size_t e = 0; e < input_events.size(); ++e) {
        EvalResult r;
        try {
            r = eval_combinational(circuit, input_events[e], state);
        } catch (const InputError& err) {
            throw InputError("event " + std::to_string(e) + ": " + err.what());
        }
        trace.steps.push_back(SimStep{input_events[e], state, r.outputs, r.next_state});
        // Level-sensitive model: a held input must reach its fixpoint in one
        // evaluation. Anything else would oscillate in hardware.
        LatchState settled = step(circuit, input_events[e], r.next_state);
        if (!(settled == r.next_state))
            trace.unstable_steps.push_back(e);
        state = r.next_state;
    }
    return trace;
}

CharacteristicVerdict check_characteristic(const Circuit& circuit, const Expr& equation) {
    const std::vector<std::string> inputs = circuit.input_symbols();
    const std::vector<std::string> states = circuit.state_names();
    if (states.size() != 1)
        throw InputError("characteristic check requires exactly one feedback state, circuit has " +
                         std::to_string(states.size()));

    std::vector<std::string> symbols = inputs;
    symbols.insert(symbols.end(), states.begin(), states.end());
    for (const std::string& v : equation.variables()) {
        if (std::find(symbols.begin(), symbols.end(), v) == symbols.end())
            throw InputError("equation references unknown symbol '" + v + "'");
    }

    const unsigned total = 1u << symbols.size();
    for (unsigned index = 0; index < total; ++index) {
        Binding assignment = assignment_from_index(symbols, index);
        Binding in;
        LatchState st;
        for (const std::string& s : inputs)
            in[s] = assignment[s];
        st.values[states[0]] = assignment[states[0]];

        bool actual = step(circuit, in, st).values.at(states[0]);
        bool expected = equation.eval([&](const std::string& v) { return assignment.at(v); });
        if (actual != expected) {
            CharacteristicVerdict v;
            v.holds = false;
            v.assignments = total;
            v.counterexample = assignment;
            std::string desc;
            for (const std::string& s : symbols)
                desc += s + "=" + (assignment[s] ? "1" : "0") + " ";
            v.message = "counterexample: " + desc + "gives next " + states[0] + "=" +
                        (actual ? "1" : "0") + ", equation says " + (expected ? "1" : "0");
            return v;
        }
    }
    return CharacteristicVerdict{true, total, std::nullopt, "holds on all " +
                                                                std::to_string(total) +
                                                                " assignments"};
}

ComplementVerdict check_complementarity(const Circuit& circuit) {
    const auto primaries = circuit.primary_outputs();
    if (primaries.size() != 2)
        throw InputError("complementarity check requires exactly two primary outputs, circuit has " +
                         std::to_string(primaries.size()));

    std::vector<std::string> symbols = circuit.input_symbols();
    const std::vector<std::string> states = circuit.state_names();
    symbols.insert(symbols.end(), states.begin(), states.end());

    const unsigned total = 1u << symbols.size();
    for (unsigned index = 0; index < total; ++index) {
        Binding assignment = assignment_from_index(symbols, index);
        Binding in;
        LatchState st;
        for (const std::string& s : circuit.input_symbols())
            in[s] = assignment[s];
        for (const std::string& s : states)
            st.values[s] = assignment[s];

        Binding outs = eval_combinational(circuit, in, st).outputs;
        if (outs.at(primaries[0].name) == outs.at(primaries[1].name)) {
            ComplementVerdict v;
            v.complementary = false;
            v.counterexample = assignment;
            v.message = "outputs '" + primaries[0].name + "' and '" + primaries[1].name +
                        "' are equal on some assignment";
            return v;
        }
    }
    return ComplementVerdict{true, std::nullopt,
                             "complementary on all " + std::to_string(total) + " assignments"};
}

std::vector<uint64_t> behavior_signature(const Circuit& circuit) {
    std::vector<std::string> symbols = circuit.input_symbols();
    const std::vector<std::string> states = circuit.state_names();
    symbols.insert(symbols.end(), states.begin(), states.end());

    const auto primaries = circuit.primary_outputs();
    std::vector<uint64_t> sig(primaries.size() + states.size(), 0);

    const unsigned total = 1u << symbols.size();
    for (unsigned index = 0; index < total; ++index) {
        Binding assignment = assignment_from_index(symbols, index);
        Binding in;
        LatchState st;
        for (const std::string& s : circuit.input_symbols())
            in[s] = assignment[s];
        for (const std::string& s : states)
            st.values[s] = assignment[s];

        EvalResult r = eval_combinational(circuit, in, st);
        for (size_t o = 0; o < primaries.size(); ++o)
            if (r.outputs.at(primaries[o].name))
                sig[o] |= uint64_t{1} << index;
        for (size_t s = 0; s < states.size(); ++s)
            if (r.next_state.values.at(states[s]))
                sig[primaries.size() + s] |= uint64_t{1} << index;
    }
    return sig;
}

} // namespace revlatch

#include "revlatch/netlist_io.hpp"

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "revlatch/errors.hpp"

namespace revlatch {

namespace {

using Json = nlohmann::ordered_json;

std::string input_ref(const Driver& d) {
    switch (d.kind) {
    case Driver::Kind::line: return "line:" + d.name;
    case Driver::Kind::gate_output:
        return "out:" + std::to_string(d.instance) + ":" + std::to_string(d.port);
    case Driver::Kind::feedback: return "feedback:" + d.name;
    }
    return "";
}

std::string output_ref(const Disposition& d) {
    switch (d.kind) {
    case Disposition::Kind::garbage: return "garbage";
    case Disposition::Kind::primary: return "primary:" + d.name;
    case Disposition::Kind::feedback: return "feedback:" + d.name;
    case Disposition::Kind::consumed:
        return "out:" + std::to_string(d.instance) + ":" + std::to_string(d.port);
    }
    return "";
}

void check_fields(const Json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw InputError("netlist: unknown field '" + key + "' in " + where);
    }
}

const Json& require(const Json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw InputError("netlist: missing field '" + std::string(field) + "' in " + where);
    return *it;
}

std::string require_string(const Json& obj, const char* field, const std::string& where) {
    const Json& v = require(obj, field, where);
    if (!v.is_string())
        throw InputError("netlist: field '" + std::string(field) + "' in " + where +
                         " must be a string");
    return v.get<std::string>();
}

/// Splits "out:3:1"-style refs; returns false if the prefix differs.
bool parse_port_ref(const std::string& ref, const char* prefix, int& instance, int& port) {
    const std::string head = std::string(prefix) + ":";
    if (ref.rfind(head, 0) != 0)
        return false;
    const std::string rest = ref.substr(head.size());
    const size_t colon = rest.find(':');
    if (colon == std::string::npos)
        throw InputError("netlist: malformed ref '" + ref + "'");
    try {
        size_t used = 0;
        instance = std::stoi(rest.substr(0, colon), &used);
        if (used != colon)
            throw std::invalid_argument("");
        const std::string port_text = rest.substr(colon + 1);
        port = std::stoi(port_text, &used);
        if (used != port_text.size())
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InputError("netlist: malformed ref '" + ref + "'");
    }
    if (instance < 0 || port < 0)
        throw InputError("netlist: malformed ref '" + ref + "'");
    return true;
}

std::string tail_of(const std::string& ref, const char* prefix) {
    const std::string head = std::string(prefix) + ":";
    if (ref.rfind(head, 0) != 0)
        return "";
    std::string tail = ref.substr(head.size());
    if (tail.empty())
        throw InputError("netlist: malformed ref '" + ref + "'");
    return tail;
}

} // namespace

std::string serialize(const Circuit& circuit) {
    Json doc;

    std::vector<GateRef> customs;
    for (const GateInstance& g : circuit.gates()) {
        GateRef builtin = Library::builtins().find(g.gate->name());
        if (builtin && *builtin == *g.gate)
            continue;
        bool seen = false;
        for (const GateRef& c : customs) {
            if (c->name() == g.gate->name()) {
                if (!(*c == *g.gate))
                    throw InputError("netlist: two different gates named '" + g.gate->name() +
                                     "'");
                seen = true;
            }
        }
        if (builtin && !seen)
            throw InputError("netlist: gate '" + g.gate->name() +
                             "' conflicts with the built-in of the same name");
        if (!seen)
            customs.push_back(g.gate);
    }
    if (!customs.empty()) {
        Json arr = Json::array();
        for (const GateRef& g : customs) {
            Json entry;
            entry["name"] = g->name();
            entry["arity"] = g->arity();
            Json outs = Json::array();
            for (const Expr& e : g->outputs())
                outs.push_back(e.to_string());
            entry["outputs"] = std::move(outs);
            arr.push_back(std::move(entry));
        }
        doc["gates_custom"] = std::move(arr);
    }

    Json lines = Json::array();
    for (const Line& l : circuit.lines()) {
        Json entry;
        entry["id"] = l.id;
        entry["role"] = std::string(to_string(l.role));
        if (l.complement_of)
            entry["complement_of"] = *l.complement_of;
        lines.push_back(std::move(entry));
    }
    doc["lines"] = std::move(lines);

    Json instances = Json::array();
    for (const GateInstance& g : circuit.gates()) {
        Json entry;
        entry["gate"] = g.gate->name();
        Json ins = Json::array();
        for (const Driver& d : g.inputs)
            ins.push_back(input_ref(d));
        Json outs = Json::array();
        for (const Disposition& d : g.outputs)
            outs.push_back(output_ref(d));
        entry["inputs"] = std::move(ins);
        entry["outputs"] = std::move(outs);
        instances.push_back(std::move(entry));
    }
    doc["instances"] = std::move(instances);

    Json feedbacks = Json::array();
    for (const FeedbackArc& arc : circuit.feedbacks()) {
        Json entry;
        entry["source"] =
            "out:" + std::to_string(arc.source_instance) + ":" + std::to_string(arc.source_port);
        entry["target"] =
            "in:" + std::to_string(arc.target_instance) + ":" + std::to_string(arc.target_port);
        entry["state"] = arc.state;
        feedbacks.push_back(std::move(entry));
    }
    doc["feedbacks"] = std::move(feedbacks);

    return doc.dump(2) + "\n";
}

ParsedNetlist parse_document(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("netlist: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("netlist: document must be a JSON object");
    check_fields(doc, {"gates_custom", "lines", "instances", "feedbacks"}, "document");

    Library library = Library::builtins();
    if (doc.contains("gates_custom")) {
        const Json& arr = doc["gates_custom"];
        if (!arr.is_array())
            throw InputError("netlist: gates_custom must be an array");
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "gates_custom[" + std::to_string(i) + "]";
            const Json& entry = arr[i];
            if (!entry.is_object())
                throw InputError("netlist: " + where + " must be an object");
            check_fields(entry, {"name", "arity", "outputs"}, where);
            const std::string name = require_string(entry, "name", where);
            const Json& arity = require(entry, "arity", where);
            if (!arity.is_number_integer())
                throw InputError("netlist: " + where + ".arity must be an integer");
            const Json& outputs = require(entry, "outputs", where);
            if (!outputs.is_array())
                throw InputError("netlist: " + where + ".outputs must be an array");
            std::vector<std::string> exprs;
            for (const Json& e : outputs) {
                if (!e.is_string())
                    throw InputError("netlist: " + where + ".outputs entries must be strings");
                exprs.push_back(e.get<std::string>());
            }
            try {
                library.add(GateSpec::create(name, arity.get<int>(), exprs));
            } catch (const InputError& e) {
                throw InputError("netlist: " + where + ": " + e.what());
            }
        }
    }

    Circuit circuit;
    const Json empty_array = Json::array();

    const Json& lines = doc.contains("lines") ? doc["lines"] : empty_array;
    if (!lines.is_array())
        throw InputError("netlist: lines must be an array");
    std::map<std::string, LineRole> declared_lines;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string where = "lines[" + std::to_string(i) + "]";
        const Json& entry = lines[i];
        if (!entry.is_object())
            throw InputError("netlist: " + where + " must be an object");
        check_fields(entry, {"id", "role", "complement_of"}, where);
        Line line;
        line.id = require_string(entry, "id", where);
        if (line.id.empty())
            throw InputError("netlist: " + where + ".id must not be empty");
        const std::string role = require_string(entry, "role", where);
        auto parsed = line_role_from_string(role);
        if (!parsed)
            throw InputError("netlist: " + where + ": unknown role '" + role + "'");
        line.role = *parsed;
        if (entry.contains("complement_of")) {
            if (!entry["complement_of"].is_string())
                throw InputError("netlist: " + where + ".complement_of must be a string");
            line.complement_of = entry["complement_of"].get<std::string>();
            if (line.role != LineRole::primary_input)
                throw InputError("netlist: " + where +
                                 ": complement_of requires role primary_input");
        }
        if (declared_lines.count(line.id))
            throw InputError("netlist: duplicate line id '" + line.id + "'");
        declared_lines[line.id] = line.role;
        if (line.role != LineRole::internal)
            circuit.add_line(std::move(line));
    }

    const Json& instances = doc.contains("instances") ? doc["instances"] : empty_array;
    if (!instances.is_array())
        throw InputError("netlist: instances must be an array");

    // First pass: resolve gates and raw refs. Internal-line endpoints are
    // collected and rewritten into direct links in a second pass.
    struct RawInstance {
        GateRef gate;
        std::vector<Driver> inputs;
        std::vector<Disposition> outputs;
    };
    std::vector<RawInstance> raw;
    std::map<std::string, std::pair<int, int>> internal_producer; // line -> (inst, port)
    std::map<std::string, std::pair<int, int>> internal_consumer;

    for (size_t i = 0; i < instances.size(); ++i) {
        const std::string where = "instances[" + std::to_string(i) + "]";
        const Json& entry = instances[i];
        if (!entry.is_object())
            throw InputError("netlist: " + where + " must be an object");
        check_fields(entry, {"gate", "inputs", "outputs"}, where);
        const std::string gate_name = require_string(entry, "gate", where);
        GateRef gate = library.find(gate_name);
        if (!gate)
            throw InputError("netlist: " + where + ": unknown gate '" + gate_name + "'");

        RawInstance inst;
        inst.gate = gate;

        const Json& ins = require(entry, "inputs", where);
        const Json& outs = require(entry, "outputs", where);
        if (!ins.is_array() || !outs.is_array())
            throw InputError("netlist: " + where + ": inputs and outputs must be arrays");
        if (static_cast<int>(ins.size()) != gate->arity() ||
            static_cast<int>(outs.size()) != gate->arity())
            throw InputError("netlist: " + where + ": gate '" + gate_name + "' has arity " +
                             std::to_string(gate->arity()) + ", got " +
                             std::to_string(ins.size()) + " inputs and " +
                             std::to_string(outs.size()) + " outputs");

        for (size_t q = 0; q < ins.size(); ++q) {
            if (!ins[q].is_string())
                throw InputError("netlist: " + where + ".inputs[" + std::to_string(q) +
                                 "] must be a string");
            const std::string ref = ins[q].get<std::string>();
            int ri = 0, rp = 0;
            if (parse_port_ref(ref, "out", ri, rp)) {
                inst.inputs.push_back(Driver::from_output(ri, rp));
            } else if (std::string id = tail_of(ref, "line"); !id.empty()) {
                auto it = declared_lines.find(id);
                if (it == declared_lines.end())
                    throw InputError("netlist: " + where + ".inputs[" + std::to_string(q) +
                                     "]: undeclared line '" + id + "'");
                if (it->second == LineRole::internal) {
                    auto [pos, inserted] = internal_consumer.emplace(
                        id, std::make_pair(static_cast<int>(i), static_cast<int>(q)));
                    (void)pos;
                    if (!inserted)
                        throw InputError("netlist: internal line '" + id +
                                         "' feeds more than one gate input");
                    inst.inputs.push_back(Driver::from_line(id)); // patched below
                } else {
                    inst.inputs.push_back(Driver::from_line(id));
                }
            } else if (std::string state = tail_of(ref, "feedback"); !state.empty()) {
                inst.inputs.push_back(Driver::from_feedback(state));
            } else {
                throw InputError("netlist: " + where + ".inputs[" + std::to_string(q) +
                                 "]: unrecognized ref '" + ref + "'");
            }
        }

        for (size_t p = 0; p < outs.size(); ++p) {
            if (!outs[p].is_string())
                throw InputError("netlist: " + where + ".outputs[" + std::to_string(p) +
                                 "] must be a string");
            const std::string ref = outs[p].get<std::string>();
            int ri = 0, rp = 0;
            if (ref == "garbage") {
                inst.outputs.push_back(Disposition::garbage());
            } else if (parse_port_ref(ref, "out", ri, rp)) {
                inst.outputs.push_back(Disposition::consumed_by(ri, rp));
            } else if (std::string name = tail_of(ref, "primary"); !name.empty()) {
                inst.outputs.push_back(Disposition::primary(name));
            } else if (std::string state = tail_of(ref, "feedback"); !state.empty()) {
                inst.outputs.push_back(Disposition::feedback(state));
            } else if (std::string id = tail_of(ref, "line"); !id.empty()) {
                auto it = declared_lines.find(id);
                if (it == declared_lines.end() || it->second != LineRole::internal)
                    throw InputError("netlist: " + where + ".outputs[" + std::to_string(p) +
                                     "]: '" + ref + "' must name an internal line");
                auto [pos, inserted] = internal_producer.emplace(
                    id, std::make_pair(static_cast<int>(i), static_cast<int>(p)));
                (void)pos;
                if (!inserted)
                    throw InputError("netlist: internal line '" + id +
                                     "' is driven by more than one gate output");
                inst.outputs.push_back(Disposition::garbage()); // patched below
            } else {
                throw InputError("netlist: " + where + ".outputs[" + std::to_string(p) +
                                 "]: unrecognized ref '" + ref + "'");
            }
        }
        raw.push_back(std::move(inst));
    }

    // Second pass: join the two ends of every internal line.
    for (const auto& [id, producer] : internal_producer) {
        auto it = internal_consumer.find(id);
        if (it == internal_consumer.end())
            throw InputError("netlist: internal line '" + id + "' is driven but never consumed");
        const auto& consumer = it->second;
        raw[static_cast<size_t>(producer.first)]
            .outputs[static_cast<size_t>(producer.second)] =
            Disposition::consumed_by(consumer.first, consumer.second);
        raw[static_cast<size_t>(consumer.first)].inputs[static_cast<size_t>(consumer.second)] =
            Driver::from_output(producer.first, producer.second);
    }
    for (const auto& [id, consumer] : internal_consumer) {
        (void)consumer;
        if (!internal_producer.count(id))
            throw InputError("netlist: internal line '" + id + "' is consumed but never driven");
    }

    for (RawInstance& inst : raw)
        circuit.add_gate(std::move(inst.gate), std::move(inst.inputs), std::move(inst.outputs));

    // Cross-check the explicit feedback records against the port marks.
    std::vector<FeedbackArc> declared_arcs;
    if (doc.contains("feedbacks")) {
        const Json& arr = doc["feedbacks"];
        if (!arr.is_array())
            throw InputError("netlist: feedbacks must be an array");
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "feedbacks[" + std::to_string(i) + "]";
            const Json& entry = arr[i];
            if (!entry.is_object())
                throw InputError("netlist: " + where + " must be an object");
            check_fields(entry, {"source", "target", "state"}, where);
            FeedbackArc arc;
            arc.state = require_string(entry, "state", where);
            const std::string source = require_string(entry, "source", where);
            const std::string target = require_string(entry, "target", where);
            if (!parse_port_ref(source, "out", arc.source_instance, arc.source_port))
                throw InputError("netlist: " + where + ".source must be an out:<i>:<p> ref");
            if (!parse_port_ref(target, "in", arc.target_instance, arc.target_port))
                throw InputError("netlist: " + where + ".target must be an in:<i>:<p> ref");
            declared_arcs.push_back(std::move(arc));
        }
    }
    std::vector<FeedbackArc> derived = circuit.feedbacks();
    for (const FeedbackArc& arc : declared_arcs) {
        bool found = false;
        for (const FeedbackArc& d : derived)
            found = found || d == arc;
        if (!found)
            throw InputError("netlist: feedback record for state '" + arc.state +
                             "' does not match the instance port marks");
    }
    if (declared_arcs.size() != derived.size())
        throw InputError("netlist: feedbacks must list exactly the arcs marked on instance "
                         "ports (" +
                         std::to_string(derived.size()) + " marked, " +
                         std::to_string(declared_arcs.size()) + " listed)");

    return ParsedNetlist{std::move(circuit), std::move(library)};
}

Circuit parse(std::string_view text) { return parse_document(text).circuit; }

} // namespace revlatch

#include "revlatch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "revlatch/builders.hpp"
#include "revlatch/errors.hpp"
#include "revlatch/metrics.hpp"
#include "revlatch/netlist_io.hpp"
#include "revlatch/reference_tables.hpp"
#include "revlatch/search.hpp"
#include "revlatch/simulate.hpp"

namespace revlatch {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_check = 2;
constexpr int exit_capacity = 3;

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << content;
}

/// "E=1,D=0" -> bindings; empty string -> empty map.
Binding parse_bindings(const std::string& text) {
    Binding b;
    std::istringstream in(text);
    std::string pair;
    while (std::getline(in, pair, ',')) {
        if (pair.empty())
            continue;
        const size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
            throw InputError("binding '" + pair + "' is not name=0|1");
        std::string name = pair.substr(0, eq);
        std::string value = pair.substr(eq + 1);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        value.erase(std::remove_if(value.begin(), value.end(), ::isspace), value.end());
        if (value != "0" && value != "1")
            throw InputError("binding '" + pair + "' must be 0 or 1");
        b[name] = value == "1";
    }
    return b;
}

/// "E=1,D=1;E=0,D=0" -> one binding map per event.
std::vector<Binding> parse_events(const std::string& text) {
    std::vector<Binding> events;
    std::istringstream in(text);
    std::string event;
    while (std::getline(in, event, ';'))
        events.push_back(parse_bindings(event));
    return events;
}

/// Renders index columns, a separator, then the table rows, padding each
/// bit under its header.
std::string render_rows(const std::vector<std::string>& headers, int arity,
                        const TruthTable& table) {
    std::ostringstream os;
    for (size_t col = 0; col < headers.size(); ++col) {
        if (col == static_cast<size_t>(arity))
            os << "| ";
        os << headers[col] << (col + 1 < headers.size() ? " " : "");
    }
    os << "\n";
    for (unsigned i = 0; i < table.rows.size(); ++i) {
        BitVector in = BitVector::from_index(i, arity);
        for (size_t col = 0; col < headers.size(); ++col) {
            const bool is_input = col < static_cast<size_t>(arity);
            if (col == static_cast<size_t>(arity))
                os << "| ";
            const bool bit = is_input ? in.bit(static_cast<int>(col))
                                      : table.rows[i].bit(static_cast<int>(col) - arity);
            os << std::string(headers[col].size() > 1 ? headers[col].size() - 1 : 0, ' ')
               << (bit ? '1' : '0') << (col + 1 < headers.size() ? " " : "");
        }
        os << "\n";
    }
    return os.str();
}

std::string render_truth_table(const GateSpec& gate, const TruthTable& table) {
    std::vector<std::string> headers;
    for (int q = 0; q < gate.arity(); ++q)
        headers.push_back(std::string(1, static_cast<char>('A' + q)));
    for (const Expr& e : gate.outputs())
        headers.push_back(e.to_string());
    return render_rows(headers, gate.arity(), table);
}

/// The inverse table maps output patterns back to input patterns, so the
/// gate's output expressions index the rows and A.. label the values.
std::string render_inverse_table(const GateSpec& gate, const TruthTable& inverse) {
    std::vector<std::string> headers;
    for (const Expr& e : gate.outputs())
        headers.push_back(e.to_string());
    for (int q = 0; q < gate.arity(); ++q)
        headers.push_back(std::string(1, static_cast<char>('A' + q)));
    return render_rows(headers, gate.arity(), inverse);
}

GateRef find_gate(const Library& library, const std::string& name) {
    GateRef gate = library.find(name);
    if (!gate)
        throw InputError("unknown gate '" + name + "'");
    return gate;
}

int cmd_gate(const std::string& action, const std::string& name,
             const std::string& gates_file, std::ostream& out) {
    Library library = Library::builtins();
    if (!gates_file.empty())
        library = parse_document(read_file(gates_file)).library;
    GateRef gate = find_gate(library, name);

    if (action == "table") {
        out << render_truth_table(*gate, truth_table(*gate));
        return exit_ok;
    }
    if (action == "verify") {
        BijectionVerdict v = check_bijective(truth_table(*gate));
        if (v.bijective) {
            out << "gate '" << gate->name() << "': bijective (" << (1u << gate->arity())
                << " rows distinct)\n";
            return exit_ok;
        }
        out << "gate '" << gate->name() << "': not bijective; inputs " << v.collision->first
            << " and " << v.collision->second << " collide\n";
        return exit_check;
    }
    if (action == "inverse") {
        out << render_inverse_table(*gate, inverse_gate(*gate));
        return exit_ok;
    }
    if (action == "nand") {
        NandVerdict v = check_nand_universality(*gate);
        if (v.is_nand) {
            out << "gate '" << gate->name()
                << "': output 4 is NAND(A,B) under C=0, D=1 on all 4 assignments\n";
            return exit_ok;
        }
        out << "gate '" << gate->name() << "': output 4 is not NAND(A,B); " << v.detail << "\n";
        return exit_check;
    }
    throw InputError("unknown gate action '" + action +
                     "'; expected table, verify, inverse or nand");
}

int cmd_circuit(const std::string& action, const std::string& target,
                const std::string& output_path, const std::string& convention_name, bool json,
                std::ostream& out) {
    if (action == "builtin") {
        const std::string text = serialize(build_named_latch(target));
        if (output_path.empty())
            out << text;
        else
            write_file(output_path, text);
        return exit_ok;
    }

    Circuit circuit = parse(read_file(target));
    ValidationResult v = validate(circuit);

    if (action == "validate") {
        if (v.ok) {
            out << "valid\n";
            return exit_ok;
        }
        out << "invalid: [" << to_string(v.code) << "] " << v.message << "\n";
        return exit_input;
    }
    if (action == "metrics") {
        if (!v.ok)
            throw InputError("circuit is invalid: [" + std::string(to_string(v.code)) + "] " +
                             v.message);
        CostReport r = cost_report(circuit, hw_convention_from_string(convention_name));
        if (json) {
            Json doc;
            doc["gates"] = r.gate_count;
            doc["garbage"] = r.garbage_count;
            doc["constant_inputs"] = r.constant_inputs;
            doc["delay"] = r.delay;
            doc["hw"] = {{"alpha", r.hw.alpha}, {"beta", r.hw.beta}, {"delta", r.hw.delta}};
            out << doc.dump(2) << "\n";
        } else {
            out << "gates: " << r.gate_count << "\n";
            out << "garbage outputs: " << r.garbage_count << "\n";
            out << "constant inputs: " << r.constant_inputs << "\n";
            out << "delay: " << r.delay << "\n";
            out << "hardware complexity: " << r.hw.to_string() << "\n";
        }
        return exit_ok;
    }
    throw InputError("unknown circuit action '" + action +
                     "'; expected validate, metrics or builtin");
}

int cmd_simulate(const std::string& file, const std::string& inputs, const std::string& init,
                 const std::string& check, std::ostream& out, std::ostream& err) {
    Circuit circuit = parse(read_file(file));
    ValidationResult v = validate(circuit);
    if (!v.ok)
        throw InputError("circuit is invalid: [" + std::string(to_string(v.code)) + "] " +
                         v.message);

    if (inputs.empty() && check.empty())
        throw InputError("nothing to do: pass --inputs events and/or --check equation");

    if (!inputs.empty()) {
        LatchState initial{parse_bindings(init)};
        SimTrace trace = simulate_sequence(circuit, parse_events(inputs), initial);
        for (size_t e = 0; e < trace.steps.size(); ++e) {
            const SimStep& s = trace.steps[e];
            Json rec;
            rec["event"] = e;
            Json in = Json::object(), before = Json::object(), outputs = Json::object(),
                 after = Json::object();
            for (const auto& [k2, val] : s.inputs)
                in[k2] = val ? 1 : 0;
            for (const auto& [k2, val] : s.state_before.values)
                before[k2] = val ? 1 : 0;
            for (const auto& [k2, val] : s.outputs)
                outputs[k2] = val ? 1 : 0;
            for (const auto& [k2, val] : s.state_after.values)
                after[k2] = val ? 1 : 0;
            rec["inputs"] = std::move(in);
            rec["state_before"] = std::move(before);
            rec["outputs"] = std::move(outputs);
            rec["state_after"] = std::move(after);
            out << rec.dump() << "\n";
        }
        for (size_t e : trace.unstable_steps)
            err << "warning: event " << e << " does not reach a one-step fixpoint\n";
    }

    if (!check.empty()) {
        CharacteristicVerdict cv = check_characteristic(circuit, Expr::parse(check));
        if (cv.holds) {
            out << "holds (" << cv.assignments << "/" << cv.assignments << ")\n";
            return exit_ok;
        }
        out << cv.message << "\n";
        return exit_check;
    }
    return exit_ok;
}

int cmd_reproduce(const std::string& id, bool json, std::ostream& out) {
    if (id == "I") {
        GateRef sg = Library::builtins().find("SG");
        TruthTable table = truth_table(*sg);
        const auto& reference = sg_reference_rows();
        bool all_match = true;
        for (unsigned i = 0; i < 16; ++i)
            all_match = all_match && table.rows[i].to_index() == reference[i];

        if (json) {
            Json rows = Json::array();
            for (unsigned i = 0; i < 16; ++i) {
                rows.push_back(
                    {{"input", BitVector::from_index(i, 4).to_string()},
                     {"computed", table.rows[i].to_string()},
                     {"reference", BitVector::from_index(reference[i], 4).to_string()},
                     {"match", table.rows[i].to_index() == reference[i]}});
            }
            Json doc;
            doc["table"] = "I";
            doc["rows"] = std::move(rows);
            doc["match"] = all_match;
            out << doc.dump(2) << "\n";
        } else {
            out << render_truth_table(*sg, table);
            out << (all_match ? "all 16 rows match the reference table\n"
                              : "MISMATCH against the reference table\n");
        }
        return all_match ? exit_ok : exit_check;
    }

    const CostTableRef& ref = cost_table(id);
    ComparisonReport report = compare_report(build_named_latch(ref.builder), ref);
    out << (json ? report.render_json() + "\n" : report.render_text());
    return report.all_match() ? exit_ok : exit_check;
}

int line_capacity_from_env() {
    const char* env = std::getenv("REVLATCH_MAX_LINES");
    if (!env)
        return default_line_capacity;
    try {
        size_t used = 0;
        int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 1)
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InputError("REVLATCH_MAX_LINES must be a positive integer, got '" +
                         std::string(env) + "'");
    }
}

int cmd_search(const std::string& target_name, int max_gates, const std::string& library_csv,
               const std::string& allow_complemented, bool json, std::ostream& out) {
    TargetSpec target = builtin_target(target_name);
    if (!allow_complemented.empty()) {
        if (allow_complemented != "true" && allow_complemented != "false")
            throw InputError("--allow-complemented takes true or false");
        target.allow_complemented_inputs = allow_complemented == "true";
    }

    std::vector<GateRef> library;
    std::istringstream in(library_csv);
    std::string name;
    while (std::getline(in, name, ','))
        if (!name.empty())
            library.push_back(find_gate(Library::builtins(), name));
    if (library.empty())
        throw InputError("--library must name at least one gate");

    const int capacity = line_capacity_from_env();
    SearchBounds bounds{max_gates, capacity};
    SearchResult result = min_gates(target, library, bounds, capacity);

    const bool found = result.verdict == SearchResult::Verdict::found;
    const int claimed = target.claimed_min_gates.value_or(-1);
    // A bounded run that never reaches the claimed count cannot contradict
    // it; finding a smaller circuit, or exhausting the claimed count, does.
    const bool consistent =
        found ? result.min_gates == claimed : bounds.max_gates < claimed;

    if (json) {
        out << search_result_json(result, target) << "\n";
    } else {
        out << "target: " << target.name << "\n";
        out << "library:";
        for (const GateRef& g : library)
            out << " " << g->name();
        out << "\n";
        out << "bounds: max_gates=" << bounds.max_gates << ", max_lines=" << bounds.max_lines
            << "\n";
        out << "complemented inputs: "
            << (target.allow_complemented_inputs ? "allowed" : "not allowed") << "\n";
        if (found) {
            out << "verdict: found, min gates = " << result.min_gates << " (claimed " << claimed
                << ") -- " << (consistent ? "consistent" : "REFUTES the claimed count") << "\n";
            out << "witness:\n" << serialize(*result.witness);
        } else {
            out << "verdict: exhausted through " << bounds.max_gates
                << " gate(s), no realization -- "
                << (consistent ? "consistent with claimed minimum " + std::to_string(claimed)
                               : "REFUTES attainability of claimed count " +
                                     std::to_string(claimed))
                << "\n";
        }
        out << "explored: " << result.explored << " wirings\n";
        out << "wall time: " << result.wall_seconds << " s\n";
    }
    return consistent ? exit_ok : exit_check;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reversible-latch design and verification toolkit"};
    app.require_subcommand(1);

    // gate
    auto* gate = app.add_subcommand("gate", "inspect a gate: truth table, bijectivity, "
                                            "inverse, NAND universality");
    std::string gate_action, gate_name, gates_file;
    gate->add_option("action", gate_action, "table | verify | inverse | nand")->required();
    gate->add_option("name", gate_name, "gate name (NOT, FG, TG, FRG, PG, SG, or custom)")
        ->required();
    gate->add_option("--gates", gates_file, "netlist file whose gates_custom to load");

    // circuit
    auto* circuit = app.add_subcommand("circuit", "validate a netlist, compute its cost "
                                                  "metrics, or emit a built-in latch");
    std::string circuit_action, circuit_target, circuit_out, convention = "paper";
    bool circuit_json = false;
    circuit->add_option("action", circuit_action, "validate | metrics | builtin")->required();
    circuit
        ->add_option("target", circuit_target,
                     "netlist file (validate, metrics) or builder name (builtin)")
        ->required();
    circuit->add_option("-o,--output", circuit_out, "output file for builtin");
    circuit->add_option("--convention", convention, "hardware-complexity convention: "
                                                    "paper | strict");
    circuit->add_flag("--json", circuit_json, "machine-readable output");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "evaluate a latch netlist over input "
                                                    "events or check its characteristic "
                                                    "equation exhaustively");
    std::string sim_file, sim_inputs, sim_init, sim_check;
    simulate->add_option("file", sim_file, "netlist file")->required();
    simulate->add_option("--inputs", sim_inputs, "events, e.g. \"E=1,D=1;E=0,D=0\"");
    simulate->add_option("--init", sim_init, "initial state, e.g. \"Q=0\"");
    simulate->add_option("--check", sim_check, "equation over inputs and state, e.g. "
                                               "\"D*E + !E*Q\"");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "recompute a built-in reference table "
                                                      "and compare against the published "
                                                      "values");
    std::string table_id;
    bool reproduce_json = false;
    reproduce->add_option("table", table_id, "I | II | III | IV | V")->required();
    reproduce->add_flag("--json", reproduce_json, "machine-readable output");

    // search
    auto* search = app.add_subcommand("search", "bounded exhaustive synthesis for a latch "
                                                "target");
    std::string target_name, library_csv = "FG,TG,FRG,PG,SG", allow_complemented;
    int max_gates = 1;
    bool search_json = false;
    search->add_option("--target", target_name, "d-latch-q | d-latch-qq | jk-latch-q | "
                                                "jk-latch-qq")
        ->required();
    search->add_option("--max-gates", max_gates, "largest gate count to enumerate")->required();
    search->add_option("--library", library_csv, "comma-separated gate names");
    search->add_option("--allow-complemented", allow_complemented,
                       "true | false (default: per target)");
    search->add_flag("--json", search_json, "machine-readable output");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (gate->parsed())
            return cmd_gate(gate_action, gate_name, gates_file, out);
        if (circuit->parsed())
            return cmd_circuit(circuit_action, circuit_target, circuit_out, convention,
                               circuit_json, out);
        if (simulate->parsed())
            return cmd_simulate(sim_file, sim_inputs, sim_init, sim_check, out, err);
        if (reproduce->parsed())
            return cmd_reproduce(table_id, reproduce_json, out);
        if (search->parsed())
            return cmd_search(target_name, max_gates, library_csv, allow_complemented,
                              search_json, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

} // namespace revlatch

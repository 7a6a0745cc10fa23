#include "revlatch/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "revlatch/errors.hpp"
#include "revlatch/reference_tables.hpp"

namespace revlatch {

HwConvention hw_convention_from_string(std::string_view s) {
    if (s == "strict")
        return HwConvention::strict;
    if (s == "paper")
        return HwConvention::paper;
    throw InputError("unknown convention '" + std::string(s) + "'; expected strict or paper");
}

int gate_count(const Circuit& circuit) { return static_cast<int>(circuit.gates().size()); }

int garbage_count(const Circuit& circuit) {
    int n = 0;
    for (const GateInstance& g : circuit.gates())
        for (const Disposition& d : g.outputs)
            if (d.kind == Disposition::Kind::garbage)
                ++n;
    return n;
}

namespace {

std::set<std::string> consumed_line_ids(const Circuit& circuit) {
    std::set<std::string> ids;
    for (const GateInstance& g : circuit.gates())
        for (const Driver& d : g.inputs)
            if (d.kind == Driver::Kind::line)
                ids.insert(d.name);
    return ids;
}

} // namespace

int constant_input_count(const Circuit& circuit) {
    const auto consumed = consumed_line_ids(circuit);
    int n = 0;
    for (const Line& l : circuit.lines())
        if ((l.role == LineRole::constant_zero || l.role == LineRole::constant_one) &&
            consumed.count(l.id))
            ++n;
    return n;
}

int delay(const Circuit& circuit) {
    const auto& gates = circuit.gates();
    // level[i]: gates on the longest line-to-here path ending at gate i,
    // or -1 when no line reaches it. Feedback arcs never extend a path.
    std::vector<int> level(gates.size(), -1);
    for (size_t i = 0; i < gates.size(); ++i) {
        int best = -1;
        for (const Driver& d : gates[i].inputs) {
            if (d.kind == Driver::Kind::line)
                best = std::max(best, 0);
            else if (d.kind == Driver::Kind::gate_output && d.instance >= 0 &&
                     d.instance < static_cast<int>(i) &&
                     level[static_cast<size_t>(d.instance)] >= 0)
                best = std::max(best, level[static_cast<size_t>(d.instance)]);
        }
        if (best >= 0)
            level[i] = best + 1;
    }

    int longest = 0;
    for (size_t i = 0; i < gates.size(); ++i) {
        for (const Disposition& d : gates[i].outputs) {
            if (d.kind == Disposition::Kind::primary && level[i] > longest)
                longest = level[i];
        }
    }
    return longest;
}

OpCounts hw_complexity(const Circuit& circuit, HwConvention convention) {
    (void)convention; // both conventions price identically; see header
    OpCounts total;
    for (const GateInstance& g : circuit.gates()) {
        if (g.gate->name() == "FG") {
            bool has_one = false;
            bool has_zero = false;
            for (const Driver& d : g.inputs) {
                if (d.kind != Driver::Kind::line)
                    continue;
                const Line* l = circuit.find_line(d.name);
                if (!l)
                    continue;
                has_one = has_one || l->role == LineRole::constant_one;
                has_zero = has_zero || l->role == LineRole::constant_zero;
            }
            if (has_one)
                total += OpCounts{0, 0, 1}; // inverter
            else if (has_zero)
                total += OpCounts{0, 0, 0}; // copy
            else
                total += OpCounts{1, 0, 0};
        } else {
            total += g.gate->complexity();
        }
    }

    const auto consumed = consumed_line_ids(circuit);
    for (const Line& l : circuit.lines())
        if (l.complement_of && consumed.count(l.id))
            total += OpCounts{0, 0, 1};
    return total;
}

CostReport cost_report(const Circuit& circuit, HwConvention convention) {
    CostReport r;
    r.gate_count = gate_count(circuit);
    r.garbage_count = garbage_count(circuit);
    r.constant_inputs = constant_input_count(circuit);
    r.delay = delay(circuit);
    r.hw = hw_complexity(circuit, convention);
    return r;
}

bool ComparisonReport::all_match() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const CompareLine& l) { return l.match || l.annotated; });
}

std::string ComparisonReport::render_text() const {
    std::ostringstream os;
    os << "Table " << table_id << ": " << title << "\n";
    os << "design: " << design << "\n";
    os << std::left << std::setw(22) << "metric" << std::setw(12) << "computed" << std::setw(12)
       << "claimed" << "verdict\n";
    for (const CompareLine& l : lines) {
        os << std::left << std::setw(22) << l.metric << std::setw(12) << l.computed
           << std::setw(12) << l.claimed
           << (l.match ? "match" : (l.annotated ? "annotated" : "MISMATCH")) << "\n";
        if (!l.note.empty())
            os << "  note: " << l.note << "\n";
    }
    if (!prior.empty()) {
        os << "prior designs (gates, garbage, delay):\n";
        for (const ReferenceEntry& p : prior)
            os << "  " << std::left << std::setw(20) << p.design << p.gates << ", " << p.garbage
               << ", " << p.delay << "\n";
    }
    for (const auto& [name, hw] : prior_hw)
        os << "prior hardware complexity: " << name << " = " << hw.to_string() << "\n";
    return os.str();
}

std::string ComparisonReport::render_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CompareLine& l : lines) {
        nlohmann::ordered_json row;
        row["design"] = design;
        row["metric"] = l.metric;
        row["computed"] = l.computed;
        row["paper"] = l.claimed;
        row["match"] = l.match;
        if (l.annotated)
            row["annotated"] = true;
        if (!l.note.empty())
            row["note"] = l.note;
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["table"] = table_id;
    doc["title"] = title;
    doc["rows"] = std::move(rows);
    if (!prior.empty()) {
        nlohmann::ordered_json priors = nlohmann::ordered_json::array();
        for (const ReferenceEntry& p : prior) {
            priors.push_back({{"design", p.design},
                              {"gates", p.gates},
                              {"garbage", p.garbage},
                              {"delay", p.delay}});
        }
        doc["prior"] = std::move(priors);
    }
    return doc.dump(2);
}

ComparisonReport compare_report(const Circuit& circuit, const CostTableRef& reference,
                                HwConvention convention) {
    const CostReport computed = cost_report(circuit, convention);
    ComparisonReport report;
    report.table_id = reference.id;
    report.title = reference.title;
    report.design = reference.builder.empty() ? reference.claimed.design : reference.builder;
    report.prior = reference.prior;

    auto add_line = [&](const std::string& metric, int got, int want) {
        CompareLine l;
        l.metric = metric;
        l.computed = std::to_string(got);
        l.claimed = std::to_string(want);
        l.match = got == want;
        report.lines.push_back(std::move(l));
    };
    add_line("gates", computed.gate_count, reference.claimed.gates);
    add_line("garbage outputs", computed.garbage_count, reference.claimed.garbage);
    add_line("delay", computed.delay, reference.claimed.delay);

    if (const HwReference* hw = hw_reference(reference.builder)) {
        CompareLine l;
        l.metric = "hardware complexity";
        l.computed = computed.hw.to_string();
        l.claimed = hw->claimed.to_string();
        l.match = computed.hw == hw->claimed;
        if (!l.match && !hw->annotation.empty()) {
            l.annotated = true;
            l.note = hw->annotation;
        }
        report.lines.push_back(std::move(l));
        report.prior_hw = hw->prior;
    }
    return report;
}

ComparisonReport compare_report(const Circuit& circuit, std::string_view table_id,
                                HwConvention convention) {
    return compare_report(circuit, cost_table(table_id), convention);
}

} // namespace revlatch

#include "revlatch/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "revlatch/errors.hpp"
#include "revlatch/netlist_io.hpp"
#include "revlatch/simulate.hpp"

namespace revlatch {

TargetSpec builtin_target(std::string_view name) {
    const Expr d_next = Expr::parse("D*E + !E*Q");
    const Expr jk_next = Expr::parse("(J*!Q + !K*Q)*E + !E*Q");

    TargetSpec t;
    t.name = std::string(name);
    if (name == "d-latch-q" || name == "d-latch-qq") {
        t.input_names = {"E", "D"};
        t.state_names = {"Q"};
        t.required_outputs = {d_next};
        t.output_names = {"Q"};
        t.allow_complemented_inputs = false;
        t.claimed_min_gates = 1;
        if (name == "d-latch-qq") {
            t.required_outputs.push_back(Expr::negate(d_next));
            t.output_names.push_back("Qbar");
            t.claimed_min_gates = 2;
        }
        return t;
    }
    if (name == "jk-latch-q" || name == "jk-latch-qq") {
        t.input_names = {"E", "J", "K"};
        t.state_names = {"Q"};
        t.required_outputs = {jk_next};
        t.output_names = {"Q"};
        t.allow_complemented_inputs = true; // the builders take !K as a free line
        t.claimed_min_gates = 2;
        if (name == "jk-latch-qq") {
            t.required_outputs.push_back(Expr::negate(jk_next));
            t.output_names.push_back("Qbar");
            t.claimed_min_gates = 3;
        }
        return t;
    }
    throw InputError("unknown search target '" + std::string(name) +
                     "'; expected one of d-latch-q, d-latch-qq, jk-latch-q, jk-latch-qq");
}

const std::vector<std::string>& builtin_target_names() {
    static const std::vector<std::string> names{"d-latch-q", "d-latch-qq", "jk-latch-q",
                                                "jk-latch-qq"};
    return names;
}

namespace {

/// One binding choice for a gate input port.
struct PortChoice {
    enum class Kind { feedback, plain, complemented, constant, output };
    Kind kind = Kind::plain;
    int index = -1;           // symbol or state index
    bool const_value = false; // constant
    int instance = -1;        // output
    int port = -1;
};

struct GateChoice {
    GateRef gate;
    std::vector<PortChoice> ports;
};

struct OpenPort {
    int instance = 0;
    int port = 0;
    uint64_t mask = 0;
};

/// Recursive candidate builder shared by the raw stream and the search.
class Enumerator {
  public:
    Enumerator(const TargetSpec& target, const std::vector<GateRef>& library,
               SearchBounds bounds, int line_capacity, bool dedup_prefixes)
        : target_(target), library_(library), bounds_(bounds), dedup_(dedup_prefixes) {
        if (bounds.max_gates < 0 || bounds.max_gates > max_search_gates)
            throw CapacityError("search: max_gates " + std::to_string(bounds.max_gates) +
                                " outside [0, " + std::to_string(max_search_gates) + "]");
        if (bounds.max_lines < 0 || bounds.max_lines > line_capacity)
            throw CapacityError("search: max_lines " + std::to_string(bounds.max_lines) +
                                " outside [0, " + std::to_string(line_capacity) + "]");
        if (target.required_outputs.empty())
            throw InputError("search: target needs at least one required output");
        if (target.state_names.size() > 1)
            throw InputError("search: at most one feedback state is supported");

        n_symbols_ = static_cast<int>(target.input_names.size());
        n_states_ = static_cast<int>(target.state_names.size());
        const int bits = n_symbols_ + n_states_;
        if (bits > 16)
            throw CapacityError("search: more than 16 inputs plus states");
        assignments_ = 1u << bits;
        all_mask_ = assignments_ == 64 ? ~uint64_t{0} : (uint64_t{1} << assignments_) - 1;

        symbol_masks_.resize(static_cast<size_t>(bits));
        for (int j = 0; j < bits; ++j) {
            uint64_t m = 0;
            for (unsigned a = 0; a < assignments_; ++a)
                if ((a >> j) & 1u)
                    m |= uint64_t{1} << a;
            symbol_masks_[static_cast<size_t>(j)] = m;
        }

        required_masks_.reserve(target.required_outputs.size());
        for (const Expr& e : target.required_outputs)
            required_masks_.push_back(e.eval_mask(
                [&](const std::string& v) { return mask_of_symbol(v); }, all_mask_));
    }

    /// Runs the enumeration for one exact gate count. The handler sees the
    /// final choice stack; it returns false to stop everything.
    using CompleteFn = std::function<bool(Enumerator&)>;

    bool run(int exact_gates, const CompleteFn& on_complete) {
        gate_count_ = exact_gates;
        on_complete_ = &on_complete;
        stop_ = false;
        seen_.assign(static_cast<size_t>(exact_gates) + 1, {});
        choose_gate(0);
        return !stop_;
    }

    // --- state the completion handler may inspect -------------------------
    uint64_t explored = 0;

    const std::vector<GateChoice>& choices() const { return choices_; }

    const std::vector<OpenPort>& open_ports() {
        scratch_open_.clear();
        for (int i = 0; i < static_cast<int>(choices_.size()); ++i) {
            for (int p = 0; p < choices_[static_cast<size_t>(i)].gate->arity(); ++p) {
                if (!consumed_[static_cast<size_t>(i)][static_cast<size_t>(p)])
                    scratch_open_.push_back(OpenPort{i, p,
                                                     port_masks_[static_cast<size_t>(i)]
                                                                [static_cast<size_t>(p)]});
            }
        }
        return scratch_open_;
    }

    const std::vector<uint64_t>& required_masks() const { return required_masks_; }
    uint64_t state_mask(int s) const {
        return symbol_masks_[static_cast<size_t>(n_symbols_ + s)];
    }
    int state_count() const { return n_states_; }
    bool feedback_placed() const { return placed_fb_ == (1u << n_states_) - 1; }

    /// Builds the circuit for the current choice stack with the given
    /// feedback sources (one per state) and ordered primary output ports.
    Circuit materialize(const std::vector<PortRef>& sources,
                        const std::vector<PortRef>& primaries) const;

  private:
    uint64_t mask_of_symbol(const std::string& name) const {
        for (int j = 0; j < n_symbols_; ++j)
            if (target_.input_names[static_cast<size_t>(j)] == name)
                return symbol_masks_[static_cast<size_t>(j)];
        for (int s = 0; s < n_states_; ++s)
            if (target_.state_names[static_cast<size_t>(s)] == name)
                return symbol_masks_[static_cast<size_t>(n_symbols_ + s)];
        throw InputError("search: required output references unknown symbol '" + name + "'");
    }

    void choose_gate(int i) {
        if (stop_)
            return;
        if (i == gate_count_) {
            if (!feedback_placed())
                return;
            if (!(*on_complete_)(*this))
                stop_ = true;
            return;
        }
        for (const GateRef& g : library_) {
            choices_.push_back(GateChoice{g, {}});
            port_masks_.emplace_back();
            consumed_.emplace_back(static_cast<size_t>(g->arity()), false);
            choose_port(i, 0);
            consumed_.pop_back();
            port_masks_.pop_back();
            choices_.pop_back();
            if (stop_)
                return;
        }
    }

    void choose_port(int i, int q) {
        if (stop_)
            return;
        if (q == choices_[static_cast<size_t>(i)].gate->arity()) {
            finish_gate(i);
            return;
        }

        // choices_ grows during the recursion below; index it afresh each
        // time instead of holding a reference
        auto try_choice = [&](const PortChoice& c) {
            choices_[static_cast<size_t>(i)].ports.push_back(c);
            choose_port(i, q + 1);
            choices_[static_cast<size_t>(i)].ports.pop_back();
        };

        for (int s = 0; s < n_states_; ++s) {
            if (placed_fb_ & (1u << s))
                continue;
            placed_fb_ |= 1u << s;
            PortChoice c;
            c.kind = PortChoice::Kind::feedback;
            c.index = s;
            try_choice(c);
            placed_fb_ &= ~(1u << s);
            if (stop_)
                return;
        }
        for (int j = 0; j < n_symbols_; ++j) {
            if ((used_plain_ & (1u << j)) || lines_used_ >= bounds_.max_lines)
                continue;
            used_plain_ |= 1u << j;
            ++lines_used_;
            PortChoice c;
            c.kind = PortChoice::Kind::plain;
            c.index = j;
            try_choice(c);
            --lines_used_;
            used_plain_ &= ~(1u << j);
            if (stop_)
                return;
        }
        if (target_.allow_complemented_inputs) {
            for (int j = 0; j < n_symbols_; ++j) {
                if ((used_compl_ & (1u << j)) || lines_used_ >= bounds_.max_lines)
                    continue;
                used_compl_ |= 1u << j;
                ++lines_used_;
                PortChoice c;
                c.kind = PortChoice::Kind::complemented;
                c.index = j;
                try_choice(c);
                --lines_used_;
                used_compl_ &= ~(1u << j);
                if (stop_)
                    return;
            }
        }
        if (target_.allow_constants && lines_used_ < bounds_.max_lines) {
            for (bool value : {false, true}) {
                ++lines_used_;
                PortChoice c;
                c.kind = PortChoice::Kind::constant;
                c.const_value = value;
                try_choice(c);
                --lines_used_;
                if (stop_)
                    return;
            }
        }
        for (int j = 0; j < i; ++j) {
            const int arity = choices_[static_cast<size_t>(j)].gate->arity();
            for (int p = 0; p < arity; ++p) {
                if (consumed_[static_cast<size_t>(j)][static_cast<size_t>(p)])
                    continue;
                consumed_[static_cast<size_t>(j)][static_cast<size_t>(p)] = true;
                PortChoice c;
                c.kind = PortChoice::Kind::output;
                c.instance = j;
                c.port = p;
                try_choice(c);
                consumed_[static_cast<size_t>(j)][static_cast<size_t>(p)] = false;
                if (stop_)
                    return;
            }
        }
    }

    /// All ports of gate i are bound: evaluate its output masks, apply the
    /// behavioral prefix filter, and move to the next gate.
    void finish_gate(int i) {
        GateChoice& gc = choices_[static_cast<size_t>(i)];
        std::vector<uint64_t> in_masks(static_cast<size_t>(gc.gate->arity()));
        for (int q = 0; q < gc.gate->arity(); ++q) {
            const PortChoice& c = gc.ports[static_cast<size_t>(q)];
            uint64_t m = 0;
            switch (c.kind) {
            case PortChoice::Kind::feedback:
                m = symbol_masks_[static_cast<size_t>(n_symbols_ + c.index)];
                break;
            case PortChoice::Kind::plain:
                m = symbol_masks_[static_cast<size_t>(c.index)];
                break;
            case PortChoice::Kind::complemented:
                m = ~symbol_masks_[static_cast<size_t>(c.index)] & all_mask_;
                break;
            case PortChoice::Kind::constant:
                m = c.const_value ? all_mask_ : 0;
                break;
            case PortChoice::Kind::output:
                m = port_masks_[static_cast<size_t>(c.instance)][static_cast<size_t>(c.port)];
                break;
            }
            in_masks[static_cast<size_t>(q)] = m;
        }

        auto& out_masks = port_masks_[static_cast<size_t>(i)];
        out_masks.resize(static_cast<size_t>(gc.gate->arity()));
        for (int p = 0; p < gc.gate->arity(); ++p) {
            out_masks[static_cast<size_t>(p)] =
                gc.gate->outputs()[static_cast<size_t>(p)].eval_mask(
                    [&](const std::string& v) {
                        return in_masks[static_cast<size_t>(v[0] - 'A')];
                    },
                    all_mask_);
        }

        // Dedup pays off only on prefixes that still get extended; terminal
        // wirings are realize-checked in O(open ports) anyway.
        if (dedup_ && i + 1 < gate_count_ && !note_prefix(i))
            return;
        choose_gate(i + 1);
    }

    /// Prefix key: the multiset of open-port functions plus the resource
    /// state. Two prefixes with equal keys admit the same completions up to
    /// behavior, so only the first is expanded.
    bool note_prefix(int i) {
        std::vector<uint64_t> key;
        key.push_back(static_cast<uint64_t>(used_plain_) |
                      (static_cast<uint64_t>(used_compl_) << 16) |
                      (static_cast<uint64_t>(placed_fb_) << 32) |
                      (static_cast<uint64_t>(lines_used_) << 40));
        for (int j = 0; j <= i; ++j) {
            const int arity = choices_[static_cast<size_t>(j)].gate->arity();
            for (int p = 0; p < arity; ++p)
                if (!consumed_[static_cast<size_t>(j)][static_cast<size_t>(p)])
                    key.push_back(port_masks_[static_cast<size_t>(j)][static_cast<size_t>(p)]);
        }
        std::sort(key.begin() + 1, key.end());
        return seen_[static_cast<size_t>(i)].insert(std::move(key)).second;
    }

    const TargetSpec& target_;
    const std::vector<GateRef>& library_;
    SearchBounds bounds_;
    bool dedup_;

    int n_symbols_ = 0;
    int n_states_ = 0;
    unsigned assignments_ = 0;
    uint64_t all_mask_ = 0;
    std::vector<uint64_t> symbol_masks_;
    std::vector<uint64_t> required_masks_;

    int gate_count_ = 0;
    const CompleteFn* on_complete_ = nullptr;
    bool stop_ = false;

    std::vector<GateChoice> choices_;
    std::vector<std::vector<uint64_t>> port_masks_;
    std::vector<std::vector<bool>> consumed_;
    uint32_t used_plain_ = 0;
    uint32_t used_compl_ = 0;
    uint32_t placed_fb_ = 0;
    int lines_used_ = 0;

    std::vector<OpenPort> scratch_open_;
    std::vector<std::set<std::vector<uint64_t>>> seen_;
};

Circuit Enumerator::materialize(const std::vector<PortRef>& sources,
                                const std::vector<PortRef>& primaries) const {
    Circuit c;
    int const_counter = 0;

    std::vector<std::vector<Driver>> drivers(choices_.size());
    for (size_t i = 0; i < choices_.size(); ++i) {
        for (const PortChoice& pc : choices_[i].ports) {
            switch (pc.kind) {
            case PortChoice::Kind::feedback:
                drivers[i].push_back(
                    Driver::from_feedback(target_.state_names[static_cast<size_t>(pc.index)]));
                break;
            case PortChoice::Kind::plain: {
                const std::string& sym = target_.input_names[static_cast<size_t>(pc.index)];
                c.add_line(Line{sym, LineRole::primary_input, std::nullopt});
                drivers[i].push_back(Driver::from_line(sym));
                break;
            }
            case PortChoice::Kind::complemented: {
                const std::string& sym = target_.input_names[static_cast<size_t>(pc.index)];
                c.add_line(Line{sym + "bar", LineRole::primary_input, sym});
                drivers[i].push_back(Driver::from_line(sym + "bar"));
                break;
            }
            case PortChoice::Kind::constant: {
                std::string id = "c" + std::to_string(const_counter++);
                c.add_line(Line{id, pc.const_value ? LineRole::constant_one
                                                   : LineRole::constant_zero,
                                std::nullopt});
                drivers[i].push_back(Driver::from_line(id));
                break;
            }
            case PortChoice::Kind::output:
                drivers[i].push_back(Driver::from_output(pc.instance, pc.port));
                break;
            }
        }
    }

    std::vector<std::vector<Disposition>> dispositions(choices_.size());
    for (size_t i = 0; i < choices_.size(); ++i)
        dispositions[i].assign(static_cast<size_t>(choices_[i].gate->arity()),
                               Disposition::garbage());
    for (size_t i = 0; i < choices_.size(); ++i) {
        for (size_t q = 0; q < drivers[i].size(); ++q) {
            const Driver& d = drivers[i][q];
            if (d.kind == Driver::Kind::gate_output)
                dispositions[static_cast<size_t>(d.instance)][static_cast<size_t>(d.port)] =
                    Disposition::consumed_by(static_cast<int>(i), static_cast<int>(q));
        }
    }
    for (size_t s = 0; s < sources.size(); ++s)
        dispositions[static_cast<size_t>(sources[s].instance)]
                    [static_cast<size_t>(sources[s].port)] =
                        Disposition::feedback(target_.state_names[s]);
    for (size_t j = 0; j < primaries.size(); ++j) {
        const std::string name = j < target_.output_names.size()
                                     ? target_.output_names[j]
                                     : "out" + std::to_string(j + 1);
        dispositions[static_cast<size_t>(primaries[j].instance)]
                    [static_cast<size_t>(primaries[j].port)] = Disposition::primary(name);
    }

    for (size_t i = 0; i < choices_.size(); ++i)
        c.add_gate(choices_[i].gate, std::move(drivers[i]), std::move(dispositions[i]));
    return c;
}

/// True when the target's second output is the complement of the first.
bool want_complement(const TargetSpec& target) {
    return target.required_outputs.size() == 2 &&
           Expr::negate(target.required_outputs[0]).to_string() ==
               target.required_outputs[1].to_string();
}

} // namespace

void enumerate_candidates(const TargetSpec& target, const std::vector<GateRef>& library,
                          SearchBounds bounds, const std::function<bool(const Circuit&)>& visit,
                          int line_capacity) {
    Enumerator en(target, library, bounds, line_capacity, /*dedup_prefixes=*/false);

    const size_t n_out = target.required_outputs.size();
    Enumerator::CompleteFn on_complete = [&](Enumerator& e) -> bool {
        const std::vector<OpenPort> open = e.open_ports();

        // Feedback sources per state, then ordered primary ports, all
        // distinct; every leftover open port is garbage.
        std::vector<PortRef> picked;
        std::function<bool(size_t)> pick = [&](size_t slot) -> bool {
            const size_t total = static_cast<size_t>(e.state_count()) + n_out;
            if (slot == total) {
                std::vector<PortRef> sources(picked.begin(),
                                             picked.begin() + e.state_count());
                std::vector<PortRef> primaries(picked.begin() + e.state_count(), picked.end());
                return visit(e.materialize(sources, primaries));
            }
            for (const OpenPort& p : open) {
                PortRef ref{p.instance, p.port};
                if (std::find(picked.begin(), picked.end(), ref) != picked.end())
                    continue;
                picked.push_back(ref);
                bool keep_going = pick(slot + 1);
                picked.pop_back();
                if (!keep_going)
                    return false;
            }
            return true;
        };
        return pick(0);
    };

    for (int k = 0; k <= bounds.max_gates; ++k) {
        if (k == 0) {
            // The empty circuit: representable, realizes nothing stateful.
            if (target.state_names.empty() && n_out == 0)
                continue;
            if (!visit(Circuit{}))
                return;
            continue;
        }
        if (!en.run(k, on_complete))
            return;
    }
}

bool realizes(const Circuit& candidate, const TargetSpec& target) {
    if (!validate(candidate).ok)
        return false;

    const auto primaries = candidate.primary_outputs();
    if (primaries.size() != target.required_outputs.size())
        return false;

    std::vector<std::string> circuit_states = candidate.state_names();
    std::vector<std::string> want_states = target.state_names;
    std::sort(circuit_states.begin(), circuit_states.end());
    std::sort(want_states.begin(), want_states.end());
    if (circuit_states != want_states)
        return false;
    if (target.state_names.size() > 1)
        throw InputError("realizes: at most one feedback state is supported");

    const std::vector<std::string> circuit_inputs = candidate.input_symbols();
    for (const std::string& s : circuit_inputs) {
        if (std::find(target.input_names.begin(), target.input_names.end(), s) ==
            target.input_names.end())
            return false;
    }

    std::vector<std::string> symbols = target.input_names;
    symbols.insert(symbols.end(), target.state_names.begin(), target.state_names.end());

    const unsigned total = 1u << symbols.size();
    for (unsigned index = 0; index < total; ++index) {
        Binding assignment;
        for (size_t j = 0; j < symbols.size(); ++j)
            assignment[symbols[j]] = ((index >> j) & 1u) != 0;

        Binding in;
        for (const std::string& s : circuit_inputs)
            in[s] = assignment.at(s);
        LatchState st;
        for (const std::string& s : target.state_names)
            st.values[s] = assignment.at(s);

        EvalResult r = eval_combinational(candidate, in, st);
        auto value_of = [&](const std::string& v) { return assignment.at(v); };
        if (!target.state_names.empty()) {
            bool want = target.required_outputs[0].eval(value_of);
            if (r.next_state.values.at(target.state_names[0]) != want)
                return false;
        }
        for (size_t j = 0; j < primaries.size(); ++j) {
            bool want = target.required_outputs[j].eval(value_of);
            if (r.outputs.at(primaries[j].name) != want)
                return false;
        }
    }
    return true;
}

SearchResult min_gates(const TargetSpec& target, const std::vector<GateRef>& library,
                       SearchBounds bounds, int line_capacity) {
    const auto start = std::chrono::steady_clock::now();
    Enumerator en(target, library, bounds, line_capacity, /*dedup_prefixes=*/true);

    SearchResult result;
    result.bounds = bounds;

    const size_t n_out = target.required_outputs.size();
    std::optional<Circuit> witness;

    Enumerator::CompleteFn on_complete = [&](Enumerator& e) -> bool {
        ++e.explored;
        const std::vector<OpenPort> open = e.open_ports();
        const std::vector<uint64_t>& want = e.required_masks();

        // Pick the feedback source, then each primary port, by function
        // match; first injective assignment in port order wins.
        std::vector<PortRef> picked;
        std::function<bool(size_t)> pick = [&](size_t slot) -> bool {
            const size_t total = static_cast<size_t>(e.state_count()) + n_out;
            if (slot == total) {
                std::vector<PortRef> sources(picked.begin(),
                                             picked.begin() + e.state_count());
                std::vector<PortRef> primaries(picked.begin() + e.state_count(), picked.end());
                witness = e.materialize(sources, primaries);
                return true;
            }
            // Slot 0 (with a state) must equal the next-state function;
            // primary slot j must equal required output j.
            const uint64_t target_mask =
                slot < static_cast<size_t>(e.state_count())
                    ? want[0]
                    : want[slot - static_cast<size_t>(e.state_count())];
            for (const OpenPort& p : open) {
                if (p.mask != target_mask)
                    continue;
                PortRef ref{p.instance, p.port};
                if (std::find(picked.begin(), picked.end(), ref) != picked.end())
                    continue;
                picked.push_back(ref);
                if (pick(slot + 1))
                    return true;
                picked.pop_back();
            }
            return false;
        };
        return !pick(0); // stop enumeration once a witness exists
    };

    for (int k = 0; k <= bounds.max_gates; ++k) {
        if (k == 0) {
            if (!target.state_names.empty() || n_out > 0)
                continue; // the empty circuit realizes nothing the targets ask
            witness = Circuit{};
        } else {
            en.run(k, on_complete);
        }
        if (witness) {
            // A found verdict is re-verified through the simulator before it
            // is reported.
            if (!validate(*witness).ok || !realizes(*witness, target))
                throw std::logic_error("search: witness failed verification");
            if (!target.state_names.empty()) {
                auto cv = check_characteristic(*witness, target.required_outputs[0]);
                if (!cv.holds)
                    throw std::logic_error("search: witness fails its characteristic equation");
            }
            if (n_out == 2) {
                auto comp = check_complementarity(*witness);
                if (want_complement(target) && !comp.complementary)
                    throw std::logic_error("search: witness outputs are not complementary");
            }
            result.verdict = SearchResult::Verdict::found;
            result.min_gates = k;
            result.witness = std::move(witness);
            break;
        }
    }

    result.explored = en.explored;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string search_result_json(const SearchResult& result, const TargetSpec& target) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json spec;
    spec["target"] = target.name;
    spec["inputs"] = target.input_names;
    spec["states"] = target.state_names;
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const Expr& e : target.required_outputs)
        outs.push_back(e.to_string());
    spec["required_outputs"] = std::move(outs);
    spec["allow_complemented_inputs"] = target.allow_complemented_inputs;
    spec["allow_constants"] = target.allow_constants;
    if (target.claimed_min_gates)
        spec["claimed_min_gates"] = *target.claimed_min_gates;
    doc["spec"] = std::move(spec);
    doc["bounds"] = {{"max_gates", result.bounds.max_gates},
                     {"max_lines", result.bounds.max_lines}};
    doc["verdict"] =
        result.verdict == SearchResult::Verdict::found ? "found" : "exhausted";
    if (result.verdict == SearchResult::Verdict::found) {
        doc["min_gates"] = result.min_gates;
        doc["witness"] = nlohmann::ordered_json::parse(serialize(*result.witness));
    }
    doc["explored"] = result.explored;
    doc["wall_seconds"] = result.wall_seconds;
    return doc.dump(2);
}

} // namespace revlatch

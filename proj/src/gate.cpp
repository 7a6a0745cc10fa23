#include "revlatch/gate.hpp"

#include <algorithm>

#include "revlatch/errors.hpp"

namespace revlatch {

namespace {

/// Input symbols are the single letters A..H, position = port index.
int symbol_index(const std::string& name) {
    if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'H')
        return name[0] - 'A';
    return -1;
}

} // namespace

GateSpec GateSpec::create(std::string name, int arity, std::vector<Expr> outputs) {
    if (name.empty())
        throw InputError("gate: name must not be empty");
    if (arity < 1)
        throw InputError("gate '" + name + "': arity must be positive");
    if (arity > max_gate_arity)
        throw CapacityError("gate '" + name + "': arity " + std::to_string(arity) +
                            " exceeds maximum " + std::to_string(max_gate_arity));
    if (static_cast<int>(outputs.size()) != arity)
        throw InputError("gate '" + name + "': expected " + std::to_string(arity) +
                         " output expressions, got " + std::to_string(outputs.size()));
    for (const Expr& e : outputs) {
        for (const std::string& v : e.variables()) {
            int idx = symbol_index(v);
            if (idx < 0 || idx >= arity)
                throw InputError("gate '" + name + "': output expression references '" + v +
                                 "', outside inputs A.." +
                                 std::string(1, static_cast<char>('A' + arity - 1)));
        }
    }

    GateSpec g;
    g.name_ = std::move(name);
    g.arity_ = arity;
    g.outputs_ = std::move(outputs);
    for (const Expr& e : g.outputs_)
        g.complexity_ += e.op_counts();

    const unsigned n = 1u << arity;
    g.table_.resize(n);
    for (unsigned i = 0; i < n; ++i)
        g.table_[i] = g.eval(BitVector::from_index(i, arity)).to_index();

    std::vector<unsigned> sorted = g.table_;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i + 1 < n; ++i) {
        if (sorted[i] == sorted[i + 1])
            throw InputError("gate '" + g.name_ +
                             "' is not reversible: two inputs map to output pattern " +
                             BitVector::from_index(sorted[i], arity).to_string());
    }
    return g;
}

GateSpec GateSpec::create(std::string name, int arity,
                          const std::vector<std::string>& output_exprs) {
    std::vector<Expr> outputs;
    outputs.reserve(output_exprs.size());
    for (const std::string& s : output_exprs)
        outputs.push_back(Expr::parse(s));
    return create(std::move(name), arity, std::move(outputs));
}

BitVector GateSpec::eval(const BitVector& input) const {
    BitVector out = BitVector::from_index(0, arity_);
    for (int p = 0; p < arity_; ++p) {
        bool v = outputs_[static_cast<size_t>(p)].eval([&](const std::string& sym) {
            return input.bit(symbol_index(sym));
        });
        out.set_bit(p, v);
    }
    return out;
}

bool GateSpec::operator==(const GateSpec& other) const {
    if (name_ != other.name_ || arity_ != other.arity_)
        return false;
    for (int p = 0; p < arity_; ++p)
        if (outputs_[static_cast<size_t>(p)].to_string() !=
            other.outputs_[static_cast<size_t>(p)].to_string())
            return false;
    return true;
}

const Library& Library::builtins() {
    static const Library lib = [] {
        Library l;
        l.add(GateSpec::create("NOT", 1, std::vector<std::string>{"!A"}));
        l.add(GateSpec::create("FG", 2, std::vector<std::string>{"A", "A^B"}));
        l.add(GateSpec::create("TG", 3, std::vector<std::string>{"A", "B", "A*B^C"}));
        l.add(GateSpec::create("FRG", 3,
                               std::vector<std::string>{"A", "!A*B^A*C", "!A*C^A*B"}));
        l.add(GateSpec::create("PG", 3, std::vector<std::string>{"A", "A^B", "A*B^C"}));
        l.add(GateSpec::create(
            "SG", 4, std::vector<std::string>{"A", "!A*B^A*C", "!A*B^A*C^D", "A*B^!A*C^D"}));
        return l;
    }();
    return lib;
}

GateRef Library::find(std::string_view name) const {
    for (const GateRef& g : gates_)
        if (g->name() == name)
            return g;
    return nullptr;
}

void Library::add(GateSpec gate) {
    if (find(gate.name()))
        throw InputError("library: duplicate gate name '" + gate.name() + "'");
    gates_.push_back(std::make_shared<const GateSpec>(std::move(gate)));
}

BitVector eval_gate(const GateSpec& gate, const BitVector& input) {
    if (input.size() != gate.arity())
        throw InputError("gate '" + gate.name() + "': expected " +
                         std::to_string(gate.arity()) + " input bits, got " +
                         std::to_string(input.size()));
    return gate.eval(input);
}

TruthTable truth_table(const GateSpec& gate, int max_arity) {
    if (gate.arity() > max_arity)
        throw CapacityError("truth table of '" + gate.name() + "': arity " +
                            std::to_string(gate.arity()) + " exceeds maximum " +
                            std::to_string(max_arity));
    TruthTable t;
    t.arity = gate.arity();
    const unsigned n = 1u << gate.arity();
    t.rows.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        t.rows.push_back(BitVector::from_index(gate.map_index(i), gate.arity()));
    return t;
}

BijectionVerdict check_bijective(const TruthTable& table) {
    for (unsigned i = 0; i < table.rows.size(); ++i) {
        for (unsigned j = i + 1; j < table.rows.size(); ++j) {
            if (table.rows[i] == table.rows[j])
                return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

TruthTable invert_table(const TruthTable& table) {
    const auto n = table.rows.size();
    TruthTable inv;
    inv.arity = table.arity;
    inv.rows.assign(n, BitVector{});
    std::vector<bool> seen(n, false);
    for (unsigned i = 0; i < n; ++i) {
        unsigned out = table.rows[i].to_index();
        if (out >= n || seen[out])
            throw InputError("table is not invertible: output rows are not a permutation");
        seen[out] = true;
        inv.rows[out] = BitVector::from_index(i, table.arity);
    }
    return inv;
}

TruthTable inverse_gate(const GateSpec& gate) { return invert_table(truth_table(gate)); }

NandVerdict check_nand_universality(const GateSpec& gate,
                                    const std::vector<std::pair<int, bool>>& const_bindings) {
    if (gate.arity() != 4)
        throw InputError("universality check: gate '" + gate.name() + "' is " +
                         std::to_string(gate.arity()) + "x" + std::to_string(gate.arity()) +
                         ", expected 4x4");
    for (const auto& [port, value] : const_bindings) {
        (void)value;
        if (port < 0 || port >= gate.arity())
            throw InputError("universality check: constant binding for port " +
                             std::to_string(port + 1) + " is out of range");
    }
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            BitVector in{a, b, 0, 0};
            for (const auto& [port, value] : const_bindings)
                in.set_bit(port, value);
            bool out4 = gate.eval(in).bit(3);
            bool nand = !(a && b);
            if (out4 != nand) {
                return {false, "A=" + std::to_string(a) + ", B=" + std::to_string(b) +
                                   " gives output4=" + std::to_string(out4) + ", NAND is " +
                                   std::to_string(nand)};
            }
        }
    }
    return {true, ""};
}

} // namespace revlatch

#include "revlatch/builders.hpp"

#include "revlatch/errors.hpp"

namespace revlatch {

namespace {

GateRef builtin(const char* name) { return Library::builtins().find(name); }

/// Appends the FG stage that copies a primary port and produces its
/// complement: FG inputs (source, 1), outputs (name, name_bar).
void add_complement_stage(Circuit& c, int source_instance, int source_port,
                          const std::string& name) {
    c.add_line(Line{"one", LineRole::constant_one, std::nullopt});
    c.add_gate(builtin("FG"),
               {Driver::from_output(source_instance, source_port), Driver::from_line("one")},
               {Disposition::primary(name), Disposition::primary(name + "bar")});
}

} // namespace

Circuit d_latch_q() {
    Circuit c;
    c.add_line(Line{"E", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"D", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"zero", LineRole::constant_zero, std::nullopt});
    c.add_gate(builtin("SG"),
               {Driver::from_line("E"), Driver::from_feedback("Q"), Driver::from_line("D"),
                Driver::from_line("zero")},
               {Disposition::garbage(), Disposition::primary("Q"), Disposition::feedback("Q"),
                Disposition::garbage()});
    return c;
}

Circuit d_latch_qq() {
    Circuit c;
    c.add_line(Line{"E", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"D", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"zero", LineRole::constant_zero, std::nullopt});
    c.add_gate(builtin("SG"),
               {Driver::from_line("E"), Driver::from_feedback("Q"), Driver::from_line("D"),
                Driver::from_line("zero")},
               {Disposition::garbage(), Disposition::consumed_by(1, 0),
                Disposition::feedback("Q"), Disposition::garbage()});
    add_complement_stage(c, 0, 1, "Q");
    return c;
}

Circuit jk_latch_q() {
    Circuit c;
    c.add_line(Line{"E", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"J", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"Kbar", LineRole::primary_input, "K"});
    c.add_line(Line{"zero", LineRole::constant_zero, std::nullopt});
    // FRG(Q, J, !K) = (Q, J*!Q + !K*Q, ...): output 2 is the D of the SG stage,
    // output 1 passes Q through so the SG can read the state without fan-out.
    c.add_gate(builtin("FRG"),
               {Driver::from_feedback("Q"), Driver::from_line("J"), Driver::from_line("Kbar")},
               {Disposition::consumed_by(1, 1), Disposition::consumed_by(1, 2),
                Disposition::garbage()});
    c.add_gate(builtin("SG"),
               {Driver::from_line("E"), Driver::from_output(0, 0), Driver::from_output(0, 1),
                Driver::from_line("zero")},
               {Disposition::garbage(), Disposition::primary("Q"), Disposition::feedback("Q"),
                Disposition::garbage()});
    return c;
}

Circuit jk_latch_qq() {
    Circuit c;
    c.add_line(Line{"E", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"J", LineRole::primary_input, std::nullopt});
    c.add_line(Line{"Kbar", LineRole::primary_input, "K"});
    c.add_line(Line{"zero", LineRole::constant_zero, std::nullopt});
    c.add_gate(builtin("FRG"),
               {Driver::from_feedback("Q"), Driver::from_line("J"), Driver::from_line("Kbar")},
               {Disposition::consumed_by(1, 1), Disposition::consumed_by(1, 2),
                Disposition::garbage()});
    c.add_gate(builtin("SG"),
               {Driver::from_line("E"), Driver::from_output(0, 0), Driver::from_output(0, 1),
                Driver::from_line("zero")},
               {Disposition::garbage(), Disposition::consumed_by(2, 0),
                Disposition::feedback("Q"), Disposition::garbage()});
    add_complement_stage(c, 1, 1, "Q");
    return c;
}

Circuit build_named_latch(std::string_view name) {
    if (name == "d-latch-q")
        return d_latch_q();
    if (name == "d-latch-qq")
        return d_latch_qq();
    if (name == "jk-latch-q")
        return jk_latch_q();
    if (name == "jk-latch-qq")
        return jk_latch_qq();
    throw InputError("unknown builder '" + std::string(name) +
                     "'; expected one of d-latch-q, d-latch-qq, jk-latch-q, jk-latch-qq");
}

const std::vector<std::string>& latch_builder_names() {
    static const std::vector<std::string> names{"d-latch-q", "d-latch-qq", "jk-latch-q",
                                                "jk-latch-qq"};
    return names;
}

} // namespace revlatch

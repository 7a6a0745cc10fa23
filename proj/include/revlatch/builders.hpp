#pragma once

#include "revlatch/circuit.hpp"

namespace revlatch {

/// D latch, output Q only: one SG with inputs (E, Q, D, 0). Output 2 is the
/// primary output, output 3 the feedback; outputs 1 and 4 are garbage.
Circuit d_latch_q();

/// D latch with Q and its complement: the SG of d_latch_q plus one FG fed
/// by SG output 2 and a constant 1.
Circuit d_latch_qq();

/// JK latch, output Q only: an FRG computing J*!Q + !K*Q from (Q, J, !K)
/// feeding the D input of the SG stage. !K enters on a complemented
/// primary-input line, not through a NOT gate.
Circuit jk_latch_q();

/// JK latch with Q and its complement: jk_latch_q plus the FG inverter
/// stage of d_latch_qq.
Circuit jk_latch_qq();

/// Builder lookup by CLI name: d-latch-q, d-latch-qq, jk-latch-q,
/// jk-latch-qq. Throws InputError for unknown names.
Circuit build_named_latch(std::string_view name);

/// The four builder names, in table order.
const std::vector<std::string>& latch_builder_names();

} // namespace revlatch

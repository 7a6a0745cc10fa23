#pragma once

#include <array>
#include <cstdint>

#include "revlatch/metrics.hpp"

namespace revlatch {

/// Reference truth table of the SG gate: row i holds the 4-bit output
/// pattern for input pattern i (A the most significant bit of i).
const std::array<uint8_t, 16>& sg_reference_rows();

/// Published cost table by id: II and III are the D latch (Q only / with
/// complement), IV and V the JK latch. Throws InputError on unknown id.
const CostTableRef& cost_table(std::string_view id);

/// All four table ids in order.
const std::vector<std::string>& cost_table_ids();

/// Hardware-complexity reference for a builder name, if one is on file
/// (d-latch-qq and jk-latch-qq).
const HwReference* hw_reference(std::string_view builder);

} // namespace revlatch

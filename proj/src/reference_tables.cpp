#include "revlatch/reference_tables.hpp"

#include "revlatch/errors.hpp"

namespace revlatch {

const std::array<uint8_t, 16>& sg_reference_rows() {
    static const std::array<uint8_t, 16> rows = {
        0b0000, 0b0011, 0b0001, 0b0010, //
        0b0110, 0b0101, 0b0111, 0b0100, //
        0b1000, 0b1011, 0b1110, 0b1101, //
        0b1001, 0b1010, 0b1111, 0b1100, //
    };
    return rows;
}

namespace {

const std::vector<CostTableRef>& cost_tables() {
    static const std::vector<CostTableRef> tables = {
        {"II",
         "D latch with output Q",
         "d-latch-q",
         {"this work", 1, 2, 1},
         {{"existing-1", 2, 2, 2}}},
        {"III",
         "D latch with output Q and complement",
         "d-latch-qq",
         {"this work", 2, 2, 2},
         {{"existing-1", 3, 2, 3}, {"existing-2", 7, 6, 7}}},
        {"IV",
         "JK latch with output Q",
         "jk-latch-q",
         {"this work", 2, 3, 2},
         {{"existing-1", 3, 3, 3}}},
        {"V",
         "JK latch with output Q and complement",
         "jk-latch-qq",
         {"this work", 3, 3, 3},
         {{"existing-1", 4, 3, 4}, {"existing-2", 10, 12, 10}}},
    };
    return tables;
}

const std::vector<HwReference>& hw_references() {
    static const std::vector<HwReference> refs = {
        {"d-latch-qq",
         OpCounts{5, 6, 3},
         {{"existing-hw", OpCounts{4, 8, 4}}},
         "claimed triple leaves the complement-stage FG free of charge; the counting rule "
         "prices FG fed a constant 1 as an inverter (+1d), giving 5a+6b+4d"},
        {"jk-latch-qq",
         OpCounts{7, 10, 7},
         {{"existing-hw", OpCounts{6, 12, 8}}},
         ""},
    };
    return refs;
}

} // namespace

const CostTableRef& cost_table(std::string_view id) {
    for (const CostTableRef& t : cost_tables())
        if (t.id == id)
            return t;
    throw InputError("unknown reference table '" + std::string(id) +
                     "'; expected one of II, III, IV, V");
}

const std::vector<std::string>& cost_table_ids() {
    static const std::vector<std::string> ids = {"II", "III", "IV", "V"};
    return ids;
}

const HwReference* hw_reference(std::string_view builder) {
    for (const HwReference& r : hw_references())
        if (r.builder == builder)
            return &r;
    return nullptr;
}

} // namespace revlatch

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "revlatch/errors.hpp"

namespace revlatch {

/// Ordered tuple of bits addressing gate/circuit ports.
/// bit(0) is the first port (input symbol A), which is also the most
/// significant bit when the vector is read as an unsigned row index.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}
    BitVector(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits)
            bits_.push_back(b ? 1 : 0);
    }

    /// Decodes a row index into `width` bits, first bit most significant.
    static BitVector from_index(unsigned index, int width) {
        std::vector<uint8_t> bits(static_cast<size_t>(width));
        for (int j = 0; j < width; ++j)
            bits[static_cast<size_t>(j)] = (index >> (width - 1 - j)) & 1u;
        return BitVector(std::move(bits));
    }

    /// Reads the bits as an unsigned integer, first bit most significant.
    unsigned to_index() const {
        unsigned v = 0;
        for (uint8_t b : bits_)
            v = (v << 1) | b;
        return v;
    }

    int size() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_[static_cast<size_t>(i)] != 0; }
    void set_bit(int i, bool v) { bits_[static_cast<size_t>(i)] = v ? 1 : 0; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (uint8_t b : bits_)
            s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

  private:
    std::vector<uint8_t> bits_;
};

} // namespace revlatch

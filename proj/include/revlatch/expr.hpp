#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace revlatch {

/// Counts of two-input XOR (alpha), two-input AND (beta) and NOT (delta)
/// operations. The unit of the hardware-complexity metric.
struct OpCounts {
    int alpha = 0;
    int beta = 0;
    int delta = 0;

    OpCounts& operator+=(const OpCounts& o) {
        alpha += o.alpha;
        beta += o.beta;
        delta += o.delta;
        return *this;
    }
    friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
    friend bool operator==(const OpCounts&, const OpCounts&) = default;

    std::string to_string() const;
};

/// Immutable boolean expression over named symbols.
///
/// Accepted syntax (one grammar for gate definitions and latch equations):
///   or    := xor (('+' | OR) xor)*
///   xor   := and (('^' | XOR) and)*
///   and   := unary (('*' | AND) unary)*
///   unary := ('!' | NOT) unary | symbol | '0' | '1' | '(' or ')'
/// Keywords are case-insensitive; symbols are [A-Za-z_][A-Za-z0-9_]*.
class Expr {
  public:
    Expr() : Expr(constant(false)) {}

    static Expr constant(bool v);
    static Expr var(std::string name);
    static Expr negate(Expr e);
    static Expr conj(Expr a, Expr b);
    static Expr disj(Expr a, Expr b);
    static Expr exclusive(Expr a, Expr b);

    /// Parses `text`; throws InputError with character position on bad syntax.
    static Expr parse(std::string_view text);

    bool eval(const std::function<bool(const std::string&)>& value_of) const;

    /// Bitwise evaluation over function masks: each symbol maps to a mask of
    /// its value across up to 64 assignments; `all_ones` bounds the NOT.
    uint64_t eval_mask(const std::function<uint64_t(const std::string&)>& mask_of,
                       uint64_t all_ones) const;

    /// XOR/AND/NOT nodes in the tree; OR counts toward alpha.
    OpCounts op_counts() const;

    /// Distinct symbols in first-use order.
    std::vector<std::string> variables() const;

    /// Canonical rendering with minimal parentheses, e.g. "!A*B^A*C^D".
    std::string to_string() const;

    bool operator==(const Expr& other) const { return equals(other); }

    struct Node; // defined in expr.cpp

  private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    bool equals(const Expr& other) const;

    std::shared_ptr<const Node> node_;
};

} // namespace revlatch

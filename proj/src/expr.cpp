#include "revlatch/expr.hpp"

#include <algorithm>
#include <cctype>

#include "revlatch/errors.hpp"

namespace revlatch {

std::string OpCounts::to_string() const {
    return std::to_string(alpha) + "a+" + std::to_string(beta) + "b+" +
           std::to_string(delta) + "d";
}

struct Expr::Node {
    enum class Kind { constant, var, not_op, and_op, or_op, xor_op };
    Kind kind;
    bool value = false;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

using Node = Expr::Node;

Expr Expr::constant(bool v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::constant;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::var;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::negate(Expr e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::not_op;
    n->lhs = e.node_;
    return Expr(std::move(n));
}

Expr Expr::conj(Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::and_op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Expr(std::move(n));
}

Expr Expr::disj(Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::or_op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Expr(std::move(n));
}

Expr Expr::exclusive(Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::xor_op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Expr(std::move(n));
}

namespace {

enum class Tok { symbol, zero, one, not_t, and_t, or_t, xor_t, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::end, "", start};
            return;
        }
        char c = text_[pos_];
        if (c == '0' || c == '1') {
            ++pos_;
            current_ = {c == '0' ? Tok::zero : Tok::one, std::string(1, c), start};
            return;
        }
        switch (c) {
        case '!': ++pos_; current_ = {Tok::not_t, "!", start}; return;
        case '*': ++pos_; current_ = {Tok::and_t, "*", start}; return;
        case '+': ++pos_; current_ = {Tok::or_t, "+", start}; return;
        case '^': ++pos_; current_ = {Tok::xor_t, "^", start}; return;
        case '(': ++pos_; current_ = {Tok::lparen, "(", start}; return;
        case ')': ++pos_; current_ = {Tok::rparen, ")", start}; return;
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            std::string upper = word;
            std::transform(upper.begin(), upper.end(), upper.begin(),
                           [](unsigned char ch) { return std::toupper(ch); });
            if (upper == "NOT")
                current_ = {Tok::not_t, word, start};
            else if (upper == "AND")
                current_ = {Tok::and_t, word, start};
            else if (upper == "OR")
                current_ = {Tok::or_t, word, start};
            else if (upper == "XOR")
                current_ = {Tok::xor_t, word, start};
            else
                current_ = {Tok::symbol, word, start};
            return;
        }
        throw InputError("expression: unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(start));
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token current_{Tok::end, "", 0};
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Expr parse() {
        Expr e = parse_or();
        if (lex_.peek().kind != Tok::end)
            throw InputError("expression: trailing input at position " +
                             std::to_string(lex_.peek().pos));
        return e;
    }

  private:
    Expr parse_or() {
        Expr e = parse_xor();
        while (lex_.peek().kind == Tok::or_t) {
            lex_.take();
            e = Expr::disj(std::move(e), parse_xor());
        }
        return e;
    }

    Expr parse_xor() {
        Expr e = parse_and();
        while (lex_.peek().kind == Tok::xor_t) {
            lex_.take();
            e = Expr::exclusive(std::move(e), parse_and());
        }
        return e;
    }

    Expr parse_and() {
        Expr e = parse_unary();
        while (lex_.peek().kind == Tok::and_t) {
            lex_.take();
            e = Expr::conj(std::move(e), parse_unary());
        }
        return e;
    }

    Expr parse_unary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::not_t:
            lex_.take();
            return Expr::negate(parse_unary());
        case Tok::zero:
            lex_.take();
            return Expr::constant(false);
        case Tok::one:
            lex_.take();
            return Expr::constant(true);
        case Tok::symbol: {
            Token sym = lex_.take();
            return Expr::var(sym.text);
        }
        case Tok::lparen: {
            lex_.take();
            Expr e = parse_or();
            if (lex_.peek().kind != Tok::rparen)
                throw InputError("expression: missing ')' at position " +
                                 std::to_string(lex_.peek().pos));
            lex_.take();
            return e;
        }
        default:
            throw InputError("expression: expected operand at position " +
                             std::to_string(t.pos));
        }
    }

    Lexer lex_;
};

bool eval_node(const Node& n, const std::function<bool(const std::string&)>& value_of) {
    switch (n.kind) {
    case Node::Kind::constant: return n.value;
    case Node::Kind::var: return value_of(n.name);
    case Node::Kind::not_op: return !eval_node(*n.lhs, value_of);
    case Node::Kind::and_op: return eval_node(*n.lhs, value_of) && eval_node(*n.rhs, value_of);
    case Node::Kind::or_op: return eval_node(*n.lhs, value_of) || eval_node(*n.rhs, value_of);
    case Node::Kind::xor_op: return eval_node(*n.lhs, value_of) != eval_node(*n.rhs, value_of);
    }
    return false;
}

uint64_t eval_mask_node(const Node& n, const std::function<uint64_t(const std::string&)>& mask_of,
                        uint64_t all_ones) {
    switch (n.kind) {
    case Node::Kind::constant: return n.value ? all_ones : 0;
    case Node::Kind::var: return mask_of(n.name) & all_ones;
    case Node::Kind::not_op: return ~eval_mask_node(*n.lhs, mask_of, all_ones) & all_ones;
    case Node::Kind::and_op:
        return eval_mask_node(*n.lhs, mask_of, all_ones) & eval_mask_node(*n.rhs, mask_of, all_ones);
    case Node::Kind::or_op:
        return eval_mask_node(*n.lhs, mask_of, all_ones) | eval_mask_node(*n.rhs, mask_of, all_ones);
    case Node::Kind::xor_op:
        return eval_mask_node(*n.lhs, mask_of, all_ones) ^ eval_mask_node(*n.rhs, mask_of, all_ones);
    }
    return 0;
}

void count_node(const Node& n, OpCounts& c) {
    switch (n.kind) {
    case Node::Kind::constant:
    case Node::Kind::var:
        return;
    case Node::Kind::not_op:
        ++c.delta;
        count_node(*n.lhs, c);
        return;
    case Node::Kind::and_op:
        ++c.beta;
        break;
    case Node::Kind::or_op:  // no OR bucket in the triple; counted with XOR
    case Node::Kind::xor_op:
        ++c.alpha;
        break;
    }
    count_node(*n.lhs, c);
    count_node(*n.rhs, c);
}

void collect_vars(const Node& n, std::vector<std::string>& out) {
    switch (n.kind) {
    case Node::Kind::constant:
        return;
    case Node::Kind::var:
        if (std::find(out.begin(), out.end(), n.name) == out.end())
            out.push_back(n.name);
        return;
    case Node::Kind::not_op:
        collect_vars(*n.lhs, out);
        return;
    default:
        collect_vars(*n.lhs, out);
        collect_vars(*n.rhs, out);
        return;
    }
}

int precedence(Node::Kind k) {
    switch (k) {
    case Node::Kind::or_op: return 1;
    case Node::Kind::xor_op: return 2;
    case Node::Kind::and_op: return 3;
    default: return 4;
    }
}

void render(const Node& n, int parent_prec, std::string& out) {
    int prec = precedence(n.kind);
    bool parens = prec < parent_prec;
    if (parens)
        out.push_back('(');
    switch (n.kind) {
    case Node::Kind::constant:
        out.push_back(n.value ? '1' : '0');
        break;
    case Node::Kind::var:
        out += n.name;
        break;
    case Node::Kind::not_op:
        out.push_back('!');
        render(*n.lhs, 4, out);
        break;
    case Node::Kind::and_op:
        render(*n.lhs, prec, out);
        out.push_back('*');
        render(*n.rhs, prec + 1, out);
        break;
    case Node::Kind::xor_op:
        render(*n.lhs, prec, out);
        out.push_back('^');
        render(*n.rhs, prec + 1, out);
        break;
    case Node::Kind::or_op:
        render(*n.lhs, prec, out);
        out.push_back('+');
        render(*n.rhs, prec + 1, out);
        break;
    }
    if (parens)
        out.push_back(')');
}

bool nodes_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Node::Kind::constant: return a.value == b.value;
    case Node::Kind::var: return a.name == b.name;
    case Node::Kind::not_op: return nodes_equal(*a.lhs, *b.lhs);
    default: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
}

} // namespace

Expr Expr::parse(std::string_view text) { return Parser(text).parse(); }

bool Expr::eval(const std::function<bool(const std::string&)>& value_of) const {
    return eval_node(*node_, value_of);
}

uint64_t Expr::eval_mask(const std::function<uint64_t(const std::string&)>& mask_of,
                         uint64_t all_ones) const {
    return eval_mask_node(*node_, mask_of, all_ones);
}

OpCounts Expr::op_counts() const {
    OpCounts c;
    count_node(*node_, c);
    return c;
}

std::vector<std::string> Expr::variables() const {
    std::vector<std::string> out;
    collect_vars(*node_, out);
    return out;
}

std::string Expr::to_string() const {
    std::string out;
    render(*node_, 0, out);
    return out;
}

bool Expr::equals(const Expr& other) const { return nodes_equal(*node_, *other.node_); }

} // namespace revlatch

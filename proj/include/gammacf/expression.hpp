#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace gammacf {

// Arithmetic expression over integer literals and named parameters with
// + - * / ^ and parentheses; '/' is exact division, '^' takes an integer
// exponent and binds tighter than unary minus. The source text is retained
// verbatim so expressions round-trip through serialization.
//
// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ['^' ['-'] digits]
//   atom   := digits | ident | '(' expr ')'
class expression {
    struct node;
    using node_ptr = std::shared_ptr<const node>;
    struct node {
        enum class kind { literal, ident, add, sub, mul, div, neg, pow };
        kind k;
        rational lit;       // literal
        std::string name;   // ident
        node_ptr a, b;      // operands
        long exponent = 0;  // pow
    };

  public:
    expression() = default;

    static expression parse(const std::string& text) {
        parser p{text, 0};
        node_ptr root = p.parse_expr();
        p.skip_ws();
        if (p.pos != text.size())
            throw config_error("expression: trailing input at position " +
                               std::to_string(p.pos) + " in '" + text + "'");
        expression e;
        e.src_ = text;
        e.root_ = std::move(root);
        return e;
    }

    bool empty() const { return root_ == nullptr; }
    const std::string& source() const { return src_; }
    std::string to_string() const { return src_; }

    // Evaluates in the field F (rational, or rational_function with x bound
    // symbolically). Unbound identifiers throw unbound_parameter.
    template <class F>
    F eval(const std::map<std::string, F>& env) const {
        if (!root_) throw config_error("expression: empty");
        return eval_node<F>(*root_, env);
    }

    // Names referenced by the expression, in first-appearance order.
    std::vector<std::string> parameters() const {
        std::vector<std::string> out;
        if (root_) collect(*root_, out);
        return out;
    }

  private:
    template <class F>
    static F eval_node(const node& n, const std::map<std::string, F>& env) {
        switch (n.k) {
            case node::kind::literal:
                return F(n.lit);
            case node::kind::ident: {
                auto it = env.find(n.name);
                if (it == env.end()) throw unbound_parameter(n.name);
                return it->second;
            }
            case node::kind::add:
                return eval_node<F>(*n.a, env) + eval_node<F>(*n.b, env);
            case node::kind::sub:
                return eval_node<F>(*n.a, env) - eval_node<F>(*n.b, env);
            case node::kind::mul:
                return eval_node<F>(*n.a, env) * eval_node<F>(*n.b, env);
            case node::kind::div:
                return eval_node<F>(*n.a, env) / eval_node<F>(*n.b, env);
            case node::kind::neg:
                return -eval_node<F>(*n.a, env);
            case node::kind::pow: {
                F base = eval_node<F>(*n.a, env);
                long e = n.exponent;
                if (e < 0) return F(rational(1)) / pow_nonneg(base, -e);
                return pow_nonneg(base, e);
            }
        }
        throw config_error("expression: corrupt node");
    }

    template <class F>
    static F pow_nonneg(const F& base, long e) {
        F acc = F(rational(1));
        F b = base;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * b;
            if (e > 1) b = b * b;
        }
        return acc;
    }

    static void collect(const node& n, std::vector<std::string>& out) {
        if (n.k == node::kind::ident) {
            for (const auto& s : out)
                if (s == n.name) return;
            out.push_back(n.name);
            return;
        }
        if (n.a) collect(*n.a, out);
        if (n.b) collect(*n.b, out);
    }

    struct parser {
        const std::string& s;
        size_t pos;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        [[noreturn]] void fail(const std::string& what) const {
            throw config_error("expression: " + what + " at position " +
                               std::to_string(pos) + " in '" + s + "'");
        }

        node_ptr parse_expr() {
            node_ptr lhs = parse_term();
            for (;;) {
                if (eat('+'))
                    lhs = make_binary(node::kind::add, lhs, parse_term());
                else if (eat('-'))
                    lhs = make_binary(node::kind::sub, lhs, parse_term());
                else
                    return lhs;
            }
        }
        node_ptr parse_term() {
            node_ptr lhs = parse_factor();
            for (;;) {
                if (eat('*'))
                    lhs = make_binary(node::kind::mul, lhs, parse_factor());
                else if (eat('/'))
                    lhs = make_binary(node::kind::div, lhs, parse_factor());
                else
                    return lhs;
            }
        }
        node_ptr parse_factor() {
            if (eat('-')) {
                auto n = std::make_shared<node>();
                n->k = node::kind::neg;
                n->a = parse_factor();
                return n;
            }
            return parse_power();
        }
        node_ptr parse_power() {
            node_ptr base = parse_atom();
            if (!eat('^')) return base;
            skip_ws();
            bool negexp = eat('-');
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected integer exponent");
            long e = std::stol(s.substr(start, pos - start));
            auto n = std::make_shared<node>();
            n->k = node::kind::pow;
            n->a = base;
            n->exponent = negexp ? -e : e;
            return n;
        }
        node_ptr parse_atom() {
            skip_ws();
            if (pos >= s.size()) fail("unexpected end of input");
            char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                auto n = std::make_shared<node>();
                n->k = node::kind::literal;
                n->lit = rational(s.substr(start, pos - start));
                return n;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                    ++pos;
                auto n = std::make_shared<node>();
                n->k = node::kind::ident;
                n->name = s.substr(start, pos - start);
                return n;
            }
            if (eat('(')) {
                node_ptr inner = parse_expr();
                if (!eat(')')) fail("expected ')'");
                return inner;
            }
            fail(std::string("unexpected character '") + c + "'");
        }

        static node_ptr make_binary(typename node::kind k, node_ptr a, node_ptr b) {
            auto n = std::make_shared<node>();
            n->k = k;
            n->a = std::move(a);
            n->b = std::move(b);
            return n;
        }
    };

    std::string src_;
    node_ptr root_;
};

}  // namespace gammacf

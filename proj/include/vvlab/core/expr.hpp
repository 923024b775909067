#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vvlab {

/// Tiny arithmetic expression evaluator for initial-data and schedule formulas.
/// Supports + - * / ^, parentheses, unary minus, the constant pi, named
/// variables, and the functions sin cos tan tanh exp log sqrt abs.
class Expr {
 public:
  using Env = std::map<std::string, double>;

  static Expr parse(const std::string& text) {
    Parser p(text);
    Expr e;
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos_ != p.s_.size())
      throw std::invalid_argument("expression: trailing input at position " +
                                  std::to_string(p.pos_) + " in \"" + text + "\"");
    e.text_ = text;
    return e;
  }

  double eval(const Env& env) const { return root_->eval(env); }
  double eval_x(double x) const { return eval({{"x", x}}); }
  const std::string& text() const { return text_; }

 private:
  struct Node {
    virtual ~Node() = default;
    virtual double eval(const Env&) const = 0;
  };
  using NodePtr = std::shared_ptr<const Node>;

  struct Num : Node {
    double v;
    explicit Num(double v_) : v(v_) {}
    double eval(const Env&) const override { return v; }
  };
  struct Var : Node {
    std::string name;
    explicit Var(std::string n) : name(std::move(n)) {}
    double eval(const Env& env) const override {
      auto it = env.find(name);
      if (it == env.end()) throw std::invalid_argument("expression: unknown variable '" + name + "'");
      return it->second;
    }
  };
  struct Bin : Node {
    char op;
    NodePtr a, b;
    Bin(char o, NodePtr a_, NodePtr b_) : op(o), a(std::move(a_)), b(std::move(b_)) {}
    double eval(const Env& env) const override {
      const double x = a->eval(env), y = b->eval(env);
      switch (op) {
        case '+': return x + y;
        case '-': return x - y;
        case '*': return x * y;
        case '/': return x / y;
        default: return std::pow(x, y);
      }
    }
  };
  struct Neg : Node {
    NodePtr a;
    explicit Neg(NodePtr a_) : a(std::move(a_)) {}
    double eval(const Env& env) const override { return -a->eval(env); }
  };
  struct Fun : Node {
    double (*f)(double);
    NodePtr a;
    Fun(double (*f_)(double), NodePtr a_) : f(f_), a(std::move(a_)) {}
    double eval(const Env& env) const override { return f(a->eval(env)); }
  };

  struct Parser {
    std::string s_;
    size_t pos_ = 0;
    explicit Parser(std::string s) : s_(std::move(s)) {}

    void skip_ws() {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == c) {
        ++pos_;
        return true;
      }
      return false;
    }
    void expect(char c) {
      if (!accept(c))
        throw std::invalid_argument(std::string("expression: expected '") + c + "' at position " +
                                    std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    NodePtr parse_expr() {
      NodePtr n = parse_term();
      for (;;) {
        if (accept('+')) n = std::make_shared<Bin>('+', n, parse_term());
        else if (accept('-')) n = std::make_shared<Bin>('-', n, parse_term());
        else return n;
      }
    }
    NodePtr parse_term() {
      NodePtr n = parse_factor();
      for (;;) {
        if (accept('*')) n = std::make_shared<Bin>('*', n, parse_factor());
        else if (accept('/')) n = std::make_shared<Bin>('/', n, parse_factor());
        else return n;
      }
    }
    NodePtr parse_factor() {
      NodePtr base = parse_unary();
      if (accept('^')) return std::make_shared<Bin>('^', base, parse_factor());
      return base;
    }
    NodePtr parse_unary() {
      if (accept('-')) return std::make_shared<Neg>(parse_unary());
      if (accept('+')) return parse_unary();
      return parse_primary();
    }
    NodePtr parse_primary() {
      skip_ws();
      if (pos_ >= s_.size())
        throw std::invalid_argument("expression: unexpected end of input in \"" + s_ + "\"");
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        char* end = nullptr;
        const double v = std::strtod(s_.c_str() + pos_, &end);
        pos_ = static_cast<size_t>(end - s_.c_str());
        return std::make_shared<Num>(v);
      }
      if (c == '(') {
        ++pos_;
        NodePtr n = parse_expr();
        expect(')');
        return n;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (accept('(')) {
          NodePtr arg = parse_expr();
          expect(')');
          if (name == "sin") return std::make_shared<Fun>(+[](double x) { return std::sin(x); }, arg);
          if (name == "cos") return std::make_shared<Fun>(+[](double x) { return std::cos(x); }, arg);
          if (name == "tan") return std::make_shared<Fun>(+[](double x) { return std::tan(x); }, arg);
          if (name == "tanh") return std::make_shared<Fun>(+[](double x) { return std::tanh(x); }, arg);
          if (name == "exp") return std::make_shared<Fun>(+[](double x) { return std::exp(x); }, arg);
          if (name == "log") return std::make_shared<Fun>(+[](double x) { return std::log(x); }, arg);
          if (name == "sqrt") return std::make_shared<Fun>(+[](double x) { return std::sqrt(x); }, arg);
          if (name == "abs") return std::make_shared<Fun>(+[](double x) { return std::abs(x); }, arg);
          throw std::invalid_argument("expression: unknown function '" + name + "'");
        }
        if (name == "pi") return std::make_shared<Num>(3.14159265358979323846);
        return std::make_shared<Var>(name);
      }
      throw std::invalid_argument(std::string("expression: unexpected character '") + c +
                                  "' at position " + std::to_string(pos_));
    }
  };

  NodePtr root_;
  std::string text_;
};

}  // namespace vvlab

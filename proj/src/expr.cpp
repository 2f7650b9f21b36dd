#include "toric/expr.hpp"

#include <cctype>

#include "toric/error.hpp"

namespace toric {

unsigned ClassSymbol::degree(unsigned n) const {
  switch (kind) {
    case Kind::Chern: return 2 * index;
    case Kind::Pontryagin: return 4 * index;
    case Kind::Euler: return 2 * n;
    case Kind::Omega:
    case Kind::OmegaTilde: return 2;
  }
  return 0;
}

std::string ClassSymbol::name() const {
  switch (kind) {
    case Kind::Chern: return "c" + std::to_string(index);
    case Kind::Pontryagin: return "p" + std::to_string(index);
    case Kind::Euler: return "eu";
    case Kind::Omega: return "Omega";
    case Kind::OmegaTilde: return "omegatilde";
  }
  return "?";
}

ClassExpr ClassExpr::literal(Rat v) {
  ClassExpr e;
  e.op = Op::Literal;
  e.value = std::move(v);
  return e;
}

ClassExpr ClassExpr::sym(ClassSymbol s) {
  ClassExpr e;
  e.op = Op::Symbol;
  e.symbol = s;
  return e;
}

ClassExpr ClassExpr::integral(ClassExpr inner) {
  ClassExpr e;
  e.op = Op::Integral;
  e.children.push_back(std::move(inner));
  return e;
}

ClassExpr ClassExpr::power(ClassExpr base, unsigned exp) {
  ClassExpr e;
  e.op = Op::Power;
  e.exponent = exp;
  e.children.push_back(std::move(base));
  return e;
}

ClassExpr ClassExpr::product(std::vector<ClassExpr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  ClassExpr e;
  e.op = Op::Product;
  e.children = std::move(factors);
  return e;
}

ClassExpr ClassExpr::sum(std::vector<ClassExpr> terms, std::vector<int> signs) {
  if (terms.size() == 1 && signs.front() > 0) return std::move(terms.front());
  ClassExpr e;
  e.op = Op::Sum;
  e.children = std::move(terms);
  e.signs = std::move(signs);
  return e;
}

bool ClassExpr::contains_integral() const {
  if (op == Op::Integral) return true;
  for (const auto& c : children)
    if (c.contains_integral()) return true;
  return false;
}

std::vector<ClassSymbol> ClassExpr::symbols() const {
  std::vector<ClassSymbol> out;
  if (op == Op::Symbol) out.push_back(symbol);
  for (const auto& c : children) {
    auto sub = c.symbols();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

constexpr const char* kAtomStart = "number, c<i>, p<i>, eu, Omega, omegatilde, I[ or (";

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ClassExpr parse() {
    ClassExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "'+', '-', '*', '^' or end of input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int integral_depth_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (src_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool peek_digit() const {
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  unsigned uint_literal(const char* what) {
    skip_ws();
    if (!peek_digit()) throw SyntaxError(pos_, what);
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) throw SyntaxError(start, std::string(what) + " (at most 9 digits)");
    return static_cast<unsigned>(std::stoul(d));
  }

  ClassExpr expr() {
    std::vector<ClassExpr> terms;
    std::vector<int> signs;
    terms.push_back(term());
    signs.push_back(1);
    while (true) {
      if (accept('+')) {
        signs.push_back(1);
      } else if (accept('-')) {
        signs.push_back(-1);
      } else {
        break;
      }
      terms.push_back(term());
    }
    return ClassExpr::sum(std::move(terms), std::move(signs));
  }

  ClassExpr term() {
    std::vector<ClassExpr> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    return ClassExpr::product(std::move(factors));
  }

  ClassExpr factor() {
    ClassExpr base = atom();
    if (accept('^')) return ClassExpr::power(std::move(base), uint_literal("exponent (unsigned integer)"));
    return base;
  }

  ClassExpr atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, kAtomStart);
    const std::size_t start = pos_;
    const char c = src_[pos_];

    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      if (c == '-') {
        text = "-";
        ++pos_;
        if (!peek_digit()) throw SyntaxError(pos_, "digit");
      }
      text += digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        if (!peek_digit()) throw SyntaxError(pos_, "denominator digits");
        std::size_t den_pos = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw SyntaxError(den_pos, "nonzero denominator");
        text += "/" + den;
      }
      return ClassExpr::literal(parse_rat(text));
    }
    if (c == '(') {
      ++pos_;
      ClassExpr inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return inner;
    }
    if (c == 'I') {
      ++pos_;
      if (!accept('[')) throw SyntaxError(pos_, "'['");
      if (integral_depth_ > 0)
        throw Error(ErrorKind::NestedIntegral,
                    "integral at position " + std::to_string(start) + " is inside another integral");
      ++integral_depth_;
      ClassExpr inner = expr();
      --integral_depth_;
      if (!accept(']')) throw SyntaxError(pos_, "']'");
      return ClassExpr::integral(std::move(inner));
    }
    if (accept_word("omegatilde")) return ClassExpr::sym({ClassSymbol::Kind::OmegaTilde, 0});
    if (accept_word("Omega")) return ClassExpr::sym({ClassSymbol::Kind::Omega, 0});
    if (accept_word("eu")) return ClassExpr::sym({ClassSymbol::Kind::Euler, 0});
    if ((c == 'c' || c == 'p') && pos_ + 1 < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      unsigned idx = uint_literal("class index");
      if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
        throw SyntaxError(start, kAtomStart);
      return ClassExpr::sym({c == 'c' ? ClassSymbol::Kind::Chern : ClassSymbol::Kind::Pontryagin, idx});
    }
    throw SyntaxError(start, kAtomStart);
  }
};

bool needs_parens(const ClassExpr& e, ClassExpr::Op parent) {
  using Op = ClassExpr::Op;
  if (e.op == Op::Sum) return parent == Op::Product || parent == Op::Power;
  if (e.op == Op::Product) return parent == Op::Power;
  if (e.op == Op::Power) return parent == Op::Power;
  if (e.op == Op::Literal) return parent == Op::Power && (e.value < 0 || !is_integer(e.value));
  return false;
}

std::string wrapped(const ClassExpr& e, ClassExpr::Op parent) {
  std::string s = to_string(e);
  return needs_parens(e, parent) ? "(" + s + ")" : s;
}

}  // namespace

ClassExpr parse_class_expr(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const ClassExpr& e) {
  using Op = ClassExpr::Op;
  switch (e.op) {
    case Op::Literal: return to_string(e.value);
    case Op::Symbol: return e.symbol.name();
    case Op::Integral: return "I[" + to_string(e.children.front()) + "]";
    case Op::Power: return wrapped(e.children.front(), Op::Power) + "^" + std::to_string(e.exponent);
    case Op::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += '*';
        s += wrapped(e.children[i], Op::Product);
      }
      return s;
    }
    case Op::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        std::string t = wrapped(e.children[i], Op::Sum);
        // A negative literal as a later summand would read as "- -3".
        bool neg_lit = e.children[i].op == Op::Literal && e.children[i].value < 0;
        // An inner sum after a minus sign keeps its parentheses.
        neg_lit = neg_lit || (e.children[i].op == Op::Sum && (i > 0 || e.signs[i] < 0));
        if (i == 0) {
          s += e.signs[i] < 0 ? "0 - " + (neg_lit ? "(" + t + ")" : t) : t;
        } else {
          s += e.signs[i] < 0 ? " - " : " + ";
          s += neg_lit ? "(" + t + ")" : t;
        }
      }
      return s;
    }
  }
  return {};
}

std::optional<int> homogeneous_degree(const ClassExpr& e, unsigned n) {
  using Op = ClassExpr::Op;
  switch (e.op) {
    case Op::Literal: return 0;
    case Op::Symbol: return static_cast<int>(e.symbol.degree(n));
    case Op::Integral: {
      auto d = homogeneous_degree(e.children.front(), n);
      if (!d) return std::nullopt;
      return *d - 2 * static_cast<int>(n);
    }
    case Op::Power: {
      auto d = homogeneous_degree(e.children.front(), n);
      if (!d) return std::nullopt;
      return *d * static_cast<int>(e.exponent);
    }
    case Op::Product: {
      int total = 0;
      for (const auto& c : e.children) {
        auto d = homogeneous_degree(c, n);
        if (!d) return std::nullopt;
        total += *d;
      }
      return total;
    }
    case Op::Sum: {
      std::optional<int> common;
      for (const auto& c : e.children) {
        if (c.op == Op::Literal && c.value == 0) continue;
        auto d = homogeneous_degree(c, n);
        if (!d) return std::nullopt;
        if (common && *common != *d) return std::nullopt;
        common = d;
      }
      return common.value_or(0);
    }
  }
  return std::nullopt;
}

}  // namespace toric

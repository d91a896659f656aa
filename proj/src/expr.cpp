#include "superchern/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "superchern/errors.hpp"

namespace superchern {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(std::string("syntax error: unexpected character '") + c + "'", col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", src.size() + 1});
  return out;
}

bool is_indexed(const std::string& ident, std::string_view prefix) {
  if (ident.size() <= prefix.size() || ident.compare(0, prefix.size(), prefix) != 0) return false;
  for (std::size_t k = prefix.size(); k < ident.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(ident[k]))) return false;
  }
  return true;
}

std::size_t parse_index(const Token& tok, std::size_t prefix_len) {
  const std::string digits = tok.text.substr(prefix_len);
  if (digits.size() > 6) throw ParseError("unknown variable '" + tok.text + "'", tok.column);
  return static_cast<std::size_t>(std::stoul(digits));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<ExprNode> parse() {
    auto root = expr();
    if (peek().kind != Tok::end) unexpected(peek());
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] static void unexpected(const Token& tok) {
    if (tok.kind == Tok::end) throw ParseError("syntax error: unexpected end of input", tok.column);
    throw ParseError("syntax error: unexpected '" + tok.text + "'", tok.column);
  }

  static std::unique_ptr<ExprNode> binary(ExprNode::Kind kind, std::size_t column,
                                          std::unique_ptr<ExprNode> lhs, std::unique_ptr<ExprNode> rhs) {
    auto node = std::make_unique<ExprNode>();
    node->kind = kind;
    node->column = column;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::unique_ptr<ExprNode> expr() {
    auto lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token op = advance();
      auto rhs = term();
      lhs = binary(op.kind == Tok::plus ? ExprNode::Kind::add : ExprNode::Kind::sub, op.column,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<ExprNode> term() {
    auto lhs = unary();
    while (peek().kind == Tok::star) {
      const Token op = advance();
      auto rhs = unary();
      lhs = binary(ExprNode::Kind::mul, op.column, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<ExprNode> unary() {
    if (peek().kind == Tok::minus) {
      const Token op = advance();
      auto node = std::make_unique<ExprNode>();
      node->kind = ExprNode::Kind::neg;
      node->column = op.column;
      node->lhs = unary();
      return node;
    }
    return power();
  }

  std::unique_ptr<ExprNode> power() {
    auto base = primary();
    while (peek().kind == Tok::caret) {
      const Token op = advance();
      const Token& next = peek();
      if (next.kind == Tok::integer) {
        advance();
        if (next.text.size() > 6) throw ParseError("exponent too large", next.column);
        auto node = binary(ExprNode::Kind::pow, op.column, std::move(base), nullptr);
        node->exponent = static_cast<unsigned>(std::stoul(next.text));
        base = std::move(node);
      } else if (next.kind == Tok::minus) {
        throw ParseError("negative exponent", next.column);
      } else if (next.kind == Tok::ident && is_indexed(next.text, "dx")) {
        base = binary(ExprNode::Kind::wedge, op.column, std::move(base), primary());
      } else {
        unexpected(next);
      }
    }
    return base;
  }

  std::unique_ptr<ExprNode> primary() {
    const Token tok = advance();
    auto node = std::make_unique<ExprNode>();
    node->column = tok.column;
    switch (tok.kind) {
      case Tok::integer: {
        node->kind = ExprNode::Kind::literal;
        mpz_class num(tok.text, 10);
        mpz_class den = 1;
        if (peek().kind == Tok::slash) {
          advance();
          const Token d = advance();
          if (d.kind != Tok::integer) unexpected(d);
          den = mpz_class(d.text, 10);
          if (den == 0) throw ParseError("zero denominator", d.column);
        }
        node->value = Rational(num, den);
        node->value.canonicalize();
        return node;
      }
      case Tok::ident:
        if (is_indexed(tok.text, "dx")) {
          node->kind = ExprNode::Kind::dx;
          node->index = parse_index(tok, 2);
        } else if (is_indexed(tok.text, "x")) {
          node->kind = ExprNode::Kind::variable;
          node->index = parse_index(tok, 1);
        } else {
          throw ParseError("unknown variable '" + tok.text + "'", tok.column);
        }
        return node;
      case Tok::lparen: {
        auto inner = expr();
        if (peek().kind != Tok::rparen) unexpected(peek());
        advance();
        return inner;
      }
      default:
        unexpected(tok);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void check_index(const ExprNode& node, std::size_t n_vars) {
  if (node.index == 0 || node.index > n_vars) {
    const std::string sym = (node.kind == ExprNode::Kind::dx ? "dx" : "x") + std::to_string(node.index);
    throw ParseError("unknown variable '" + sym + "' (chart has " + std::to_string(n_vars) + " variables)",
                     node.column);
  }
}

Poly lower_poly(const ExprNode& node, std::size_t n) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::literal:
      return Poly::constant(n, node.value);
    case K::variable:
      check_index(node, n);
      return Poly::variable(n, node.index - 1);
    case K::dx:
    case K::wedge:
      throw ParseError("form symbol not allowed in a coefficient expression", node.column);
    case K::add:
      return lower_poly(*node.lhs, n) + lower_poly(*node.rhs, n);
    case K::sub:
      return lower_poly(*node.lhs, n) - lower_poly(*node.rhs, n);
    case K::mul:
      return lower_poly(*node.lhs, n) * lower_poly(*node.rhs, n);
    case K::neg:
      return -lower_poly(*node.lhs, n);
    case K::pow: {
      const Poly base = lower_poly(*node.lhs, n);
      Poly out = Poly::constant(n, 1);
      for (unsigned k = 0; k < node.exponent; ++k) out = out * base;
      return out;
    }
  }
  throw std::logic_error("unhandled expression node");
}

Form lower_form(const ExprNode& node, std::size_t n) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::literal:
      return Form::constant(n, node.value);
    case K::variable:
      check_index(node, n);
      return Form::from_poly(Poly::variable(n, node.index - 1));
    case K::dx:
      check_index(node, n);
      return Form::dx(n, node.index - 1);
    case K::add:
      return lower_form(*node.lhs, n) + lower_form(*node.rhs, n);
    case K::sub:
      return lower_form(*node.lhs, n) - lower_form(*node.rhs, n);
    case K::mul:
    case K::wedge:
      return wedge(lower_form(*node.lhs, n), lower_form(*node.rhs, n));
    case K::neg:
      return -lower_form(*node.lhs, n);
    case K::pow: {
      const Form base = lower_form(*node.lhs, n);
      Form out = Form::constant(n, 1);
      for (unsigned k = 0; k < node.exponent; ++k) out = wedge(out, base);
      return out;
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

ExprAst parse_expression(std::string_view src) {
  Parser parser(tokenize(src));
  return ExprAst{parser.parse()};
}

Poly lower_to_poly(const ExprAst& ast, std::size_t n_vars) { return lower_poly(*ast.root, n_vars); }

Form lower_to_form(const ExprAst& ast, std::size_t n_vars) { return lower_form(*ast.root, n_vars); }

}  // namespace superchern

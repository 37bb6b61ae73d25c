#include "colombeau/expr.hpp"

#include <cctype>
#include <vector>

#include "colombeau/error.hpp"
#include "colombeau/parse.hpp"

namespace colombeau {

enum class Op { num, x, eps, add, sub, mul, div, pow, neg, abs, exp, log, sqrt, min, max };

struct Expr::Node {
  Op op;
  double value = 0;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, std::vector<NodePtr> args = {}, double value = 0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->value = value;
  n->args = std::move(args);
  return n;
}

NodePtr parse_sum(Cursor& cur);
NodePtr parse_unary(Cursor& cur);

NodePtr parse_atom(Cursor& cur) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return make(Op::num, {}, cur.number());
  if (cur.accept('(')) {
    NodePtr e = parse_sum(cur);
    cur.expect(')');
    return e;
  }
  if (cur.accept_word("x")) return make(Op::x);
  if (cur.accept_word("eps")) return make(Op::eps);
  static const std::pair<const char*, Op> unary_fns[] = {
      {"abs", Op::abs}, {"exp", Op::exp}, {"log", Op::log}, {"sqrt", Op::sqrt}};
  for (const auto& [name, op] : unary_fns) {
    if (cur.accept_word(name)) {
      cur.expect('(');
      NodePtr a = parse_sum(cur);
      cur.expect(')');
      return make(op, {a});
    }
  }
  for (const auto& [name, op] : {std::pair{"min", Op::min}, std::pair{"max", Op::max}}) {
    if (cur.accept_word(name)) {
      cur.expect('(');
      NodePtr a = parse_sum(cur);
      cur.expect(',');
      NodePtr b = parse_sum(cur);
      cur.expect(')');
      return make(op, {a, b});
    }
  }
  cur.fail("expected an operand");
}

NodePtr parse_pow(Cursor& cur) {
  NodePtr base = parse_atom(cur);
  if (cur.accept('^')) return make(Op::pow, {base, parse_unary(cur)});
  return base;
}

NodePtr parse_unary(Cursor& cur) {
  if (cur.accept('-')) return make(Op::neg, {parse_unary(cur)});
  if (cur.accept('+')) return parse_unary(cur);
  return parse_pow(cur);
}

NodePtr parse_prod(Cursor& cur) {
  NodePtr lhs = parse_unary(cur);
  while (true) {
    if (cur.accept('*')) lhs = make(Op::mul, {lhs, parse_unary(cur)});
    else if (cur.accept('/')) lhs = make(Op::div, {lhs, parse_unary(cur)});
    else return lhs;
  }
}

NodePtr parse_sum(Cursor& cur) {
  NodePtr lhs = parse_prod(cur);
  while (true) {
    if (cur.accept('+')) lhs = make(Op::add, {lhs, parse_prod(cur)});
    else if (cur.accept('-')) lhs = make(Op::sub, {lhs, parse_prod(cur)});
    else return lhs;
  }
}

[[noreturn]] void undefined(const char* what) {
  throw Error(ErrorCode::domain_evaluation, std::string("expression undefined: ") + what);
}

Real eval_node(const Expr::Node& n, const Real& x, const Real& eps) {
  using boost::multiprecision::isnan;
  auto arg = [&](std::size_t i) { return eval_node(*n.args[i], x, eps); };
  switch (n.op) {
    case Op::num: return Real(n.value);
    case Op::x: return x;
    case Op::eps: return eps;
    case Op::add: return arg(0) + arg(1);
    case Op::sub: return arg(0) - arg(1);
    case Op::mul: return arg(0) * arg(1);
    case Op::div: {
      const Real a = arg(0), b = arg(1);
      if (b == 0 && a == 0) undefined("0/0");
      return a / b;
    }
    case Op::pow: {
      const Real a = arg(0), b = arg(1);
      Real r = boost::multiprecision::pow(a, b);
      if (isnan(r)) undefined("power of a negative base");
      return r;
    }
    case Op::neg: return -arg(0);
    case Op::abs: return boost::multiprecision::abs(arg(0));
    case Op::exp: return boost::multiprecision::exp(arg(0));
    case Op::log: {
      const Real a = arg(0);
      if (a <= 0) undefined("log of a nonpositive value");
      return boost::multiprecision::log(a);
    }
    case Op::sqrt: {
      const Real a = arg(0);
      if (a < 0) undefined("sqrt of a negative value");
      return boost::multiprecision::sqrt(a);
    }
    case Op::min: {
      const Real a = arg(0), b = arg(1);
      return a < b ? a : b;
    }
    case Op::max: {
      const Real a = arg(0), b = arg(1);
      return a < b ? b : a;
    }
  }
  undefined("unknown operator");
}

bool mentions_x(const Expr::Node& n) {
  if (n.op == Op::x) return true;
  for (const auto& a : n.args)
    if (mentions_x(*a)) return true;
  return false;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Cursor cur(text);
  Expr e;
  e.root_ = parse_sum(cur);
  if (!cur.eof()) cur.fail("unexpected trailing input");
  e.text_ = std::string(text);
  return e;
}

Real Expr::eval(const Real& x, const Real& eps) const {
  Real r = eval_node(*root_, x, eps);
  if (!boost::multiprecision::isfinite(r)) undefined("non-finite value");
  return r;
}

bool Expr::constant_in_x() const { return !mentions_x(*root_); }

}  // namespace colombeau

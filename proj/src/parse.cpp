#include "colombeau/parse.hpp"

#include <cctype>
#include <charconv>

#include "colombeau/error.hpp"

namespace colombeau {

void Cursor::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::eof() {
  skip_ws();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void Cursor::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

bool Cursor::accept_word(std::string_view w) {
  skip_ws();
  if (text_.substr(pos_, w.size()) != w) return false;
  const std::size_t end = pos_ + w.size();
  if (end < text_.size()) {
    const char n = text_[end];
    if (std::isalnum(static_cast<unsigned char>(n)) || n == '_') return false;
  }
  pos_ = end;
  return true;
}

double Cursor::number() {
  skip_ws();
  bool neg = false;
  if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
    neg = text_[pos_] == '-';
    ++pos_;
  }
  double v = 0;
  const char* begin = text_.data() + pos_;
  const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
  if (ec != std::errc{} || ptr == begin) fail("expected a number");
  pos_ += static_cast<std::size_t>(ptr - begin);
  return neg ? -v : v;
}

long Cursor::integer() {
  const double v = number();
  if (v != static_cast<double>(static_cast<long>(v))) fail("expected an integer");
  return static_cast<long>(v);
}

void Cursor::fail(const std::string& what) const {
  throw Error(ErrorCode::syntax, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
}

namespace {

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

double exponent(Cursor& cur) {
  if (cur.accept('(')) {
    const double e = cur.number();
    cur.expect(')');
    return e;
  }
  return cur.number();
}

Term term_after_coeff(Cursor& cur, double coeff) {
  if (cur.accept_word("eps")) {
    double e = 1.0;
    if (cur.accept('^')) e = exponent(cur);
    return {coeff, e};
  }
  cur.fail("expected 'eps' after '*'");
}

PowerSum parse_sum(Cursor& cur) {
  std::vector<Term> terms;
  NeglSign negl = NeglSign::none;
  bool first = true;
  while (true) {
    double sign = 1.0;
    const std::size_t save = cur.pos();
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1.0;
    } else if (!first) {
      break;
    }
    const char c = cur.peek();
    if (cur.accept_word("NEGL")) {
      negl = negl_add(negl, sign > 0 ? NeglSign::positive : NeglSign::negative);
    } else if (cur.accept_word("eps")) {
      double e = 1.0;
      if (cur.accept('^')) e = exponent(cur);
      terms.push_back({sign, e});
    } else if (starts_number(c)) {
      const double coeff = sign * cur.number();
      if (cur.accept('*')) terms.push_back(term_after_coeff(cur, coeff));
      else terms.push_back({coeff, 0.0});
    } else {
      if (first && save == cur.pos()) cur.fail("expected a term");
      cur.fail("expected a term after sign");
    }
    first = false;
  }
  return PowerSum(std::move(terms), negl);
}

CombPattern parse_comb(Cursor& cur) {
  CombPattern p;
  p.c = cur.number();
  p.q = cur.number();
  p.m = static_cast<int>(cur.integer());
  p.r = static_cast<int>(cur.integer());
  if (!(p.c > 0 && p.c < 1) || !(p.q > 0 && p.q < 1) || p.m < 1 || p.r < 0 || p.r >= p.m)
    cur.fail("comb needs 0<c<1, 0<q<1, m>=1, 0<=r<m");
  return p;
}

Region parse_region(Cursor& cur) {
  cur.expect('[');
  Region region;
  if (cur.accept_word("tail")) {
    cur.expect(']');
    return region;
  }
  do {
    if (!cur.accept_word("comb")) cur.fail("expected 'tail' or 'comb'");
    region.push_back(parse_comb(cur));
  } while (cur.accept('&'));
  cur.expect(']');
  return region;
}

}  // namespace

PiecewiseNet parse_net_at(Cursor& cur, bool nested) {
  if (cur.peek() != '[') return PiecewiseNet(parse_sum(cur));
  std::vector<Piece> pieces;
  while (true) {
    Region region = parse_region(cur);
    pieces.push_back({std::move(region), parse_sum(cur)});
    const std::size_t save = cur.pos();
    if (!cur.accept(';')) break;
    if (cur.peek() != '[') {
      if (nested) {
        cur.reset(save);
        break;
      }
      cur.fail("expected '[' after ';'");
    }
  }
  return PiecewiseNet::from_pieces(std::move(pieces));
}

PiecewiseNet parse_net(std::string_view text) {
  Cursor cur(text);
  PiecewiseNet net = parse_net_at(cur, false);
  if (!cur.eof()) cur.fail("unexpected trailing input");
  return net;
}

}  // namespace colombeau

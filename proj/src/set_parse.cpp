#include "colombeau/error.hpp"
#include "colombeau/isets.hpp"
#include "colombeau/parse.hpp"

namespace colombeau {

namespace {

Interval parse_interval_body(Cursor& cur) {
  cur.expect('(');
  GenNumber lo = parse_net_at(cur, true);
  cur.expect(',');
  GenNumber hi = parse_net_at(cur, true);
  cur.expect(')');
  return {std::move(lo), std::move(hi)};
}

VecNet parse_point(Cursor& cur) {
  if (!cur.accept('(')) return VecNet(GenNumber(parse_net_at(cur, true)));
  std::vector<GenNumber> comps;
  do {
    comps.emplace_back(parse_net_at(cur, true));
  } while (cur.accept(','));
  cur.expect(')');
  return VecNet(std::move(comps));
}

Shape parse_shape(Cursor& cur, std::size_t& empty_dim, bool& is_empty) {
  is_empty = false;
  if (cur.accept_word("interval")) return parse_interval_body(cur);
  if (cur.accept_word("box")) {
    cur.expect('(');
    Box b;
    do {
      if (!cur.accept_word("interval")) cur.fail("expected 'interval' inside box");
      b.sides.push_back(parse_interval_body(cur));
    } while (cur.accept(','));
    cur.expect(')');
    return b;
  }
  if (cur.accept_word("points")) {
    cur.expect('(');
    Points p;
    do {
      p.pts.push_back(parse_point(cur));
    } while (cur.accept(';'));
    cur.expect(')');
    return p;
  }
  if (cur.accept_word("exterior")) {
    cur.expect('(');
    Exterior e{GenNumber(parse_net_at(cur, true)), 1};
    if (cur.accept(',')) {
      const long d = cur.integer();
      if (d < 1) cur.fail("exterior dimension must be positive");
      e.dim = static_cast<std::size_t>(d);
    }
    cur.expect(')');
    return e;
  }
  if (cur.accept_word("empty")) {
    is_empty = true;
    empty_dim = 1;
    if (cur.accept('(')) {
      const long d = cur.integer();
      if (d < 1) cur.fail("dimension must be positive");
      empty_dim = static_cast<std::size_t>(d);
      cur.expect(')');
    }
    return Points{};
  }
  cur.fail("expected interval, box, points, exterior or empty");
}

}  // namespace

SetFamily parse_set(std::string_view text) {
  Cursor cur(text);
  std::vector<Shape> shapes;
  std::optional<std::size_t> dim;
  do {
    std::size_t empty_dim = 0;
    bool is_empty = false;
    Shape s = parse_shape(cur, empty_dim, is_empty);
    const std::size_t d = is_empty ? empty_dim : shape_dim(s);
    if (dim && *dim != d) throw Error(ErrorCode::dimension_mismatch, "shapes of a set have different dimensions");
    dim = d;
    if (!is_empty) shapes.push_back(std::move(s));
  } while (cur.accept('|'));
  if (!cur.eof()) cur.fail("unexpected trailing input");
  return SetFamily(std::move(shapes), *dim);
}

}  // namespace colombeau

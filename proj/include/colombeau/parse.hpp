#pragma once

#include <string>
#include <string_view>

#include "colombeau/piecewise_net.hpp"

namespace colombeau {

/// Character cursor shared by the text grammars. Errors are SyntaxError with
/// the byte offset.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws();
  bool eof();
  char peek();
  bool accept(char c);
  void expect(char c);
  /// Accepts an identifier-like keyword not followed by another identifier character.
  bool accept_word(std::string_view w);
  double number();
  long integer();
  std::size_t pos() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  std::string_view rest() const { return text_.substr(pos_); }
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// NET := PIECE (";" PIECE)* | SUM ; PIECE := "[" PATTERN ("&" PATTERN)* "]" SUM ;
/// PATTERN := "tail" | "comb" c q m r ; SUM := signed terms, each
/// coeff ["*" "eps" ["^" expo]] | "eps" ["^" expo] | "NEGL".
PiecewiseNet parse_net(std::string_view text);

/// Parses one net starting at the cursor. With `nested` set, a ";" only
/// continues the net when the next token is "[" (so it can separate list items).
PiecewiseNet parse_net_at(Cursor& cur, bool nested);

}  // namespace colombeau

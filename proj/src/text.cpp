#include "qabe/text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "qabe/errors.hpp"

namespace qabe {

namespace {

std::string point_text(const TorusPoint& a) {
  return a.is_zero() ? "[0]" : "[" + a.to_string() + "]";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormalSum parse() {
    skip_space();
    if (at_end()) fail("empty input");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return {};
      pos_ = save;
    }
    FormalSum s;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_space();
      Integer coeff = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_unsigned();
        skip_space();
        if (!at_end() && peek() == '*') ++pos_;
        skip_space();
      }
      s.add_term(read_point(), sign * coeff);
      first = false;
    }
    return s;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse formal sum at offset " + std::to_string(pos_) + ": " + what);
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer read_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer read_signed() {
    skip_space();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_space();
    }
    return sign * read_unsigned();
  }

  TorusPoint read_point() {
    expect('[');
    Integer num = read_signed();
    Integer den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      den = read_unsigned();
      if (den == 0) fail("zero denominator");
    }
    expect(']');
    return TorusPoint::make(num, den);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_sum(const FormalSum& s) {
  if (s.is_zero()) return "0";
  using Entry = std::pair<const TorusPoint*, const Integer*>;
  std::vector<Entry> entries;
  entries.reserve(s.size());
  for (const auto& [a, c] : s.terms()) entries.emplace_back(&a, &c);
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    const int sx = sgn(*x.second), sy = sgn(*y.second);
    if (sx != sy) return sx > sy;
    const int c = cmp(abs(*x.second), abs(*y.second));
    if (c != 0) return c > 0;
    return x.first->value() > y.first->value();
  });
  std::string out;
  bool first = true;
  for (const auto& [a, c] : entries) {
    const bool negative = sgn(*c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Integer mag = abs(*c);
    if (mag != 1) out += mag.get_str() + "*";
    out += point_text(*a);
    first = false;
  }
  return out;
}

FormalSum parse_sum(std::string_view text) { return Parser(text).parse(); }

}  // namespace qabe

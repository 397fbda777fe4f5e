#include "flagorbit/parse.hpp"

#include <cctype>
#include <vector>

namespace flagorbit {

namespace {

constexpr Int kMaxLiteral = 1'000'000'000;
constexpr Int kMaxCount = 1'000'000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[nodiscard]] bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  [[nodiscard]] char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(pos, std::string("expected '") + c + "' " + what);
  }
  Int parse_int(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    Int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxLiteral) throw ParseError(start, "number out of range");
      ++pos;
    }
    if (pos == start) throw ParseError(pos, std::string("expected an integer ") + what);
    return value;
  }
};

struct RawFactor {
  std::size_t pos;
  Int n;
  std::vector<Int> ks;
  Int count;
};

RawFactor parse_factor(Cursor& cur) {
  cur.skip_ws();
  RawFactor f{cur.pos, 0, {}, 1};
  if (cur.consume_word("Gr(")) {
    f.ks.push_back(cur.parse_int("for the subspace dimension"));
    cur.expect(',', "between the subspace and ambient dimensions");
    f.n = cur.parse_int("for the ambient dimension");
    cur.expect(')', "to close the factor");
  } else if (cur.consume_word("F(")) {
    if (cur.peek() != ';') {
      f.ks.push_back(cur.parse_int("for a step dimension"));
      while (cur.consume(',')) f.ks.push_back(cur.parse_int("for a step dimension"));
    }
    cur.expect(';', "between the steps and the ambient dimension");
    f.n = cur.parse_int("for the ambient dimension");
    cur.expect(')', "to close the factor");
  } else {
    throw ParseError(cur.pos, "expected a factor: F(k1,...,kr;n) or Gr(k,n)");
  }
  if (cur.consume('^')) {
    const std::size_t at = cur.pos;
    f.count = cur.parse_int("for the exponent");
    if (f.count < 1 || f.count > kMaxCount) throw ParseError(at, "exponent out of range");
  }
  return f;
}

}  // namespace

ProductSpec parse_product(std::string_view text) {
  Cursor cur{text};
  std::vector<RawFactor> raw;
  raw.push_back(parse_factor(cur));
  while (true) {
    if (cur.consume('x') || cur.consume('*') || cur.consume_word("\xc3\x97"))
      raw.push_back(parse_factor(cur));
    else
      break;
  }
  if (!cur.eof()) throw ParseError(cur.pos, "unexpected trailing input");

  std::vector<FlagShape> factors;
  const Int ambient = raw.front().n;
  for (const RawFactor& f : raw) {
    if (f.n != ambient)
      throw ParseError(f.pos, "factors must share one ambient dimension");
    try {
      const FlagShape shape(f.n, f.ks);
      for (Int i = 0; i < f.count; ++i) factors.push_back(shape);
    } catch (const std::invalid_argument& e) {
      throw ParseError(f.pos, e.what());
    }
  }
  return ProductSpec(std::move(factors));
}

}  // namespace flagorbit

#include "liecoh/mc_text.hpp"

#include <cctype>
#include <sstream>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool eat(char c) {
    if (!done() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

int parse_index(Cursor& c, const std::string& line) {
  c.skip_ws();
  if (c.done() || (c.peek() != 'w' && c.peek() != 'W'))
    throw input_error("maurer-cartan: expected w<index> in \"" + line + "\"");
  ++c.i;
  std::size_t start = c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == start) throw input_error("maurer-cartan: missing form index in \"" + line + "\"");
  return std::stoi(c.s.substr(start, c.i - start));
}

Rational parse_coefficient(Cursor& c) {
  c.skip_ws();
  int sign = 1;
  while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    if (c.peek() == '-') sign = -sign;
    ++c.i;
    c.skip_ws();
  }
  std::size_t start = c.i;
  while (!c.done() &&
         (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/'))
    ++c.i;
  Rational mag(1);
  if (c.i > start) mag = Rational::parse(c.s.substr(start, c.i - start));
  c.skip_ws();
  c.eat('*');
  return sign < 0 ? -mag : mag;
}

} // namespace

MaurerCartan parse_maurer_cartan(const std::string& text) {
  MaurerCartan mc;
  bool saw_dim = false;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor c{line};
    c.skip_ws();
    if (c.done() || c.peek() == '#') continue;
    if (line.compare(c.i, 3, "dim") == 0) {
      c.i += 3;
      c.skip_ws();
      std::size_t start = c.i;
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
      if (c.i == start) throw input_error("maurer-cartan: malformed dim line \"" + line + "\"");
      mc.dim = std::stoi(line.substr(start, c.i - start));
      saw_dim = true;
      continue;
    }
    if (c.peek() != 'd' && c.peek() != 'D')
      throw input_error("maurer-cartan: expected dw<k> line, got \"" + line + "\"");
    ++c.i;
    const int k = parse_index(c, line);
    c.skip_ws();
    if (!c.eat('=')) throw input_error("maurer-cartan: missing '=' in \"" + line + "\"");
    c.skip_ws();
    // "0" right-hand side: no terms
    if (!c.done() && c.peek() == '0') {
      ++c.i;
      c.skip_ws();
      if (!c.done()) throw input_error("maurer-cartan: trailing text in \"" + line + "\"");
      mc.d[k];
      continue;
    }
    while (true) {
      const Rational coeff = parse_coefficient(c);
      int i = parse_index(c, line);
      c.skip_ws();
      if (!c.eat('^'))
        throw input_error("maurer-cartan: expected '^' between w-forms in \"" + line + "\"");
      int j = parse_index(c, line);
      Rational v = coeff;
      if (i == j) throw input_error("maurer-cartan: repeated index wedge in \"" + line + "\"");
      if (i > j) {
        std::swap(i, j);
        v = -v;
      }
      Rational& slot = mc.d[k][{i, j}];
      slot += v;
      if (slot.is_zero()) mc.d[k].erase({i, j});
      c.skip_ws();
      if (c.done()) break;
      if (c.peek() != '+' && c.peek() != '-')
        throw input_error("maurer-cartan: trailing text in \"" + line + "\"");
    }
  }
  if (!saw_dim) throw input_error("maurer-cartan: missing \"dim <n>\" line");
  return mc;
}

std::string render_maurer_cartan(const MaurerCartan& mc) {
  std::ostringstream os;
  os << "dim " << mc.dim << "\n";
  for (const auto& [k, terms] : mc.d) {
    if (terms.empty()) continue;
    os << "dw" << k << " =";
    bool first = true;
    for (const auto& [pair, c] : terms) {
      Rational mag = c.abs();
      os << (c.sign() < 0 ? " - " : (first ? " " : " + "));
      if (!mag.is_one()) os << mag.str() << " ";
      os << "w" << pair.first << "^w" << pair.second;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

} // namespace liecoh

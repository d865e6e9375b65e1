#include "mmpa/text.hpp"

#include <cctype>

namespace mmpa {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            what),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() { return peek() == '\0'; }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 6) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoi(d);
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string near = pos_ < s_.size() ? " near '" + std::string(1, s_[pos_]) + "'" : " at end of input";
    throw ParseError(what + near, line, col);
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Letter letter(Cursor& c) {
  bool barred = c.accept('~');
  bool under = c.accept('_');
  std::size_t at = c.pos();
  int v = c.integer();
  if (v < 1) {
    c.set_pos(at);
    c.fail("letter value must be positive");
  }
  return Letter{v, barred, under};
}

Multiset multiset(Cursor& c) {
  c.expect('{');
  Multiset m;
  if (c.accept('}')) return m;
  do m.insert(letter(c));
  while (c.accept(','));
  c.expect('}');
  return m;
}

MultisetPartition partition(Cursor& c) {
  c.expect('[');
  std::vector<Multiset> blocks;
  if (!c.accept(']')) {
    do {
      std::size_t at = c.pos();
      blocks.push_back(multiset(c));
      if (blocks.back().empty()) {
        c.set_pos(at);
        c.fail("empty block");
      }
    } while (c.accept(','));
    c.expect(']');
  }
  return MultisetPartition(blocks);
}

Multiset cell(Cursor& c) {
  if (c.accept('.')) return {};
  if (c.peek() == '{') return multiset(c);
  return Multiset{letter(c)};
}

bool cell_start(char ch) { return ch == '.' || ch == '{' || ch == '~' || ch == '_' || std::isdigit(static_cast<unsigned char>(ch)); }

Tableau tableau(Cursor& c) {
  c.expect('[');
  std::vector<std::vector<Multiset>> rows;
  if (c.accept(']')) return Tableau(rows);
  std::size_t at = c.pos();
  do {
    std::vector<Multiset> row;
    if (!cell_start(c.peek())) c.fail("expected a cell");
    while (cell_start(c.peek())) row.push_back(cell(c));
    rows.push_back(row);
  } while (c.accept('|'));
  c.expect(']');
  try {
    return Tableau(rows);
  } catch (const std::invalid_argument& e) {
    c.set_pos(at);
    c.fail(e.what());
  }
}

mpq_class rational(Cursor& c) {
  bool neg = c.accept('-');
  mpq_class q(mpz_class(c.digits()));
  if (c.accept('/')) {
    std::size_t at = c.pos();
    mpz_class d(c.digits());
    if (d == 0) {
      c.set_pos(at);
      c.fail("zero denominator");
    }
    q /= d;
  }
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

CoeffPoly poly(Cursor& c) {
  CoeffPoly out;
  bool first = true;
  while (true) {
    bool neg = false;
    if (!first) {
      if (c.accept('-'))
        neg = true;
      else if (!c.accept('+'))
        break;
    } else {
      neg = c.accept('-');
    }
    first = false;
    mpq_class coeff = 1;
    bool have_coeff = false;
    if (c.peek() == '(') {
      c.expect('(');
      coeff = rational(c);
      c.expect(')');
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = rational(c);
      have_coeff = true;
    }
    int k = 0;
    if (c.accept('x')) {
      k = 1;
      if (c.accept('^')) k = c.integer();
    } else if (!have_coeff) {
      c.fail("expected a polynomial term");
    }
    out += CoeffPoly::x_power(k, neg ? mpq_class(-coeff) : coeff);
  }
  return out;
}

template <class F>
auto whole(std::string_view s, F f) {
  Cursor c(s);
  auto v = f(c);
  c.finish();
  return v;
}

std::string join_multisets(const std::vector<Multiset>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

}  // namespace

Letter parse_letter(std::string_view s) { return whole(s, letter); }
Multiset parse_multiset(std::string_view s) { return whole(s, multiset); }
MultisetPartition parse_partition(std::string_view s) { return whole(s, partition); }

SetPartition parse_set_partition(std::string_view s) {
  auto p = parse_partition(s);
  try {
    return as_set_partition(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

Tableau parse_tableau(std::string_view s) { return whole(s, tableau); }

Biword parse_biword(std::string_view s) {
  return whole(s, [](Cursor& c) {
    c.expect('[');
    std::vector<Multiset> top, bottom;
    if (c.accept(']')) return Biword{};
    while (cell_start(c.peek())) top.push_back(cell(c));
    c.expect('/');
    std::size_t at = c.pos();
    while (cell_start(c.peek())) bottom.push_back(cell(c));
    if (bottom.size() != top.size()) {
      c.set_pos(at);
      c.fail("biword rows have different lengths");
    }
    c.expect(']');
    Biword w;
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (top[i].empty() || bottom[i].empty()) c.fail("empty biword letter");
      w.push_back({top[i], bottom[i]});
    }
    return w;
  });
}

WeakComposition parse_composition(std::string_view s) {
  return whole(s, [](Cursor& c) {
    std::vector<int> parts;
    if (c.at_end()) return WeakComposition(parts);
    do parts.push_back(c.integer());
    while (c.accept(','));
    return WeakComposition(parts);
  });
}

Shape parse_shape(std::string_view s) {
  return whole(s, [](Cursor& c) {
    bool paren = c.accept('(');
    std::vector<int> parts;
    if (!(paren && c.peek() == ')') && !c.at_end()) {
      do {
        std::size_t at = c.pos();
        parts.push_back(c.integer());
        if (parts.size() > 1 && parts.back() > parts[parts.size() - 2]) {
          c.set_pos(at);
          c.fail("shape parts must weakly decrease");
        }
        if (parts.back() == 0) {
          c.set_pos(at);
          c.fail("shape parts must be positive");
        }
      } while (c.accept(','));
    }
    if (paren) c.expect(')');
    return Shape(parts);
  });
}

mpq_class parse_rational(std::string_view s) { return whole(s, rational); }
CoeffPoly parse_poly(std::string_view s) { return whole(s, poly); }

namespace {

bool term_separator(Cursor& c) { return c.accept(';') || c.accept('+'); }

}  // namespace

MPElement parse_element(std::string_view s) {
  return whole(s, [](Cursor& c) {
    MPElement out;
    if (c.peek() == '0') {
      std::size_t at = c.pos();
      c.expect('0');
      if (c.at_end()) return out;
      c.set_pos(at);
    }
    do {
      CoeffPoly coeff(1);
      if (c.peek() != '[') {
        coeff = poly(c);
        c.expect('*');
      }
      out.add(partition(c), coeff);
    } while (term_separator(c) || !c.at_end());
    return out;
  });
}

ModuleVector parse_vector(std::string_view s) {
  return whole(s, [](Cursor& c) {
    ModuleVector out;
    if (c.peek() == '0') {
      std::size_t at = c.pos();
      c.expect('0');
      if (c.at_end()) return out;
      c.set_pos(at);
    }
    do {
      mpq_class coeff = 1;
      if (c.peek() != '[') {
        coeff = rational(c);
        c.expect('*');
      }
      out.add(tableau(c), coeff);
    } while (term_separator(c) || !c.at_end());
    return out;
  });
}

std::string to_string(Letter x) {
  return std::string(x.barred ? "~" : "") + (x.underlined ? "_" : "") + std::to_string(x.value);
}

std::string to_string(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (Letter x : m.letters()) {
    out += (first ? "" : ",") + to_string(x);
    first = false;
  }
  return out + "}";
}

std::string to_string(const MultisetPartition& p) { return "[" + join_multisets(p.blocks()) + "]"; }

std::string to_string(const SetPartition& p) {
  std::vector<Multiset> blocks;
  for (const auto& b : p.blocks()) blocks.push_back(Multiset(b));
  return "[" + join_multisets(blocks) + "]";
}

std::string to_string(const Tableau& t) {
  std::string out = "[";
  for (int i = 0; i < t.num_rows(); ++i) {
    if (i) out += " | ";
    for (int j = 0; j < t.row_length(i); ++j) out += (j ? " " : "") + (t.at(i, j).empty() ? "." : to_string(t.at(i, j)));
  }
  return out + "]";
}

namespace {

std::string biword_cell(const Multiset& m) { return m.size() == 1 ? to_string(m.letters()[0]) : to_string(m); }

}  // namespace

std::string to_string(const Biword& w) {
  if (w.empty()) return "[]";
  std::string top, bottom;
  for (std::size_t i = 0; i < w.size(); ++i) {
    top += (i ? " " : "") + biword_cell(w[i].top);
    bottom += (i ? " " : "") + biword_cell(w[i].bottom);
  }
  return "[" + top + " / " + bottom + "]";
}

std::string to_string(const WeakComposition& c) {
  std::string out;
  for (int i = 0; i < c.length(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

std::string to_string(const Shape& s) {
  std::string out = "(";
  for (int i = 0; i < s.rows(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::string to_string(const CoeffPoly& p) { return p.str(); }

namespace {

template <class E, class F>
std::string element_string(const E& e, F key) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : e.terms()) out += (out.empty() ? "" : "\n") + c.str() + " * " + key(k);
  return out;
}

}  // namespace

std::string to_string(const MPElement& e) {
  return element_string(e, [](const MultisetPartition& p) { return to_string(p); });
}

std::string to_string(const PAElement& e) {
  return element_string(e, [](const SetPartition& p) { return to_string(p); });
}

std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : v.terms()) out += (out.empty() ? "" : "\n") + c.get_str() + " * " + to_string(t);
  return out;
}

MultisetPartition as_multiset_partition(const SetPartition& p) {
  std::vector<Multiset> blocks;
  for (const auto& b : p.blocks()) blocks.push_back(Multiset(b));
  return MultisetPartition(blocks);
}

SetPartition as_set_partition(const MultisetPartition& p) {
  int r = 0;
  std::vector<std::vector<Letter>> blocks;
  for (const auto& b : p.blocks()) {
    blocks.push_back(b.letters());
    for (Letter x : b.letters()) {
      if (x.barred) throw std::invalid_argument("set partition letters cannot be barred");
      if (!x.underlined) ++r;
    }
  }
  return SetPartition::from_blocks(r, blocks);
}

}  // namespace mmpa

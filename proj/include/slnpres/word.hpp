#pragma once

#include "slnpres/matrix.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slnpres {

/// The two-letter alphabet.  Slot 0 is rendered "a" by default and slot 1
/// "b"; variant presentations rename the slots (x/y, u/v) at output time.
enum class Gen : unsigned char { a = 0, b = 1 };

/// One maximal run g^e, e != 0.
struct Letter {
  Gen gen;
  Int exp;
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

/// Freely reduced word in two generators, stored as maximal runs.
/// Every constructor and combinator maintains free reduction, so equality
/// of words is equality in the free group.
class Word {
 public:
  Word() = default;

  static Word letter(Gen g, Int exp = 1) {
    Word w;
    w.append_run(g, exp);
    return w;
  }

  const std::vector<Letter>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  /// Word length: total number of letters, counting a run g^e as |e|.
  Int length() const {
    Int s = 0;
    for (const Letter& l : runs_) s += abs(l.exp);
    return s;
  }

  bool operator==(const Word& o) const { return runs_ == o.runs_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  /// Append one run, merging with the tail and dropping cancelled runs.
  void append_run(Gen g, const Int& exp) {
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().gen == g) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back(Letter{g, exp});
  }

  void append(const Word& o) {
    // Appending run by run keeps the result reduced: each merge can only
    // expose the previous tail run, which the next append_run re-examines.
    for (const Letter& l : o.runs_) append_run(l.gen, l.exp);
  }

  /// Canonical text form: runs joined by '*', exponent 1 left implicit,
  /// e.g. "a^-2*b*a^2".  The empty word renders as "".
  std::string str(const std::array<std::string, 2>& names = {"a", "b"}) const {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : runs_) {
      if (!first) os << "*";
      first = false;
      os << names[static_cast<std::size_t>(l.gen)];
      if (l.exp != 1) os << "^" << l.exp;
    }
    return os.str();
  }

 private:
  std::vector<Letter> runs_;
};

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const Word& p : parts) r.append(p);
  return r;
}

inline Word invert(const Word& u) {
  Word r;
  const auto& runs = u.runs();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) r.append_run(it->gen, -it->exp);
  return r;
}

/// u^k by repeated squaring (k may be negative or zero).
inline Word power(const Word& u, const Int& k) {
  Word base = (k < 0) ? invert(u) : u;
  Int e = abs(k);
  Word result;
  while (e > 0) {
    if ((e & 1) != 0) result.append(base);
    e >>= 1;
    if (e > 0) base = concat(base, base);
  }
  return result;
}

/// Commutator [u, v] = u^-1 v^-1 u v.
inline Word commutator(const Word& u, const Word& v) {
  return concat({invert(u), invert(v), u, v});
}

/// Conjugation by a power of the slot-0 generator: a^-k u a^k.
inline Word conjugate(const Word& u, const Int& k) {
  Word r = Word::letter(Gen::a, -k);
  r.append(u);
  r.append_run(Gen::a, k);
  return r;
}

/// Substitute words for the two generator slots (a homomorphism of free
/// groups): every run g^e maps to image(g)^e.
inline Word substitute(const Word& w, const Word& image_a, const Word& image_b) {
  Word r;
  for (const Letter& l : w.runs()) {
    const Word& img = (l.gen == Gen::a) ? image_a : image_b;
    r.append(power(img, l.exp));
  }
  return r;
}

/// Parse the canonical text form produced by Word::str.  Accepts surrounding
/// whitespace around '*'-separated factors; exponent 0 factors reduce away.
inline Word parse_word(std::string_view text, const std::array<std::string, 2>& names = {"a", "b"}) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_word: " + why);
  };
  Word w;
  std::size_t pos = 0;
  bool any_factor = false;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return w;  // empty word
  while (true) {
    skip_ws();
    Gen g;
    if (text.compare(pos, names[0].size(), names[0]) == 0) {
      g = Gen::a;
      pos += names[0].size();
    } else if (text.compare(pos, names[1].size(), names[1]) == 0) {
      g = Gen::b;
      pos += names[1].size();
    } else {
      fail("unknown generator at position " + std::to_string(pos));
      return w;  // unreachable
    }
    Int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start || (pos - start == 1 && !(text[start] >= '0' && text[start] <= '9')))
        fail("malformed exponent at position " + std::to_string(start));
      exp = Int(std::string(text.substr(start, pos - start)));
    }
    w.append_run(g, exp);
    any_factor = true;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*' at position " + std::to_string(pos));
    ++pos;
    if (pos == text.size()) fail("trailing '*'");
  }
  if (!any_factor) fail("empty factor list");
  return w;
}

}  // namespace slnpres

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

// One letter of a word in B_{1,n}. Base letters are t^{±1} (LoopT with
// index 0) and g_i^{±1}; the macro letters t_i^{±1} and t'_i^{±1} expand to
// their defining words before reduction.
struct Letter {
  enum class Kind { BraidG, LoopT, LoopTPrime };

  Kind kind = Kind::LoopT;
  int index = 0;  // BraidG: 1..n-1; loops: >= 0 (index 0 is t itself)
  int sign = +1;  // ±1

  static Letter g(int i, int sign = +1) { return {Kind::BraidG, i, sign}; }
  static Letter t(int sign = +1) { return {Kind::LoopT, 0, sign}; }
  static Letter t_i(int i, int sign = +1) { return {Kind::LoopT, i, sign}; }
  static Letter t_prime(int i, int sign = +1) { return {Kind::LoopTPrime, i, sign}; }

  Letter inverted() const { return {kind, index, -sign}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word over {t^{±1}, g_i^{±1}} plus macro letters, on n strands.
struct Word {
  int n = 1;
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(int n) : n(n) {}
  Word(int n, std::vector<Letter> ls) : n(n), letters(std::move(ls)) {}

  Word inverse() const {
    Word out(n);
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.push_back(it->inverted());
    return out;
  }

  Word& append(Letter l) {
    letters.push_back(l);
    return *this;
  }

  Word& append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }

  // Signed sum of g-letter exponents (macro letters contribute none).
  int writhe() const {
    int e = 0;
    for (const Letter& l : letters)
      if (l.kind == Letter::Kind::BraidG) e += l.sign;
    return e;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

// Defining words of the looping macros:
//   t_i^{+1}  -> g_i ... g_1 t g_1 ... g_i
//   t_i^{-1}  -> g_i^{-1} ... g_1^{-1} t^{-1} g_1^{-1} ... g_i^{-1}
//   t'_i^{±1} -> g_i ... g_1 t^{±1} g_1^{-1} ... g_i^{-1}
// Base letters expand to themselves; index-0 macros are t^{±1}.
inline Word expand_macro(const Letter& l) {
  if (l.index < 0) throw IndexOutOfRange("expand_macro: negative index");
  Word out(l.index + 1);
  if (l.kind == Letter::Kind::BraidG || l.index == 0) {
    out.n = l.kind == Letter::Kind::BraidG ? l.index + 1 : 1;
    out.append(l.kind == Letter::Kind::BraidG ? l : Letter::t(l.sign));
    return out;
  }
  if (l.kind == Letter::Kind::LoopT) {
    for (int i = l.index; i >= 1; --i) out.append(Letter::g(i, l.sign));
    out.append(Letter::t(l.sign));
    for (int i = 1; i <= l.index; ++i) out.append(Letter::g(i, l.sign));
  } else {
    for (int i = l.index; i >= 1; --i) out.append(Letter::g(i, +1));
    out.append(Letter::t(l.sign));
    for (int i = 1; i <= l.index; ++i) out.append(Letter::g(i, -1));
  }
  return out;
}

// The delta words of the conversion lemmas: g_top ... g_bottom, descending or
// ascending as written, optionally omitting one letter.
struct DeltaWord {
  int top = 0;
  int bottom = 0;
  std::optional<int> omitted;
  int sign = +1;

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    int step = top <= bottom ? 1 : -1;
    for (int i = top;; i += step) {
      if (!(omitted && *omitted == i)) out.push_back(Letter::g(i, sign));
      if (i == bottom) break;
    }
    return out;
  }
};

}  // namespace skein

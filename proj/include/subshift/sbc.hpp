#pragma once

#include <unordered_map>

#include "subshift/language.hpp"

namespace subshift {

// A local rule with memory t and anticipation s: windows of length t+s+1
// (restricted to the declared language) to target letters.
struct SlidingBlockCode {
  Alphabet source;
  Alphabet target;
  int memory = 0;
  int anticipation = 0;
  std::unordered_map<Word, Letter, WordHash> rule;

  int width() const { return memory + anticipation + 1; }
  int radius() const { return std::max(memory, anticipation); }

  Letter at(const Word& w, long center) const;  // window w, value at position `center`
  // Output letter j is the value at position memory + j; length |w| - t - s.
  Word apply(const Word& w) const;

  // letter-to-letter map as a code of memory/anticipation 0
  static SlidingBlockCode from_coding(const Morphism& coding);
  static SlidingBlockCode identity(const Substitution& s, int radius);
};

// f' = S^j o f, widened so that memory/anticipation stay non-negative.
SlidingBlockCode compose_shift(const SlidingBlockCode& f, int j, const Substitution& lang);

// Widens f to exactly (t, s) over the language of `lang`.
SlidingBlockCode widen(const SlidingBlockCode& f, int t, int s, const Substitution& lang);

// Smallest (t, s) presentation of f over the language.
SlidingBlockCode minimize(const SlidingBlockCode& f, const Substitution& lang);

bool same_code(const SlidingBlockCode& a, const SlidingBlockCode& b, const Substitution& lang);

// f = S^j o g for some |j| <= max_shift?
std::optional<int> shift_relation(const SlidingBlockCode& f, const SlidingBlockCode& g,
                                  const Substitution& lang, int max_shift);

// Integer-valued local map (cocycles and transfer functions).
struct IntegerCode {
  Alphabet source;
  int memory = 0;
  int anticipation = 0;
  std::unordered_map<Word, long, WordHash> rule;

  int width() const { return memory + anticipation + 1; }
  int radius() const { return std::max(memory, anticipation); }
  long at(const Word& w, long center) const;
  long max_abs() const;
};

// Local rule of a dill map: centered windows of radius r to target words
// (possibly empty); the cocycle is the output length.
struct DillLocal {
  Alphabet source;
  Alphabet target;
  int radius = 0;
  std::unordered_map<Word, Word, WordHash> rule;

  const Word& at(const Word& w, long center) const;
  // Concatenated outputs over all centers with full windows.
  Word apply(const Word& w) const;
  long cocycle(const Word& w, long center) const { return static_cast<long>(at(w, center).size()); }
  long max_output() const;
  bool somewhere_positive() const;
  IntegerCode cocycle_code() const;
};

// Extends the rule table of a dill to a larger radius over the language.
DillLocal widen_dill(const DillLocal& d, int r, const Substitution& lang);
bool same_dill(const DillLocal& a, const DillLocal& b, const Substitution& lang);

}  // namespace subshift

#pragma once

#include "subshift/language.hpp"
#include "subshift/oracle.hpp"

namespace subshift {

struct ScanCaps {
  long max_prefix = 1 << 22;   // hard cap on scanned fixed-point prefix
  int lr_word_cap = 5;         // word lengths used for the empirical constant
};

// Return words to a single word u, with the canonical coding Theta. Return
// letters are numbered by the first occurrence of wu in x+ and named r1, r2...
struct ReturnWords {
  Word marker;                 // u
  std::vector<Word> words;     // images, canonical order
  Morphism theta;              // return alphabet -> base alphabet
  size_t first_marker_pos = 0; // first occurrence of u in x+
  long scanned_prefix = 0;

  const Alphabet& return_alphabet() const { return theta.source(); }
  int count() const { return static_cast<int>(words.size()); }
};

ReturnWords return_words(const FixedPoint& x, const Word& u, const ScanCaps& caps = {});

// Length-n prefix of the derived sequence D_u(x) over the return alphabet.
Word derived_window(const FixedPoint& x, const Word& u, size_t n, const ScanCaps& caps = {});

// Greedy unique decoding of a window of x anchored at an occurrence of u into
// return letters; the window must start at a u-occurrence and end at one
// (w + the final marker). Used internally and by tests.
Word decode_by_returns(const ReturnWords& rw, const Word& anchored);

// lambda_{x,u,u'}: R_{u'} -> R_u with Theta_{x,u'} = Theta_{x,u} o lambda.
// `derived_equal_certified` reports whether D_u = D_{u'} was certified via
// equal return substitutions, in which case the primitive/left-proper claim
// of the fixed-point proposition is checked and returned.
struct LambdaWord {
  Morphism lambda;             // R_{u'} -> R_u
  bool occurrence_condition = false;  // every wu occurs in every w'u'
  bool derived_equal = false;         // certified D_u(x) = D_{u'}(x)
  bool primitive = false;             // meaningful when derived_equal
  bool left_proper = false;
};
LambdaWord lambda_word(const FixedPoint& x, const Word& u, const Word& uprime,
                       const ScanCaps& caps = {});

// Return pairs to a set U of same-length words.
struct ReturnPairs {
  std::vector<Word> markers;     // U
  std::vector<Word> words;       // distinct return words, decomposition order
  Morphism theta;                // set coding Theta_{x,U} over words
  std::vector<std::pair<Word, Word>> pairs;  // (w, u), canonical order
  Alphabet pair_alphabet;        // p1, p2, ...
  size_t first_marker_pos = 0;
  long scanned_prefix = 0;

  int count() const { return static_cast<int>(pairs.size()); }
  size_t marker_len() const { return markers.empty() ? 0 : markers[0].size(); }
  // d_{x,U,1} / d_{x,U,2} on a pair letter
  const Word& d1(Letter p) const { return pairs.at(static_cast<size_t>(p)).first; }
  const Word& d2(Letter p) const { return pairs.at(static_cast<size_t>(p)).second; }
  Word flatten(const Word& pair_word) const;  // d1 applied letterwise
  std::optional<Letter> find_pair(const Word& w, const Word& u) const;
};

ReturnPairs return_pairs(const FixedPoint& x, const std::vector<Word>& markers,
                         const ScanCaps& caps = {});

// Admissibility of a word over the pair alphabet (exact, via the language).
bool admissible(const Substitution& s, const ReturnPairs& rp, const Word& pair_word);

Word derived_pair_window(const FixedPoint& x, const std::vector<Word>& markers, size_t n,
                         const ScanCaps& caps = {});

// Return substitution for a non-empty prefix u of the fixed point:
// Theta o sub = sigma o Theta, and D_u(x) is its fixed point starting at r1.
struct ReturnSubstitution {
  ReturnWords structure;
  Substitution sub;
};
ReturnSubstitution return_substitution_word(const FixedPoint& x, const Word& u,
                                            const ScanCaps& caps = {});

// Return substitution on pair letters for a marker set U (any elements of the
// language, not only prefixes). power_used is the minimal k whose two
// occurrence conditions certify the construction.
struct ReturnPairSubstitution {
  ReturnPairs structure;
  Substitution sub;
  int power_used = 0;
};
ReturnPairSubstitution return_substitution_set(const FixedPoint& x, const std::vector<Word>& markers,
                                               const ScanCaps& caps = {}, int max_power = 40);

// lambda_{x,U,V} on pair alphabets; requires every V-word to have a prefix in
// U and l_V > l_U.
struct LambdaSet {
  Morphism lambda;  // pair alphabet of V -> pair alphabet of U
  int shift = 0;    // k with lambda(D_V(x)) = S^k D_U(x)
};
LambdaSet lambda_set(const FixedPoint& x, const std::vector<Word>& U, const std::vector<Word>& V,
                     const ScanCaps& caps = {});

// Equality under the canonical numbering (same alphabet size, same images).
bool same_substitution(const Substitution& a, const Substitution& b);

}  // namespace subshift

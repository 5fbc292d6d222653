#pragma once

#include <map>
#include <unordered_map>

#include "subshift/language.hpp"
#include "subshift/oracle.hpp"

namespace subshift {

// Cutting bars of s acting on the admissible point: positions where images of
// preimage letters begin, with the preimage letter of each tile.
struct CuttingBars {
  std::vector<long> bars;
  std::vector<Letter> letters;  // letters[i] labels the tile starting at bars[i]
  long lo = 0, hi = 0;
};
CuttingBars cutting_bars(const AdmissiblePoint& ap, long lo, long hi);

// Signals that recognizability data was contradicted during decoding; the
// caller should redo the search with a larger constant.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BarClass {
  bool bar = false;
  Letter preimage = -1;
};

// Certified recognizability data: every block of L_{2L+1} is classified as
// bar/non-bar (with the preimage letter at bars), verified on a window of the
// admissible fixed point.
struct RecognitionData {
  Substitution s;  // the substitution the bars belong to (often a power)
  int L = 0;
  long verified_window = 0;  // half-length of the window used
  std::unordered_map<Word, BarClass, WordHash> table;

  size_t block_len() const { return static_cast<size_t>(2 * L + 1); }
  const BarClass& classify(const Word& block) const;
};

struct RecognizabilityResult {
  std::optional<RecognitionData> data;   // nullopt: inconclusive at cap
  std::vector<std::pair<int, Word>> refuted;  // (L, witness block)
};

// Verifies one candidate constant on the admissible fixed point; returns the
// witness block on failure.
std::optional<Word> verify_recognizability(const Substitution& s, const AdmissiblePoint& ap, int L,
                                           std::optional<RecognitionData>* out);

// Smallest L <= cap whose verification passes.
RecognizabilityResult recognizability_constant(const Substitution& s, int cap = 64);

// Prop-style lift: a valid constant for s gives L * sum_{i<k} |s^i| for s^k.
long lift_recognizability_bound(const Substitution& s, int L, int k);

// Decoding of a language window by the certified table. `bars` are positions
// within the window, `letters` the preimage letters of the interior tiles:
// window[bars[i] .. bars[i+1]) = s(letters[i]). The certified region is
// [L, |window| - L).
struct Desubstitution {
  std::vector<long> bars;
  std::vector<Letter> letters;  // size = bars.size() - 1
};
Desubstitution desubstitute(const RecognitionData& rec, const Word& window);

// The clopen-partition atom of the point whose window around `center` is
// given: the unique (letter a, shift i) with 0 <= i < |s(a)| such that the
// point lies in S^i s([a]). Needs radius >= L + |s| around center.
std::pair<Letter, long> partition_atom(const RecognitionData& rec, const Word& window, long center);

// Brute-force oracle: all (preimage, offset) pairs whose image covers the
// window: s(preimage)[offset .. offset+|window|) == window, with
// 0 <= offset < |s(preimage[0])| and a minimal covering preimage.
struct Tiling {
  Word preimage;
  long offset;
};
std::vector<Tiling> enumerate_tilings(const Substitution& s, const Word& window);

}  // namespace subshift

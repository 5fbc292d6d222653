#pragma once

#include "subshift/language.hpp"

namespace subshift {

// The n-block representation: block letters are the words of L_{2n+1} in
// lexicographic order, named "(w)"; the substitution on blocks of radius n
// sends (uv) (u of length n, v of length n+1) to the first |sigma(v_0)|
// blocks of sigma(uv) starting at index |sigma(u)| - n.
struct BlockSystem {
  int radius = 0;
  std::vector<Word> blocks;        // underlying base words, length 2n+1
  Substitution block_substitution; // sigma^(n) over the block alphabet

  const Alphabet& block_alphabet() const { return block_substitution.alphabet(); }
  Letter central(Letter block) const;                 // pi^(n)
  std::optional<Letter> find_block(const Word& w) const;
};

BlockSystem block_system(const Substitution& s, int n);

// Sliding-window encoding: |w| >= 2n+1 letters -> |w| - 2n block letters.
Word block_encode(const BlockSystem& bs, const Word& w);
// Letterwise central projection.
Word block_decode(const BlockSystem& bs, const Word& bw);

}  // namespace subshift

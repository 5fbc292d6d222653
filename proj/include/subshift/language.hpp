#pragma once

#include <set>

#include "subshift/morphism.hpp"

namespace subshift {

// Exact set of length-n factors of the language of s, sorted lexicographically.
//
// For growing substitutions this is computed by the allowed-pair closure and
// is exact. Substitutions that are not growing but are right-prolongable on
// some letter are handled by a stabilizing fixed-point scan (exact for
// uniformly recurrent fixed points such as the Chacon substitution); inputs
// with neither property are rejected.
std::vector<Word> language(const Substitution& s, size_t n);

bool in_language(const Substitution& s, const Word& w);

// Word complexity p(n) = #L_n; p(0) = 1.
size_t complexity(const Substitution& s, size_t n);

// Ordered pairs (a, b) with ab in L(s) (growing substitutions only).
std::vector<std::pair<Letter, Letter>> allowed_pairs(const Substitution& s);

}  // namespace subshift

#pragma once

#include <variant>

#include "subshift/exactmath.hpp"
#include "subshift/oracle.hpp"

namespace subshift {

// Bounds from the quantitative theory are often far too large to materialize;
// values above the bit budget are carried as a base-10 logarithm estimate.
struct LogEstimate {
  double log10;
};
using BigBound = std::variant<BigInt, LogEstimate>;

std::string bound_to_string(const BigBound& b);
bool bound_at_most(const BigInt& value, const BigBound& bound);  // conservative

// |s|^(4 d^2): linear-recurrence constant bound for primitive substitutions.
BigBound lr_constant_formula(const Substitution& s);

// Recognizability-constant bound; uses the sharper variant when s is
// one-to-one on letters.
BigBound recognizability_formula(const Substitution& s);

// Bound on the number of distinct return substitutions over prefixes,
// (1 + (K+1)^3)^(|s| K^2 (1+(K+1)^3)) with K the formula constant.
BigBound return_substitution_count_formula(const Substitution& s);

struct BoundReport {
  BigBound lr_constant;
  BigBound recognizability;
  BigBound return_substitution_count;
};
BoundReport bound_calculators(const Substitution& s);

// Empirical linear-recurrence constant: max over word lengths m <= word_cap
// and u in L_m(x) of (largest gap between consecutive occurrences of u in a
// 64*m prefix) / m. A lower bound for the true constant.
Rat empirical_lr_constant(const FixedPoint& x, int word_cap = 8);
long empirical_lr_ceil(const FixedPoint& x, int word_cap = 8);

}  // namespace subshift

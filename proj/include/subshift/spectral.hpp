#pragma once

#include <optional>

#include "subshift/exactmath.hpp"

namespace subshift {

// Exact spectral data of a primitive substitution: characteristic polynomial,
// an isolating rational interval for the dominant eigenvalue, and interval
// enclosures of the Perron frequency vector (normalized to sum 1, positive).
struct SpectralData {
  Poly char_poly;            // monic, integer coefficients
  RatInterval rho;           // contains exactly the dominant root
  std::vector<RatInterval> frequencies;  // indexed by the alphabet
};

SpectralData spectral_data(const Substitution& s, const Rat& width = Rat(1, 1 << 20));

// The dominant eigenvalue as an exact integer when it is one (for a primitive
// matrix the dominant root is either an integer or irrational).
std::optional<BigInt> dominant_integer(const Substitution& s);

// Exact test rho(M_a)^k == rho(M_b)^l for primitive substitutions.
bool dominant_powers_equal(const Substitution& a, int k, const Substitution& b, int l);

// Refines an isolating interval of the dominant root of s (power 1).
RatInterval dominant_root_interval(const Substitution& s, const Rat& width);

}  // namespace subshift

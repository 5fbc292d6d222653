#pragma once

#include <memory>
#include <mutex>

#include "subshift/morphism.hpp"

namespace subshift {

// Lazy prefix access to a one-sided fixed point sigma^omega(seed).
// Thread-safe; the cache only grows.
class FixedPoint {
 public:
  FixedPoint(Substitution s, Letter seed);

  const Substitution& substitution() const { return s_; }
  Letter seed() const { return seed_; }

  Word prefix(size_t n) const;
  Letter at(size_t i) const;

 private:
  void ensure(size_t n) const;

  Substitution s_;
  Letter seed_;
  mutable std::mutex mu_;
  mutable Word cache_;
};

// Canonical one-sided fixed point: the first right-prolongable letter in
// alphabet order. Throws if none exists.
FixedPoint canonical_fixed_point(const Substitution& s);

// Two-sided sequence lim sigma^{pn}(left . right) where sigma^p(left) ends
// with left and sigma^p(right) starts with right. Positions are absolute,
// index 0 = first letter of `right`.
class TwoSidedPoint {
 public:
  TwoSidedPoint(Substitution s, int power, Word left, Word right);

  const Substitution& substitution() const { return s_; }
  int power() const { return power_; }

  // Letters x[lo..hi) with lo <= 0 <= hi.
  Word window(long lo, long hi) const;
  Letter at(long i) const;

 private:
  void ensure(long lo, long hi) const;

  Substitution s_;
  int power_;
  mutable std::mutex mu_;
  mutable Word left_;   // stored reversed access: left_[0] is x[-1-...]... kept as plain word, x[-left_.size()..0)
  mutable Word right_;  // x[0..right_.size())
};

// An admissible two-sided fixed point of s^power, seeded b.a with ba in the
// language. level(j) gives z_j = lim s^{pn}(s^j(b).s^j(a)); s(z_j) = z_{j+1}
// and s(z_{p-1}) = z_0, so z_{p-1} is the s-preimage of the point.
class AdmissiblePoint {
 public:
  AdmissiblePoint(Substitution s, int power, Letter left, Letter right);

  const Substitution& substitution() const { return s_; }
  int power() const { return power_; }
  Letter left_seed() const { return left_; }
  Letter right_seed() const { return right_; }

  const TwoSidedPoint& point() const { return *levels_[0]; }
  const TwoSidedPoint& level(int j) const;  // j in [0, power)

 private:
  Substitution s_;
  int power_;
  Letter left_, right_;
  std::vector<std::shared_ptr<TwoSidedPoint>> levels_;
};

// Finds the smallest power p <= max_power such that s^p has an admissible
// two-sided fixed point (requires the pair word to be in the language).
AdmissiblePoint admissible_fixed_point(const Substitution& s, int max_power = 64);

}  // namespace subshift

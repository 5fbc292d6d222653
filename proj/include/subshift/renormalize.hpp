#pragma once

#include <map>

#include "subshift/blocks.hpp"
#include "subshift/exactmath.hpp"
#include "subshift/recognition.hpp"
#include "subshift/sbc.hpp"

namespace subshift {

// Shared recognizability data for the powers of one substitution. The search
// tries doubling candidates up to the lifted bound of the base constant.
class RecognitionCache {
 public:
  explicit RecognitionCache(Substitution s, int base_cap = 64);
  const RecognitionData& power(int k);
  const Substitution& base() const { return s_; }
  int base_constant();

 private:
  Substitution s_;
  int cap_;
  std::map<int, RecognitionData> cache_;
};

// Gottschalk-Hedlund test for an integer cocycle on a proper primitive
// substitution subshift: exact kernel condition on the block incidence
// matrix, and an explicit transfer function on success.
struct CocycleReport {
  bool coboundary = false;
  int kernel_power = 0;   // minimal power at which the kernel test holds
  long dimension = 0;     // block count = the stabilization bound
  std::optional<IntegerCode> transfer;
  long max_abs_transfer = 0;
  std::vector<std::pair<long, long>> partial_sums;  // (n, c^(n)(x)) samples
};
CocycleReport is_coboundary(const IntegerCode& c, const Substitution& s, RecognitionCache& rec);

// One renormalization step: the local rule of F_n defined by
// tau^n o F_n = S^{r_n o f o sigma^n} o f o sigma^n.
struct DillStep {
  DillLocal rule;
  int n = 0;
  int radius = 0;    // s1 of the radius pair
  long max_len = 0;  // s2 of the radius pair
};
DillStep renormalize_step(const SlidingBlockCode& f, const Substitution& sigma,
                          const Substitution& tau, int n, RecognitionCache& tau_rec,
                          int radius_cap = 4096);

struct ReduceTrace {
  int n;
  int radius;
  long max_len;
};

struct ReduceResult {
  SlidingBlockCode g;
  int shift = 0;  // f = S^shift o g, verified over the language
  std::vector<ReduceTrace> trace;
  int repeat_from = -1;
  int repeat_period = 0;
  int used_gap = 0;  // N with F = F_N
  CocycleReport cocycle;
};

// Radius-reduction pipeline: iterates F_n to a repetition, turns c - 1 into a
// coboundary and shifts by the transfer. sigma must be proper (route through
// properize otherwise); sigma and tau must already share their dominant
// eigenvalue (align powers first).
ReduceResult reduce_radius(const SlidingBlockCode& f, const Substitution& sigma,
                           const Substitution& tau, int n_cap = 24);

}  // namespace subshift

#include "subshift/renormalize.hpp"

#include <algorithm>

#include "subshift/bounds.hpp"

namespace subshift {

RecognitionCache::RecognitionCache(Substitution s, int base_cap) : s_(std::move(s)), cap_(base_cap) {}

int RecognitionCache::base_constant() { return power(1).L; }

const RecognitionData& RecognitionCache::power(int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  if (k == 1) {
    RecognizabilityResult r = recognizability_constant(s_, cap_);
    if (!r.data) throw CapExceeded("recognizability cap exceeded", cap_);
    return cache_.emplace(1, std::move(*r.data)).first->second;
  }
  Substitution sk = s_.power(k);
  AdmissiblePoint ap = admissible_fixed_point(sk);
  long lifted = lift_recognizability_bound(s_, base_constant(), k);
  // doubling candidates up to the lifted bound, which is valid by the
  // power-lift inequality
  std::vector<long> candidates;
  for (long c = 1; c < lifted; c *= 2) candidates.push_back(c);
  candidates.push_back(lifted);
  for (long L : candidates) {
    std::optional<RecognitionData> data;
    auto witness = verify_recognizability(sk, ap, static_cast<int>(L), &data);
    if (!witness) return cache_.emplace(k, std::move(*data)).first->second;
  }
  throw std::logic_error("lifted recognizability bound failed verification");
}

CocycleReport is_coboundary(const IntegerCode& c, const Substitution& s, RecognitionCache& rec) {
  if (!s.flags().primitive) throw std::invalid_argument("is_coboundary requires a primitive substitution");
  if (!s.flags().left_proper || !s.flags().right_proper) {
    throw std::invalid_argument("is_coboundary requires a proper substitution (properize first)");
  }
  const int r = c.radius();
  BlockSystem bs = block_system(s, r);
  const long dim = bs.block_alphabet().size();

  IntVector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = BigInt(c.at(bs.blocks[static_cast<size_t>(i)], r));
  IntMatrix Mt = incidence_matrix(bs.block_substitution.morphism()).transpose();

  CocycleReport out;
  out.dimension = dim;
  int k_min = 0;
  for (long k = 1; k <= dim; ++k) {
    v = (Mt * v).eval();
    if (v.isZero(0)) {
      k_min = static_cast<int>(k);
      break;
    }
  }
  if (k_min == 0) {
    out.coboundary = false;
    // partial sums along the one-sided fixed point witness the unboundedness
    FixedPoint x = canonical_fixed_point(s);
    for (long n : {16L, 64L, 256L, 1024L}) {
      Word prefix = x.prefix(static_cast<size_t>(n + c.width() + 1));
      long sum = 0;
      for (long p = c.memory; p < n + c.memory; ++p) sum += c.at(prefix, p);
      out.partial_sums.emplace_back(n, sum);
    }
    return out;
  }

  out.coboundary = true;
  out.kernel_power = k_min;
  const RecognitionData& rk = rec.power(k_min);
  Substitution sk = s.power(k_min);
  const long H = sk.max_image_len() + std::max<long>(rk.L, r);
  IntegerCode d{s.alphabet(), static_cast<int>(H), static_cast<int>(H), {}};
  for (const Word& w : language(s, static_cast<size_t>(2 * H + 1))) {
    auto [letter, m] = partition_atom(rk, w, H);
    (void)letter;
    long val = 0;
    for (long p = -m; p < 0; ++p) val += c.at(w, H + p);
    d.rule[w] = val;
  }
  out.max_abs_transfer = d.max_abs();
  if (out.max_abs_transfer > static_cast<long>(sk.max_image_len()) * c.max_abs()) {
    throw std::logic_error("transfer bound exceeded the image-length estimate");
  }
  out.transfer = std::move(d);
  return out;
}

namespace {

struct StepGeometry {
  Word word;     // sigma^n(w)
  long q;        // start of the centre-letter image inside word
  long plen;     // |sigma^n(center letter)|
};

StepGeometry expand_window(const Morphism& power, const Word& w, int radius) {
  Word left = subword(w, 0, static_cast<size_t>(radius));
  StepGeometry g;
  g.word = power.apply(w);
  g.q = static_cast<long>(power.apply(left).size());
  g.plen = static_cast<long>(power.image(w[static_cast<size_t>(radius)]).size());
  return g;
}

}  // namespace

DillStep renormalize_step(const SlidingBlockCode& f, const Substitution& sigma,
                          const Substitution& tau, int n, RecognitionCache& tau_rec,
                          int radius_cap) {
  if (f.source != sigma.alphabet() || f.target != tau.alphabet()) {
    throw std::invalid_argument("sliding block code alphabets do not match the substitutions");
  }
  if (n == 0) {
    // F_0 = f: the dill rule emits the single letter at the centre
    int R = f.radius();
    DillLocal rule{f.source, f.target, R, {}};
    for (const Word& w : language(sigma, static_cast<size_t>(2 * R + 1))) rule.rule[w] = {f.at(w, R)};
    return {std::move(rule), 0, R, 1};
  }
  const RecognitionData& rec = tau_rec.power(n);
  Morphism power = morphism_power(sigma.morphism(), n);

  int R = std::max(f.radius(), 1);
  while (R <= radius_cap) {
    bool ok = true;
    DillLocal rule{f.source, f.target, R, {}};
    long max_len = 0;
    for (const Word& w : language(sigma, static_cast<size_t>(2 * R + 1))) {
      StepGeometry g = expand_window(power, w, R);
      if (static_cast<long>(g.word.size()) < f.width()) {
        ok = false;
        break;
      }
      Word y = f.apply(g.word);
      // y[j] = f(sigma^n x)[j + t_f - q]; global(j) = j + shift
      const long shift = f.memory - g.q;
      if (static_cast<long>(y.size()) < static_cast<long>(rec.block_len())) {
        ok = false;
        break;
      }
      Desubstitution d;
      try {
        d = desubstitute(rec, y);
      } catch (const std::invalid_argument&) {
        ok = false;
        break;
      }
      // first bars at global positions >= 0 and >= plen
      long istar = -1, jstar = -1;
      if (d.bars.front() + shift > 0 || d.bars.back() + shift < g.plen) {
        ok = false;  // window does not certify the needed bars
        break;
      }
      for (size_t i = 0; i < d.bars.size(); ++i) {
        long bg = d.bars[i] + shift;
        if (istar < 0 && bg >= 0) istar = static_cast<long>(i);
        if (jstar < 0 && bg >= g.plen) {
          jstar = static_cast<long>(i);
          break;
        }
      }
      if (istar < 0 || jstar < 0) {
        ok = false;
        break;
      }
      Word out;
      for (long i = istar; i < jstar; ++i) out.push_back(d.letters[static_cast<size_t>(i)]);
      max_len = std::max<long>(max_len, static_cast<long>(out.size()));
      rule.rule[w] = std::move(out);
    }
    if (ok) return {std::move(rule), n, R, max_len};
    R = R * 2;
  }
  throw CapExceeded("renormalize_step radius cap exceeded", radius_cap);
}

namespace {

// F(x)[index] computed from the dill rule by walking the implementation
// words; `center` marks position 0 of x inside the window.
std::optional<Letter> dill_value_at(const DillLocal& F, const Word& window, long center, long index) {
  if (index >= 0) {
    long pos = 0;
    for (long i = 0;; ++i) {
      if (center + i + F.radius >= static_cast<long>(window.size())) return std::nullopt;
      const Word& piece = F.at(window, center + i);
      if (index < pos + static_cast<long>(piece.size())) {
        return piece[static_cast<size_t>(index - pos)];
      }
      pos += static_cast<long>(piece.size());
    }
  }
  long pos = 0;
  for (long i = 1;; ++i) {
    if (center - i - F.radius < 0) return std::nullopt;
    const Word& piece = F.at(window, center - i);
    pos -= static_cast<long>(piece.size());
    if (index >= pos) {
      return piece[static_cast<size_t>(index - pos)];
    }
  }
}

}  // namespace

ReduceResult reduce_radius(const SlidingBlockCode& f, const Substitution& sigma,
                           const Substitution& tau, int n_cap) {
  if (!sigma.flags().left_proper || !sigma.flags().right_proper) {
    throw std::invalid_argument("reduce_radius requires a proper source substitution (properize first)");
  }
  if (!sigma.flags().primitive || !tau.flags().primitive) {
    throw std::invalid_argument("reduce_radius requires primitive substitutions");
  }
  RecognitionCache tau_rec(tau);
  RecognitionCache sigma_rec(sigma);

  ReduceResult res{SlidingBlockCode{}, 0, {}, -1, 0, 0, {}};
  std::vector<DillStep> steps;
  int repeat_from = -1, period = 0;
  for (int n = 0; n <= n_cap; ++n) {
    DillStep st = renormalize_step(f, sigma, tau, n, tau_rec);
    res.trace.push_back({st.n, st.radius, st.max_len});
    for (int m = 0; m < n; ++m) {
      if (same_dill(steps[static_cast<size_t>(m)].rule, st.rule, sigma)) {
        repeat_from = m;
        period = n - m;
        break;
      }
    }
    steps.push_back(std::move(st));
    if (repeat_from >= 0) break;
  }
  if (repeat_from < 0) throw CapExceeded("renormalization repetition cap exceeded", n_cap);
  res.repeat_from = repeat_from;
  res.repeat_period = period;

  // F = F_N for a repetition gap N = j * period with |tau^N| >= radius(f)
  long gap = period;
  Morphism tp = morphism_power(tau.morphism(), period);
  while (tp.max_image_len() < f.radius() || gap < repeat_from) {
    tp = compose(morphism_power(tau.morphism(), period), tp);
    gap += period;
  }
  res.used_gap = static_cast<int>(gap);
  long rep_index = gap >= repeat_from ? repeat_from + ((gap - repeat_from) % period) : gap;
  const DillLocal& F = steps[static_cast<size_t>(rep_index)].rule;

  IntegerCode c_minus_1 = F.cocycle_code();
  for (auto& [w, v] : c_minus_1.rule) v -= 1;
  res.cocycle = is_coboundary(c_minus_1, sigma, sigma_rec);
  if (!res.cocycle.coboundary) {
    throw std::invalid_argument("cocycle is not a coboundary: the input is not a factor map");
  }
  const IntegerCode& D = *res.cocycle.transfer;
  const long maxD = res.cocycle.max_abs_transfer;

  // G = S^{-D} o F as a sliding block code
  long RG = D.radius() + F.radius + 1;
  const long cap = 1L << 22;
  while (RG <= cap) {
    bool ok = true;
    SlidingBlockCode g{f.source, f.target, static_cast<int>(RG), static_cast<int>(RG), {}};
    for (const Word& w : language(sigma, static_cast<size_t>(2 * RG + 1))) {
      long delta = D.at(w, RG);
      if (std::abs(delta) > maxD) throw std::logic_error("transfer exceeded its bound");
      auto val = dill_value_at(F, w, RG, -delta);
      if (!val) {
        ok = false;
        break;
      }
      g.rule[w] = *val;
    }
    if (ok) {
      g = minimize(g, sigma);
      int max_shift = static_cast<int>(maxD + f.radius() + g.radius() + 16);
      auto k = shift_relation(f, g, sigma, max_shift);
      if (!k) throw std::logic_error("reduced map is not shift-related to the input");
      res.g = std::move(g);
      res.shift = *k;
      return res;
    }
    RG *= 2;
  }
  throw CapExceeded("reduced-code radius cap exceeded", cap);
}

}  // namespace subshift

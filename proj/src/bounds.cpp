#include "subshift/bounds.hpp"

#include <cmath>
#include <sstream>

#include "subshift/language.hpp"

namespace subshift {

namespace {

constexpr long kMaxBits = 1 << 20;

// base^exp as a BigBound, degrading to a log estimate when oversized.
BigBound big_pow(const BigInt& base, const BigInt& exp) {
  double lg = static_cast<double>(exp) * std::log10(static_cast<double>(base));
  if (lg * 3.33 > static_cast<double>(kMaxBits) || exp > kMaxBits) return LogEstimate{lg};
  BigInt r = 1;
  BigInt b = base;
  BigInt e = exp;
  while (e > 0) {
    if ((e & 1) != 0) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

double bound_log10(const BigBound& b) {
  if (std::holds_alternative<LogEstimate>(b)) return std::get<LogEstimate>(b).log10;
  const BigInt& v = std::get<BigInt>(b);
  return static_cast<double>(boost::multiprecision::msb(v < 1 ? BigInt(1) : v)) * 0.30103;
}

}  // namespace

std::string bound_to_string(const BigBound& b) {
  if (std::holds_alternative<BigInt>(b)) return std::get<BigInt>(b).str();
  std::ostringstream out;
  out << "~10^" << static_cast<double>(std::get<LogEstimate>(b).log10);
  return out.str();
}

bool bound_at_most(const BigInt& value, const BigBound& bound) {
  if (std::holds_alternative<BigInt>(bound)) return value <= std::get<BigInt>(bound);
  if (value <= 1) return true;
  double lg = static_cast<double>(boost::multiprecision::msb(value)) * 0.30103;
  return lg <= std::get<LogEstimate>(bound).log10 + 1;
}

BigBound lr_constant_formula(const Substitution& s) {
  BigInt d = s.alphabet().size();
  return big_pow(BigInt(s.max_image_len()), 4 * d * d);
}

BigBound recognizability_formula(const Substitution& s) {
  const BigInt d = s.alphabet().size();
  const BigInt q = s.max_image_len();
  if (q == 1) return BigInt(1);
  // 2 q^(6d^2 + 6d q^(28 d^2)) + q^d, the inner factor 6d dropping to 6 and
  // the tail q^d to q when s is one-to-one on letters.
  BigBound inner = big_pow(q, 28 * d * d);
  BigBound exponent;
  if (std::holds_alternative<BigInt>(inner)) {
    BigInt e = s.flags().injective_on_letters ? BigInt(6) * std::get<BigInt>(inner)
                                              : BigInt(6) * d * std::get<BigInt>(inner);
    e += 6 * d * d;
    exponent = e;
  } else {
    exponent = LogEstimate{bound_log10(inner) + std::log10(6.0 * static_cast<double>(d))};
  }
  if (std::holds_alternative<BigInt>(exponent)) {
    BigBound main = big_pow(q, std::get<BigInt>(exponent));
    if (std::holds_alternative<BigInt>(main)) {
      BigInt tail = s.flags().injective_on_letters ? q : std::get<BigInt>(big_pow(q, d));
      return BigInt(2) * std::get<BigInt>(main) + tail;
    }
    return LogEstimate{bound_log10(main) + 0.3011};
  }
  // log10(q^E) = E log10 q with E itself only known by magnitude
  double elg = bound_log10(exponent);
  return LogEstimate{std::pow(10.0, std::min(elg, 300.0)) * std::log10(static_cast<double>(q))};
}

BigBound return_substitution_count_formula(const Substitution& s) {
  BigBound kb = lr_constant_formula(s);
  if (std::holds_alternative<BigInt>(kb)) {
    const BigInt& k = std::get<BigInt>(kb);
    BigInt base = 1 + (k + 1) * (k + 1) * (k + 1);
    BigInt exp = BigInt(s.max_image_len()) * k * k * base;
    return big_pow(base, exp);
  }
  double klg = bound_log10(kb);
  return LogEstimate{std::pow(10.0, std::min(3 * klg, 300.0)) * (3 * klg)};
}

BoundReport bound_calculators(const Substitution& s) {
  return {lr_constant_formula(s), recognizability_formula(s), return_substitution_count_formula(s)};
}

Rat empirical_lr_constant(const FixedPoint& x, int word_cap) {
  Rat best = 1;
  for (int m = 1; m <= word_cap; ++m) {
    Word prefix = x.prefix(static_cast<size_t>(64 * m));
    for (const Word& u : factors(prefix, static_cast<size_t>(m))) {
      auto occ = occurrences(u, prefix);
      for (size_t i = 0; i + 1 < occ.size(); ++i) {
        Rat ratio(static_cast<long>(occ[i + 1] - occ[i]), static_cast<long>(m));
        best = std::max(best, ratio);
      }
    }
  }
  return best;
}

long empirical_lr_ceil(const FixedPoint& x, int word_cap) {
  Rat k = empirical_lr_constant(x, word_cap);
  BigInt n = boost::multiprecision::numerator(k), d = boost::multiprecision::denominator(k);
  BigInt q = n / d;
  if (q * d != n) q += 1;
  return static_cast<long>(q);
}

}  // namespace subshift

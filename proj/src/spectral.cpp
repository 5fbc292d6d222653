#include "subshift/spectral.hpp"

namespace subshift {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

namespace {

RatInterval isolate_dominant(const Poly& p, int max_image_len) {
  return isolate_largest_real_root(p, Rat(max_image_len));
}

}  // namespace

RatInterval dominant_root_interval(const Substitution& s, const Rat& width) {
  if (!s.flags().primitive) throw std::invalid_argument("dominant root requires a primitive substitution");
  Poly p = char_poly(incidence_matrix(s.morphism()));
  RatInterval iv = isolate_dominant(p, s.max_image_len());
  refine_root_interval(p, iv, width);
  return iv;
}

SpectralData spectral_data(const Substitution& s, const Rat& width) {
  if (!s.flags().primitive) throw std::invalid_argument("spectral_data requires a primitive substitution");
  IntMatrix M = incidence_matrix(s.morphism());
  CharPolyData cp = char_poly_data(M);
  RatInterval rho = isolate_dominant(cp.char_poly, s.max_image_len());
  refine_root_interval(cp.char_poly, rho, width);

  const long n = M.rows();
  // Columns of adj(rho I - M) are Perron eigenvectors; tr adj = P'(rho) > 0,
  // so the entries are positive once rho is enclosed tightly enough.
  std::vector<RatInterval> freq;
  for (int attempt = 0; attempt < 64; ++attempt) {
    freq.clear();
    std::vector<RatInterval> col(static_cast<size_t>(n));
    bool all_positive = true;
    for (long i = 0; i < n; ++i) {
      // entry (i, 0) of adj(tI - M) as a polynomial in t
      std::vector<Rat> coeffs(cp.adj_coeffs.size());
      for (size_t k = 0; k < cp.adj_coeffs.size(); ++k) {
        coeffs[cp.adj_coeffs.size() - 1 - k] = cp.adj_coeffs[k](i, 0);
      }
      col[static_cast<size_t>(i)] = interval_eval(Poly(std::move(coeffs)), rho);
      if (!col[static_cast<size_t>(i)].positive()) all_positive = false;
    }
    if (all_positive) {
      RatInterval sum = RatInterval::point(Rat(0));
      for (auto& c : col) sum = sum + c;
      for (auto& c : col) freq.push_back(c / sum);
      bool ok = true;
      for (auto& f : freq)
        if (!f.positive()) ok = false;
      if (ok) return {cp.char_poly, rho, freq};
    }
    refine_root_interval(cp.char_poly, rho, rho.width() / 1024);
  }
  throw std::runtime_error("failed to certify positive Perron frequencies");
}

namespace {

BigInt rat_floor(const Rat& x) {
  BigInt n = numerator(x), d = denominator(x);
  BigInt q = n / d;
  if (x < 0 && q * d != n) q -= 1;
  return q;
}

}  // namespace

std::optional<BigInt> dominant_integer(const Substitution& s) {
  if (!s.flags().primitive) throw std::invalid_argument("dominant_integer requires a primitive substitution");
  Poly p = char_poly(incidence_matrix(s.morphism()));
  RatInterval iv = isolate_dominant(p, s.max_image_len());
  // A monic integer polynomial has integer rational roots; test the integers
  // that can sit in the isolating interval.
  while (rat_floor(iv.hi) - rat_floor(iv.lo) > 1) refine_root_interval(p, iv, iv.width() / 4);
  for (BigInt cand = rat_floor(iv.lo); cand <= rat_floor(iv.hi) + 1; ++cand) {
    if (Rat(cand) >= iv.lo && Rat(cand) <= iv.hi && p.eval(Rat(cand)) == 0) return cand;
  }
  return std::nullopt;
}

bool dominant_powers_equal(const Substitution& a, int k, const Substitution& b, int l) {
  if (!a.flags().primitive || !b.flags().primitive) {
    throw std::invalid_argument("dominant_powers_equal requires primitive substitutions");
  }
  IntMatrix A = int_matrix_power(incidence_matrix(a.morphism()), k);
  IntMatrix B = int_matrix_power(incidence_matrix(b.morphism()), l);
  Poly P = char_poly(A);
  Poly Q = char_poly(B);
  Poly G = poly_gcd(P, Q);
  if (G.degree() <= 0) return false;

  // Dominant roots of A and B are rho_a^k and rho_b^l; their upper bounds are
  // the max column sums.
  auto colsum_bound = [](const IntMatrix& M) {
    BigInt best = 1;
    for (long j = 0; j < M.cols(); ++j) {
      BigInt s = 0;
      for (long i = 0; i < M.rows(); ++i) s += M(i, j);
      best = std::max(best, s);
    }
    return Rat(best);
  };
  RatInterval ia = isolate_largest_real_root(P, colsum_bound(A));
  RatInterval ib = isolate_largest_real_root(Q, colsum_bound(B));
  // The interval endpoints are non-roots of P resp. Q, hence non-roots of G.
  // Each isolating interval contains exactly its dominant root, so the two
  // roots are equal iff G has a root inside the intersection.
  Rat lo = std::max(ia.lo, ib.lo);
  Rat hi = std::min(ia.hi, ib.hi);
  if (!(lo < hi)) return false;
  return sturm_count(G, lo, hi) >= 1;
}

}  // namespace subshift

#include "subshift/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace subshift {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

IntMatrix incidence_matrix(const Morphism& m) {
  const int rows = m.target().size();
  const int cols = m.source().size();
  IntMatrix M(rows, cols);
  M.setZero();
  for (Letter j = 0; j < cols; ++j)
    for (Letter i : m.image(j)) M(i, j) += 1;
  return M;
}

IntMatrix int_matrix_power(const IntMatrix& m, long k) {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  IntMatrix acc = IntMatrix::Identity(m.rows(), m.cols());
  IntMatrix sq = m;
  while (k > 0) {
    if (k & 1) acc = (acc * sq).eval();
    k >>= 1;
    if (k) sq = (sq * sq).eval();
  }
  return acc;
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::from_int_coeffs(const std::vector<BigInt>& coeffs) {
  std::vector<Rat> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Rat(coeffs[i]);
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& t) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> d = c_;
  Rat lead = d.back();
  for (auto& x : d) x /= lead;
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::vector<BigInt> Poly::int_coeffs_primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm = 1;
  for (const Rat& x : c_) {
    BigInt d = denominator(x);
    den_lcm = boost::multiprecision::lcm(den_lcm, d);
  }
  std::vector<BigInt> out(c_.size());
  BigInt g = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    out[i] = numerator(c_[i]) * (den_lcm / denominator(c_[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g == 0) g = 1;
  if (out.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (!first) out << (v < 0 ? " - " : " + ");
    else if (v < 0) out << "-";
    first = false;
    Rat a = boost::multiprecision::abs(v);
    if (a != 1 || i == 0) out << a.str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly division by zero");
  std::vector<Rat> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.degree() - db + 1), Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    Rat f = r[static_cast<size_t>(i)] / bc[static_cast<size_t>(db)];
    if (f == 0) continue;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * bc[static_cast<size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  Poly sf = p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() > 0) sf = poly_divmod(p, g).first;  // squarefree part
  std::vector<Poly> chain;
  chain.push_back(sf);
  chain.push_back(sf.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Poly() - r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const Poly& q : chain) {
    Rat v = q.eval(x);
    int s = v == 0 ? 0 : (v < 0 ? -1 : 1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}


}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
  if (!(a < b)) return 0;
  auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat nudge_off_root(const Poly& p, Rat x, const Rat& step_hint) {
  Rat step = step_hint;
  while (p.eval(x) == 0) {
    x -= step;
    step /= 2;
  }
  return x;
}

RatInterval RatInterval::intersect(const RatInterval& o) const {
  return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)), std::max(std::max(c1, c2), std::max(c3, c4))};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by interval containing 0");
  RatInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
  return a * inv;
}

RatInterval interval_eval(const Poly& p, const RatInterval& x) {
  RatInterval acc = RatInterval::point(Rat(0));
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * x + RatInterval::point(p.coeffs()[i]);
  }
  return acc;
}

CharPolyData char_poly_data(const IntMatrix& m) {
  const long n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  RatMatrix M(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) M(i, j) = Rat(m(i, j));

  // Faddeev-LeVerrier: B_0 = I, A_k = M B_{k-1}, c_k = -tr(A_k)/k,
  // B_k = A_k + c_k I; char(t) = t^n + c_1 t^{n-1} + ... + c_n.
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
  coeffs[static_cast<size_t>(n)] = 1;
  std::vector<RatMatrix> adj;
  RatMatrix B = RatMatrix::Identity(n, n);
  adj.push_back(B);
  for (long k = 1; k <= n; ++k) {
    RatMatrix A = (M * B).eval();
    Rat tr = 0;
    for (long i = 0; i < n; ++i) tr += A(i, i);
    Rat ck = -tr / Rat(k);
    coeffs[static_cast<size_t>(n - k)] = ck;
    B = A;
    for (long i = 0; i < n; ++i) B(i, i) += ck;
    if (k < n) adj.push_back(B);
  }
  return {Poly(std::move(coeffs)), std::move(adj)};
}

Poly char_poly(const IntMatrix& m) { return char_poly_data(m).char_poly; }

RatInterval isolate_largest_real_root(const Poly& p, const Rat& upper) {
  Rat hi = nudge_off_root(p, upper + 1, Rat(1, 4));
  while (p.eval(hi) == 0) hi += Rat(1, 7);
  Rat lo = nudge_off_root(p, Rat(0), Rat(1, 4));
  if (sturm_count(p, lo, hi) < 1) throw std::domain_error("no real root in the given range");
  // Shrink to exactly one distinct root by bisection on the largest root.
  while (sturm_count(p, lo, hi) > 1 || hi - lo > 1) {
    Rat mid = nudge_off_root(p, (lo + hi) / 2, (hi - lo) / 1024);
    if (sturm_count(p, mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

void refine_root_interval(const Poly& p, RatInterval& iv, const Rat& width) {
  while (iv.width() > width) {
    Rat mid = nudge_off_root(p, (iv.lo + iv.hi) / 2, iv.width() / 1024);
    if (mid <= iv.lo || mid >= iv.hi) break;
    if (sturm_count(p, mid, iv.hi) >= 1) iv.lo = mid;
    else iv.hi = mid;
  }
}

}  // namespace subshift

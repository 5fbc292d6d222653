#pragma once

#include <iterator>
#include <type_traits>

// boost 1.74's is_byte_container hard-errors under C++20 on types whose
// const_iterator is void (Eigen matrices). Pre-empt the header through its
// include guard with an SFINAE-friendly equivalent.
#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP
namespace boost { namespace multiprecision { namespace detail {
template <class C, class = void>
struct is_byte_container : public std::false_type {};
template <class C>
struct is_byte_container<C, std::void_t<typename std::iterator_traits<typename C::const_iterator>::value_type>>
    : public std::integral_constant<
          bool, std::is_integral<typename std::remove_cv<
                    typename std::iterator_traits<typename C::const_iterator>::value_type>::type>::value &&
                    sizeof(typename std::iterator_traits<typename C::const_iterator>::value_type) == 1> {};
}}}  // namespace boost::multiprecision::detail
#endif

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <vector>

#include "subshift/morphism.hpp"

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense exact matrices; the scalar is an arbitrary-precision integer or
// rational, so every product and power below is exact.
using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Incidence matrix: entry (i, j) counts occurrences of target letter i in the
// image of source letter j.
IntMatrix incidence_matrix(const Morphism& m);

IntMatrix int_matrix_power(const IntMatrix& m, long k);

// -- exact polynomials -------------------------------------------------------

// Polynomial with rational coefficients, c[i] * t^i, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly from_int_coeffs(const std::vector<BigInt>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](size_t i) const { return c_[i]; }

  Rat eval(const Rat& t) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Integer coefficients after clearing denominators (primitive part, positive
  // leading coefficient).
  std::vector<BigInt> int_coeffs_primitive() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rat> c_;
};

// Division with remainder over the rationals.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic gcd

// Number of distinct real roots in (a, b]; endpoints must not be roots
// (callers should nudge; see nudge_off_root).
int sturm_count(const Poly& p, const Rat& a, const Rat& b);
Rat nudge_off_root(const Poly& p, Rat x, const Rat& step_hint);

// Exact rational intervals (closed), with exact interval arithmetic.
struct RatInterval {
  Rat lo, hi;
  RatInterval() = default;
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(const Rat& x) { return {x, x}; }
  Rat width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool positive() const { return lo > 0; }
  bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  RatInterval intersect(const RatInterval& o) const;
};
RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator/(const RatInterval& a, const RatInterval& b);  // b must not contain 0
RatInterval interval_eval(const Poly& p, const RatInterval& x);

// Faddeev-LeVerrier: exact characteristic polynomial det(tI - M) of an
// integer matrix, plus the matrices B_k with adj(tI - M) = sum B_k t^{n-1-k}.
struct CharPolyData {
  Poly char_poly;                 // monic, integer coefficients
  std::vector<RatMatrix> adj_coeffs;  // B_0..B_{n-1}
};
CharPolyData char_poly_data(const IntMatrix& m);
Poly char_poly(const IntMatrix& m);

// Isolating interval for the largest real root of p, assuming p has a real
// root in (0, upper]. The result contains exactly one distinct root of p.
RatInterval isolate_largest_real_root(const Poly& p, const Rat& upper);
// Shrinks an isolating interval below the requested width.
void refine_root_interval(const Poly& p, RatInterval& iv, const Rat& width);

}  // namespace subshift

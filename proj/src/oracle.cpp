#include "subshift/oracle.hpp"

#include <algorithm>

#include "subshift/language.hpp"

namespace subshift {

FixedPoint::FixedPoint(Substitution s, Letter seed) : s_(std::move(s)), seed_(seed) {
  if (s_.image(seed_).front() != seed_ || s_.image(seed_).size() < 2 || !s_.letter_growing(seed_)) {
    throw std::invalid_argument("seed letter is not right-prolongable");
  }
  cache_ = {seed_};
}

void FixedPoint::ensure(size_t n) const {
  while (cache_.size() < n) cache_ = s_.apply(cache_);
}

Word FixedPoint::prefix(size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(n);
  return Word(cache_.begin(), cache_.begin() + static_cast<long>(n));
}

Letter FixedPoint::at(size_t i) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(i + 1);
  return cache_[i];
}

FixedPoint canonical_fixed_point(const Substitution& s) {
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    if (s.image(a).front() == a && s.image(a).size() >= 2 && s.letter_growing(a)) return FixedPoint(s, a);
  }
  throw std::invalid_argument("substitution is not right-prolongable on any letter");
}

TwoSidedPoint::TwoSidedPoint(Substitution s, int power, Word left, Word right)
    : s_(std::move(s)), power_(power), left_(std::move(left)), right_(std::move(right)) {
  if (left_.empty() || right_.empty()) throw std::invalid_argument("two-sided seed words must be non-empty");
  Morphism p = morphism_power(s_.morphism(), power_);
  Word li = p.apply(left_);
  Word ri = p.apply(right_);
  if (!is_suffix(left_, li)) throw std::invalid_argument("left seed is not suffix-stable under the power");
  if (!is_prefix(right_, ri)) throw std::invalid_argument("right seed is not prefix-stable under the power");
}

void TwoSidedPoint::ensure(long lo, long hi) const {
  Morphism p = morphism_power(s_.morphism(), power_);
  bool grew = true;
  while ((static_cast<long>(left_.size()) < -lo || static_cast<long>(right_.size()) < hi) && grew) {
    size_t l0 = left_.size(), r0 = right_.size();
    left_ = p.apply(left_);
    right_ = p.apply(right_);
    grew = left_.size() > l0 || right_.size() > r0;
  }
  if (static_cast<long>(left_.size()) < -lo || static_cast<long>(right_.size()) < hi) {
    throw std::runtime_error("two-sided window not extendable (non-growing seed)");
  }
}

Word TwoSidedPoint::window(long lo, long hi) const {
  if (lo > 0 || hi < 0 || lo > hi) throw std::invalid_argument("window must satisfy lo <= 0 <= hi");
  std::lock_guard<std::mutex> lock(mu_);
  ensure(lo, hi);
  Word out;
  out.reserve(static_cast<size_t>(hi - lo));
  for (long i = lo; i < hi; ++i) {
    if (i < 0) out.push_back(left_[left_.size() - static_cast<size_t>(-i)]);
    else out.push_back(right_[static_cast<size_t>(i)]);
  }
  return out;
}

Letter TwoSidedPoint::at(long i) const {
  Word w = window(std::min(i, 0L), std::max(i + 1, 0L));
  return w[static_cast<size_t>(i - std::min(i, 0L))];
}

AdmissiblePoint::AdmissiblePoint(Substitution s, int power, Letter left, Letter right)
    : s_(std::move(s)), power_(power), left_(left), right_(right) {
  for (int j = 0; j < power_; ++j) {
    Morphism pj = j == 0 ? Morphism::identity(s_.alphabet()) : morphism_power(s_.morphism(), j);
    levels_.push_back(std::make_shared<TwoSidedPoint>(s_, power_, pj.apply({left_}), pj.apply({right_})));
  }
}

const TwoSidedPoint& AdmissiblePoint::level(int j) const {
  return *levels_.at(static_cast<size_t>(((j % power_) + power_) % power_));
}

AdmissiblePoint admissible_fixed_point(const Substitution& s, int max_power) {
  std::vector<Word> l2 = language(s, 2);
  Morphism m = s.morphism();
  Morphism p = m;
  for (int power = 1; power <= max_power; ++power) {
    if (power > 1) p = compose(m, p);
    Substitution sp{p};
    for (Letter b = 0; b < s.alphabet().size(); ++b) {
      if (p.image(b).back() != b || p.image(b).size() < 2 || !s.letter_growing(b)) continue;
      for (Letter a = 0; a < s.alphabet().size(); ++a) {
        if (p.image(a).front() != a || p.image(a).size() < 2 || !s.letter_growing(a)) continue;
        Word ba{b, a};
        if (std::find(l2.begin(), l2.end(), ba) != l2.end()) {
          return AdmissiblePoint(s, power, b, a);
        }
      }
    }
  }
  throw std::runtime_error("no admissible two-sided fixed point found up to the power cap");
}

}  // namespace subshift

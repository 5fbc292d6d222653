#pragma once

#include <filesystem>
#include <iosfwd>
#include <utility>

#include "subshift/word.hpp"

namespace subshift {

// A morphism of free monoids: one image word per source letter.
class Morphism {
 public:
  Morphism() = default;  // empty placeholder, not a usable morphism
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Letter a) const { return images_.at(static_cast<size_t>(a)); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  int max_image_len() const { return max_len_; }  // |sigma|
  int min_image_len() const { return min_len_; }  // <sigma>
  bool constant_length() const { return max_len_ == min_len_; }
  bool erasing() const { return min_len_ == 0; }
  bool is_endomorphism() const { return source_ == target_; }
  bool is_coding() const;  // every image a single letter

  bool operator==(const Morphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
  }

  static Morphism identity(const Alphabet& a);

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
  int max_len_ = 0;
  int min_len_ = 0;
};

// outer o inner; requires inner.target == outer.source.
Morphism compose(const Morphism& outer, const Morphism& inner);

// k-fold self-composition of an endomorphism, k >= 1.
Morphism morphism_power(const Morphism& endo, int k);

enum class Side { Left, Right };

struct SubstitutionFlags {
  bool primitive = false;
  bool growing = false;
  bool constant_length = false;
  bool left_proper = false;
  bool right_proper = false;
  bool injective_on_letters = false;
};

// A non-erasing endomorphism together with recomputed structural flags.
class Substitution {
 public:
  explicit Substitution(Morphism m);
  Substitution(const Alphabet& a, std::vector<Word> images)
      : Substitution(Morphism(a, a, std::move(images))) {}

  const Morphism& morphism() const { return m_; }
  const Alphabet& alphabet() const { return m_.source(); }
  const Word& image(Letter a) const { return m_.image(a); }
  Word apply(const Word& w) const { return m_.apply(w); }
  int max_image_len() const { return m_.max_image_len(); }
  int min_image_len() const { return m_.min_image_len(); }

  const SubstitutionFlags& flags() const { return flags_; }
  const std::vector<std::pair<Letter, Side>>& prolongable() const { return prolongable_; }
  bool prolongable_on(Letter a, Side side) const;
  // Letters whose iterated image length is unbounded.
  bool letter_growing(Letter a) const { return letter_growing_.at(static_cast<size_t>(a)); }

  Substitution power(int k) const { return Substitution(morphism_power(m_, k)); }

  bool operator==(const Substitution& o) const { return m_ == o.m_; }

 private:
  Morphism m_;
  SubstitutionFlags flags_;
  std::vector<std::pair<Letter, Side>> prolongable_;
  std::vector<bool> letter_growing_;
};

// Wielandt primitivity exponent bound d^2 - 2d + 2.
long wielandt_bound(int d);

// -- .sub text format --------------------------------------------------------
//
//   # comment
//   alphabet: a b c        (optional; otherwise first-appearance order)
//   a -> a b
//   b -> a
//
// Each rule line maps one letter to its image word.
Substitution parse_substitution(std::istream& in, const std::string& name = "<input>");
Substitution parse_substitution_text(const std::string& text, const std::string& name = "<input>");
Substitution load_substitution(const std::filesystem::path& file);

std::string format_substitution(const Substitution& s);

}  // namespace subshift

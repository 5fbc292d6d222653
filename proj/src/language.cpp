#include "subshift/language.hpp"

#include <algorithm>
#include <unordered_set>

#include "subshift/oracle.hpp"

namespace subshift {

std::vector<std::pair<Letter, Letter>> allowed_pairs(const Substitution& s) {
  const int d = s.alphabet().size();
  std::vector<std::vector<bool>> in(static_cast<size_t>(d), std::vector<bool>(static_cast<size_t>(d), false));
  // Pairs inside single images, then closure under straddling adjacent images.
  for (Letter a = 0; a < d; ++a) {
    const Word& im = s.image(a);
    for (size_t i = 0; i + 1 < im.size(); ++i) in[static_cast<size_t>(im[i])][static_cast<size_t>(im[i + 1])] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Letter a = 0; a < d; ++a)
      for (Letter b = 0; b < d; ++b) {
        if (!in[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
        Letter u = s.image(a).back();
        Letter v = s.image(b).front();
        if (!in[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
          in[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
          changed = true;
        }
      }
  }
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a = 0; a < d; ++a)
    for (Letter b = 0; b < d; ++b)
      if (in[static_cast<size_t>(a)][static_cast<size_t>(b)]) out.emplace_back(a, b);
  return out;
}

namespace {

std::vector<Word> language_growing(const Substitution& s, size_t n) {
  // Every length-n factor occurs inside sigma^m(w) for a letter or an allowed
  // pair w, where m is minimal with <sigma^m> >= n.
  Morphism p = s.morphism();
  while (static_cast<size_t>(p.min_image_len()) < n) p = compose(s.morphism(), p);
  std::set<Word> out;
  auto add_factors = [&](const Word& w) {
    if (w.size() < n) return;
    for (size_t i = 0; i + n <= w.size(); ++i) out.insert(subword(w, i, n));
  };
  for (Letter a = 0; a < s.alphabet().size(); ++a) add_factors(p.apply({a}));
  for (auto& [a, b] : allowed_pairs(s)) add_factors(p.apply({a, b}));
  return {out.begin(), out.end()};
}

std::vector<Word> language_prolongable(const Substitution& s, size_t n) {
  // Fallback for non-growing inputs: factors of the fixed points of the
  // right-prolongable letters, scanned until the factor set is stable across
  // a doubling of the prefix, plus all short images of bounded letters.
  std::set<Word> out;
  auto add_factors = [&](const Word& w) {
    for (size_t i = 0; i + n <= w.size(); ++i) out.insert(subword(w, i, n));
  };
  bool any = false;
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    if (s.image(a).front() != a || s.image(a).size() < 2 || !s.letter_growing(a)) continue;
    any = true;
    FixedPoint fp(s, a);
    size_t len = std::max<size_t>(4 * n, 64);
    size_t before;
    do {
      before = out.size();
      add_factors(fp.prefix(len));
      len *= 2;
    } while (out.size() != before);
  }
  // Bounded letters contribute finitely many words of stabilized images.
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    if (s.letter_growing(a)) continue;
    Word w{a};
    for (int k = 0; k <= 2 * s.alphabet().size(); ++k) {
      add_factors(w);
      w = s.apply(w);
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("language: substitution is neither growing nor right-prolongable");
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Word> language(const Substitution& s, size_t n) {
  if (n == 0) return {Word{}};
  if (n == 1) {
    std::vector<Word> out;
    for (Letter a = 0; a < s.alphabet().size(); ++a) out.push_back({a});
    return out;
  }
  if (s.flags().growing) return language_growing(s, n);
  return language_prolongable(s, n);
}

bool in_language(const Substitution& s, const Word& w) {
  auto l = language(s, w.size());
  return std::binary_search(l.begin(), l.end(), w);
}

size_t complexity(const Substitution& s, size_t n) { return language(s, n).size(); }

}  // namespace subshift

#include "subshift/sbc.hpp"

#include <algorithm>

namespace subshift {

namespace {

Word window_at(const Word& w, long center, int t, int s) {
  long lo = center - t;
  long hi = center + s;
  if (lo < 0 || hi >= static_cast<long>(w.size())) throw std::out_of_range("window outside the word");
  return subword(w, static_cast<size_t>(lo), static_cast<size_t>(t + s + 1));
}

}  // namespace

Letter SlidingBlockCode::at(const Word& w, long center) const {
  auto it = rule.find(window_at(w, center, memory, anticipation));
  if (it == rule.end()) throw std::invalid_argument("window not covered by the sliding block code");
  return it->second;
}

Word SlidingBlockCode::apply(const Word& w) const {
  if (static_cast<long>(w.size()) < width()) throw std::invalid_argument("input shorter than the code width");
  Word out;
  out.reserve(w.size() - static_cast<size_t>(memory + anticipation));
  for (long c = memory; c + anticipation < static_cast<long>(w.size()); ++c) out.push_back(at(w, c));
  return out;
}

SlidingBlockCode SlidingBlockCode::from_coding(const Morphism& coding) {
  if (!coding.is_coding()) throw std::invalid_argument("expected a letter-to-letter morphism");
  SlidingBlockCode f{coding.source(), coding.target(), 0, 0, {}};
  for (Letter a = 0; a < coding.source().size(); ++a) f.rule[{a}] = coding.image(a)[0];
  return f;
}

SlidingBlockCode SlidingBlockCode::identity(const Substitution& s, int radius) {
  SlidingBlockCode f{s.alphabet(), s.alphabet(), radius, radius, {}};
  for (const Word& w : language(s, static_cast<size_t>(2 * radius + 1))) {
    f.rule[w] = w[static_cast<size_t>(radius)];
  }
  return f;
}

SlidingBlockCode widen(const SlidingBlockCode& f, int t, int s, const Substitution& lang) {
  if (t < f.memory || s < f.anticipation) throw std::invalid_argument("widen cannot shrink the window");
  if (t == f.memory && s == f.anticipation) return f;
  SlidingBlockCode out{f.source, f.target, t, s, {}};
  for (const Word& w : language(lang, static_cast<size_t>(t + s + 1))) {
    out.rule[w] = f.at(w, t);
  }
  return out;
}

SlidingBlockCode compose_shift(const SlidingBlockCode& f, int j, const Substitution& lang) {
  // (S^j o f)(x)_0 = f(x)_j depends on x[j - t .. j + s]
  int t = std::max(f.memory - j, 0);
  int s = std::max(f.anticipation + j, 0);
  SlidingBlockCode out{f.source, f.target, t, s, {}};
  for (const Word& w : language(lang, static_cast<size_t>(t + s + 1))) {
    out.rule[w] = f.at(w, t + j);
  }
  return out;
}

SlidingBlockCode minimize(const SlidingBlockCode& f, const Substitution& lang) {
  SlidingBlockCode cur = f;
  bool changed = true;
  while (changed && cur.memory + cur.anticipation > 0) {
    changed = false;
    // try trimming the left end
    if (cur.memory > 0) {
      std::unordered_map<Word, Letter, WordHash> trimmed;
      bool ok = true;
      for (auto& [w, v] : cur.rule) {
        Word tail = subword(w, 1, w.size() - 1);
        auto [it, fresh] = trimmed.emplace(tail, v);
        if (!fresh && it->second != v) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur = SlidingBlockCode{cur.source, cur.target, cur.memory - 1, cur.anticipation, std::move(trimmed)};
        changed = true;
        continue;
      }
    }
    if (cur.anticipation > 0) {
      std::unordered_map<Word, Letter, WordHash> trimmed;
      bool ok = true;
      for (auto& [w, v] : cur.rule) {
        Word head = subword(w, 0, w.size() - 1);
        auto [it, fresh] = trimmed.emplace(head, v);
        if (!fresh && it->second != v) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur = SlidingBlockCode{cur.source, cur.target, cur.memory, cur.anticipation - 1, std::move(trimmed)};
        changed = true;
      }
    }
  }
  (void)lang;
  return cur;
}

bool same_code(const SlidingBlockCode& a, const SlidingBlockCode& b, const Substitution& lang) {
  if (a.source != b.source || a.target != b.target) return false;
  int t = std::max(a.memory, b.memory);
  int s = std::max(a.anticipation, b.anticipation);
  for (const Word& w : language(lang, static_cast<size_t>(t + s + 1))) {
    if (a.at(w, t) != b.at(w, t)) return false;
  }
  return true;
}

std::optional<int> shift_relation(const SlidingBlockCode& f, const SlidingBlockCode& g,
                                  const Substitution& lang, int max_shift) {
  for (int j = 0; j <= max_shift; ++j) {
    for (int sign : {1, -1}) {
      int k = sign * j;
      if (j == 0 && sign < 0) continue;
      if (same_code(f, compose_shift(g, k, lang), lang)) return k;
    }
  }
  return std::nullopt;
}

long IntegerCode::at(const Word& w, long center) const {
  auto it = rule.find(window_at(w, center, memory, anticipation));
  if (it == rule.end()) throw std::invalid_argument("window not covered by the integer code");
  return it->second;
}

long IntegerCode::max_abs() const {
  long m = 0;
  for (auto& [w, v] : rule) m = std::max(m, std::abs(v));
  return m;
}

const Word& DillLocal::at(const Word& w, long center) const {
  auto it = rule.find(window_at(w, center, radius, radius));
  if (it == rule.end()) throw std::invalid_argument("window not covered by the dill rule");
  return it->second;
}

Word DillLocal::apply(const Word& w) const {
  Word out;
  for (long c = radius; c + radius < static_cast<long>(w.size()); ++c) {
    const Word& piece = at(w, c);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

long DillLocal::max_output() const {
  long m = 0;
  for (auto& [w, v] : rule) m = std::max(m, static_cast<long>(v.size()));
  return m;
}

bool DillLocal::somewhere_positive() const {
  for (auto& [w, v] : rule)
    if (!v.empty()) return true;
  return false;
}

IntegerCode DillLocal::cocycle_code() const {
  IntegerCode c{source, radius, radius, {}};
  for (auto& [w, v] : rule) c.rule[w] = static_cast<long>(v.size());
  return c;
}

DillLocal widen_dill(const DillLocal& d, int r, const Substitution& lang) {
  if (r < d.radius) throw std::invalid_argument("widen_dill cannot shrink the radius");
  if (r == d.radius) return d;
  DillLocal out{d.source, d.target, r, {}};
  for (const Word& w : language(lang, static_cast<size_t>(2 * r + 1))) {
    out.rule[w] = d.at(w, r);
  }
  return out;
}

bool same_dill(const DillLocal& a, const DillLocal& b, const Substitution& lang) {
  if (a.source != b.source || a.target != b.target) return false;
  int r = std::max(a.radius, b.radius);
  for (const Word& w : language(lang, static_cast<size_t>(2 * r + 1))) {
    if (a.at(w, r) != b.at(w, r)) return false;
  }
  return true;
}

}  // namespace subshift

#include "subshift/returns.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "subshift/bounds.hpp"

namespace subshift {

namespace {

Alphabet synthetic_alphabet(const char* prefix, int n) {
  std::vector<std::string> tokens;
  for (int i = 1; i <= n; ++i) tokens.push_back(prefix + std::to_string(i));
  return Alphabet(tokens);
}

// Sorted start positions of any marker occurrence in `text`.
std::vector<size_t> marker_positions(const std::vector<Word>& markers, const Word& text) {
  std::vector<size_t> pos;
  for (const Word& m : markers) {
    auto occ = occurrences(m, text);
    pos.insert(pos.end(), occ.begin(), occ.end());
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

void check_markers(const FixedPoint& x, const std::vector<Word>& markers) {
  if (markers.empty()) throw std::invalid_argument("empty marker set");
  size_t len = markers[0].size();
  if (len == 0) throw std::invalid_argument("empty marker word");
  for (const Word& m : markers) {
    if (m.size() != len) throw std::invalid_argument("markers must have equal length");
    if (!in_language(x.substitution(), m)) {
      throw std::invalid_argument("marker not in the language: " + x.substitution().alphabet().render(m));
    }
  }
}

long initial_scan_length(const FixedPoint& x, size_t marker_len, const ScanCaps& caps) {
  long k = empirical_lr_ceil(x, caps.lr_word_cap);
  long l = static_cast<long>(marker_len);
  return std::max(64 * l, 4 * (k + 1) * (k + 1) * l);
}

struct Scan {
  Word prefix;
  std::vector<size_t> positions;
  long length = 0;
};

// Scans a prefix long enough that the set of return steps is unchanged over
// the final quarter of the scan (uniform recurrence makes this stabilize).
Scan certified_scan(const FixedPoint& x, const std::vector<Word>& markers, const ScanCaps& caps) {
  check_markers(x, markers);
  long len = initial_scan_length(x, markers[0].size(), caps);
  while (true) {
    if (len > caps.max_prefix) throw CapExceeded("return-word scan cap exceeded", caps.max_prefix);
    Scan s;
    s.prefix = x.prefix(static_cast<size_t>(len));
    s.positions = marker_positions(markers, s.prefix);
    s.length = len;
    if (s.positions.size() >= 3) {
      std::unordered_map<Word, int, WordHash> early, all;
      size_t cut = static_cast<size_t>(3 * len / 4);
      for (size_t i = 0; i + 1 < s.positions.size(); ++i) {
        Word w = subword(s.prefix, s.positions[i], s.positions[i + 1] - s.positions[i]);
        ++all[w];
        if (s.positions[i + 1] <= cut) ++early[w];
      }
      if (!all.empty() && early.size() == all.size()) return s;
    }
    len *= 2;
  }
}

}  // namespace

ReturnWords return_words(const FixedPoint& x, const Word& u, const ScanCaps& caps) {
  Scan s = certified_scan(x, {u}, caps);
  std::vector<Word> words;
  std::unordered_map<Word, Letter, WordHash> id;
  for (size_t i = 0; i + 1 < s.positions.size(); ++i) {
    Word w = subword(s.prefix, s.positions[i], s.positions[i + 1] - s.positions[i]);
    if (id.emplace(w, static_cast<Letter>(words.size())).second) words.push_back(std::move(w));
  }
  const int count = static_cast<int>(words.size());
  ReturnWords out;
  out.marker = u;
  out.words = words;
  out.theta = Morphism(synthetic_alphabet("r", count), x.substitution().alphabet(), std::move(words));
  out.first_marker_pos = s.positions.front();
  out.scanned_prefix = s.length;
  return out;
}

Word decode_by_returns(const ReturnWords& rw, const Word& anchored) {
  const Word& u = rw.marker;
  if (anchored.size() < u.size() || !is_prefix(u, anchored) || !is_suffix(u, anchored)) {
    throw std::invalid_argument("word is not anchored at marker occurrences");
  }
  std::unordered_map<Word, Letter, WordHash> id;
  for (size_t i = 0; i < rw.words.size(); ++i) id.emplace(rw.words[i], static_cast<Letter>(i));
  auto pos = occurrences(u, anchored);
  if (pos.back() + u.size() != anchored.size()) {
    throw std::invalid_argument("word does not end at a marker occurrence");
  }
  Word out;
  for (size_t i = 0; i + 1 < pos.size(); ++i) {
    Word w = subword(anchored, pos[i], pos[i + 1] - pos[i]);
    auto it = id.find(w);
    if (it == id.end()) throw CapExceeded("decode met a return word outside the computed structure");
    out.push_back(it->second);
  }
  return out;
}

Word derived_window(const FixedPoint& x, const Word& u, size_t n, const ScanCaps& caps) {
  ScanCaps local = caps;
  for (int attempt = 0; attempt < 8; ++attempt) {
    ReturnWords rw = return_words(x, u, local);
    std::unordered_map<Word, Letter, WordHash> id;
    for (size_t i = 0; i < rw.words.size(); ++i) id.emplace(rw.words[i], static_cast<Letter>(i));
    long len = rw.scanned_prefix;
    bool incomplete = false;
    while (len <= local.max_prefix) {
      Word prefix = x.prefix(static_cast<size_t>(len));
      auto pos = occurrences(u, prefix);
      if (pos.size() >= n + 1) {
        Word out;
        incomplete = false;
        for (size_t i = 0; i < n; ++i) {
          Word w = subword(prefix, pos[i], pos[i + 1] - pos[i]);
          auto it = id.find(w);
          if (it == id.end()) {
            incomplete = true;
            break;
          }
          out.push_back(it->second);
        }
        if (!incomplete) return out;
        break;
      }
      len *= 2;
    }
    local.max_prefix *= 2;
    if (!incomplete && len > local.max_prefix / 2) continue;
  }
  throw CapExceeded("derived window scan cap exceeded", caps.max_prefix);
}

LambdaWord lambda_word(const FixedPoint& x, const Word& u, const Word& uprime, const ScanCaps& caps) {
  if (!is_prefix(u, uprime) || u == uprime) {
    throw std::invalid_argument("lambda_word requires u to be a proper prefix of u'");
  }
  ReturnWords ru = return_words(x, u, caps);
  ReturnWords rup = return_words(x, uprime, caps);

  std::vector<Word> images;
  for (const Word& wprime : rup.words) {
    images.push_back(decode_by_returns(ru, concat(wprime, u)));
  }
  LambdaWord out{Morphism(rup.return_alphabet(), ru.return_alphabet(), images), false, false, false, false};

  out.occurrence_condition = true;
  for (const Word& w : ru.words) {
    Word wu = concat(w, u);
    for (const Word& wp : rup.words) {
      if (!contains_word(wu, concat(wp, uprime))) {
        out.occurrence_condition = false;
        break;
      }
    }
    if (!out.occurrence_condition) break;
  }

  // D_u = D_{u'} certified through equal return substitutions when both
  // markers are prefixes of the fixed point.
  if (x.prefix(uprime.size()) == uprime) {
    ReturnSubstitution su = return_substitution_word(x, u, caps);
    ReturnSubstitution sup = return_substitution_word(x, uprime, caps);
    out.derived_equal = same_substitution(su.sub, sup.sub);
  }
  if (ru.count() == rup.count()) {
    Substitution as_endo(ru.return_alphabet(), out.lambda.images());
    out.primitive = as_endo.flags().primitive;
    out.left_proper = as_endo.flags().left_proper && !out.lambda.images().empty() &&
                      out.lambda.images()[0].front() == 0;
  }
  return out;
}

ReturnPairs return_pairs(const FixedPoint& x, const std::vector<Word>& markers, const ScanCaps& caps) {
  Scan s = certified_scan(x, markers, caps);
  ReturnPairs out;
  out.markers = markers;
  const size_t lu = markers[0].size();
  std::unordered_map<Word, Letter, WordHash> word_id;
  std::vector<Word> theta_words;
  std::map<std::pair<Word, Word>, Letter> pair_id;
  for (size_t i = 0; i + 1 < s.positions.size(); ++i) {
    if (s.positions[i + 1] + lu > s.prefix.size()) break;
    Word w = subword(s.prefix, s.positions[i], s.positions[i + 1] - s.positions[i]);
    Word nxt = subword(s.prefix, s.positions[i + 1], lu);
    if (word_id.emplace(w, static_cast<Letter>(theta_words.size())).second) theta_words.push_back(w);
    if (pair_id.emplace(std::make_pair(w, nxt), static_cast<Letter>(out.pairs.size())).second) {
      out.pairs.emplace_back(w, nxt);
    }
  }
  out.words = theta_words;
  out.theta = Morphism(synthetic_alphabet("r", static_cast<int>(theta_words.size())),
                       x.substitution().alphabet(), theta_words);
  out.pair_alphabet = synthetic_alphabet("p", static_cast<int>(out.pairs.size()));
  out.first_marker_pos = s.positions.front();
  out.scanned_prefix = s.length;
  return out;
}

Word ReturnPairs::flatten(const Word& pair_word) const {
  Word out;
  for (Letter p : pair_word) {
    const Word& w = d1(p);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::optional<Letter> ReturnPairs::find_pair(const Word& w, const Word& u) const {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first == w && pairs[i].second == u) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

bool admissible(const Substitution& s, const ReturnPairs& rp, const Word& pair_word) {
  if (pair_word.empty()) return true;
  const size_t lu = rp.marker_len();
  Word full = concat(rp.flatten(pair_word), rp.d2(pair_word.back()));
  // every intermediate target marker must be a prefix of what follows
  size_t at = 0;
  for (size_t i = 0; i + 1 < pair_word.size(); ++i) {
    at += rp.d1(pair_word[i]).size();
    const Word& ui = rp.d2(pair_word[i]);
    if (at + lu > full.size() || subword(full, at, lu) != ui) return false;
  }
  return in_language(s, full);
}

Word derived_pair_window(const FixedPoint& x, const std::vector<Word>& markers, size_t n,
                         const ScanCaps& caps) {
  ScanCaps local = caps;
  for (int attempt = 0; attempt < 8; ++attempt) {
    ReturnPairs rp = return_pairs(x, markers, local);
    const size_t lu = rp.marker_len();
    long len = rp.scanned_prefix;
    while (len <= local.max_prefix) {
      Word prefix = x.prefix(static_cast<size_t>(len));
      auto pos = marker_positions(markers, prefix);
      if (pos.size() >= n + 1 && pos[n] + lu <= prefix.size()) {
        Word out;
        bool ok = true;
        for (size_t i = 0; i < n; ++i) {
          Word w = subword(prefix, pos[i], pos[i + 1] - pos[i]);
          Word nx = subword(prefix, pos[i + 1], lu);
          auto id = rp.find_pair(w, nx);
          if (!id) {
            ok = false;
            break;
          }
          out.push_back(*id);
        }
        if (ok) return out;
        break;
      }
      len *= 2;
    }
    local.max_prefix *= 2;
  }
  throw CapExceeded("derived pair window scan cap exceeded", caps.max_prefix);
}

ReturnSubstitution return_substitution_word(const FixedPoint& x, const Word& u, const ScanCaps& caps) {
  if (u.empty()) throw std::invalid_argument("marker must be non-empty");
  if (x.prefix(u.size()) != u) throw std::invalid_argument("marker must be a prefix of the fixed point");
  const Substitution& s = x.substitution();

  // Seed: the first return word, i.e. the prefix up to the second occurrence.
  long len = static_cast<long>(4 * u.size() + 16);
  std::vector<size_t> pos;
  while (true) {
    if (len > caps.max_prefix) throw CapExceeded("seed scan cap exceeded", caps.max_prefix);
    pos = occurrences(u, x.prefix(static_cast<size_t>(len)));
    if (pos.size() >= 2) break;
    len *= 2;
  }
  std::vector<Word> words{x.prefix(pos[1])};
  std::unordered_map<Word, Letter, WordHash> id{{words[0], 0}};
  std::vector<Word> images;

  // Closure: decode sigma(w) for each discovered return word; the image of a
  // return word is again a concatenation of return words.
  for (size_t i = 0; i < words.size(); ++i) {
    Word img = s.apply(words[i]);
    Word anchored = concat(img, u);
    auto p = occurrences(u, anchored);
    if (p.empty() || p[0] != 0) throw std::logic_error("return image lost its marker anchor");
    Word code;
    size_t last = 0;
    for (size_t j = 1; j < p.size(); ++j) {
      if (p[j] > img.size()) break;
      Word w = subword(anchored, p[j - 1], p[j] - p[j - 1]);
      auto [it, fresh] = id.emplace(w, static_cast<Letter>(words.size()));
      if (fresh) words.push_back(w);
      code.push_back(it->second);
      last = p[j];
    }
    if (last != img.size()) throw std::logic_error("return image does not end on a marker");
    images.push_back(std::move(code));
  }

  // Canonical renumbering: first occurrence of wu along the fixed point.
  std::vector<Letter> order;  // order[new] = old
  {
    long scan = len;
    while (order.size() < words.size()) {
      if (scan > 4 * caps.max_prefix) throw CapExceeded("canonical order scan cap exceeded", caps.max_prefix);
      Word prefix = x.prefix(static_cast<size_t>(scan));
      auto occ = occurrences(u, prefix);
      order.clear();
      std::vector<bool> seen(words.size(), false);
      for (size_t j = 0; j + 1 < occ.size() && order.size() < words.size(); ++j) {
        Word w = subword(prefix, occ[j], occ[j + 1] - occ[j]);
        auto it = id.find(w);
        if (it == id.end()) throw std::logic_error("scan met a return word missing from the closure");
        if (!seen[static_cast<size_t>(it->second)]) {
          seen[static_cast<size_t>(it->second)] = true;
          order.push_back(it->second);
        }
      }
      scan *= 2;
    }
  }
  std::vector<Letter> rank(words.size());
  for (size_t n = 0; n < order.size(); ++n) rank[static_cast<size_t>(order[n])] = static_cast<Letter>(n);

  std::vector<Word> canon_words(words.size());
  std::vector<Word> canon_images(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    canon_words[static_cast<size_t>(rank[i])] = words[i];
    Word img;
    for (Letter l : images[i]) img.push_back(rank[static_cast<size_t>(l)]);
    canon_images[static_cast<size_t>(rank[i])] = std::move(img);
  }

  ReturnWords structure;
  structure.marker = u;
  structure.words = canon_words;
  structure.theta = Morphism(synthetic_alphabet("r", static_cast<int>(canon_words.size())),
                             s.alphabet(), canon_words);
  structure.first_marker_pos = 0;
  structure.scanned_prefix = len;

  Substitution sub(structure.return_alphabet(), canon_images);
  for (Letter l = 0; l < structure.return_alphabet().size(); ++l) {
    if (structure.theta.apply(sub.image(l)) != s.apply(structure.theta.image(l))) {
      throw std::logic_error("return substitution commutation identity failed");
    }
  }
  return {std::move(structure), std::move(sub)};
}

ReturnPairSubstitution return_substitution_set(const FixedPoint& x, const std::vector<Word>& markers,
                                               const ScanCaps& caps, int max_power) {
  ReturnPairs rp = return_pairs(x, markers, caps);
  const Substitution& s = x.substitution();
  const size_t lu = rp.marker_len();

  Morphism pk = s.morphism();
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) pk = compose(s.morphism(), pk);
    // (ii): the image of every marker contains a marker occurrence
    bool ok = true;
    for (const Word& u : markers) {
      if (marker_positions(markers, pk.apply(u)).empty()) {
        ok = false;
        break;
      }
    }
    // (i): every pair word wu occurs in the image of every return word
    for (size_t i = 0; ok && i < rp.pairs.size(); ++i) {
      Word wu = concat(rp.pairs[i].first, rp.pairs[i].second);
      for (const Word& w : rp.words) {
        if (!contains_word(wu, pk.apply(w))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // split sigma^k(w) = p(w) m(w) s(w) at the first marker occurrence
    auto split = [&](const Word& w) {
      Word img = pk.apply(w);
      auto pos = marker_positions(markers, img);
      if (pos.empty()) throw std::logic_error("image without marker occurrence after certification");
      return std::tuple<Word, Word, Word>(subword(img, 0, pos[0]), subword(img, pos[0], lu),
                                          subword(img, pos[0] + lu, img.size() - pos[0] - lu));
    };

    std::vector<Word> images(rp.pairs.size());
    bool complete = true;
    for (size_t i = 0; i < rp.pairs.size() && complete; ++i) {
      auto [pw, mw, sw] = split(rp.pairs[i].first);
      auto [pu, mu, su] = split(rp.pairs[i].second);
      (void)pw;
      (void)su;
      Word body = concat(concat(mw, sw), concat(pu, mu));
      auto pos = marker_positions(markers, body);
      if (pos.empty() || pos[0] != 0 || pos.back() != body.size() - lu) {
        throw std::logic_error("pair image decode is not marker-anchored");
      }
      Word code;
      for (size_t j = 0; j + 1 < pos.size(); ++j) {
        Word w = subword(body, pos[j], pos[j + 1] - pos[j]);
        Word nx = subword(body, pos[j + 1], lu);
        auto idp = rp.find_pair(w, nx);
        if (!idp) {
          complete = false;
          break;
        }
        code.push_back(*idp);
      }
      if (complete) {
        // Theta-level commutation: the flattened image must reproduce the
        // split of sigma^k(w u) between the two markers.
        Word flat = rp.flatten(code);
        if (concat(flat, mu) != body) throw std::logic_error("pair substitution flatten identity failed");
        images[i] = std::move(code);
      }
    }
    if (!complete) {
      // the scan missed a pair; retry this power with a deeper structure
      ScanCaps deeper = caps;
      deeper.max_prefix = caps.max_prefix * 4;
      ReturnPairs wider = return_pairs(x, markers, deeper);
      if (wider.count() == rp.count()) throw CapExceeded("pair structure incomplete at scan cap");
      rp = std::move(wider);
      pk = s.morphism();
      for (int j = 2; j <= k; ++j) pk = compose(s.morphism(), pk);
      --k;
      continue;
    }
    Substitution sub(rp.pair_alphabet, images);
    return {std::move(rp), std::move(sub), k};
  }
  throw CapExceeded("return_substitution_set power cap exceeded", max_power);
}

LambdaSet lambda_set(const FixedPoint& x, const std::vector<Word>& U, const std::vector<Word>& V,
                     const ScanCaps& caps) {
  ReturnPairs rpU = return_pairs(x, U, caps);
  ReturnPairs rpV = return_pairs(x, V, caps);
  const size_t lu = rpU.marker_len(), lv = rpV.marker_len();
  if (lv <= lu) throw std::invalid_argument("lambda_set requires longer V markers");
  for (const Word& v : V) {
    Word p = subword(v, 0, lu);
    if (std::find(U.begin(), U.end(), p) == U.end()) {
      throw std::invalid_argument("a V marker has no prefix in U");
    }
  }
  std::vector<Word> images;
  for (auto& [w, v] : rpV.pairs) {
    Word body = concat(w, subword(v, 0, lu));
    auto pos = marker_positions(U, body);
    if (pos.empty() || pos[0] != 0 || pos.back() != body.size() - lu) {
      throw std::logic_error("lambda_set decode is not U-anchored");
    }
    Word code;
    for (size_t j = 0; j + 1 < pos.size(); ++j) {
      Word seg = subword(body, pos[j], pos[j + 1] - pos[j]);
      Word nx = subword(body, pos[j + 1], lu);
      auto idp = rpU.find_pair(seg, nx);
      if (!idp) throw CapExceeded("lambda_set met a pair outside the U structure");
      code.push_back(*idp);
    }
    images.push_back(std::move(code));
  }
  // shift: U-steps between the first U occurrence and the first V occurrence
  long len = std::max(rpU.scanned_prefix, rpV.scanned_prefix);
  Word prefix = x.prefix(static_cast<size_t>(len));
  auto posU = marker_positions(U, prefix);
  auto posV = marker_positions(V, prefix);
  if (posU.empty() || posV.empty()) throw std::logic_error("marker scan empty after certification");
  int shift = 0;
  for (size_t i = 0; i < posU.size() && posU[i] < posV[0]; ++i) ++shift;
  return {Morphism(rpV.pair_alphabet, rpU.pair_alphabet, images), shift};
}

bool same_substitution(const Substitution& a, const Substitution& b) {
  if (a.alphabet().size() != b.alphabet().size()) return false;
  for (Letter l = 0; l < a.alphabet().size(); ++l) {
    if (a.image(l) != b.image(l)) return false;
  }
  return true;
}

}  // namespace subshift

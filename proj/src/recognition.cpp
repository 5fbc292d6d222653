#include "subshift/recognition.hpp"

#include <algorithm>

#include "subshift/bounds.hpp"

namespace subshift {

CuttingBars cutting_bars(const AdmissiblePoint& ap, long lo, long hi) {
  if (lo > 0 || hi < 0) throw std::invalid_argument("cutting bars window must contain the origin");
  const Substitution& s = ap.substitution();
  const TwoSidedPoint& pre = ap.level(ap.power() - 1);  // s(pre) is the point
  CuttingBars out;
  out.lo = lo;
  out.hi = hi;
  std::vector<std::pair<long, Letter>> tiles;
  // rightward tiles from the pivot
  long b = 0;
  for (long j = 0; b <= hi; ++j) {
    Letter c = pre.at(j);
    tiles.emplace_back(b, c);
    b += static_cast<long>(s.image(c).size());
  }
  // leftward tiles
  b = 0;
  for (long j = -1; ; --j) {
    Letter c = pre.at(j);
    b -= static_cast<long>(s.image(c).size());
    if (b + static_cast<long>(s.image(c).size()) <= lo) break;
    tiles.emplace_back(b, c);
  }
  std::sort(tiles.begin(), tiles.end());
  for (auto& [pos, c] : tiles) {
    if (pos >= lo && pos <= hi) {
      out.bars.push_back(pos);
      out.letters.push_back(c);
    }
  }
  return out;
}

const BarClass& RecognitionData::classify(const Word& block) const {
  auto it = table.find(block);
  if (it == table.end()) throw std::invalid_argument("block missing from recognizability table");
  return it->second;
}

std::optional<Word> verify_recognizability(const Substitution& s, const AdmissiblePoint& ap, int L,
                                           std::optional<RecognitionData>* out) {
  std::vector<Word> all_blocks = language(s, static_cast<size_t>(2 * L + 1));
  FixedPoint canonical = canonical_fixed_point(s);
  const long k_emp = empirical_lr_ceil(canonical, 5);
  long V = (k_emp + 1) * (2 * static_cast<long>(L) + 1) * s.max_image_len() * 4 + 4L * L + 8;

  for (int round = 0; round < 12; ++round) {
    std::unordered_map<Word, BarClass, WordHash> table;
    Word w = ap.point().window(-V, V + 1);
    CuttingBars cb = cutting_bars(ap, -V, V);
    std::vector<char> is_bar(static_cast<size_t>(2 * V + 1), 0);
    std::vector<Letter> bar_letter(static_cast<size_t>(2 * V + 1), -1);
    for (size_t i = 0; i < cb.bars.size(); ++i) {
      is_bar[static_cast<size_t>(cb.bars[i] + V)] = 1;
      bar_letter[static_cast<size_t>(cb.bars[i] + V)] = cb.letters[i];
    }
    std::optional<Word> witness;
    for (long i = -V + L; i + L <= V; ++i) {
      Word block = subword(w, static_cast<size_t>(i + V - L), static_cast<size_t>(2 * L + 1));
      BarClass cls{is_bar[static_cast<size_t>(i + V)] != 0, bar_letter[static_cast<size_t>(i + V)]};
      auto [it, fresh] = table.emplace(block, cls);
      if (!fresh) {
        if (it->second.bar != cls.bar || (cls.bar && it->second.preimage != cls.preimage)) {
          if (!witness || block < *witness) witness = block;  // smallest refuting block
        }
      }
    }
    if (witness) return witness;
    // The table must cover the whole language at this block length; blocks
    // recur, so enlarge the window until every one has been observed.
    bool complete = std::all_of(all_blocks.begin(), all_blocks.end(),
                                [&](const Word& b) { return table.count(b) > 0; });
    if (complete) {
      if (out) out->emplace(RecognitionData{s, L, V, std::move(table)});
      return std::nullopt;
    }
    V *= 2;
  }
  throw CapExceeded("recognizability verification window cap exceeded", V);
}

RecognizabilityResult recognizability_constant(const Substitution& s, int cap) {
  if (!s.flags().primitive) throw std::invalid_argument("recognizability requires a primitive substitution");
  AdmissiblePoint ap = admissible_fixed_point(s);
  RecognizabilityResult res;
  for (int L = 0; L <= cap; ++L) {
    std::optional<RecognitionData> data;
    auto witness = verify_recognizability(s, ap, L, &data);
    if (!witness) {
      res.data = std::move(data);
      return res;
    }
    res.refuted.emplace_back(L, *witness);
  }
  return res;
}

long lift_recognizability_bound(const Substitution& s, int L, int k) {
  long sum = 1;  // |s^0|
  Morphism p = s.morphism();
  for (int i = 1; i < k; ++i) {
    sum += p.max_image_len();
    p = compose(s.morphism(), p);
  }
  return L * sum;
}

Desubstitution desubstitute(const RecognitionData& rec, const Word& window) {
  const int L = rec.L;
  const size_t blen = rec.block_len();
  if (window.size() < blen) throw std::invalid_argument("window shorter than one block");
  Desubstitution out;
  for (size_t i = 0; i + blen <= window.size(); ++i) {
    const BarClass& cls = rec.classify(subword(window, i, blen));
    if (cls.bar) {
      out.bars.push_back(static_cast<long>(i) + L);
      out.letters.push_back(cls.preimage);
    }
  }
  if (out.bars.empty()) {
    throw AmbiguityError("no cutting bar found in the certified region");
  }
  out.letters.pop_back();  // letters label tiles between consecutive bars
  for (size_t i = 0; i + 1 < out.bars.size(); ++i) {
    long gap = out.bars[i + 1] - out.bars[i];
    Letter c = out.letters[i];
    if (gap != static_cast<long>(rec.s.image(c).size())) {
      throw AmbiguityError("cutting-bar gap does not match the image length");
    }
    // tiles must reproduce the window content
    for (long j = 0; j < gap; ++j) {
      size_t at = static_cast<size_t>(out.bars[i] + j);
      if (at < window.size() && window[at] != rec.s.image(c)[static_cast<size_t>(j)]) {
        throw AmbiguityError("tile content mismatch in desubstitution");
      }
    }
  }
  return out;
}

std::pair<Letter, long> partition_atom(const RecognitionData& rec, const Word& window, long center) {
  Desubstitution d = desubstitute(rec, window);
  // the tile [bars[i], bars[i+1]) containing the center
  for (size_t i = 0; i + 1 < d.bars.size(); ++i) {
    if (d.bars[i] <= center && center < d.bars[i + 1]) {
      return {d.letters[i], center - d.bars[i]};
    }
  }
  throw AmbiguityError("no certified tile contains the requested center");
}

std::vector<Tiling> enumerate_tilings(const Substitution& s, const Word& window) {
  std::vector<Tiling> out;
  const Alphabet& a = s.alphabet();
  // choose the first tile (letter + offset into its image), then extend
  std::function<void(Word&, size_t)> extend = [&](Word& pre, size_t covered) {
    if (covered >= window.size()) {
      out.push_back({pre, -1});  // offset filled by caller copy below
      return;
    }
    for (Letter c = 0; c < a.size(); ++c) {
      const Word& im = s.image(c);
      size_t n = std::min(im.size(), window.size() - covered);
      if (std::equal(im.begin(), im.begin() + static_cast<long>(n),
                     window.begin() + static_cast<long>(covered))) {
        pre.push_back(c);
        extend(pre, covered + im.size());
        pre.pop_back();
      }
    }
  };
  for (Letter first = 0; first < a.size(); ++first) {
    const Word& im = s.image(first);
    for (long off = 0; off < static_cast<long>(im.size()); ++off) {
      size_t n = std::min(im.size() - static_cast<size_t>(off), window.size());
      if (!std::equal(im.begin() + off, im.begin() + off + static_cast<long>(n), window.begin())) continue;
      size_t covered = im.size() - static_cast<size_t>(off);
      Word pre{first};
      size_t before = out.size();
      if (covered >= window.size()) {
        out.push_back({pre, off});
      } else {
        extend(pre, covered);
        for (size_t i = before; i < out.size(); ++i) out[i].offset = off;
      }
    }
  }
  return out;
}

}  // namespace subshift

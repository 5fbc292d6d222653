#include "subshift/blocks.hpp"

#include <algorithm>
#include <unordered_map>

namespace subshift {

namespace {

std::string block_token(const Alphabet& base, const Word& w) {
  return "(" + base.render(w) + ")";
}

}  // namespace

Letter BlockSystem::central(Letter block) const {
  const Word& w = blocks.at(static_cast<size_t>(block));
  return w[w.size() / 2];
}

std::optional<Letter> BlockSystem::find_block(const Word& w) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), w);
  if (it == blocks.end() || *it != w) return std::nullopt;
  return static_cast<Letter>(it - blocks.begin());
}

BlockSystem block_system(const Substitution& s, int n) {
  if (n < 0) throw std::invalid_argument("block radius must be non-negative");
  const size_t len = static_cast<size_t>(2 * n + 1);
  std::vector<Word> blocks = language(s, len);  // sorted
  std::vector<std::string> tokens;
  for (const Word& w : blocks) tokens.push_back(block_token(s.alphabet(), w));
  Alphabet ba(tokens);

  std::unordered_map<Word, Letter, WordHash> id;
  for (size_t i = 0; i < blocks.size(); ++i) id.emplace(blocks[i], static_cast<Letter>(i));

  std::vector<Word> images(blocks.size());
  for (size_t b = 0; b < blocks.size(); ++b) {
    const Word& w = blocks[b];
    Word u(w.begin(), w.begin() + n);
    Letter v0 = w[static_cast<size_t>(n)];
    Word img = s.apply(w);
    const long start = static_cast<long>(s.apply(u).size()) - n;
    const long p = static_cast<long>(s.image(v0).size());
    if (start < 0 || start + p + 2 * n > static_cast<long>(img.size())) {
      throw std::logic_error("block image window out of range");
    }
    Word code;
    for (long t = 0; t < p; ++t) {
      Word blk = subword(img, static_cast<size_t>(start + t), len);
      auto it = id.find(blk);
      if (it == id.end()) throw std::logic_error("block image outside the language");
      code.push_back(it->second);
    }
    images[b] = std::move(code);
  }
  return {n, std::move(blocks), Substitution(ba, std::move(images))};
}

Word block_encode(const BlockSystem& bs, const Word& w) {
  const size_t len = static_cast<size_t>(2 * bs.radius + 1);
  if (w.size() < len) throw std::invalid_argument("word too short to block-encode");
  Word out;
  for (size_t i = 0; i + len <= w.size(); ++i) {
    auto b = bs.find_block(subword(w, i, len));
    if (!b) throw std::invalid_argument("window not in the block alphabet");
    out.push_back(*b);
  }
  return out;
}

Word block_decode(const BlockSystem& bs, const Word& bw) {
  Word out;
  for (Letter b : bw) out.push_back(bs.central(b));
  return out;
}

}  // namespace subshift

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace subshift {

// Letters are indices into an Alphabet. Words are letter sequences.
using Letter = int32_t;
using Word = std::vector<Letter>;

// Thrown when a scan or search cap is hit before certification; decision
// layers convert this into Inconclusive verdicts.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what, long cap_value = 0)
      : std::runtime_error(what), cap(cap_value) {}
  long cap;
};

struct WordHash {
  size_t operator()(const Word& w) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Letter v : w) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// An alphabet is an ordered list of distinct opaque tokens. The order is
// stable and fixes the canonical letter enumeration used everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet from_chars(const std::string& chars);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(Letter i) const { return tokens_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<Letter> find(const std::string& token) const;
  Letter index(const std::string& token) const;  // throws if unknown
  bool contains(const std::string& token) const { return find(token).has_value(); }

  bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  // Renders a word. Tokens are concatenated when every token is a single
  // character, otherwise joined with spaces.
  std::string render(const Word& w) const;
  std::string render(const Word& w, const std::string& sep) const;

  // Parses whitespace-separated tokens; a string without any whitespace and
  // without multi-character tokens in the alphabet is split into characters.
  Word parse(const std::string& text) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> index_;
  bool all_single_char_ = true;
};

// -- word utilities ----------------------------------------------------------

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word subword(const Word& w, size_t from, size_t len) {
  if (from > w.size() || from + len > w.size()) throw std::out_of_range("subword");
  return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(from + len));
}

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

// All occurrence start positions of `pattern` in `text` (KMP, overlapping).
std::vector<size_t> occurrences(const Word& pattern, const Word& text);
bool contains_word(const Word& pattern, const Word& text);
std::optional<size_t> first_occurrence(const Word& pattern, const Word& text);

// Shortest v with w = v^k; |v| divides |w|.
Word primitive_root(const Word& w);

// w repeated k times.
Word word_power(const Word& w, size_t k);

// Set of factors of a given length, deduplicated, in first-occurrence order.
std::vector<Word> factors(const Word& w, size_t len);

}  // namespace subshift

#include "subshift/word.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace subshift {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  for (size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (t.empty()) throw std::invalid_argument("empty token in alphabet");
    if (!index_.emplace(t, static_cast<Letter>(i)).second) {
      throw std::invalid_argument("duplicate token in alphabet: " + t);
    }
    if (t.size() != 1) all_single_char_ = false;
  }
}

Alphabet Alphabet::from_chars(const std::string& chars) {
  std::vector<std::string> tokens;
  for (char c : chars) tokens.emplace_back(1, c);
  return Alphabet(tokens);
}

std::optional<Letter> Alphabet::find(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index(const std::string& token) const {
  auto l = find(token);
  if (!l) throw std::invalid_argument("unknown token: " + token);
  return *l;
}

std::string Alphabet::render(const Word& w) const {
  return render(w, all_single_char_ ? "" : " ");
}

std::string Alphabet::render(const Word& w, const std::string& sep) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += token(w[i]);
  }
  return out;
}

Word Alphabet::parse(const std::string& text) const {
  Word w;
  const bool has_ws = text.find_first_of(" \t") != std::string::npos;
  if (has_ws || !all_single_char_) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(index(tok));
  } else {
    for (char c : text) w.push_back(index(std::string(1, c)));
  }
  return w;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

static std::vector<size_t> kmp_failure(const Word& p) {
  std::vector<size_t> f(p.size(), 0);
  for (size_t i = 1, k = 0; i < p.size(); ++i) {
    while (k > 0 && p[i] != p[k]) k = f[k - 1];
    if (p[i] == p[k]) ++k;
    f[i] = k;
  }
  return f;
}

std::vector<size_t> occurrences(const Word& pattern, const Word& text) {
  std::vector<size_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  auto f = kmp_failure(pattern);
  for (size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = f[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == pattern.size()) {
      out.push_back(i + 1 - pattern.size());
      k = f[k - 1];
    }
  }
  return out;
}

bool contains_word(const Word& pattern, const Word& text) {
  return first_occurrence(pattern, text).has_value();
}

std::optional<size_t> first_occurrence(const Word& pattern, const Word& text) {
  if (pattern.empty()) return 0;
  if (pattern.size() > text.size()) return std::nullopt;
  auto f = kmp_failure(pattern);
  for (size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = f[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == pattern.size()) return i + 1 - pattern.size();
  }
  return std::nullopt;
}

Word primitive_root(const Word& w) {
  const size_t n = w.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return subword(w, 0, d);
  }
  return w;
}

Word word_power(const Word& w, size_t k) {
  Word r;
  r.reserve(w.size() * k);
  for (size_t i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

std::vector<Word> factors(const Word& w, size_t len) {
  std::vector<Word> out;
  if (len == 0 || len > w.size()) return out;
  std::unordered_set<Word, WordHash> seen;
  for (size_t i = 0; i + len <= w.size(); ++i) {
    Word f = subword(w, i, len);
    if (seen.insert(f).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace subshift

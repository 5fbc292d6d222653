#include "subshift/morphism.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace subshift {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.size()) {
    throw std::invalid_argument("morphism needs one image per source letter");
  }
  min_len_ = images_.empty() ? 0 : static_cast<int>(images_[0].size());
  for (const Word& w : images_) {
    for (Letter l : w) {
      if (l < 0 || l >= target_.size()) throw std::invalid_argument("image letter outside target alphabet");
    }
    max_len_ = std::max<int>(max_len_, static_cast<int>(w.size()));
    min_len_ = std::min<int>(min_len_, static_cast<int>(w.size()));
  }
}

Word Morphism::apply(const Word& w) const {
  Word out;
  size_t total = 0;
  for (Letter a : w) total += image(a).size();
  out.reserve(total);
  for (Letter a : w) {
    const Word& im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool Morphism::is_coding() const {
  return max_len_ == 1 && min_len_ == 1;
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  for (Letter l = 0; l < a.size(); ++l) images.push_back({l});
  return Morphism(a, a, std::move(images));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target() != outer.source()) {
    throw std::invalid_argument("compose: inner target does not match outer source");
  }
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(inner.source().size()));
  for (Letter a = 0; a < inner.source().size(); ++a) {
    images.push_back(outer.apply(inner.image(a)));
  }
  return Morphism(inner.source(), outer.target(), std::move(images));
}

Morphism morphism_power(const Morphism& endo, int k) {
  if (!endo.is_endomorphism()) throw std::invalid_argument("power of a non-endomorphism");
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  Morphism r = endo;
  for (int i = 1; i < k; ++i) r = compose(endo, r);
  return r;
}

long wielandt_bound(int d) {
  return static_cast<long>(d) * d - 2L * d + 2L;
}

namespace {

// Boolean reachability closure of the letter graph a -> letters of sigma(a).
std::vector<std::vector<bool>> reach_closure(const Morphism& m, bool reflexive) {
  const int d = m.source().size();
  std::vector<std::vector<bool>> r(static_cast<size_t>(d), std::vector<bool>(static_cast<size_t>(d), false));
  for (Letter a = 0; a < d; ++a) {
    for (Letter b : m.image(a)) r[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    if (reflexive) r[static_cast<size_t>(a)][static_cast<size_t>(a)] = true;
  }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      if (r[static_cast<size_t>(i)][static_cast<size_t>(k)])
        for (int j = 0; j < d; ++j)
          if (r[static_cast<size_t>(k)][static_cast<size_t>(j)]) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  return r;
}

bool primitive_by_power(const Morphism& m) {
  const int d = m.source().size();
  using Row = std::vector<uint64_t>;
  const size_t words = (static_cast<size_t>(d) + 63) / 64;
  auto get = [&](const std::vector<Row>& mat, int i, int j) {
    return (mat[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] >> (static_cast<size_t>(j) % 64)) & 1u;
  };
  auto set = [&](std::vector<Row>& mat, int i, int j) {
    mat[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] |= (uint64_t{1} << (static_cast<size_t>(j) % 64));
  };
  auto mul = [&](const std::vector<Row>& a, const std::vector<Row>& b) {
    std::vector<Row> c(static_cast<size_t>(d), Row(words, 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (get(a, i, k))
          for (size_t w = 0; w < words; ++w) c[static_cast<size_t>(i)][w] |= b[static_cast<size_t>(k)][w];
    return c;
  };
  std::vector<Row> base(static_cast<size_t>(d), Row(words, 0));
  for (Letter a = 0; a < d; ++a)
    for (Letter b : m.image(a)) set(base, static_cast<int>(b), static_cast<int>(a));

  long target = wielandt_bound(d);
  // base^target via square-and-multiply; all-ones result <=> primitive.
  std::vector<Row> acc(static_cast<size_t>(d), Row(words, 0));
  for (int i = 0; i < d; ++i) set(acc, i, i);
  std::vector<Row> sq = base;
  long e = target;
  while (e > 0) {
    if (e & 1) acc = mul(acc, sq);
    e >>= 1;
    if (e) sq = mul(sq, sq);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!get(acc, i, j)) return false;
  return true;
}

}  // namespace

Substitution::Substitution(Morphism m) : m_(std::move(m)) {
  if (!m_.is_endomorphism()) throw std::invalid_argument("substitution must be an endomorphism");
  if (m_.erasing()) throw std::invalid_argument("substitution must be non-erasing");
  const int d = alphabet().size();

  auto reach = reach_closure(m_, /*reflexive=*/true);
  auto strict = reach_closure(m_, /*reflexive=*/false);

  // A letter grows iff it reaches a cyclic letter whose image has length >= 2;
  // otherwise its iterated images stabilize.
  letter_growing_.assign(static_cast<size_t>(d), false);
  for (Letter a = 0; a < d; ++a) {
    for (Letter b = 0; b < d; ++b) {
      if (reach[static_cast<size_t>(a)][static_cast<size_t>(b)] && strict[static_cast<size_t>(b)][static_cast<size_t>(b)] &&
          m_.image(b).size() >= 2) {
        letter_growing_[static_cast<size_t>(a)] = true;
        break;
      }
    }
  }
  flags_.growing = std::all_of(letter_growing_.begin(), letter_growing_.end(), [](bool b) { return b; });
  flags_.constant_length = m_.constant_length();
  flags_.primitive = primitive_by_power(m_);

  Letter first = m_.image(0).front();
  Letter last = m_.image(0).back();
  flags_.left_proper = true;
  flags_.right_proper = true;
  for (Letter a = 0; a < d; ++a) {
    if (m_.image(a).front() != first) flags_.left_proper = false;
    if (m_.image(a).back() != last) flags_.right_proper = false;
  }

  flags_.injective_on_letters = true;
  for (Letter a = 0; a < d && flags_.injective_on_letters; ++a)
    for (Letter b = a + 1; b < d; ++b)
      if (m_.image(a) == m_.image(b)) {
        flags_.injective_on_letters = false;
        break;
      }

  for (Letter a = 0; a < d; ++a) {
    if (!letter_growing_[static_cast<size_t>(a)]) continue;
    if (m_.image(a).front() == a) prolongable_.emplace_back(a, Side::Right);
    if (m_.image(a).back() == a) prolongable_.emplace_back(a, Side::Left);
  }
}

bool Substitution::prolongable_on(Letter a, Side side) const {
  for (auto& [l, s] : prolongable_)
    if (l == a && s == side) return true;
  return false;
}

namespace {

void fail_parse(const std::string& name, int line, const std::string& msg) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Substitution parse_substitution(std::istream& in, const std::string& name) {
  std::vector<std::string> alpha_tokens;
  bool alpha_given = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "alphabet:") {
      if (alpha_given) fail_parse(name, lineno, "duplicate alphabet line");
      std::string tok;
      while (ls >> tok) alpha_tokens.push_back(tok);
      if (alpha_tokens.empty()) fail_parse(name, lineno, "empty alphabet line");
      alpha_given = true;
      continue;
    }
    std::string arrow;
    if (!(ls >> arrow) || arrow != "->") fail_parse(name, lineno, "expected '<letter> -> <letters>'");
    std::vector<std::string> image;
    std::string tok;
    while (ls >> tok) image.push_back(tok);
    if (image.empty()) fail_parse(name, lineno, "empty image for letter " + first);
    rules.emplace_back(first, std::move(image));
  }
  if (rules.empty()) fail_parse(name, lineno, "no rules found");

  if (!alpha_given) {
    auto noted = [&](const std::string& t) {
      return std::find(alpha_tokens.begin(), alpha_tokens.end(), t) != alpha_tokens.end();
    };
    for (auto& [lhs, image] : rules) {
      if (!noted(lhs)) alpha_tokens.push_back(lhs);
      for (auto& t : image)
        if (!noted(t)) alpha_tokens.push_back(t);
    }
  }
  Alphabet alpha(alpha_tokens);
  std::vector<Word> images(static_cast<size_t>(alpha.size()));
  std::vector<bool> seen(static_cast<size_t>(alpha.size()), false);
  for (auto& [lhs, image] : rules) {
    auto l = alpha.find(lhs);
    if (!l) fail_parse(name, 0, "rule for letter not in alphabet: " + lhs);
    if (seen[static_cast<size_t>(*l)]) fail_parse(name, 0, "duplicate rule for letter " + lhs);
    seen[static_cast<size_t>(*l)] = true;
    Word w;
    for (auto& t : image) {
      auto tl = alpha.find(t);
      if (!tl) fail_parse(name, 0, "image letter not in alphabet: " + t);
      w.push_back(*tl);
    }
    images[static_cast<size_t>(*l)] = std::move(w);
  }
  for (Letter a = 0; a < alpha.size(); ++a) {
    if (!seen[static_cast<size_t>(a)]) fail_parse(name, 0, "missing rule for letter " + alpha.token(a));
  }
  return Substitution(Morphism(alpha, alpha, std::move(images)));
}

Substitution parse_substitution_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  return parse_substitution(in, name);
}

Substitution load_substitution(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  return parse_substitution(in, file.string());
}

std::string format_substitution(const Substitution& s) {
  const Alphabet& a = s.alphabet();
  std::ostringstream out;
  out << "alphabet:";
  for (auto& t : a.tokens()) out << ' ' << t;
  out << '\n';
  for (Letter l = 0; l < a.size(); ++l) {
    out << a.token(l) << " ->";
    for (Letter i : s.image(l)) out << ' ' << a.token(i);
    out << '\n';
  }
  return out.str();
}

}  // namespace subshift

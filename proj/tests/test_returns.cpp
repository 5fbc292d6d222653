#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subshift/bounds.hpp"
#include "subshift/returns.hpp"

using namespace subshift;

namespace {

Substitution fibonacci() { return parse_substitution_text("a -> a b\nb -> a\n"); }
Substitution thue_morse() { return parse_substitution_text("a -> a b\nb -> b a\n"); }
Substitution chacon() { return parse_substitution_text("a -> a a b a\nb -> b\n"); }

std::vector<std::string> rendered(const Substitution& s, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (auto& w : ws) out.push_back(s.alphabet().render(w));
  return out;
}

// Return letters map to digits 1..9 for compact comparison with the known
// tables (tokens are r1, r2, ...).
std::string digits(const Word& w) {
  std::string out;
  for (Letter l : w) out += std::to_string(l + 1);
  return out;
}

std::vector<std::string> digit_images(const Substitution& s) {
  std::vector<std::string> out;
  for (Letter l = 0; l < s.alphabet().size(); ++l) out.push_back(digits(s.image(l)));
  return out;
}

}  // namespace

TEST_CASE("return words to single markers") {
  FixedPoint x = canonical_fixed_point(fibonacci());
  ReturnWords ra = return_words(x, x.substitution().alphabet().parse("a"));
  CHECK(rendered(fibonacci(), ra.words) == std::vector<std::string>{"ab", "a"});

  ReturnWords raa = return_words(x, fibonacci().alphabet().parse("aa"));
  CHECK(rendered(fibonacci(), raa.words) == std::vector<std::string>{"aabab", "aab"});

  FixedPoint y = canonical_fixed_point(thue_morse());
  ReturnWords rb = return_words(y, thue_morse().alphabet().parse("b"));
  CHECK(rendered(thue_morse(), rb.words) == std::vector<std::string>{"b", "ba", "baa"});

  ReturnWords rbb = return_words(y, thue_morse().alphabet().parse("bb"));
  CHECK(rendered(thue_morse(), rbb.words) ==
        std::vector<std::string>{"bbabaa", "bbaaba", "bbabaaba", "bbaa"});

  FixedPoint z = canonical_fixed_point(chacon());
  ReturnWords za = return_words(z, chacon().alphabet().parse("a"));
  CHECK(rendered(chacon(), za.words) == std::vector<std::string>{"a", "ab"});
  ReturnWords zaab = return_words(z, chacon().alphabet().parse("aab"));
  CHECK(rendered(chacon(), zaab.words) == std::vector<std::string>{"aaba", "aabab"});

  CHECK_THROWS_AS(return_words(x, fibonacci().alphabet().parse("bb")), std::invalid_argument);
}

TEST_CASE("return word power property") {
  // w^ceil(|u|/|w|) occurs in x for every return word w to u
  for (auto s : {fibonacci(), thue_morse()}) {
    FixedPoint x = canonical_fixed_point(s);
    for (size_t lu : {1, 2, 3}) {
      Word u = x.prefix(lu);
      ReturnWords rw = return_words(x, u);
      for (const Word& w : rw.words) {
        size_t k = (u.size() + w.size() - 1) / w.size();
        CHECK(in_language(s, word_power(w, k)));
      }
    }
  }
}

TEST_CASE("code property: unique decomposition on windows") {
  // brute-force all decompositions of anchored windows into return words and
  // assert uniqueness
  FixedPoint x = canonical_fixed_point(fibonacci());
  Word u = fibonacci().alphabet().parse("a");
  ReturnWords rw = return_words(x, u);
  Word prefix = x.prefix(200);
  auto occ = occurrences(u, prefix);
  // take the window between occurrence 0 and occurrence 30
  Word window(prefix.begin(), prefix.begin() + static_cast<long>(occ[30]));
  std::vector<int> count(1, 0);
  std::function<void(size_t)> rec = [&](size_t at) {
    if (at == window.size()) {
      ++count[0];
      return;
    }
    for (const Word& w : rw.words) {
      if (at + w.size() <= window.size() &&
          std::equal(w.begin(), w.end(), window.begin() + static_cast<long>(at))) {
        rec(at + w.size());
      }
    }
  };
  rec(0);
  CHECK(count[0] == 1);
}

TEST_CASE("derived windows") {
  FixedPoint z = canonical_fixed_point(chacon());
  Word da = derived_window(z, chacon().alphabet().parse("a"), 40);
  CHECK(digits(da) == "1211221211211221221211221211211221211211");

  // Theta(D_u(x)) reconstructs x from the first marker occurrence
  FixedPoint x = canonical_fixed_point(fibonacci());
  Word u = fibonacci().alphabet().parse("a");
  ReturnWords rw = return_words(x, u);
  Word d = derived_window(x, u, 100);
  Word rebuilt = rw.theta.apply(d);
  Word expect = x.prefix(rebuilt.size() + rw.first_marker_pos);
  CHECK(Word(expect.begin() + static_cast<long>(rw.first_marker_pos), expect.end()) == rebuilt);
}

TEST_CASE("lambda morphisms for nested markers") {
  FixedPoint x = canonical_fixed_point(fibonacci());
  LambdaWord lf = lambda_word(x, fibonacci().alphabet().parse("a"), fibonacci().alphabet().parse("aa"));
  // with canonical numbering r1=ab, r2=a for marker a and r1=aabab, r2=aab
  // for marker aa: aabab = a.ab.ab and aab = a.ab
  CHECK(digits(lf.lambda.image(0)) == "211");
  CHECK(digits(lf.lambda.image(1)) == "21");

  FixedPoint y = canonical_fixed_point(thue_morse());
  LambdaWord lt = lambda_word(y, thue_morse().alphabet().parse("b"), thue_morse().alphabet().parse("bb"));
  CHECK(digits(lt.lambda.image(0)) == "123");
  CHECK(digits(lt.lambda.image(1)) == "132");
  CHECK(digits(lt.lambda.image(2)) == "1232");
  CHECK(digits(lt.lambda.image(3)) == "13");

  FixedPoint z = canonical_fixed_point(chacon());
  LambdaWord lz = lambda_word(z, chacon().alphabet().parse("a"), chacon().alphabet().parse("aab"));
  CHECK(digits(lz.lambda.image(0)) == "121");
  CHECK(digits(lz.lambda.image(1)) == "122");
  CHECK(lz.occurrence_condition);
  CHECK(lz.derived_equal);
  CHECK(lz.primitive);
  CHECK(lz.left_proper);

  // Theta_{u'} = Theta_u o lambda on every return letter
  ReturnWords ru = return_words(z, chacon().alphabet().parse("a"));
  ReturnWords rup = return_words(z, chacon().alphabet().parse("aab"));
  for (Letter l = 0; l < rup.return_alphabet().size(); ++l) {
    CHECK(ru.theta.apply(lz.lambda.image(l)) == rup.theta.image(l));
  }
}

TEST_CASE("return substitutions for prefixes") {
  FixedPoint y = canonical_fixed_point(thue_morse());
  ReturnSubstitution nu_a = return_substitution_word(y, thue_morse().alphabet().parse("a"));
  CHECK(rendered(thue_morse(), nu_a.structure.words) == std::vector<std::string>{"abb", "ab", "a"});
  CHECK(digit_images(nu_a.sub) == std::vector<std::string>{"123", "13", "2"});

  // Theta o sub = sigma o Theta holds on every letter (also checked inside)
  FixedPoint x = canonical_fixed_point(fibonacci());
  ReturnSubstitution fa = return_substitution_word(x, fibonacci().alphabet().parse("a"));
  for (Letter l = 0; l < fa.structure.return_alphabet().size(); ++l) {
    CHECK(fa.structure.theta.apply(fa.sub.image(l)) == fibonacci().apply(fa.structure.theta.image(l)));
  }

  // the derived sequence is the fixed point of the return substitution
  // starting with the first return letter
  Word d = derived_window(y, thue_morse().alphabet().parse("a"), 60);
  FixedPoint dfp(nu_a.sub, 0);
  CHECK(dfp.prefix(60) == d);
}

TEST_CASE("commutation for random prefixes") {
  std::mt19937 rng(20240817);
  for (auto s : {fibonacci(), thue_morse()}) {
    FixedPoint x = canonical_fixed_point(s);
    for (int t = 0; t < 10; ++t) {
      size_t len = 1 + rng() % 12;
      Word u = x.prefix(len);
      ReturnSubstitution rs = return_substitution_word(x, u);
      for (Letter l = 0; l < rs.structure.return_alphabet().size(); ++l) {
        CHECK(rs.structure.theta.apply(rs.sub.image(l)) == s.apply(rs.structure.theta.image(l)));
      }
    }
  }
}

TEST_CASE("return pairs to marker sets") {
  FixedPoint y = canonical_fixed_point(thue_morse());
  std::vector<Word> U{thue_morse().alphabet().parse("aa"), thue_morse().alphabet().parse("bb")};
  ReturnPairs rp = return_pairs(y, U);
  CHECK(rendered(thue_morse(), rp.words) == std::vector<std::string>{"bbab", "aa", "bb", "aaba"});
  REQUIRE(rp.count() == 4);
  CHECK(thue_morse().alphabet().render(rp.pairs[0].first) == "bbab");
  CHECK(thue_morse().alphabet().render(rp.pairs[0].second) == "aa");
  CHECK(thue_morse().alphabet().render(rp.pairs[1].first) == "aa");
  CHECK(thue_morse().alphabet().render(rp.pairs[1].second) == "bb");
  CHECK(thue_morse().alphabet().render(rp.pairs[2].first) == "bb");
  CHECK(thue_morse().alphabet().render(rp.pairs[2].second) == "aa");
  CHECK(thue_morse().alphabet().render(rp.pairs[3].first) == "aaba");
  CHECK(thue_morse().alphabet().render(rp.pairs[3].second) == "bb");

  // admissibility: (aa,bb)(bb,aa)(aaba,bb) is admissible, (aa,bb)(bb,aa)(aa,bb) is not
  Word good{*rp.find_pair(U[0], U[1]), *rp.find_pair(U[1], U[0]),
            *rp.find_pair(thue_morse().alphabet().parse("aaba"), U[1])};
  Word bad{*rp.find_pair(U[0], U[1]), *rp.find_pair(U[1], U[0]), *rp.find_pair(U[0], U[1])};
  CHECK(admissible(thue_morse(), rp, good));
  CHECK(!admissible(thue_morse(), rp, bad));

  FixedPoint x = canonical_fixed_point(fibonacci());
  std::vector<Word> Uf{fibonacci().alphabet().parse("aa"), fibonacci().alphabet().parse("ab")};
  ReturnPairs rpf = return_pairs(x, Uf);
  CHECK(rendered(fibonacci(), rpf.words) == std::vector<std::string>{"ab", "a"});
  REQUIRE(rpf.count() == 3);
  CHECK(fibonacci().alphabet().render(rpf.pairs[0].first) == "ab");
  CHECK(fibonacci().alphabet().render(rpf.pairs[0].second) == "aa");
  CHECK(fibonacci().alphabet().render(rpf.pairs[1].first) == "a");
  CHECK(fibonacci().alphabet().render(rpf.pairs[1].second) == "ab");
  CHECK(fibonacci().alphabet().render(rpf.pairs[2].first) == "ab");
  CHECK(fibonacci().alphabet().render(rpf.pairs[2].second) == "ab");
}

TEST_CASE("pair decoding round trip on random admissible windows") {
  FixedPoint y = canonical_fixed_point(thue_morse());
  std::vector<Word> U{thue_morse().alphabet().parse("aa"), thue_morse().alphabet().parse("bb")};
  ReturnPairs rp = return_pairs(y, U);
  std::mt19937 rng(7);
  Word dw = derived_pair_window(y, U, 120);
  for (int t = 0; t < 20; ++t) {
    size_t from = rng() % 100;
    size_t len = 1 + rng() % 18;
    Word piece(dw.begin() + static_cast<long>(from), dw.begin() + static_cast<long>(from + len));
    // flatten + final marker, then re-decode: must give the identical pairs
    Word flat = concat(rp.flatten(piece), rp.d2(piece.back()));
    std::vector<size_t> pos;
    for (const Word& m : U) {
      auto occ = occurrences(m, flat);
      pos.insert(pos.end(), occ.begin(), occ.end());
    }
    std::sort(pos.begin(), pos.end());
    Word redecoded;
    for (size_t i = 0; i + 1 < pos.size(); ++i) {
      if (pos[i + 1] + rp.marker_len() > flat.size()) break;
      Word w = subword(flat, pos[i], pos[i + 1] - pos[i]);
      Word nx = subword(flat, pos[i + 1], rp.marker_len());
      auto id = rp.find_pair(w, nx);
      REQUIRE(id);
      redecoded.push_back(*id);
    }
    CHECK(redecoded == piece);
  }
}

TEST_CASE("return substitution for marker sets: known tables") {
  FixedPoint x = canonical_fixed_point(fibonacci());
  std::vector<Word> Uf{fibonacci().alphabet().parse("aa"), fibonacci().alphabet().parse("ab")};
  ReturnPairSubstitution fs = return_substitution_set(x, Uf);
  CHECK(fs.power_used == 4);
  CHECK(digit_images(fs.sub) == std::vector<std::string>{"12312123", "12312", "12312123"});

  FixedPoint y = canonical_fixed_point(thue_morse());
  std::vector<Word> Ut{thue_morse().alphabet().parse("aa"), thue_morse().alphabet().parse("bb")};
  ReturnPairSubstitution ts = return_substitution_set(y, Ut);
  CHECK(ts.power_used == 4);
  CHECK(digit_images(ts.sub) ==
        std::vector<std::string>{"432123432141234143214", "12343212341", "43212343214",
                                 "123432123414321412341"});
  CHECK(ts.sub.flags().primitive);

  // singleton marker set matches the word-case return substitution
  Word u = fibonacci().alphabet().parse("a");
  ReturnPairSubstitution single = return_substitution_set(x, {u});
  ReturnSubstitution word_case = return_substitution_word(x, u);
  // same number of letters; the pair ordering coincides with the word ordering
  REQUIRE(single.structure.count() == word_case.structure.count());
  for (Letter l = 0; l < single.structure.count(); ++l) {
    CHECK(single.structure.pairs[static_cast<size_t>(l)].first ==
          word_case.structure.words[static_cast<size_t>(l)]);
  }
}

TEST_CASE("derived pair window is generated by the pair substitution") {
  FixedPoint y = canonical_fixed_point(thue_morse());
  std::vector<Word> U{thue_morse().alphabet().parse("aa"), thue_morse().alphabet().parse("bb")};
  ReturnPairSubstitution ts = return_substitution_set(y, U);
  Word dw = derived_pair_window(y, U, 200);
  // every factor of the derived window appears in the language of the pair
  // substitution
  auto lang6 = language(ts.sub, 6);
  for (size_t i = 0; i + 6 <= 60; i += 7) {
    Word f(dw.begin() + static_cast<long>(i), dw.begin() + static_cast<long>(i + 6));
    CHECK(std::binary_search(lang6.begin(), lang6.end(), f));
  }
}

TEST_CASE("lambda_set identities") {
  FixedPoint x = canonical_fixed_point(fibonacci());
  std::vector<Word> U{fibonacci().alphabet().parse("aa"), fibonacci().alphabet().parse("ab")};
  std::vector<Word> V{fibonacci().alphabet().parse("aab"), fibonacci().alphabet().parse("aba")};
  // every V word has a prefix in U
  LambdaSet ls = lambda_set(x, U, V);
  ReturnPairs rpU = return_pairs(x, U);
  ReturnPairs rpV = return_pairs(x, V);
  // d1 o lambda = d1 and the d2 compatibility on the last letter
  for (Letter i = 0; i < rpV.count(); ++i) {
    CHECK(rpU.flatten(ls.lambda.image(i)) == rpV.d1(i));
    Word lam = ls.lambda.image(i);
    CHECK(rpU.d2(lam.back()) == subword(rpV.d2(i), 0, rpU.marker_len()));
  }
  // lambda maps the V derivation onto the shifted U derivation
  Word dv = derived_pair_window(x, V, 40);
  Word du = derived_pair_window(x, U, 200);
  Word img = ls.lambda.apply(dv);
  REQUIRE(static_cast<size_t>(ls.shift) + img.size() <= du.size());
  CHECK(Word(du.begin() + ls.shift, du.begin() + ls.shift + static_cast<long>(img.size())) == img);

  CHECK_THROWS_AS(lambda_set(x, V, U), std::invalid_argument);
}

TEST_CASE("return word counts stay under the formula ceiling") {
  for (auto s : {fibonacci(), thue_morse()}) {
    FixedPoint x = canonical_fixed_point(s);
    BigBound kf = lr_constant_formula(s);
    REQUIRE(std::holds_alternative<BigInt>(kf));
    BigInt ceiling = (std::get<BigInt>(kf) + 1);
    ceiling = ceiling * ceiling * ceiling;
    for (size_t len : {1, 2, 4}) {
      ReturnWords rw = return_words(x, x.prefix(len));
      CHECK(BigInt(rw.count()) <= ceiling);
    }
  }
}

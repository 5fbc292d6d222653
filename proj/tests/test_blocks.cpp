#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "subshift/blocks.hpp"
#include "subshift/oracle.hpp"
#include "subshift/spectral.hpp"

using namespace subshift;

namespace {

Substitution fibonacci() { return parse_substitution_text("a -> a b\nb -> a\n"); }
Substitution thue_morse() { return parse_substitution_text("a -> a b\nb -> b a\n"); }
Substitution chacon() { return parse_substitution_text("a -> a a b a\nb -> b\n"); }

std::map<std::string, std::vector<std::string>> table(const BlockSystem& bs) {
  std::map<std::string, std::vector<std::string>> out;
  const Alphabet& ba = bs.block_alphabet();
  for (Letter b = 0; b < ba.size(); ++b) {
    std::vector<std::string> img;
    for (Letter c : bs.block_substitution.image(b)) img.push_back(ba.token(c));
    out[ba.token(b)] = img;
  }
  return out;
}

}  // namespace

TEST_CASE("chacon radius-2 block substitution table") {
  BlockSystem bs = block_system(chacon(), 2);
  REQUIRE(bs.block_alphabet().size() == 9);
  auto t = table(bs);
  std::vector<std::string> quad_ab{"(abaab)", "(baaba)", "(aabaa)", "(abaaa)"};
  std::vector<std::string> quad_ba{"(baaab)", "(aaaba)", "(aabab)", "(ababa)"};
  CHECK(t["(aabaa)"] == std::vector<std::string>{"(babaa)"});
  CHECK(t["(aabab)"] == std::vector<std::string>{"(babaa)"});
  CHECK(t["(babaa)"] == std::vector<std::string>{"(babaa)"});
  CHECK(t["(abaaa)"] == quad_ab);
  CHECK(t["(abaab)"] == quad_ab);
  CHECK(t["(baaba)"] == quad_ba);
  CHECK(t["(aaaba)"] == quad_ba);
  CHECK(t["(ababa)"] == std::vector<std::string>{"(abaab)", "(baaba)", "(aabab)", "(ababa)"});
  CHECK(t["(baaab)"] == std::vector<std::string>{"(baaab)", "(aaaba)", "(aabaa)", "(abaaa)"});

  // ground truth for the corrected rows: the image of the block centered at
  // position c of the fixed point is the block sequence centered at
  // |gamma(z[0..c))| onward
  Substitution g = chacon();
  FixedPoint z = canonical_fixed_point(g);
  Word zp = z.prefix(200);
  for (size_t c = 2; c + 3 <= 30; ++c) {
    Word blk = subword(zp, c - 2, 5);
    Letter b = *bs.find_block(blk);
    size_t e = g.apply(subword(zp, 0, c)).size();
    Word img = bs.block_substitution.image(b);
    for (size_t j = 0; j < img.size(); ++j) {
      CHECK(bs.blocks[static_cast<size_t>(img[j])] == subword(zp, e + j - 2, 5));
    }
  }
}

TEST_CASE("radius 0 is the substitution itself up to renaming") {
  Substitution phi = fibonacci();
  BlockSystem bs = block_system(phi, 0);
  REQUIRE(bs.block_alphabet().size() == 2);
  for (Letter a = 0; a < 2; ++a) {
    Word img = bs.block_substitution.image(a);
    Word base;
    for (Letter b : img) base.push_back(bs.central(b));
    CHECK(base == phi.image(bs.central(a)));
  }
}

TEST_CASE("power identity (sigma^(n))^i = (sigma^i)^(n)") {
  for (auto s : {fibonacci(), thue_morse(), chacon()}) {
    for (int n : {1, 2}) {
      BlockSystem b1 = block_system(s, n);
      for (int i : {1, 2}) {
        Substitution lhs(morphism_power(b1.block_substitution.morphism(), i));
        BlockSystem b2 = block_system(Substitution(morphism_power(s.morphism(), i)), n);
        REQUIRE(b1.blocks == b2.blocks);  // same language, same ordering
        for (Letter l = 0; l < lhs.alphabet().size(); ++l) {
          CHECK(lhs.image(l) == b2.block_substitution.image(l));
        }
      }
    }
  }
}

TEST_CASE("primitivity and spectral radius are preserved") {
  for (auto s : {fibonacci(), thue_morse()}) {
    for (int n : {1, 2}) {
      BlockSystem bs = block_system(s, n);
      CHECK(bs.block_substitution.flags().primitive);
      CHECK(dominant_powers_equal(s, 1, bs.block_substitution, 1));
    }
  }
}

TEST_CASE("encode and decode") {
  Substitution phi = fibonacci();
  BlockSystem bs = block_system(phi, 1);
  Word w = phi.alphabet().parse("abaab");
  Word enc = block_encode(bs, w);
  REQUIRE(enc.size() == 3);
  CHECK(bs.block_alphabet().token(enc[0]) == "(aba)");
  CHECK(bs.block_alphabet().token(enc[1]) == "(baa)");
  CHECK(bs.block_alphabet().token(enc[2]) == "(aab)");
  CHECK(block_decode(bs, enc) == phi.alphabet().parse("baa"));
  CHECK_THROWS(block_encode(bs, phi.alphabet().parse("ab")));

  // decode(encode(w)) = w with n letters trimmed at both ends
  FixedPoint x = canonical_fixed_point(phi);
  Word p = x.prefix(40);
  Word trimmed = block_decode(bs, block_encode(bs, p));
  CHECK(trimmed == subword(p, 1, p.size() - 2));
}

TEST_CASE("block substitution commutes with encoding on windows") {
  for (auto s : {fibonacci(), thue_morse()}) {
    const int n = 1;
    BlockSystem bs = block_system(s, n);
    FixedPoint x = canonical_fixed_point(s);
    Word w = x.prefix(30);
    Word enc = block_encode(bs, w);
    // concatenated block images of enc form a contiguous slice of
    // encode(sigma(w)) starting at |sigma(w[0..n))| - n
    Word img_enc;
    for (Letter b : enc) {
      Word i = bs.block_substitution.image(b);
      img_enc.insert(img_enc.end(), i.begin(), i.end());
    }
    Word big = block_encode(bs, s.apply(w));
    size_t start = s.apply(subword(w, 0, static_cast<size_t>(n))).size() - static_cast<size_t>(n);
    REQUIRE(start + img_enc.size() <= big.size());
    CHECK(Word(big.begin() + static_cast<long>(start),
               big.begin() + static_cast<long>(start + img_enc.size())) == img_enc);
  }
}

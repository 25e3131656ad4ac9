#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "levyshuffle/json_io.hpp"
#include "levyshuffle/matchings.hpp"
#include "levyshuffle/tensor_poly.hpp"

using namespace levyshuffle;

namespace {

// 1-based transposition list -> 0-based image table.
Permutation perm_from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  Permutation sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<int>(i);
  for (auto [a, b] : pairs) {
    sigma[static_cast<std::size_t>(a - 1)] = b - 1;
    sigma[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  return sigma;
}

Permutation perm_from_images(std::initializer_list<int> images_1based) {
  Permutation sigma;
  for (int v : images_1based) sigma.push_back(v - 1);
  return sigma;
}

int two_cycle_count(const Permutation& sigma) {
  int count = 0;
  for (int len : cycle_lengths(sigma))
    if (len == 2) ++count;
  return count;
}

}  // namespace

TEST_CASE("negativity and sign of letter matchings") {
  const LetterMatching figure{Word::parse("xxyyxxyy"),
                              perm_from_pairs(8, {{1, 3}, {2, 8}, {4, 6}, {5, 7}})};
  REQUIRE(figure.valid());
  CHECK(figure.negativity() == 1);
  CHECK(figure.sign() == -1);

  const LetterMatching xy{Word::parse("xy"), perm_from_pairs(2, {{1, 2}})};
  CHECK(xy.negativity() == 0);

  // brute force over both length-2 words: yx has a backward x arc
  const auto of_yx = letter_matchings(Word::parse("yx"));
  REQUIRE(of_yx.size() == 1);
  CHECK(of_yx[0].negativity() == 1);
  const auto of_xy = letter_matchings(Word::parse("xy"));
  REQUIRE(of_xy.size() == 1);
  CHECK(of_xy[0].negativity() == 0);
}

TEST_CASE("enumerating letter matchings") {
  const auto of_xxyy = letter_matchings(Word::parse("xxyy"));
  REQUIRE(of_xxyy.size() == 2);
  const std::set<Permutation> got{of_xxyy[0].pairing, of_xxyy[1].pairing};
  const std::set<Permutation> expected{perm_from_pairs(4, {{1, 3}, {2, 4}}),
                                       perm_from_pairs(4, {{1, 4}, {2, 3}})};
  CHECK(got == expected);
  for (const auto& d : of_xxyy) {
    CHECK(d.valid());
    CHECK(d.negativity() == 0);
  }

  CHECK(negativity_count(Word::parse("xxyyxxyy"), 1) == 16);

  const auto of_yyxx = letter_matchings(Word::parse("yyxx"));
  REQUIRE(of_yyxx.size() == 2);
  for (const auto& d : of_yyxx) CHECK(d.negativity() == 2);

  // count is (#x)! on even words; empty on unbalanced words
  CHECK(letter_matchings(Word::parse("xxyyxxyy")).size() == 24);
  CHECK(letter_matchings(Word::parse("xxxx")).empty());
  CHECK(letter_matchings(Word::parse("xyx")).empty());

  const auto of_empty = letter_matchings(Word{});
  REQUIRE(of_empty.size() == 1);
  CHECK(of_empty[0].negativity() == 0);
  CHECK(of_empty[0].sign() == 1);
}

TEST_CASE("mixed shuffle coefficients s!t!N_t against the shuffle oracle") {
  CHECK(mixed_shuffle_coefficient(Word::parse("xxyy"), 2, 0) == 4);
  CHECK(mixed_shuffle_coefficient(Word::parse("xxyyxxyy"), 3, 1) == 96);
  CHECK(mixed_shuffle_coefficient(Word::parse("xxyy"), 0, 2) == 0);
  CHECK_THROWS_AS(mixed_shuffle_coefficient(Word::parse("xxyy"), 1, 0), std::invalid_argument);

  // every word of length 2(s+t) <= 8, against the expanded product
  const TensorPoly xy = TensorPoly::monomial(Word::parse("xy"));
  const TensorPoly yx = TensorPoly::monomial(Word::parse("yx"));
  for (int n = 0; n <= 4; ++n) {
    for (int s = 0; s <= n; ++s) {
      const int t = n - s;
      const TensorPoly product = shuffle_product(shuffle_power(xy, s), shuffle_power(yx, t));
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
        const Word w = Word::from_bits(bits, static_cast<std::size_t>(2 * n));
        REQUIRE(Rational(mixed_shuffle_coefficient(w, s, t)) == product.coefficient(w));
      }
    }
  }
}

TEST_CASE("signed matching coefficient equals the shuffle-power coefficient") {
  CHECK(coefficient_by_matchings(Word::parse("xxyy")) == 4);
  CHECK(coefficient_by_matchings(Word::parse("yyxx")) == 4);
  CHECK(coefficient_by_matchings(Word::parse("xx")) == 0);
  CHECK(coefficient_by_matchings(Word{}) == 1);
  CHECK_THROWS_AS(coefficient_by_matchings(Word::parse("xyx")), std::invalid_argument);

  for (int n = 0; n <= 4; ++n) {
    const TensorPoly powered = shuffle_power(area_tensor(), n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
      const Word w = Word::from_bits(bits, static_cast<std::size_t>(2 * n));
      REQUIRE(Rational(coefficient_by_matchings(w)) == powered.coefficient(w));
    }
  }
}

TEST_CASE("even word enumeration") {
  CHECK(even_words(0).size() == 1);
  CHECK(even_words(1).empty());
  CHECK(even_words(3).empty());
  const auto n2 = even_words(2);
  CHECK(std::set<Word>(n2.begin(), n2.end()) ==
        std::set<Word>{Word::parse("xxyy"), Word::parse("yyxx")});
  CHECK(even_words(4).size() == 6);
  CHECK(even_words(6).size() == 20);
}

TEST_CASE("block matching statistics") {
  const BlockMatching figure{Word::parse("xyxyyx"), perm_from_images({2, 3, 4, 1, 6, 5})};
  REQUIRE(figure.valid());
  CHECK(figure.negativity() == 3);
  CHECK(figure.sign() == -1);
  CHECK(figure.cycles() == 2);
  CHECK(figure.expanded_word() == Word::parse("xxyyxxyyyyxx"));
  CHECK(figure.word.str(true) == "XYXYYX");

  const BlockMatching xy{Word::parse("xy"), perm_from_images({2, 1})};
  CHECK(xy.negativity() == 0);
  CHECK(xy.cycles() == 1);
  CHECK(xy.expanded_word() == Word::parse("xxyy"));

  const BlockMatching yx{Word::parse("yx"), perm_from_images({2, 1})};
  CHECK(yx.negativity() == 2);
  CHECK(yx.sign() == 1);

  const BlockMatching two_cycles{Word::parse("xyxy"), perm_from_images({2, 1, 4, 3})};
  CHECK(two_cycles.cycles() == 2);
}

TEST_CASE("block matching enumeration sizes") {
  CHECK(block_matchings(Word::parse("xy")).size() == 1);
  CHECK(block_matchings(Word::parse("xyxy")).size() == 4);  // (m!)^2, m = 2
  CHECK(block_matchings(Word::parse("xxy")).empty());
  CHECK(block_matchings_of_length(2).size() == 2);
  CHECK(block_matchings_of_length(4).size() == 24);  // C(4,2) * 4
  CHECK(block_matchings_of_length(6).size() == 720);
  for (const auto& d : block_matchings_of_length(4)) CHECK(d.valid());
}

TEST_CASE("canonical letter matching of a block matching") {
  const BlockMatching figure{Word::parse("xyxyyx"), perm_from_images({2, 3, 4, 1, 6, 5})};
  const LetterMatching tau = canonical_letter_matching(figure);
  REQUIRE(tau.valid());
  CHECK(tau.word == Word::parse("xxyyxxyyyyxx"));
  CHECK(tau.pairing == perm_from_pairs(12, {{1, 4}, {2, 7}, {3, 6}, {5, 8}, {9, 12}, {10, 11}}));
  CHECK(tau.negativity() == figure.negativity());

  const BlockMatching tiny{Word::parse("xy"), perm_from_images({2, 1})};
  CHECK(canonical_letter_matching(tiny).pairing == perm_from_pairs(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("conjugation orbit of the canonical matching") {
  // |W| = 2: both matchings of xxyy arise from the single block matching
  const BlockMatching tiny{Word::parse("xy"), perm_from_images({2, 1})};
  const auto tiny_orbit = letter_matchings_from_block(tiny);
  REQUIRE(tiny_orbit.size() == 2);
  const auto all_xxyy = letter_matchings(Word::parse("xxyy"));
  CHECK(std::set<LetterMatching>(tiny_orbit.begin(), tiny_orbit.end()) ==
        std::set<LetterMatching>(all_xxyy.begin(), all_xxyy.end()));

  // the two orientations of a 4-cycle produce the same 16 matchings
  const BlockMatching cycle{Word::parse("xyxy"), perm_from_images({2, 3, 4, 1})};
  const BlockMatching inverse_cycle{Word::parse("xyxy"), perm_from_images({4, 1, 2, 3})};
  const auto orbit_a = letter_matchings_from_block(cycle);
  const auto orbit_b = letter_matchings_from_block(inverse_cycle);
  CHECK(orbit_a.size() == 16);
  CHECK(std::set<LetterMatching>(orbit_a.begin(), orbit_a.end()) ==
        std::set<LetterMatching>(orbit_b.begin(), orbit_b.end()));

  // frozen exponent law: orbit size = 2^(|W| - #2-cycles of sigma),
  // resolved by this brute force at |W| in {2, 4}
  for (int len : {2, 4}) {
    for (const auto& d : block_matchings_of_length(len)) {
      const auto orbit = letter_matchings_from_block(d);
      CHECK(Integer(orbit.size()) ==
            int_pow2(static_cast<unsigned>(len - two_cycle_count(d.sigma))));
      for (const auto& lm : orbit) {
        CHECK(lm.valid());
        CHECK(lm.negativity() == d.negativity());
      }
    }
  }
}

TEST_CASE("block matchings partition the letter matchings") {
  // For every expanded word w and negativity t:
  //   N_t(w) = 2^|W| * sum over block matchings (e = w, negativity t) of 2^-cycles,
  // and the orbits cover each matching exactly 2^(#cycles of length >= 4) times.
  for (int len : {2, 4}) {
    std::map<Word, std::map<int, Integer>> weighted;
    std::map<Word, std::map<LetterMatching, Integer>> coverage;
    std::map<Word, std::map<LetterMatching, std::set<std::vector<int>>>> cover_types;
    for (const auto& d : block_matchings_of_length(len)) {
      const Word w = d.expanded_word();
      const Rational weight = Rational(int_pow2(static_cast<unsigned>(len))) /
                              Rational(int_pow2(static_cast<unsigned>(d.cycles())));
      REQUIRE(denominator(weight) == 1);
      weighted[w][d.negativity()] += numerator(weight);
      for (const auto& lm : letter_matchings_from_block(d)) {
        coverage[w][lm] += 1;
        cover_types[w][lm].insert(cycle_lengths(d.sigma));
      }
    }
    for (const auto& [w, by_neg] : weighted) CHECK(by_neg == negativity_histogram(w));
    for (const auto& [w, cov] : coverage) {
      // full coverage of every matching of w
      const auto all = letter_matchings(w);
      CHECK(cov.size() == all.size());
      for (const auto& [lm, times] : cov) {
        const auto& types = cover_types.at(w).at(lm);
        REQUIRE(types.size() == 1);  // all covering block matchings share a cycle type
        int long_cycles = 0;
        for (int c : *types.begin())
          if (c >= 4) ++long_cycles;
        CHECK(times == int_pow2(static_cast<unsigned>(long_cycles)));
      }
    }
  }
}

TEST_CASE("cycle-weighted block totals") {
  CHECK(even_total_by_block_matchings(0) == 1);
  CHECK(even_total_by_block_matchings(1) == 8);
  CHECK(even_total_by_block_matchings(2) == 1920);
  CHECK(even_total_by_matchings(0) == 1);
  CHECK(even_total_by_matchings(1) == 0);
  CHECK(even_total_by_matchings(2) == 8);
  CHECK(even_total_by_matchings(4) == 1920);

  // the two length-2 block matchings both have sign +1 and one cycle
  const auto tiny = block_matchings_of_length(2);
  REQUIRE(tiny.size() == 2);
  for (const auto& d : tiny) {
    CHECK(d.sign() == 1);
    CHECK(d.cycles() == 1);
  }
}

TEST_CASE("expansions: counts and the matching correspondence") {
  CHECK(enumerate_expansions(Word::parse("xxyy"), 2, 0).size() == 4);
  CHECK(enumerate_expansions(Word::parse("xxyyxxyy"), 3, 1).size() == 96);
  CHECK(enumerate_expansions(Word::parse("xy"), 0, 1).empty());
  CHECK_THROWS_AS(enumerate_expansions(Word::parse("xy"), 2, 0), std::invalid_argument);

  for (const auto& e : enumerate_expansions(Word::parse("xxyyxxyy"), 3, 1)) {
    REQUIRE(e.valid());
    const LetterMatching d = matching_from_expansion(e);
    CHECK(d.valid());
    CHECK(d.negativity() == 1);
  }
}

TEST_CASE("canonical expansion of the worked example") {
  const LetterMatching delta{Word::parse("xxyyxxyy"),
                             perm_from_pairs(8, {{1, 3}, {2, 8}, {4, 6}, {5, 7}})};
  const ShuffleExpansion e = canonical_expansion(delta, 3, 1);
  // positions carry x^1 x^2 y^1 y_1 x^3 x_1 y^3 y^2
  const std::vector<ExpansionLabel> expected{{1, false}, {2, false}, {1, false}, {1, true},
                                             {3, false}, {1, true},  {3, false}, {2, false}};
  CHECK(e.labels == expected);
  CHECK(is_canonical(e));
  CHECK(matching_from_expansion(e).pairing == delta.pairing);

  CHECK_THROWS_AS(canonical_expansion(delta, 4, 0), std::invalid_argument);  // negativity != t
}

TEST_CASE("expansion orbits have size s!t! and one canonical member") {
  const LetterMatching delta{Word::parse("xxyyxxyy"),
                             perm_from_pairs(8, {{1, 3}, {2, 8}, {4, 6}, {5, 7}})};
  const ShuffleExpansion canonical = canonical_expansion(delta, 3, 1);
  const auto orbit = expansion_orbit(canonical);
  CHECK(orbit.size() == 6);  // 3! * 1!
  int canonical_members = 0;
  for (const auto& e : orbit) {
    CHECK(matching_from_expansion(e).pairing == delta.pairing);  // constant on the orbit
    if (is_canonical(e)) ++canonical_members;
  }
  CHECK(canonical_members == 1);
}

TEST_CASE("matching -> canonical expansion -> matching round trip") {
  for (const char* word : {"xxyy", "xxyyxxyy"}) {
    const Word w = Word::parse(word);
    const int n = static_cast<int>(w.length()) / 2;
    for (const auto& d : letter_matchings(w)) {
      const int t = d.negativity();
      const ShuffleExpansion e = canonical_expansion(d, n - t, t);
      CHECK(is_canonical(e));
      CHECK(matching_from_expansion(e) == d);
    }
  }
}

TEST_CASE("every expansion appears in exactly one canonical orbit") {
  const Word w = Word::parse("xxyyxxyy");
  const int s = 3, t = 1;
  std::set<ShuffleExpansion> from_orbits;
  for (const auto& d : letter_matchings(w)) {
    if (d.negativity() != t) continue;
    for (const auto& e : expansion_orbit(canonical_expansion(d, s, t)))
      CHECK(from_orbits.insert(e).second);  // orbits are disjoint
  }
  const auto all = enumerate_expansions(w, s, t);
  CHECK(from_orbits == std::set<ShuffleExpansion>(all.begin(), all.end()));
}

TEST_CASE("matching json shape") {
  const auto ms = letter_matchings(Word::parse("xxyy"));
  const nlohmann::json j = to_json(ms[0]);
  CHECK(j["word"] == "xxyy");
  CHECK(j["sigma"].size() == 4);
  CHECK(j["sigma"][0].get<int>() >= 1);  // serialized 1-indexed
  CHECK(j.contains("negativity"));
  CHECK(j.contains("sign"));

  const BlockMatching b{Word::parse("xy"), perm_from_images({2, 1})};
  CHECK(to_json(b)["word"] == "XY");
  CHECK(to_json(b)["expanded_word"] == "xxyy");
}

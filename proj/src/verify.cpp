#include "levyshuffle/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "levyshuffle/matchings.hpp"
#include "levyshuffle/moments.hpp"
#include "levyshuffle/rng.hpp"
#include "levyshuffle/series.hpp"
#include "levyshuffle/special_numbers.hpp"
#include "levyshuffle/tensor_poly.hpp"

namespace levyshuffle {

namespace {

void record(VerifyReport& report, const std::string& name, bool passed,
            const std::string& detail = "") {
  report.checks.push_back(VerifyCheck{name, passed, detail});
}

Word random_word(Xoshiro256pp& rng, std::size_t max_len) {
  const std::size_t len = rng.next() % (max_len + 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<Letter>(rng.next() & 1u));
  return w;
}

TensorPoly random_poly(Xoshiro256pp& rng, std::size_t max_terms, std::size_t max_len) {
  TensorPoly p;
  const std::size_t terms = 1 + rng.next() % max_terms;
  for (std::size_t k = 0; k < terms; ++k) {
    const int coeff = static_cast<int>(rng.next() % 7) - 3;
    p.add_term(random_word(rng, max_len), coeff);
  }
  return p;
}

void suite_shuffle(VerifyReport& report, int m_max) {
  Xoshiro256pp rng(0x5eedu);

  bool dual_ok = true, mass_ok = true;
  const int max_len = std::min(4, m_max + 2);
  for (int a = 0; a <= max_len && dual_ok && mass_ok; ++a) {
    for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << a); ++ub) {
      const Word u = Word::from_bits(ub, static_cast<std::size_t>(a));
      for (int b = 0; b <= max_len; ++b) {
        for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << b); ++vb) {
          const Word v = Word::from_bits(vb, static_cast<std::size_t>(b));
          const TensorPoly fast = shuffle(u, v);
          if (fast != shuffle_by_enumeration(u, v)) dual_ok = false;
          Rational mass = 0;
          for (const auto& [w, c] : fast.terms()) mass += c;
          if (mass != Rational(binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a))))
            mass_ok = false;
        }
      }
    }
  }
  record(report, "shuffle recursion matches shuffle by permutation enumeration", dual_ok);
  record(report, "shuffle coefficient mass is C(|u|+|v|, |u|)", mass_ok);

  bool comm_ok = true;
  for (int c = 0; c < 40 * m_max && comm_ok; ++c) {
    const TensorPoly a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3);
    comm_ok = shuffle_product(a, b) == shuffle_product(b, a);
  }
  record(report, "shuffle product commutes", comm_ok);

  bool assoc_ok = true;
  for (int c = 0; c < 15 * m_max && assoc_ok; ++c) {
    const TensorPoly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3),
                     d = random_poly(rng, 2, 3);
    assoc_ok = shuffle_product(shuffle_product(a, b), d) ==
               shuffle_product(a, shuffle_product(b, d));
  }
  record(report, "shuffle product associates", assoc_ok);

  bool pairing_ok = true;
  for (int c = 0; c < 30 * m_max && pairing_ok; ++c) {
    const Word u = random_word(rng, 4), v = random_word(rng, 4);
    const Rational delta = pairing(TensorPoly::monomial(u), TensorPoly::monomial(v));
    pairing_ok = delta == (u == v ? Rational(1) : Rational(0));
  }
  record(report, "pairing is diagonal on basis words", pairing_ok);
}

void suite_matchings(VerifyReport& report, int m_max) {
  bool route_ok = true;
  std::string route_detail;
  for (int n = 1; n <= 2 * m_max && route_ok; ++n) {
    const TensorPoly powered = shuffle_power(area_tensor(), n);
    for (const Word& w : even_words(n)) {
      if (coefficient_by_matchings(w) != numerator(powered.coefficient(w))) {
        route_ok = false;
        route_detail = "first failure at word " + w.str();
        break;
      }
    }
  }
  record(report, "signed matching count equals the shuffle-power coefficient", route_ok,
         route_detail);

  bool mixed_ok = true;
  const int n_mixed = std::min(2 * m_max, 4);
  for (int n = 0; n <= n_mixed && mixed_ok; ++n) {
    for (int s = 0; s <= n && mixed_ok; ++s) {
      const int t = n - s;
      TensorPoly mixed = shuffle_product(shuffle_power(TensorPoly::monomial(Word::parse("xy")), s),
                                         shuffle_power(TensorPoly::monomial(Word::parse("yx")), t));
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
        const Word w = Word::from_bits(bits, static_cast<std::size_t>(2 * n));
        const Integer by_count = mixed_shuffle_coefficient(w, s, t);
        const Integer by_enum = Integer(enumerate_expansions(w, s, t).size());
        if (by_count != numerator(mixed.coefficient(w)) || by_enum != by_count) {
          mixed_ok = false;
          break;
        }
      }
    }
  }
  record(report, "expansion count equals s!t!N_t and the mixed shuffle coefficient", mixed_ok);

  bool block_ok = true;
  const int block_len = std::min(2 * m_max, 4);
  for (int len = 2; len <= block_len && block_ok; len += 2) {
    std::map<Word, std::map<int, Integer>> weighted;  // word -> negativity -> 2^|W| sum 2^-cyc
    for (const auto& d : block_matchings_of_length(len)) {
      const auto produced = letter_matchings_from_block(d);
      int two_cycles = 0;
      for (int c : cycle_lengths(d.sigma))
        if (c == 2) ++two_cycles;
      if (Integer(produced.size()) != int_pow2(static_cast<unsigned>(len - two_cycles)))
        block_ok = false;
      for (const auto& lm : produced)
        if (!lm.valid() || lm.negativity() != d.negativity()) block_ok = false;
      // tally sign-free weights for the partition identity
      Rational weight = Rational(int_pow2(static_cast<unsigned>(len))) /
                        Rational(int_pow2(static_cast<unsigned>(d.cycles())));
      if (denominator(weight) != 1) block_ok = false;
      weighted[d.word][d.negativity()] += numerator(weight);
    }
    for (auto& [blocks, by_neg] : weighted) {
      if (by_neg != negativity_histogram(blocks.doubled())) block_ok = false;
    }
  }
  record(report, "block matchings partition the letter matchings with 2^-cycles weights",
         block_ok);

  bool total_ok = true;
  for (int m = 0; m <= m_max && total_ok; ++m)
    total_ok = even_total_by_block_matchings(m) == even_total_by_matchings(2 * m);
  record(report, "cycle-weighted block total equals the signed matching total", total_ok);
}

void suite_numbers(VerifyReport& report, int m_max) {
  bool alt_ok = true;
  const std::vector<Integer> tangents = tangent_numbers(std::min(2 * m_max + 1, 8));
  for (int r = 1; r <= static_cast<int>(tangents.size()) && alt_ok; ++r) {
    const Integer sum = alternating_eulerian_sum(r);
    const Integer expected =
        (r % 2 == 1) ? tangents[static_cast<std::size_t>(r - 1)] : -tangents[static_cast<std::size_t>(r - 1)];
    alt_ok = sum == expected;
  }
  record(report, "alternating Eulerian sums give the tangent numbers", alt_ok);

  bool cyc_ok = true;
  for (int r = 1; r <= std::min(m_max + 1, 4) && cyc_ok; ++r) {
    const SingleCycleCount count = signed_single_cycle_count(r);
    cyc_ok = count.total == 2 * tangents[static_cast<std::size_t>(r - 1)] &&
             count.total == 2 * count.starting_with_x;
  }
  record(report, "signed single-cycle block counts equal twice the tangent numbers", cyc_ok);

  const int degree = std::min(4 * m_max, 16);
  const PowerSeries sec = reciprocal(cosine_series(degree));
  bool series_ok = multiply(sec, cosine_series(degree)) == PowerSeries::one(degree);
  PowerSeries tangent_part(degree);
  for (int r = 1; 2 * r <= degree; ++r) {
    tangent_part[2 * r] = Rational(tangent_numbers(r)[static_cast<std::size_t>(r - 1)],
                                   factorial(static_cast<unsigned>(2 * r)));
  }
  series_ok = series_ok && exponential(tangent_part) == sec;
  record(report, "exp of the integrated tangent series reproduces sec", series_ok);

  bool u_ok = true;
  for (int m = 0; m <= m_max && u_ok; ++m) {
    const Integer closed =
        int_pow2(static_cast<unsigned>(2 * m)) * factorial(static_cast<unsigned>(2 * m)) *
        euler_numbers(2 * m)[static_cast<std::size_t>(2 * m)];
    u_ok = even_total_by_exponential_formula(m) == closed;
  }
  record(report, "exponential-formula totals match 4^m (2m)! E_2m", u_ok);
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, int m_max) {
  if (m_max < 1) throw std::invalid_argument("run_verify_suite: need m_max >= 1");
  VerifyReport report;
  report.suite = suite;
  report.m_max = m_max;
  if (suite == "shuffle") {
    suite_shuffle(report, m_max);
  } else if (suite == "matchings") {
    suite_matchings(report, m_max);
  } else if (suite == "numbers") {
    suite_numbers(report, m_max);
  } else if (suite == "all") {
    suite_shuffle(report, m_max);
    suite_matchings(report, m_max);
    suite_numbers(report, m_max);
  } else {
    throw std::invalid_argument("run_verify_suite: unknown suite '" + suite + "'");
  }
  return report;
}

}  // namespace levyshuffle

#include "levyshuffle/matchings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace levyshuffle {

namespace {

std::vector<int> positions_of(const Word& w, Letter l) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w.at(i) == l) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

// --- LetterMatching ---------------------------------------------------------

int LetterMatching::negativity() const {
  int neg = 0;
  for (std::size_t i = 0; i < word.length(); ++i)
    if (word.at(i) == Letter::x && pairing[i] < static_cast<int>(i)) ++neg;
  return neg;
}

bool LetterMatching::valid() const {
  if (pairing.size() != word.length()) return false;
  if (!word.empty() && !is_fixed_point_free_involution(pairing)) return false;
  for (std::size_t i = 0; i < word.length(); ++i)
    if (word.at(static_cast<std::size_t>(pairing[i])) != opposite(word.at(i))) return false;
  return true;
}

// --- BlockMatching ----------------------------------------------------------

int BlockMatching::negativity() const {
  int neg = 0;
  for (std::size_t i = 0; i < word.length(); ++i) {
    const bool is_x = word.at(i) == Letter::x;
    const int image = sigma[i];
    if ((is_x && image < static_cast<int>(i)) || (!is_x && image > static_cast<int>(i))) ++neg;
  }
  return neg;
}

bool BlockMatching::valid() const {
  if (sigma.size() != word.length()) return false;
  if (!is_permutation(sigma)) return false;
  for (std::size_t i = 0; i < word.length(); ++i)
    if (word.at(static_cast<std::size_t>(sigma[i])) != opposite(word.at(i))) return false;
  return true;
}

// --- letter matchings -------------------------------------------------------

std::vector<LetterMatching> letter_matchings(const Word& w) {
  std::vector<LetterMatching> out;
  const std::vector<int> xs = positions_of(w, Letter::x);
  std::vector<int> ys = positions_of(w, Letter::y);
  if (xs.size() != ys.size()) return out;  // no pairing can cover every position
  std::sort(ys.begin(), ys.end());
  do {
    Permutation sigma(w.length());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sigma[static_cast<std::size_t>(xs[k])] = ys[k];
      sigma[static_cast<std::size_t>(ys[k])] = xs[k];
    }
    out.push_back(LetterMatching{w, std::move(sigma)});
  } while (std::next_permutation(ys.begin(), ys.end()));
  return out;
}

Integer negativity_count(const Word& w, int t) {
  Integer count = 0;
  for (const auto& d : letter_matchings(w))
    if (d.negativity() == t) ++count;
  return count;
}

std::map<int, Integer> negativity_histogram(const Word& w) {
  std::map<int, Integer> hist;
  for (const auto& d : letter_matchings(w)) ++hist[d.negativity()];
  return hist;
}

Integer mixed_shuffle_coefficient(const Word& w, int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("mixed_shuffle_coefficient: negative factor count");
  if (w.length() != 2 * static_cast<std::size_t>(s + t))
    throw std::invalid_argument("mixed_shuffle_coefficient: need |word| = 2(s+t)");
  return factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(t)) *
         negativity_count(w, t);
}

Integer coefficient_by_matchings(const Word& w) {
  if (w.length() % 2 != 0)
    throw std::invalid_argument("coefficient_by_matchings: odd-length word");
  const unsigned n = static_cast<unsigned>(w.length() / 2);
  Integer signed_sum = 0;
  for (const auto& d : letter_matchings(w)) signed_sum += d.sign();
  return factorial(n) * signed_sum;
}

std::vector<Word> even_words(int n) {
  if (n < 0) throw std::invalid_argument("even_words: negative n");
  std::vector<Word> out;
  if (n == 0) {
    out.push_back(Word{});
    return out;
  }
  if (n % 2 != 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != n / 2) continue;
    Word pattern = Word::from_bits(mask, static_cast<std::size_t>(n));
    out.push_back(pattern.doubled());
  }
  return out;
}

Integer even_total_by_matchings(int n) {
  Integer total = 0;
  for (const Word& w : even_words(n)) total += coefficient_by_matchings(w);
  return total;
}

// --- block matchings --------------------------------------------------------

std::vector<BlockMatching> block_matchings(const Word& block_word) {
  std::vector<BlockMatching> out;
  std::vector<int> xs = positions_of(block_word, Letter::x);
  std::vector<int> ys = positions_of(block_word, Letter::y);
  if (xs.size() != ys.size()) return out;
  if (block_word.empty()) {
    out.push_back(BlockMatching{block_word, Permutation{}});
    return out;
  }
  // sigma restricted to X positions is any bijection onto Y positions and
  // vice versa; the two halves are independent.
  std::vector<int> to_y = ys;
  std::sort(to_y.begin(), to_y.end());
  do {
    std::vector<int> to_x = xs;
    std::sort(to_x.begin(), to_x.end());
    do {
      Permutation sigma(block_word.length());
      for (std::size_t k = 0; k < xs.size(); ++k) {
        sigma[static_cast<std::size_t>(xs[k])] = to_y[k];
        sigma[static_cast<std::size_t>(ys[k])] = to_x[k];
      }
      out.push_back(BlockMatching{block_word, std::move(sigma)});
    } while (std::next_permutation(to_x.begin(), to_x.end()));
  } while (std::next_permutation(to_y.begin(), to_y.end()));
  return out;
}

std::vector<BlockMatching> block_matchings_of_length(int length) {
  if (length < 0) throw std::invalid_argument("block_matchings_of_length: negative length");
  std::vector<BlockMatching> out;
  if (length == 0) {
    out.push_back(BlockMatching{Word{}, Permutation{}});
    return out;
  }
  if (length % 2 != 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
    if (__builtin_popcountll(mask) != length / 2) continue;
    const Word w = Word::from_bits(mask, static_cast<std::size_t>(length));
    auto per_word = block_matchings(w);
    out.insert(out.end(), per_word.begin(), per_word.end());
  }
  return out;
}

LetterMatching canonical_letter_matching(const BlockMatching& d) {
  const std::size_t n = d.word.length();
  Permutation tau(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = 2 * i;                                      // first letter of block i
    const std::size_t b = 2 * static_cast<std::size_t>(d.sigma[i]) + 1;  // second letter of image
    tau[a] = static_cast<int>(b);
    tau[b] = static_cast<int>(a);
  }
  return LetterMatching{d.expanded_word(), std::move(tau)};
}

std::vector<LetterMatching> letter_matchings_from_block(const BlockMatching& d) {
  const std::size_t n = d.word.length();
  const LetterMatching canonical = canonical_letter_matching(d);
  std::set<Permutation> distinct;
  // Conjugate by every product of the in-block transpositions (2k, 2k+1).
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Permutation g(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) {
        g[2 * k] = static_cast<int>(2 * k + 1);
        g[2 * k + 1] = static_cast<int>(2 * k);
      } else {
        g[2 * k] = static_cast<int>(2 * k);
        g[2 * k + 1] = static_cast<int>(2 * k + 1);
      }
    }
    distinct.insert(conjugate(canonical.pairing, g));
  }
  std::vector<LetterMatching> out;
  out.reserve(distinct.size());
  for (const auto& tau : distinct) out.push_back(LetterMatching{canonical.word, tau});
  return out;
}

Integer even_total_by_block_matchings(int m) {
  if (m < 0) throw std::invalid_argument("even_total_by_block_matchings: negative m");
  Rational weighted = 0;
  for (const auto& d : block_matchings_of_length(2 * m)) {
    weighted += Rational(d.sign()) / Rational(int_pow2(static_cast<unsigned>(d.cycles())));
  }
  const Rational total =
      Rational(factorial(static_cast<unsigned>(2 * m)) * int_pow2(static_cast<unsigned>(2 * m))) *
      weighted;
  if (denominator(total) != 1)
    throw std::logic_error("even_total_by_block_matchings: non-integer total");
  return numerator(total);
}

// --- expansions ---------------------------------------------------------------

bool ShuffleExpansion::valid() const {
  if (labels.size() != word.length()) return false;
  if (word.length() != 2 * static_cast<std::size_t>(s + t)) return false;
  // Each label must sit on exactly one x and one y position, with forward
  // pairs ordered x-then-y and reversed pairs ordered y-then-x.
  std::map<ExpansionLabel, std::pair<int, int>> span;  // label -> (x pos, y pos)
  for (std::size_t p = 0; p < word.length(); ++p) {
    const ExpansionLabel& lab = labels[p];
    const int family_size = lab.reversed ? t : s;
    if (lab.index < 1 || lab.index > family_size) return false;
    auto it = span.emplace(lab, std::pair<int, int>{-1, -1}).first;
    int& slot = word.at(p) == Letter::x ? it->second.first : it->second.second;
    if (slot != -1) return false;
    slot = static_cast<int>(p);
  }
  if (span.size() != static_cast<std::size_t>(s + t)) return false;
  for (const auto& [lab, pos] : span) {
    if (pos.first < 0 || pos.second < 0) return false;
    if (!lab.reversed && pos.first > pos.second) return false;
    if (lab.reversed && pos.first < pos.second) return false;
  }
  return true;
}

std::vector<ShuffleExpansion> enumerate_expansions(const Word& w, int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("enumerate_expansions: negative factor count");
  if (w.length() != 2 * static_cast<std::size_t>(s + t))
    throw std::invalid_argument("enumerate_expansions: need |word| = 2(s+t)");
  std::vector<ShuffleExpansion> out;
  const std::vector<int> xs = positions_of(w, Letter::x);
  const std::vector<int> ys = positions_of(w, Letter::y);
  if (static_cast<int>(xs.size()) != s + t || static_cast<int>(ys.size()) != s + t) return out;

  std::vector<ExpansionLabel> all_labels;
  for (int i = 1; i <= s; ++i) all_labels.push_back(ExpansionLabel{i, false});
  for (int j = 1; j <= t; ++j) all_labels.push_back(ExpansionLabel{j, true});
  std::sort(all_labels.begin(), all_labels.end());

  std::vector<ExpansionLabel> x_labels = all_labels;
  do {
    std::vector<ExpansionLabel> y_labels = all_labels;
    do {
      bool ok = true;
      for (std::size_t k = 0; k < x_labels.size() && ok; ++k) {
        // position of the y partner of x label k
        const auto partner =
            std::find(y_labels.begin(), y_labels.end(), x_labels[k]) - y_labels.begin();
        const int xp = xs[k];
        const int yp = ys[static_cast<std::size_t>(partner)];
        ok = x_labels[k].reversed ? (xp > yp) : (xp < yp);
      }
      if (ok) {
        ShuffleExpansion e;
        e.word = w;
        e.s = s;
        e.t = t;
        e.labels.resize(w.length());
        for (std::size_t k = 0; k < x_labels.size(); ++k) {
          e.labels[static_cast<std::size_t>(xs[k])] = x_labels[k];
          e.labels[static_cast<std::size_t>(ys[k])] = y_labels[k];
        }
        out.push_back(std::move(e));
      }
    } while (std::next_permutation(y_labels.begin(), y_labels.end()));
  } while (std::next_permutation(x_labels.begin(), x_labels.end()));
  return out;
}

LetterMatching matching_from_expansion(const ShuffleExpansion& e) {
  if (!e.valid()) throw std::invalid_argument("matching_from_expansion: invalid expansion");
  std::map<ExpansionLabel, std::pair<int, int>> span;
  for (std::size_t p = 0; p < e.word.length(); ++p) {
    auto& pos = span[e.labels[p]];
    (e.word.at(p) == Letter::x ? pos.first : pos.second) = static_cast<int>(p);
  }
  Permutation sigma(e.word.length());
  for (const auto& [lab, pos] : span) {
    sigma[static_cast<std::size_t>(pos.first)] = pos.second;
    sigma[static_cast<std::size_t>(pos.second)] = pos.first;
  }
  return LetterMatching{e.word, std::move(sigma)};
}

ShuffleExpansion canonical_expansion(const LetterMatching& d, int s, int t) {
  if (!d.valid()) throw std::invalid_argument("canonical_expansion: invalid matching");
  if (s < 0 || t < 0 || d.word.length() != 2 * static_cast<std::size_t>(s + t))
    throw std::invalid_argument("canonical_expansion: need |word| = 2(s+t)");
  if (d.negativity() != t)
    throw std::invalid_argument("canonical_expansion: negativity must equal t");
  ShuffleExpansion e;
  e.word = d.word;
  e.s = s;
  e.t = t;
  e.labels.resize(d.word.length());
  int next_forward = 1, next_reversed = 1;
  for (std::size_t i = 0; i < d.word.length(); ++i) {
    if (d.word.at(i) != Letter::x) continue;
    const std::size_t partner = static_cast<std::size_t>(d.pairing[i]);
    if (d.pairing[i] > static_cast<int>(i)) {
      e.labels[i] = ExpansionLabel{next_forward, false};
      e.labels[partner] = ExpansionLabel{next_forward, false};
      ++next_forward;
    } else {
      e.labels[i] = ExpansionLabel{next_reversed, true};
      e.labels[partner] = ExpansionLabel{next_reversed, true};
      ++next_reversed;
    }
  }
  return e;
}

std::vector<ShuffleExpansion> expansion_orbit(const ShuffleExpansion& e) {
  std::vector<int> fwd(static_cast<std::size_t>(e.s));
  std::vector<int> rev(static_cast<std::size_t>(e.t));
  for (int i = 0; i < e.s; ++i) fwd[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j < e.t; ++j) rev[static_cast<std::size_t>(j)] = j + 1;
  std::vector<ShuffleExpansion> out;
  do {
    std::vector<int> rev_perm = rev;
    do {
      ShuffleExpansion relabeled = e;
      for (auto& lab : relabeled.labels) {
        lab.index = lab.reversed ? rev_perm[static_cast<std::size_t>(lab.index - 1)]
                                 : fwd[static_cast<std::size_t>(lab.index - 1)];
      }
      out.push_back(std::move(relabeled));
    } while (std::next_permutation(rev_perm.begin(), rev_perm.end()));
  } while (std::next_permutation(fwd.begin(), fwd.end()));
  return out;
}

bool is_canonical(const ShuffleExpansion& e) {
  if (!e.valid()) return false;
  int last_forward = 0, last_reversed = 0;
  for (std::size_t p = 0; p < e.word.length(); ++p) {
    if (e.word.at(p) != Letter::x) continue;
    const ExpansionLabel& lab = e.labels[p];
    int& last = lab.reversed ? last_reversed : last_forward;
    if (lab.index != last + 1) return false;
    last = lab.index;
  }
  return true;
}

}  // namespace levyshuffle

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "levyshuffle/permutation.hpp"
#include "levyshuffle/rational.hpp"
#include "levyshuffle/word.hpp"

namespace levyshuffle {

// Conventions used throughout this module:
//   * n is the number of shuffle factors of (xy - yx); produced words have
//     length 2n.
//   * An even word z_1^2...z_n^2 with equal letter counts survives the
//     diagonal pairing only when n = 2m (m xx-pairs and m yy-pairs).
//   * A letter matching on a word of length 2n is a fixed-point-free
//     involution pairing each x position with a y position.
//   * A block matching has an n-letter word whose letters stand for the
//     two-letter blocks xx / yy, with a permutation of all n positions
//     exchanging X positions and Y positions.

/// A word plus a fixed-point-free involution pairing x positions with
/// y positions. Its sign is (-1)^negativity, negativity counting the
/// x positions whose partner lies to the left.
struct LetterMatching {
  Word word;
  Permutation pairing;  // involution, 0-based images

  int negativity() const;
  int sign() const { return negativity() % 2 == 0 ? 1 : -1; }
  bool valid() const;

  friend bool operator==(const LetterMatching&, const LetterMatching&) = default;
  friend auto operator<=>(const LetterMatching&, const LetterMatching&) = default;
};

/// A block word (each letter standing for an xx or yy block) plus a
/// permutation sigma of all positions with word[i] = X iff word[sigma(i)] = Y.
/// Negativity counts X positions sent backward plus Y positions sent forward.
struct BlockMatching {
  Word word;          // printed uppercase: X = x-block, Y = y-block
  Permutation sigma;  // 0-based images, fixed-point free

  int negativity() const;
  int sign() const { return negativity() % 2 == 0 ? 1 : -1; }
  int cycles() const { return cycle_count(sigma); }
  Word expanded_word() const { return word.doubled(); }
  bool valid() const;

  friend bool operator==(const BlockMatching&, const BlockMatching&) = default;
  friend auto operator<=>(const BlockMatching&, const BlockMatching&) = default;
};

/// One way of producing a word from the shuffle product of s copies of xy
/// and t copies of yx: every position carries a factor label. Forward labels
/// (index i <= s) put x before y; reversed labels put y before x.
struct ExpansionLabel {
  int index = 0;        // 1-based within its family
  bool reversed = false;  // true when the label comes from a yx factor

  friend bool operator==(const ExpansionLabel&, const ExpansionLabel&) = default;
  friend auto operator<=>(const ExpansionLabel&, const ExpansionLabel&) = default;
};

struct ShuffleExpansion {
  Word word;
  std::vector<ExpansionLabel> labels;  // one per position
  int s = 0;
  int t = 0;

  bool valid() const;

  friend bool operator==(const ShuffleExpansion&, const ShuffleExpansion&) = default;
  friend auto operator<=>(const ShuffleExpansion&, const ShuffleExpansion&) = default;
};

// --- letter matchings ------------------------------------------------------

/// All letter matchings of w. Empty when the x/y counts differ; the empty
/// word has exactly one (empty) matching. Count is (number of x's)!.
std::vector<LetterMatching> letter_matchings(const Word& w);

/// N_t(w): number of letter matchings of w with negativity t.
Integer negativity_count(const Word& w, int t);

/// Histogram t -> N_t(w) over all matchings of w.
std::map<int, Integer> negativity_histogram(const Word& w);

/// Coefficient of w in (xy)^{sh s} sh (yx)^{sh t}, computed as s! t! N_t(w).
/// Requires |w| = 2(s+t).
Integer mixed_shuffle_coefficient(const Word& w, int s, int t);

/// Coefficient of w in (xy-yx)^{sh n} with n = |w|/2, computed as
/// n! * sum of matching signs. Requires |w| even.
Integer coefficient_by_matchings(const Word& w);

/// All even words of length 2n (empty for odd n; the empty word for n = 0).
std::vector<Word> even_words(int n);

/// Sum over all even words of length 2n of coefficient_by_matchings.
Integer even_total_by_matchings(int n);

// --- block matchings -------------------------------------------------------

/// All block matchings with the given block word.
std::vector<BlockMatching> block_matchings(const Word& block_word);

/// All block matchings whose word has the given length (equal X/Y counts).
std::vector<BlockMatching> block_matchings_of_length(int length);

/// The canonical letter matching of a block matching: position 2i-1 of the
/// expanded word is paired with position 2*sigma(i) (1-based).
LetterMatching canonical_letter_matching(const BlockMatching& d);

/// The distinct letter matchings obtained by conjugating the canonical one
/// by the group generated by the in-block transpositions (1 2),(3 4),...
/// Exactly 2^(|word| - #2-cycles of sigma) of them, all with the block
/// matching's negativity.
std::vector<LetterMatching> letter_matchings_from_block(const BlockMatching& d);

/// (2m)! 4^m * sum over block matchings of length 2m of sign * 2^(-cycles).
/// Equals even_total_by_matchings(2m); always an integer.
Integer even_total_by_block_matchings(int m);

// --- expansions ------------------------------------------------------------

/// All expansions of (xy)^{sh s} sh (yx)^{sh t} whose underlying word is w.
/// Their number equals mixed_shuffle_coefficient(w, s, t).
std::vector<ShuffleExpansion> enumerate_expansions(const Word& w, int s, int t);

/// Pairs the positions sharing a label; forgets which factor produced them.
LetterMatching matching_from_expansion(const ShuffleExpansion& e);

/// The unique expansion of d whose forward labels and reversed labels are
/// numbered in increasing position order. Requires negativity(d) = t and
/// s + t = |word|/2.
ShuffleExpansion canonical_expansion(const LetterMatching& d, int s, int t);

/// The s! t! relabelings of e under permuting forward and reversed indices.
std::vector<ShuffleExpansion> expansion_orbit(const ShuffleExpansion& e);

bool is_canonical(const ShuffleExpansion& e);

}  // namespace levyshuffle

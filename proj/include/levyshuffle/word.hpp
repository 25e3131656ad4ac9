#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace levyshuffle {

enum class Letter : unsigned char { x = 0, y = 1 };

constexpr Letter opposite(Letter l) { return l == Letter::x ? Letter::y : Letter::x; }

constexpr char letter_char(Letter l, bool uppercase = false) {
  if (uppercase) return l == Letter::x ? 'X' : 'Y';
  return l == Letter::x ? 'x' : 'y';
}

// A word over the two-letter alphabet {x, y}, packed as one bit per letter
// (letter i lives in bit i) plus a length. Words key the sparse tensor
// tables, so hashing and comparison have to stay cheap.
class Word {
 public:
  static constexpr std::size_t max_length = 64;

  constexpr Word() = default;

  static Word from_bits(std::uint64_t bits, std::size_t length) {
    if (length > max_length) throw std::length_error("Word::from_bits: length > 64");
    if (length < 64 && (bits >> length) != 0)
      throw std::invalid_argument("Word::from_bits: bits beyond length");
    Word w;
    w.bits_ = bits;
    w.length_ = static_cast<std::uint32_t>(length);
    return w;
  }

  /// Parses "xyx" (or "XYX"); the empty string is the empty word.
  static Word parse(std::string_view text) {
    Word w;
    for (char c : text) {
      switch (c) {
        case 'x': case 'X': w.push_back(Letter::x); break;
        case 'y': case 'Y': w.push_back(Letter::y); break;
        default: throw std::invalid_argument(std::string("Word::parse: bad letter '") + c + "'");
      }
    }
    return w;
  }

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Letter at(std::size_t i) const {
    if (i >= length_) throw std::out_of_range("Word::at");
    return static_cast<Letter>((bits_ >> i) & 1u);
  }

  Word& push_back(Letter l) {
    if (length_ >= max_length) throw std::length_error("Word::push_back: word full");
    bits_ |= static_cast<std::uint64_t>(l) << length_;
    ++length_;
    return *this;
  }

  std::size_t count(Letter l) const {
    std::size_t ones = static_cast<std::size_t>(__builtin_popcountll(bits_));
    return l == Letter::y ? ones : length_ - ones;
  }

  bool balanced() const { return count(Letter::x) == count(Letter::y); }

  /// True when the word reads z_1 z_1 z_2 z_2 ... (letters repeated in pairs).
  bool is_pair_form() const {
    if (length_ % 2 != 0) return false;
    for (std::size_t i = 0; i < length_; i += 2)
      if (at(i) != at(i + 1)) return false;
    return true;
  }

  /// Even word: pair form with equally many x's and y's.
  bool is_even() const { return is_pair_form() && balanced(); }

  /// Doubles every letter: xy -> xxyy.
  Word doubled() const {
    Word w;
    for (std::size_t i = 0; i < length_; ++i) {
      Letter l = at(i);
      w.push_back(l);
      w.push_back(l);
    }
    return w;
  }

  std::string str(bool uppercase = false) const {
    std::string s;
    s.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) s.push_back(letter_char(at(i), uppercase));
    return s;
  }

  friend Word concat(const Word& u, const Word& v) {
    if (u.length_ + v.length_ > max_length) throw std::length_error("concat: word too long");
    Word w;
    w.bits_ = u.bits_ | (v.bits_ << u.length_);
    w.length_ = u.length_ + v.length_;
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Graded order: by length, then by packed bits.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t length_ = 0;
};

}  // namespace levyshuffle

template <>
struct std::hash<levyshuffle::Word> {
  std::size_t operator()(const levyshuffle::Word& w) const noexcept {
    std::uint64_t z = w.bits() + 0x9e3779b97f4a7c15ULL * (w.length() + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

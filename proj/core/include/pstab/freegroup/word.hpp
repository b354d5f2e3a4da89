#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pstab::freegroup {

// A signed generator: +i is x_i, -i its inverse (1-based).
class Letter {
 public:
  explicit Letter(int value);

  int value() const noexcept { return value_; }
  // 0-based generator index.
  int generator() const noexcept { return (value_ > 0 ? value_ : -value_) - 1; }
  bool is_inverse() const noexcept { return value_ < 0; }
  Letter inverse() const noexcept { return Letter(-value_, Unchecked{}); }

  // Position in the order a < A < b < B < ...; also the vertex index of the
  // letter in a Whitehead graph.
  int key() const noexcept { return 2 * generator() + (is_inverse() ? 1 : 0); }
  static Letter from_key(int key);

  // 'a'..'z' for generators 1..26, 'A'..'Z' for their inverses.
  char to_char() const;
  static Letter from_char(char c);

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  struct Unchecked {};
  Letter(int value, Unchecked) noexcept : value_(value) {}

  int value_;
};

// A freely reduced word in F_rank.
class Word {
 public:
  explicit Word(int rank);

  static Word reduce(std::span<const Letter> letters, int rank);
  static Word from_values(std::initializer_list<int> values, int rank);
  // rank == 0 infers max(2, largest generator used).
  static Word parse(std::string_view text, int rank = 0);
  static Word generator(int index, int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string to_string() const;

  Word inverse() const;
  Word power(int exponent) const;
  bool is_cyclically_reduced() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(int rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_;
  std::vector<Letter> letters_;
};

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

struct CyclicReduction;
CyclicReduction cyclic_reduce(const Word& w);

// Cyclically reduced word stored as its least rotation in letter-key order.
// Two words are conjugate iff their CyclicWords compare equal.
class CyclicWord {
 public:
  explicit CyclicWord(int rank) : rank_(rank) {}

  static CyclicWord of(const Word& w);
  static CyclicWord parse(std::string_view text, int rank = 0) { return of(Word::parse(text, rank)); }

  int rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word as_word() const;
  CyclicWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

 private:
  friend CyclicReduction cyclic_reduce(const Word& w);
  CyclicWord(int rank, std::vector<Letter> canonical)
      : rank_(rank), letters_(std::move(canonical)) {}

  int rank_;
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  // w == conjugator * cyclic * conjugator^-1 in the group.
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);

// ||w||: length of the cyclically reduced representative.
std::size_t cyclic_length(const Word& w);

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> letters);

}  // namespace pstab::freegroup

#include "pstab/freegroup/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "pstab/error.hpp"

namespace pstab::freegroup {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive, got " + std::to_string(rank));
}

void check_letter(Letter l, int rank) {
  if (std::abs(l.value()) > rank) {
    throw Error(ErrorCode::InvalidLetter,
                "letter " + std::to_string(l.value()) + " out of range for rank " + std::to_string(rank));
  }
}

// Appends l to a reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == l.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Letter::Letter(int value) : value_(value) {
  if (value == 0) throw Error(ErrorCode::InvalidLetter, "letter value 0 is not a generator");
}

Letter Letter::from_key(int key) {
  if (key < 0) throw Error(ErrorCode::InvalidLetter, "negative letter key");
  int gen = key / 2 + 1;
  return Letter(key % 2 == 0 ? gen : -gen);
}

char Letter::to_char() const {
  int g = generator();
  if (g >= 26) throw Error(ErrorCode::InvalidLetter, "generator index beyond 'z' has no character form");
  return static_cast<char>((is_inverse() ? 'A' : 'a') + g);
}

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return Letter(-(c - 'A' + 1));
  throw Error(ErrorCode::InvalidLetter, std::string("invalid letter character '") + c + "'");
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(std::span<const Letter> letters, int rank) {
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    push_reduced(out, l);
  }
  return Word(rank, std::move(out));
}

Word Word::from_values(std::initializer_list<int> values, int rank) {
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values) letters.emplace_back(v);
  return reduce(letters, rank);
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  int largest = 0;
  for (char c : text) {
    letters.push_back(Letter::from_char(c));
    largest = std::max(largest, letters.back().generator() + 1);
  }
  if (rank == 0) rank = std::max(2, largest);
  return reduce(letters, rank);
}

Word Word::generator(int index, int rank) {
  check_rank(rank);
  if (index < 0 || index >= rank) {
    throw Error(ErrorCode::InvalidLetter, "generator index " + std::to_string(index) + " out of range");
  }
  return Word(rank, {Letter(index + 1)});
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(rank_, std::move(out));
}

Word Word::power(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const int n = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> letters;
  letters.reserve(base.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters.insert(letters.end(), base.letters_.begin(), base.letters_.end());
  return reduce(letters, rank_);
}

bool Word::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

Word invert(const Word& w) { return w.inverse(); }

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw Error(ErrorCode::RankMismatch,
                "cannot concatenate words of rank " + std::to_string(u.rank()) + " and " + std::to_string(v.rank()));
  }
  std::vector<Letter> letters(u.letters());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(letters, u.rank());
}

std::size_t least_rotation(std::span<const Letter> s) {
  // Booth's algorithm over the doubled sequence.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return s[i % n].key(); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k)) {
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::span<const Letter> core(letters.data() + lo, hi - lo);
  const std::size_t r = least_rotation(core);

  // core = s t with canonical rotation t s; then w = (prefix s) (t s) (prefix s)^-1.
  std::vector<Letter> canonical;
  canonical.reserve(core.size());
  canonical.insert(canonical.end(), core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
  canonical.insert(canonical.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));

  std::vector<Letter> conj(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  conj.insert(conj.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r));

  return CyclicReduction{CyclicWord(w.rank(), std::move(canonical)), Word::reduce(conj, w.rank())};
}

std::size_t cyclic_length(const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

CyclicWord CyclicWord::of(const Word& w) { return cyclic_reduce(w).cyclic; }

Word CyclicWord::as_word() const { return Word::reduce(letters_, rank_); }

CyclicWord CyclicWord::inverse() const { return of(as_word().inverse()); }

std::string CyclicWord::to_string() const { return as_word().to_string(); }

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

}  // namespace pstab::freegroup

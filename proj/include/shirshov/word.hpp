#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shirshov/errors.hpp"

namespace shirshov {

// Letters are dense 0-based integers.  ASCII 'a'..'z' is an I/O encoding
// only (see cli); alphabets larger than 26 use the bracketed list syntax.
using Letter = std::int32_t;

// A finite ordered alphabet of `size` letters 0 < 1 < ... < size-1.
struct Alphabet {
  int size = 1;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Immutable sequence of letters over a fixed alphabet.  The empty word is
// permitted; it doubles as the theta sentinel that sorts below every
// nonempty word under total_compare.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, Alphabet alphabet);

  // Accepts "abc" (letters 'a'..'z') or "[0,1,27]".  When alphabet_size is 0
  // the smallest alphabet containing all letters is used.
  static Word parse(std::string_view text, int alphabet_size = 0);

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(int start, int len) const;
  Word suffix(int start) const;
  Word rotated_left(int k) const;
  Word repeated(int times) const;
  Word append(Letter x) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

  // "abc" when the alphabet fits in 'a'..'z', otherwise "[0,1,27]".
  std::string str() const;

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

// Verdict of the partial lexicographic comparison: a proper prefix is
// Incomparable with its extension, everything else resolves at the first
// differing letter.
enum class LexOrder { Less, Greater, Equal, Incomparable };

const char* to_string(LexOrder o);

LexOrder compare_lex(const Word& u, const Word& v);
LexOrder compare_lex_spans(std::span<const Letter> u, std::span<const Letter> v);

// Total order extending compare_lex: a proper prefix is smaller than its
// extension.  The empty word sorts below everything.
std::strong_ordering total_compare(const Word& u, const Word& v);
std::strong_ordering total_compare_spans(std::span<const Letter> u,
                                         std::span<const Letter> v);

// A suffix (tail) of a host word, optionally truncated to its first
// `trunc` letters (a k-tail).
struct TailRef {
  const Word* word = nullptr;
  int start = 0;
  std::optional<int> trunc;

  TailRef(const Word& w, int start_pos, std::optional<int> k = std::nullopt);

  int length() const;
  std::span<const Letter> view() const;
  Word materialize() const;
};

LexOrder compare_lex(const TailRef& u, const TailRef& v);

// Ranks of all suffixes under total_compare; rank[i] < rank[j] iff the
// suffix at i precedes the suffix at j.  Ranks are a permutation of
// 0..|w|-1.
std::vector<int> suffix_ranks(const Word& w);

// Same, but with prefix pairs resolved the other way (the longer suffix is
// smaller).  Under this order a strictly decreasing subsequence of ranks at
// increasing positions is exactly a tail-sense dividing chain, which is what
// the patience fast path consumes.
std::vector<int> suffix_ranks_prefix_last(const Word& w);

// All distinct cyclic shifts of u; shifts[j] is u rotated left by j.
struct WordCycle {
  Word base;
  std::vector<Word> shifts;

  int size() const { return static_cast<int>(shifts.size()); }
  // 1-based shift index map: shift(1) = base, shift(i+1) = shift(i) rotated
  // left by one; indices wrap modulo the cycle size.
  const Word& shift(int i) const;
};

WordCycle cyclic_shifts(const Word& u);

// Smallest p dividing |u| with u = (u[0..p))^{|u|/p}.
int primitive_period(const Word& u);

bool is_noncyclic(const Word& u);

// Words over the same alphabet that are cyclic shifts of each other.
bool same_word_cycle(const Word& a, const Word& b);

namespace detail {
void require_same_alphabet(const Word& u, const Word& v);
}

}  // namespace shirshov

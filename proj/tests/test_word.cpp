#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shirshov/word.hpp"

using namespace shirshov;

TEST_CASE("lexicographic comparison follows the prefix convention") {
  auto w = [](const char* s) { return Word::parse(s, 3); };
  CHECK(compare_lex(w("a"), w("b")) == LexOrder::Less);
  CHECK(compare_lex(w("ab"), w("aba")) == LexOrder::Incomparable);
  CHECK(compare_lex(w("ba"), w("ab")) == LexOrder::Greater);
  CHECK(compare_lex(w("ab"), w("ab")) == LexOrder::Equal);
  CHECK(compare_lex(Word({}, Alphabet{3}), w("a")) == LexOrder::Incomparable);
}

TEST_CASE("total order resolves prefixes as smaller") {
  auto w = [](const char* s) { return Word::parse(s, 2); };
  CHECK(total_compare(w("a"), w("aa")) == std::strong_ordering::less);
  CHECK(total_compare(w("ab"), w("b")) == std::strong_ordering::less);
  CHECK(total_compare(w("ba"), w("ba")) == std::strong_ordering::equal);
  // the empty word sorts below everything
  CHECK(total_compare(Word({}, Alphabet{2}), w("a")) == std::strong_ordering::less);
}

TEST_CASE("mismatched alphabets are a usage error") {
  Word a = Word::parse("ab", 2);
  Word b = Word::parse("ab", 3);
  CHECK_THROWS_AS(compare_lex(a, b), UsageError);
  CHECK_THROWS_AS(total_compare(a, b), UsageError);
}

TEST_CASE("comparison verdicts are antisymmetric and consistent with the total order") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 8), letter(0, 2);
  for (int trial = 0; trial < 500; trial++) {
    auto make = [&]() {
      std::vector<Letter> v(static_cast<size_t>(len(rng)));
      for (auto& x : v) x = letter(rng);
      return Word(v, Alphabet{3});
    };
    Word u = make(), v = make();
    auto uv = compare_lex(u, v);
    auto vu = compare_lex(v, u);
    if (uv == LexOrder::Less) CHECK(vu == LexOrder::Greater);
    if (uv == LexOrder::Incomparable) CHECK(vu == LexOrder::Incomparable);
    if (uv == LexOrder::Equal) CHECK(vu == LexOrder::Equal);
    // total order agrees whenever the partial comparison decides
    if (uv == LexOrder::Less) CHECK(total_compare(u, v) == std::strong_ordering::less);
    if (uv == LexOrder::Greater) CHECK(total_compare(u, v) == std::strong_ordering::greater);
    if (uv == LexOrder::Equal) CHECK(total_compare(u, v) == std::strong_ordering::equal);
    // the only disagreement: prefix pairs resolve by length
    if (uv == LexOrder::Incomparable)
      CHECK(total_compare(u, v) == (u.size() <=> v.size()));
  }
}

TEST_CASE("suffix ranks: pinned values") {
  CHECK(suffix_ranks(Word::parse("ab")) == std::vector<int>{0, 1});
  CHECK(suffix_ranks(Word::parse("ba")) == std::vector<int>{1, 0});
  CHECK(suffix_ranks(Word::parse("aa")) == std::vector<int>{1, 0});
  CHECK_THROWS_AS(suffix_ranks(Word({}, Alphabet{1})), UsageError);
}

TEST_CASE("suffix ranks match the pairwise oracle on every short word") {
  for (int l = 2; l <= 3; l++)
    for (const Word& w : oracle::all_words_up_to(l, 10)) {
      CHECK(suffix_ranks(w) == oracle::suffix_ranks_naive(w));
      // the flipped variant is also a total ranking and flips exactly the
      // prefix-related pairs
      auto srank = suffix_ranks(w);
      auto frank = suffix_ranks_prefix_last(w);
      for (int i = 0; i < w.size(); i++)
        for (int j = i + 1; j < w.size(); j++) {
          bool prefix_pair = compare_lex(w.suffix(i), w.suffix(j)) == LexOrder::Incomparable;
          bool agree = (srank[i] < srank[j]) == (frank[i] < frank[j]);
          CHECK(agree == !prefix_pair);
        }
    }
}

TEST_CASE("cyclic shifts and primitivity") {
  auto ab = cyclic_shifts(Word::parse("ab"));
  CHECK(ab.size() == 2);
  CHECK(ab.shifts[0].str() == "ab");
  CHECK(ab.shifts[1].str() == "ba");

  CHECK(cyclic_shifts(Word::parse("aa")).size() == 1);
  CHECK(cyclic_shifts(Word::parse("abab")).size() == 2);

  CHECK(is_noncyclic(Word::parse("ab")));
  CHECK_FALSE(is_noncyclic(Word::parse("abab")));
  CHECK(is_noncyclic(Word::parse("aab")));
}

TEST_CASE("shift index map walks rotations one letter at a time") {
  for (const char* text : {"a", "ab", "aab", "abcab", "aaa"}) {
    Word u = Word::parse(text, 3);
    auto cycle = cyclic_shifts(u);
    CHECK(cycle.shift(1) == u);
    for (int i = 1; i <= u.size(); i++)
      CHECK(cycle.shift(i + 1) == cycle.shift(i).rotated_left(1));
    CHECK(cycle.shift(u.size() + 1) == u);
    CHECK(is_noncyclic(u) == (cycle.size() == u.size()));
  }
}

TEST_CASE("tail refs view and truncate suffixes") {
  Word w = Word::parse("abcab");
  TailRef tail(w, 2);
  CHECK(tail.materialize().str() == "cab");
  TailRef k_tail(w, 2, 2);
  CHECK(k_tail.materialize().str() == "ca");
  CHECK(compare_lex(TailRef(w, 0), TailRef(w, 3)) == LexOrder::Incomparable);
  CHECK_THROWS_AS(TailRef(w, 5), UsageError);
  CHECK_THROWS_AS(TailRef(w, 2, 4), UsageError);
}

TEST_CASE("bracketed parsing covers alphabets beyond 26 letters") {
  Word w = Word::parse("[0,1,27]", 30);
  CHECK(w.size() == 3);
  CHECK(w[2] == 27);
  CHECK(w.str() == "[0,1,27]");
  CHECK(Word::parse(w.str(), 30) == w);
  CHECK_THROWS_AS(Word::parse("[0,1,27]", 5), UsageError);
  CHECK_THROWS_AS(Word::parse("aB"), UsageError);
}

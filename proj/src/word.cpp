#include "shirshov/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace shirshov {

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  if (alphabet_.size < 1) throw UsageError("alphabet must have at least one letter");
  for (Letter x : letters_) {
    if (x < 0 || x >= alphabet_.size)
      throw UsageError("letter index " + std::to_string(x) + " out of range for alphabet of size " +
                       std::to_string(alphabet_.size));
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<Letter> letters;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw UsageError("unterminated letter list: " + std::string(text));
    std::string inner(text.substr(1, text.size() - 2));
    std::istringstream in(inner);
    std::string item;
    while (std::getline(in, item, ',')) {
      size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(item, &pos);
      } catch (const std::exception&) {
        throw UsageError("bad letter index: " + item);
      }
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
      if (pos != item.size()) throw UsageError("bad letter index: " + item);
      letters.push_back(value);
    }
  } else {
    for (char c : text) {
      if (c < 'a' || c > 'z') throw UsageError(std::string("letter out of 'a'..'z': ") + c);
      letters.push_back(c - 'a');
    }
  }
  int needed = 1;
  for (Letter x : letters) needed = std::max(needed, x + 1);
  if (alphabet_size == 0) alphabet_size = needed;
  if (alphabet_size < needed)
    throw UsageError("alphabet of size " + std::to_string(alphabet_size) + " too small for word");
  return Word(std::move(letters), Alphabet{alphabet_size});
}

Word Word::subword(int start, int len) const {
  if (start < 0 || len < 0 || start + len > size()) throw UsageError("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + start, letters_.begin() + start + len),
              alphabet_);
}

Word Word::suffix(int start) const { return subword(start, size() - start); }

Word Word::rotated_left(int k) const {
  if (empty()) return *this;
  k %= size();
  std::vector<Letter> out;
  out.reserve(letters_.size());
  out.insert(out.end(), letters_.begin() + k, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + k);
  return Word(std::move(out), alphabet_);
}

Word Word::repeated(int times) const {
  if (times < 0) throw UsageError("negative repetition");
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<size_t>(times));
  for (int i = 0; i < times; i++) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out), alphabet_);
}

Word Word::append(Letter x) const {
  std::vector<Letter> out = letters_;
  out.push_back(x);
  return Word(std::move(out), alphabet_);
}

Word operator+(const Word& a, const Word& b) {
  detail::require_same_alphabet(a, b);
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out), a.alphabet_);
}

std::string Word::str() const {
  if (alphabet_.size <= 26) {
    std::string out;
    out.reserve(letters_.size());
    for (Letter x : letters_) out.push_back(static_cast<char>('a' + x));
    return out;
  }
  std::string out = "[";
  for (size_t i = 0; i < letters_.size(); i++) {
    if (i) out += ",";
    out += std::to_string(letters_[i]);
  }
  return out + "]";
}

const char* to_string(LexOrder o) {
  switch (o) {
    case LexOrder::Less: return "less";
    case LexOrder::Greater: return "greater";
    case LexOrder::Equal: return "equal";
    case LexOrder::Incomparable: return "incomparable";
  }
  return "?";
}

LexOrder compare_lex_spans(std::span<const Letter> u, std::span<const Letter> v) {
  size_t common = std::min(u.size(), v.size());
  for (size_t i = 0; i < common; i++) {
    if (u[i] < v[i]) return LexOrder::Less;
    if (u[i] > v[i]) return LexOrder::Greater;
  }
  if (u.size() == v.size()) return LexOrder::Equal;
  return LexOrder::Incomparable;
}

LexOrder compare_lex(const Word& u, const Word& v) {
  detail::require_same_alphabet(u, v);
  return compare_lex_spans(u.letters(), v.letters());
}

std::strong_ordering total_compare_spans(std::span<const Letter> u, std::span<const Letter> v) {
  size_t common = std::min(u.size(), v.size());
  for (size_t i = 0; i < common; i++) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return u.size() <=> v.size();
}

std::strong_ordering total_compare(const Word& u, const Word& v) {
  detail::require_same_alphabet(u, v);
  return total_compare_spans(u.letters(), v.letters());
}

TailRef::TailRef(const Word& w, int start_pos, std::optional<int> k)
    : word(&w), start(start_pos), trunc(k) {
  if (start < 0 || start >= w.size()) throw UsageError("tail start out of range");
  if (trunc && (*trunc < 0 || start + *trunc > w.size()))
    throw UsageError("tail truncation out of range");
}

int TailRef::length() const { return trunc ? *trunc : word->size() - start; }

std::span<const Letter> TailRef::view() const {
  return word->letters().subspan(static_cast<size_t>(start), static_cast<size_t>(length()));
}

Word TailRef::materialize() const { return word->subword(start, length()); }

LexOrder compare_lex(const TailRef& u, const TailRef& v) {
  detail::require_same_alphabet(*u.word, *v.word);
  return compare_lex_spans(u.view(), v.view());
}

namespace {

// Prefix-doubling suffix ranking.  `prefix_smaller` picks the sentinel side:
// true ranks a proper prefix below its extension, false above.
std::vector<int> rank_suffixes(std::span<const Letter> s, bool prefix_smaller) {
  int n = static_cast<int>(s.size());
  std::vector<int> rank(n), order(n), next(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return s[a] < s[b]; });
  rank[order[0]] = 0;
  for (int i = 1; i < n; i++)
    rank[order[i]] = rank[order[i - 1]] + (s[order[i]] != s[order[i - 1]] ? 1 : 0);

  const int sentinel = prefix_smaller ? -1 : n + 1;
  for (int k = 1; k < n; k *= 2) {
    auto key = [&](int i) {
      return std::pair<int, int>(rank[i], i + k < n ? rank[i + k] : sentinel);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    next[order[0]] = 0;
    for (int i = 1; i < n; i++)
      next[order[i]] = next[order[i - 1]] + (key(order[i]) != key(order[i - 1]) ? 1 : 0);
    rank = next;
    if (rank[order[n - 1]] == n - 1) break;
  }
  return rank;
}

}  // namespace

std::vector<int> suffix_ranks(const Word& w) {
  if (w.empty()) throw UsageError("suffix_ranks of the empty word");
  return rank_suffixes(w.letters(), true);
}

std::vector<int> suffix_ranks_prefix_last(const Word& w) {
  if (w.empty()) throw UsageError("suffix_ranks of the empty word");
  return rank_suffixes(w.letters(), false);
}

int primitive_period(const Word& u) {
  if (u.empty()) throw UsageError("period of the empty word");
  int n = u.size();
  for (int p = 1; p < n; p++) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; i++) ok = u[i] == u[i - p];
    if (ok) return p;
  }
  return n;
}

bool is_noncyclic(const Word& u) { return primitive_period(u) == u.size(); }

WordCycle cyclic_shifts(const Word& u) {
  if (u.empty()) throw UsageError("cyclic shifts of the empty word");
  int p = primitive_period(u);
  WordCycle cycle{u, {}};
  cycle.shifts.reserve(static_cast<size_t>(p));
  for (int j = 0; j < p; j++) cycle.shifts.push_back(u.rotated_left(j));
  return cycle;
}

const Word& WordCycle::shift(int i) const {
  if (i < 1) throw UsageError("shift index is 1-based");
  return shifts[static_cast<size_t>((i - 1) % size())];
}

bool same_word_cycle(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (int j = 0; j < a.size(); j++)
    if (a.rotated_left(j) == b) return true;
  return false;
}

namespace detail {
void require_same_alphabet(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) throw UsageError("words over different alphabets");
}
}  // namespace detail

}  // namespace shirshov

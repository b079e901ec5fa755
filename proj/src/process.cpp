#include "shirshov/process.hpp"

#include <algorithm>
#include <string>

namespace shirshov {

std::vector<std::string> ProcessSequence::words() const {
  std::vector<std::string> out;
  out.reserve(bits.size());
  for (int b : bits) {
    std::string word(static_cast<size_t>(k - 1), '0');
    word[static_cast<size_t>(b - 1)] = '1';
    out.push_back(word);
  }
  return out;
}

bool validate_process(const ProcessSequence& seq) {
  if (seq.p < 2 || seq.k < 2) throw UsageError("need p >= 2 and k >= 2");
  // count[s] = words with bit at s since the last word with a bit left of s.
  std::vector<int> count(static_cast<size_t>(seq.k), 0);
  for (int b : seq.bits) {
    if (b < 1 || b > seq.k - 1) throw UsageError("bit position out of range");
    for (int s = b + 1; s <= seq.k - 1; s++) count[static_cast<size_t>(s)] = 0;
    if (++count[static_cast<size_t>(b)] >= seq.p) return false;
  }
  return true;
}

long long process_bound(int p, int k) {
  if (p < 2 || k < 2) throw UsageError("need p >= 2 and k >= 2");
  long long value = 1;
  for (int i = 0; i < k - 1; i++) {
    if (value > (1LL << 62) / p) throw UsageError("p^{k-1} overflows");
    value *= p;
  }
  return value - 1;
}

namespace {

// Counter states packed in base p; appending bit b increments digit b and
// clears all digits right of b.  Every step strictly increases the packed
// value, so the state graph is acyclic and the longest path is finite.
struct StateSearch {
  int p, k;
  long long states;
  std::vector<int> longest;  // -1 = unvisited

  StateSearch(int p_, int k_, long long states_) : p(p_), k(k_), states(states_) {
    longest.assign(static_cast<size_t>(states), -1);
  }

  long long step(long long state, int b, int& digit) const {
    // digit b is the (b-1)-th from the most significant end
    long long weight = 1;
    for (int i = 0; i < k - 1 - b; i++) weight *= p;
    long long low = state % weight;  // digits right of b
    digit = (state / weight) % p;
    return state - low + weight;
  }

  int solve(long long state) {
    int& memo = longest[static_cast<size_t>(state)];
    if (memo >= 0) return memo;
    memo = 0;
    for (int b = 1; b <= k - 1; b++) {
      int digit = 0;
      long long next = step(state, b, digit);
      if (digit >= p - 1) continue;
      memo = std::max(memo, 1 + solve(next));
    }
    return memo;
  }
};

}  // namespace

ProcessSearchResult max_process_length(int p, int k) {
  long long bound = process_bound(p, k);
  if (bound + 1 > 100000) throw BudgetError("p^{k-1} exceeds the search budget");

  StateSearch search(p, k, bound + 1);
  ProcessSearchResult result;
  result.length = search.solve(0);
  result.witness.p = p;
  result.witness.k = k;

  long long state = 0;
  for (int remaining = result.length; remaining > 0; remaining--) {
    for (int b = 1; b <= k - 1; b++) {
      int digit = 0;
      long long next = search.step(state, b, digit);
      if (digit >= p - 1) continue;
      if (search.solve(next) != remaining - 1) continue;
      result.witness.bits.push_back(b);
      state = next;
      break;
    }
  }
  return result;
}

}  // namespace shirshov

#pragma once

#include <vector>

#include "shirshov/errors.hpp"

namespace shirshov {

// A sequence of one-hot words of length k-1.  bits[i] is the 1-based
// position of the single "1" in the i-th word; positions are numbered left
// to right.
struct ProcessSequence {
  int p = 2;
  int k = 2;
  std::vector<int> bits;

  std::vector<std::string> words() const;  // "010"-style rendering
};

// True iff no position s collects p words with the bit at s without an
// intervening word whose bit lies strictly left of s.  The empty sequence
// is valid.
bool validate_process(const ProcessSequence& seq);

// p^{k-1} - 1 as an exact integer.
long long process_bound(int p, int k);

struct ProcessSearchResult {
  int length = 0;
  ProcessSequence witness;  // lexicographically least maximal sequence
};

// Exhaustive search for the longest valid sequence, memoized over counter
// states.  Refused when p^{k-1} exceeds 10^5.
ProcessSearchResult max_process_length(int p, int k);

}  // namespace shirshov

#pragma once

#include <vector>

#include "shirshov/word.hpp"

namespace shirshov {

// A periodic stretch x^e of a word, |x| < n and e >= 2n, with x primitive.
struct PeriodicFragment {
  int start = 0;
  Word period;
  int exponent = 0;

  int period_len() const { return period.size(); }
  int length() const { return period.size() * exponent; }
  int end() const { return start + length(); }
};

// Greedy left-to-right selection of disjoint fragments x^{2n} with |x| < n,
// earliest endpoint first, consecutive fragments separated by gaps longer
// than n.  Each selected fragment's exponent is then extended as far as the
// periodicity and the separation to the next fragment allow.  Gap
// comparability (gap word vs. the preceding period) is recorded per gap but
// not enforced.
struct FragmentDecomposition {
  std::vector<PeriodicFragment> fragments;
  std::vector<bool> gap_comparable;  // one flag per consecutive fragment pair

  int s() const { return static_cast<int>(fragments.size()); }
  // Fragment count when a fragment is additionally required to have a
  // comparable gap to its predecessor (first fragment always counts).
  int s_comparable() const;
};

FragmentDecomposition count_periodic_fragments(const Word& w, int n);

bool validate(const Word& w, int n, const FragmentDecomposition& d);

}  // namespace shirshov

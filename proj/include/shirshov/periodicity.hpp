#pragma once

#include <optional>

#include "shirshov/word.hpp"

namespace shirshov {

// Certificate of a u^e occurrence inside a host word.
struct PowerWitness {
  Word period;   // u, nonempty
  int start;     // offset of the occurrence in the host
  int exponent;  // e >= 2

  int length() const { return period.size() * exponent; }
};

bool validate(const Word& host, const PowerWitness& w);

// Earliest d-th power subword, if any: minimal period length, then minimal
// start; exponent is maximal for that (period, start) pair.
std::optional<PowerWitness> find_power(const Word& w, int d);

// Maximal run of period p starting at `start`: largest len <= |w|-start such
// that w[start..start+len) has period p.
int periodic_run(const Word& w, int start, int p);

// Either the first floor(|w|/d) tails are pairwise comparable, or a period
// repeated at least d times exists; when comparability fails the returned
// witness is derived from the first prefix-related tail pair, whose shift
// distance necessarily extends to the end of the word.
struct ComparableOrPower {
  bool comparable;
  std::optional<PowerWitness> power;
};

ComparableOrPower check_leading_tails(const Word& w, int d);

// A word of length k*t is an exact t-th power of its length-k prefix iff the
// witness is present.  The number of distinct length-k factors is surfaced;
// an exact power has at most k of them, but the converse fails (e.g. "aaab"
// with k=2 has two distinct factors and is no square), so only the exact
// full cover is certified.
struct FactorBudgetPower {
  int distinct_factors;
  std::optional<PowerWitness> witness;  // covers the whole word: |period| = k, exponent = t
};

FactorBudgetPower check_factor_budget_power(const Word& v, int k, int t);

}  // namespace shirshov

#pragma once

#include <optional>
#include <vector>

#include "shirshov/periodicity.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

// W = v u_1 ... u_n with contiguous blocks in strictly decreasing
// lexicographic order (prefix pairs do not count as decreasing).
// boundaries = (b_0, ..., b_n) with v = W[0..b_0) and u_i = W[b_{i-1}..b_i),
// b_n = |W|.
struct OrdinaryDivision {
  std::vector<int> boundaries;

  int blocks() const { return static_cast<int>(boundaries.size()) - 1; }
  int prefix_len() const { return boundaries.empty() ? 0 : boundaries.front(); }
};

bool validate(const Word& w, const OrdinaryDivision& division);

// Start positions p_1 < ... < p_n of full tails in strictly decreasing
// lexicographic order.
struct TailDivision {
  std::vector<int> positions;

  int blocks() const { return static_cast<int>(positions.size()); }
};

bool validate(const Word& w, const TailDivision& division);

struct OrdinaryDivisibility {
  int n_max;
  OrdinaryDivision witness;
};

// Largest n admitting an ordinary division, with the witness whose boundary
// vector is lexicographically earliest.  O(L^3) dynamic program.
OrdinaryDivisibility max_ordinary_divisibility(const Word& w);

struct TailDivisibility {
  int m;
  TailDivision witness;
};

// Largest m admitting a tail division, with the earliest position vector.
TailDivisibility max_tail_divisibility(const Word& w);

// Patience-sorting fast path over suffix ranks; length only.
int max_tail_divisibility_length(const Word& w);

enum class CancelKind { Divisible, Power, No };

struct CancellabilityVerdict {
  CancelKind kind = CancelKind::No;
  std::optional<OrdinaryDivision> division;
  std::optional<PowerWitness> power;
};

const char* to_string(CancelKind k);

// Ordinary n-divisibility (witness trimmed to exactly n blocks) or a d-th
// power subword.
CancellabilityVerdict is_n_cancellable(const Word& w, int n, int d);

enum class CheckStatus { Vacuous, Confirmed, Counterexample };

const char* to_string(CheckStatus s);

struct CancellationCheck {
  CheckStatus status;
  int tail_divisibility;
  CancellabilityVerdict verdict;
};

// 4nd-divisible (tail sense) words must be n-cancellable; Counterexample
// must never occur and fails the suite.
CancellationCheck check_divisibility_cancellation(const Word& w, int n, int d);

// Proof construction for a word holding n identical disjoint copies of u
// with |u| = n*d: rank the tails of u at its first n letters and pick the
// i-th largest inside the i-th copy, or derive a power witness when two of
// those tails are prefix-related.  Occurrences of u are taken greedily left
// to right; fewer than n of them is a precondition error.
CancellabilityVerdict division_from_copies(const Word& w, const Word& u, int n, int d);

}  // namespace shirshov

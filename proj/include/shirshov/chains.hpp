#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/divisibility.hpp"
#include "shirshov/fragments.hpp"
#include "shirshov/poset.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

inline int chain_budget(int n, int d) { return 4 * n * d - 1; }

// Number of tails in the restricted set: tails starting in the first
// floor(|w|/d) positions.
int omega_size(const Word& w, int d);

// Partial order on the restricted tails: u < v iff u precedes v
// lexicographically (comparable) and starts strictly to the left.
// Prefix-related pairs are unrelated.
Poset build_tail_poset(const Word& w, int d);

// Greedy patience cover for the tail poset: each tail joins the first chain
// whose last tail precedes it.  Exactly minimal for this two-dimensional
// order; cross-checked against the matching cover in tests.
ChainCover greedy_tail_chain_cover(const Word& w, int d);

// Raised when a chain cover needs more colors than the 4nd-1 budget: the
// word is either (4nd)-tail-divisible or contains a d-th power (prefix
// pairs among restricted tails force one).
struct WidthFinding {
  int width;
  int tail_divisibility;
  std::optional<PowerWitness> power;
};

// The color evolution record: for each restricted tail position i (1-based),
// a tuple with one entry per chain color holding the p-tail at the last
// position of that color at or before i, or theta when the color has not
// appeared yet.  Entries are stored as start positions, -1 for theta.
struct BSetTrace {
  Word word;
  int n = 0, d = 0, p_level = 0;
  int colors = 0;     // chains actually used
  int tuple_len = 0;  // max(4nd-1, colors)
  std::vector<int> color;                  // per restricted tail position
  std::vector<std::vector<int>> entries;   // [i][j] = tail start or -1
  std::optional<WidthFinding> finding;

  int omega() const { return static_cast<int>(entries.size()); }
  Word entry_word(int i, int j) const;  // truncated p-tail, empty for theta
  bool tuples_equal(int i, int j) const;
  bool tuples_equal_at(int i, int j, int p) const;  // compare at another level
};

BSetTrace b_set_trace(const Word& w, int n, int d, int p_level);

// Longest run of equal consecutive tuples.
int psi_measure(const BSetTrace& trace);

// psi at levels 1..max_p; nonincreasing in the level.
std::vector<int> psi_profile(const Word& w, int n, int d, int max_p);

// psi(a) <= (4nd-1)^k psi(ka) + ka.  The inequality is guaranteed only for
// words meeting the construction's hypotheses (not n-cancellable), so the
// result carries that flag and violations are findings, not errors.
struct PsiRecursionCheck {
  long long lhs = 0;
  long long rhs = 0;  // saturated at LLONG_MAX
  bool satisfied = false;
  bool hypotheses_met = false;
};

PsiRecursionCheck check_psi_recursion(const Word& w, int n, int d, int a, int k);

// ---- word-cycle side (fragment orders) ----

struct OmegaElement {
  int cycle;  // 0-based index of the word cycle
  int shift;  // 0-based rotation
  Word word;
};

// All shifts of the representative cycles with the order
// a < b iff word(a) < word(b) and cycle(a) < cycle(b).
struct OmegaPrime {
  int shift_len = 0;  // m
  std::vector<WordCycle> cycles;
  std::vector<OmegaElement> elements;  // cycle-major, shift-minor
  Poset order;

  int element_id(int cycle, int shift) const;
};

OmegaPrime build_omega_prime(const std::vector<Word>& representatives, int m);

// Turns an antichain of Omega' into an ordinary division of the host word,
// assuming fragments[i] realizes cycle i in w; members sharing a cycle are
// packed into disjoint period-squared blocks of that fragment in
// lexicographically decreasing order.  When the antichain cannot be realized
// the reason is reported instead.
struct RealizedDivision {
  std::optional<OrdinaryDivision> division;
  std::string reason;
};

RealizedDivision antichain_to_division(const Word& w, const OmegaPrime& omega,
                                       const std::vector<PeriodicFragment>& fragments,
                                       const std::vector<int>& antichain);

// ---- the C-trace and phi ----

using Equivalence = std::function<bool(const Word&, const Word&)>;

struct PhiTrace {
  OmegaPrime omega;
  std::vector<PeriodicFragment> fragments;  // per representative cycle
  int q = 0;           // chain colors used on Omega'
  int alpha = 0;
  std::vector<int> element_color;
  std::vector<bool> element_filtered;       // passes the initial-letters filter
  std::vector<std::vector<int>> entries;    // [cycle i][color j] = element id or -1
  std::optional<WidthFinding> finding;      // cover wider than n-1

  int cycle_count() const { return static_cast<int>(entries.size()); }
  Word entry_word(int i, int j) const;      // alpha-prefix, empty for theta
  bool tuples_equal(int i, int j) const;
};

struct PhiReport {
  PhiTrace trace;
  int phi = 0;
};

// Fragments of period length exactly m are grouped by the equivalence
// predicate (default: same word cycle); one representative per class, in
// host order, feeds Omega'.  The entry filter keeps an element only when
// every letter of its alpha-prefix occurrence starts some Omega' word
// occurrence in w, read literally from the construction.
PhiReport phi_measure(const Word& w, int n, int m, int alpha,
                      const Equivalence& eq = same_word_cycle);

// phi(m) * m <= n - 1.
struct PhiFragmentBoundCheck {
  int phi_m = 0;
  int q = 0;
  int m = 0;
  bool satisfied = false;
  bool applicable = false;  // at least one fragment of period length m
};

PhiFragmentBoundCheck check_phi_fragment_bound(const Word& w, int n, int m,
                                               const Equivalence& eq = same_word_cycle);

// phi(a) <= (n-1)^k phi(ka) for ak <= m.
struct PhiRecursionCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool satisfied = false;
  bool applicable = false;
};

PhiRecursionCheck check_phi_recursion(const Word& w, int n, int m, int a, int k,
                                      const Equivalence& eq = same_word_cycle);

}  // namespace shirshov

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shirshov/fragments.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

struct HeightFactor {
  Word base;     // |base| < n
  int exponent;  // >= 1
};

struct HeightDecomposition {
  std::vector<HeightFactor> factors;

  int height() const { return static_cast<int>(factors.size()); }
  int essential() const;  // factors with exponent >= 2
};

// Fewest factors u^k with |u| < n covering w; among minimal decompositions
// the essential count is minimized, then boundaries are earliest.
HeightDecomposition height_decompose(const Word& w, int n);

bool validate(const Word& w, int n, const HeightDecomposition& decomposition);

// Minimum number of power blocks u^k (|u| < n, k >= 2) over factorizations
// of w into such powers and plain blocks of length < n, where no
// concatenation of two or more consecutive blocks may itself form such a
// power (periodic stretches cannot be hidden by splitting them).
int essential_height(const Word& w, int n);

// ---- the removal algorithm ----

struct RemovalStep {
  Word period;        // x, primitive
  int start_current;  // offset of the removed fragment in the current word
  int exponent;       // 4n + r1 + r2
  int r1 = 0;
  int r2 = 0;
  // Maximal contiguous runs of the fragment inside the original word,
  // as (start, length) pairs; gaps are earlier-removed positions.
  std::vector<std::pair<int, int>> pieces;

  int piece_count() const { return static_cast<int>(pieces.size()); }
};

struct RemovalTrace {
  Word original;
  int n = 0;
  std::vector<RemovalStep> steps;
  Word remainder;
  std::vector<int> removed_at;    // per original position: step (1-based) or 0
  std::vector<int> tedious_type;  // per original position: 1..n, 0 = none
  std::string stop_reason;        // "no-fragment" or "max-steps"

  int step_count() const { return static_cast<int>(steps.size()); }
};

// Repeatedly removes the leftmost x^{4n} occurrence with x non-cyclic
// (smallest period at that start), absorbing neighboring repetitions of x
// on both sides; marks the tail of each left context with tedious types
// 1..n, keeping the lesser type on collisions.
RemovalTrace run_removal(const Word& w, int n, int max_steps);

Word reconstruct(const RemovalTrace& trace);
bool validate(const RemovalTrace& trace);

struct RemovalAccounting {
  int t = 0;
  std::vector<int> s_of_k;   // s_of_k[k] = #steps among the first 4t whose
                             // fragment splits into k pieces; index 0 unused
  int s12 = 0;               // s(1) + s(2)
  long long weighted = 0;    // sum k * s(k)
  bool s12_ok = false;       // s12 >= 2t
  bool weighted_ok = false;  // weighted <= 10t
  // Periodic stretches grown from every other single-or-double-piece
  // fragment, each extended one period beyond its maximal run.
  std::vector<std::pair<int, int>> z_intervals;  // [start, end)
  bool z_disjoint = true;
};

// Requires at least 4t+1 completed steps.
RemovalAccounting removal_accounting(const RemovalTrace& trace, int t);

// Accounting for every t with 4t+1 <= completed steps.
std::vector<RemovalAccounting> removal_accounting_all(const RemovalTrace& trace);

}  // namespace shirshov

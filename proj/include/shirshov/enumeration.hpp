#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shirshov/bounds.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

// Permutations of {1..k} with no strictly decreasing subsequence of length
// n, counted by pruned enumeration.  Refused for k > 11.
long long xi(int k, int n);

struct LatyshevCheck {
  long long xi_value = 0;
  std::string bound;  // (n-1)^{2k} as a decimal string
  bool holds = false;
};

// xi(k, n) <= (n-1)^{2k}.
LatyshevCheck latyshev_check(int k, int n);

enum class Sense { Ordinary, Tail };

const char* to_string(Sense s);

struct SearchParams {
  int l = 2;
  std::optional<int> n;  // divisibility threshold; disabled when absent
  int d = 2;
  Sense sense = Sense::Tail;
  int cap = 64;  // depth bound
  bool fix_first_letter = true;
};

struct SearchResult {
  int max_length = 0;
  Word witness;
  bool exhausted = false;  // the whole tree closed strictly below the cap
  long long nodes_explored = 0;
};

// Saved DFS position: the current word and the next letter to try at each
// depth (one counter per letter already placed, plus one for the root).
struct SearchCheckpoint {
  SearchParams params;
  std::vector<Letter> path;
  std::vector<int> next_letter;
  int best_length = 0;
  std::vector<Letter> best_word;
  bool cap_hit = false;
  long long nodes_explored = 0;
  bool done = false;
};

// Depth-first search over words avoiding any u^d subword and (optionally)
// n-divisibility in the chosen sense; both predicates are closed under
// taking prefixes, so failing nodes close their subtree.  Letters are tried
// in ascending order, making the first maximal witness deterministic.
SearchResult longest_avoider(const SearchParams& params);

// Runs at most node_budget nodes from `start` (or from scratch); the
// returned checkpoint resumes where the search stopped, with done = true
// once the tree is exhausted.
SearchCheckpoint longest_avoider_step(const SearchParams& params,
                                      const std::optional<SearchCheckpoint>& start,
                                      long long node_budget);

SearchResult result_from_checkpoint(const SearchCheckpoint& cp);

struct FinitenessReport {
  SearchResult search;
  BoundValue psi3;
  BoundValue psi2;
  bool within_psi3 = false;  // max_length + 1 <= psi3
  bool within_psi2 = false;
  std::string gap_ratio;  // psi2 / (max_length + 1), decimal, rounded up
};

// Requires the search to be exhausted (BudgetError otherwise); checks the
// empirical maximum against both closed-form evaluations.
FinitenessReport verify_finiteness(int l, int n, int d, Sense sense, int cap,
                                   int precision_bits = kDefaultPrecisionBits);

}  // namespace shirshov

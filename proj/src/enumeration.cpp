#include "shirshov/enumeration.hpp"

#include <algorithm>

#include "shirshov/divisibility.hpp"
#include "shirshov/periodicity.hpp"

namespace shirshov {

namespace {

// Counts permutations by extension, cutting a branch as soon as a length-n
// strictly decreasing subsequence appears (it can never disappear).
struct XiSearch {
  int k, n;
  std::vector<int> prefix;
  std::vector<bool> used;
  std::vector<int> down;  // down[i]: longest decreasing run ending at prefix[i]
  long long count = 0;

  void run(int depth) {
    if (depth == k) {
      count++;
      return;
    }
    for (int value = 1; value <= k; value++) {
      if (used[static_cast<size_t>(value)]) continue;
      int run_len = 1;
      for (size_t i = 0; i < prefix.size(); i++)
        if (prefix[i] > value) run_len = std::max(run_len, down[i] + 1);
      if (run_len >= n) continue;
      used[static_cast<size_t>(value)] = true;
      prefix.push_back(value);
      down.push_back(run_len);
      run(depth + 1);
      prefix.pop_back();
      down.pop_back();
      used[static_cast<size_t>(value)] = false;
    }
  }
};

}  // namespace

long long xi(int k, int n) {
  if (k < 0 || n < 2) throw UsageError("need k >= 0 and n >= 2");
  if (k > 11) throw BudgetError("xi enumeration limited to k <= 11");
  XiSearch search{k, n, {}, std::vector<bool>(static_cast<size_t>(k) + 1, false), {}, 0};
  search.run(0);
  return search.count;
}

LatyshevCheck latyshev_check(int k, int n) {
  LatyshevCheck check;
  check.xi_value = xi(k, n);
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n - 1),
                static_cast<unsigned long>(2 * k));
  check.bound = bound.get_str();
  check.holds = mpz_class(static_cast<long>(check.xi_value)) <= bound;
  return check;
}

const char* to_string(Sense s) { return s == Sense::Ordinary ? "ordinary" : "tail"; }

namespace {

// Any u^d ending at the last letter; earlier powers were caught earlier.
bool has_power_at_end(const std::vector<Letter>& v, int d) {
  const int len = static_cast<int>(v.size());
  for (int p = 1; p * d <= len; p++) {
    bool ok = true;
    for (int i = len - (d - 1) * p; i < len && ok; i++)
      ok = v[static_cast<size_t>(i)] == v[static_cast<size_t>(i - p)];
    if (ok) return true;
  }
  return false;
}

bool divisibility_hit(const Word& w, int n, Sense sense) {
  if (sense == Sense::Tail) return max_tail_divisibility_length(w) >= n;
  return max_ordinary_divisibility(w).n_max >= n;
}

bool node_valid(const std::vector<Letter>& v, const SearchParams& params, Alphabet alphabet) {
  if (has_power_at_end(v, params.d)) return false;
  if (!params.n) return true;
  return !divisibility_hit(Word(v, alphabet), *params.n, params.sense);
}

void validate_params(const SearchParams& params) {
  if (params.l < 1) throw UsageError("need l >= 1");
  if (params.d < 2) throw UsageError("need d >= 2");
  if (params.n && *params.n < 2) throw UsageError("need n >= 2 when enabled");
  if (params.cap < 1) throw UsageError("need cap >= 1");
}

}  // namespace

SearchCheckpoint longest_avoider_step(const SearchParams& params,
                                      const std::optional<SearchCheckpoint>& start,
                                      long long node_budget) {
  validate_params(params);
  const Alphabet alphabet{params.l};

  SearchCheckpoint cp;
  if (start) {
    cp = *start;
    if (cp.done) return cp;
  } else {
    cp.params = params;
    cp.next_letter.assign(1, 0);
  }

  long long nodes_left = node_budget;
  while (!cp.next_letter.empty()) {
    if (nodes_left == 0) return cp;  // paused
    int depth = static_cast<int>(cp.path.size());
    int& next = cp.next_letter.back();
    // Symmetry: relabeling letters preserves both predicates, so the first
    // letter may be pinned to the smallest.
    int limit = (depth == 0 && params.fix_first_letter && params.l > 1) ? 1 : params.l;
    if (next >= limit) {
      cp.next_letter.pop_back();
      if (!cp.path.empty()) cp.path.pop_back();
      continue;
    }
    Letter letter = next++;
    cp.path.push_back(letter);
    cp.nodes_explored++;
    nodes_left--;
    if (node_valid(cp.path, params, alphabet)) {
      if (static_cast<int>(cp.path.size()) > cp.best_length) {
        cp.best_length = static_cast<int>(cp.path.size());
        cp.best_word = cp.path;
      }
      if (static_cast<int>(cp.path.size()) >= params.cap) {
        cp.cap_hit = true;  // frontier stays open at the depth bound
        cp.path.pop_back();
      } else {
        cp.next_letter.push_back(0);
      }
    } else {
      cp.path.pop_back();
    }
  }
  cp.done = true;
  return cp;
}

SearchResult result_from_checkpoint(const SearchCheckpoint& cp) {
  SearchResult result;
  result.max_length = cp.best_length;
  result.witness = Word(cp.best_word, Alphabet{cp.params.l});
  result.exhausted = cp.done && !cp.cap_hit;
  result.nodes_explored = cp.nodes_explored;
  return result;
}

SearchResult longest_avoider(const SearchParams& params) {
  return result_from_checkpoint(longest_avoider_step(params, std::nullopt, -1));
}

FinitenessReport verify_finiteness(int l, int n, int d, Sense sense, int cap,
                                   int precision_bits) {
  SearchParams params;
  params.l = l;
  params.n = n;
  params.d = d;
  params.sense = sense;
  params.cap = cap;

  FinitenessReport report;
  report.search = longest_avoider(params);
  if (!report.search.exhausted)
    throw BudgetError("search not exhausted; cannot verify finiteness");

  report.psi3 = psi_log3(n, d, l, precision_bits);
  report.psi2 = psi_log2(n, d, l, precision_bits);
  mpq_class reached(report.search.max_length + 1);
  report.within_psi3 = reached <= report.psi3.lo;
  report.within_psi2 = reached <= report.psi2.lo;
  report.gap_ratio = directed_decimal(report.psi2.hi / reached, 3, true);
  return report;
}

}  // namespace shirshov

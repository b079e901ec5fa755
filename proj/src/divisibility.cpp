#include "shirshov/divisibility.hpp"

#include <algorithm>
#include <numeric>

namespace shirshov {

namespace {

// Pairwise longest-common-prefix table over suffixes; lcp[i][j] for
// 0 <= i, j <= L with sentinel zeros at L.
std::vector<std::vector<int>> lcp_table(const Word& w) {
  const int n = w.size();
  std::vector<std::vector<int>> lcp(n + 1, std::vector<int>(n + 1, 0));
  for (int i = n - 1; i >= 0; i--)
    for (int j = n - 1; j >= 0; j--)
      lcp[i][j] = w[i] == w[j] ? lcp[i + 1][j + 1] + 1 : 0;
  return lcp;
}

LexOrder compare_blocks(const Word& w, const std::vector<std::vector<int>>& lcp, int a, int alen,
                        int b, int blen) {
  int common = std::min(lcp[a][b], std::min(alen, blen));
  if (common < std::min(alen, blen)) {
    return w[a + common] < w[b + common] ? LexOrder::Less : LexOrder::Greater;
  }
  if (alen == blen) return LexOrder::Equal;
  return LexOrder::Incomparable;
}

}  // namespace

bool validate(const Word& w, const OrdinaryDivision& division) {
  const auto& b = division.boundaries;
  if (b.size() < 2) return false;
  if (b.front() < 0 || b.back() != w.size()) return false;
  for (size_t i = 1; i < b.size(); i++)
    if (b[i] <= b[i - 1]) return false;
  for (size_t i = 1; i + 1 < b.size(); i++) {
    Word u = w.subword(b[i - 1], b[i] - b[i - 1]);
    Word v = w.subword(b[i], b[i + 1] - b[i]);
    if (compare_lex(u, v) != LexOrder::Greater) return false;
  }
  return true;
}

bool validate(const Word& w, const TailDivision& division) {
  const auto& p = division.positions;
  if (p.empty()) return false;
  for (int pos : p)
    if (pos < 0 || pos >= w.size()) return false;
  for (size_t i = 1; i < p.size(); i++) {
    if (p[i] <= p[i - 1]) return false;
    if (compare_lex_spans(w.letters().subspan(p[i - 1]), w.letters().subspan(p[i])) !=
        LexOrder::Greater)
      return false;
  }
  return true;
}

OrdinaryDivisibility max_ordinary_divisibility(const Word& w) {
  if (w.empty()) throw UsageError("divisibility of the empty word");
  const int n = w.size();
  auto lcp = lcp_table(w);

  // chain[s][e] = number of blocks in the longest decreasing chain that
  // starts with block [s,e) and ends exactly at the end of the word;
  // 0 = no such chain.
  std::vector<std::vector<int>> chain(n, std::vector<int>(n + 1, 0));
  for (int s = n - 1; s >= 0; s--) {
    chain[s][n] = 1;
    for (int e = s + 1; e < n; e++) {
      int best = 0;
      for (int e2 = e + 1; e2 <= n; e2++) {
        if (chain[e][e2] == 0) continue;
        if (compare_blocks(w, lcp, e, e2 - e, s, e - s) != LexOrder::Less) continue;
        best = std::max(best, chain[e][e2]);
      }
      chain[s][e] = best == 0 ? 0 : best + 1;
    }
  }

  int n_max = 1;
  for (int s = 0; s < n; s++)
    for (int e = s + 1; e <= n; e++) n_max = std::max(n_max, chain[s][e]);

  OrdinaryDivision witness;
  int remaining = n_max;
  int s = -1, e = -1;
  for (int cand = 0; cand < n && s < 0; cand++)
    for (int end = cand + 1; end <= n; end++)
      if (chain[cand][end] == remaining) {
        s = cand;
        e = end;
        break;
      }
  witness.boundaries.push_back(s);
  witness.boundaries.push_back(e);
  remaining--;
  while (remaining > 0) {
    for (int e2 = e + 1; e2 <= n; e2++) {
      if (chain[e][e2] != remaining) continue;
      if (compare_blocks(w, lcp, e, e2 - e, s, e - s) != LexOrder::Less) continue;
      s = e;
      e = e2;
      break;
    }
    witness.boundaries.push_back(e);
    remaining--;
  }
  return {n_max, witness};
}

namespace {

// len[i] = longest strictly decreasing (under the prefix-last suffix order)
// chain of tails starting at position i.
std::vector<int> tail_chain_lengths(const std::vector<int>& frank) {
  const int n = static_cast<int>(frank.size());
  std::vector<int> len(n, 1);
  for (int i = n - 2; i >= 0; i--)
    for (int j = i + 1; j < n; j++)
      if (frank[j] < frank[i]) len[i] = std::max(len[i], len[j] + 1);
  return len;
}

}  // namespace

TailDivisibility max_tail_divisibility(const Word& w) {
  if (w.empty()) throw UsageError("divisibility of the empty word");
  auto frank = suffix_ranks_prefix_last(w);
  auto len = tail_chain_lengths(frank);
  int m = *std::max_element(len.begin(), len.end());

  TailDivision witness;
  int need = m;
  int prev = -1;
  for (int i = 0; i < w.size() && need > 0; i++) {
    if (len[i] != need) continue;
    if (prev >= 0 && frank[i] >= frank[prev]) continue;
    witness.positions.push_back(i);
    prev = i;
    need--;
  }
  return {m, witness};
}

int max_tail_divisibility_length(const Word& w) {
  if (w.empty()) throw UsageError("divisibility of the empty word");
  auto frank = suffix_ranks_prefix_last(w);
  // Longest strictly decreasing subsequence via patience piles on the
  // reversed sequence.
  std::vector<int> tails;  // tails[k] = smallest ending value of an
                           // increasing subsequence of length k+1
  for (auto it = frank.rbegin(); it != frank.rend(); ++it) {
    auto pos = std::lower_bound(tails.begin(), tails.end(), *it);
    if (pos == tails.end())
      tails.push_back(*it);
    else
      *pos = *it;
  }
  return static_cast<int>(tails.size());
}

const char* to_string(CancelKind k) {
  switch (k) {
    case CancelKind::Divisible: return "divisible";
    case CancelKind::Power: return "power";
    case CancelKind::No: return "no";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Confirmed: return "confirmed";
    case CheckStatus::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

CancellabilityVerdict is_n_cancellable(const Word& w, int n, int d) {
  if (n < 1 || d < 2) throw UsageError("need n >= 1 and d >= 2");
  if (w.empty()) throw UsageError("cancellability of the empty word");
  auto ordinary = max_ordinary_divisibility(w);
  if (ordinary.n_max >= n) {
    OrdinaryDivision trimmed;
    trimmed.boundaries.assign(ordinary.witness.boundaries.begin(),
                              ordinary.witness.boundaries.begin() + n);
    trimmed.boundaries.push_back(w.size());
    return {CancelKind::Divisible, trimmed, std::nullopt};
  }
  if (auto power = find_power(w, d)) return {CancelKind::Power, std::nullopt, power};
  return {CancelKind::No, std::nullopt, std::nullopt};
}

CancellationCheck check_divisibility_cancellation(const Word& w, int n, int d) {
  if (n < 1 || d < 2) throw UsageError("need n >= 1 and d >= 2");
  int tail = max_tail_divisibility(w).m;
  if (tail < 4 * n * d) return {CheckStatus::Vacuous, tail, {}};
  auto verdict = is_n_cancellable(w, n, d);
  return {verdict.kind == CancelKind::No ? CheckStatus::Counterexample : CheckStatus::Confirmed,
          tail, verdict};
}

CancellabilityVerdict division_from_copies(const Word& w, const Word& u, int n, int d) {
  if (n < 1 || d < 1) throw UsageError("need n >= 1 and d >= 1");
  if (u.size() != n * d) throw UsageError("copy length must equal n*d");
  detail::require_same_alphabet(w, u);

  std::vector<int> occurrences;
  for (int i = 0; i + u.size() <= w.size() && static_cast<int>(occurrences.size()) < n;) {
    bool match = true;
    for (int j = 0; j < u.size() && match; j++) match = w[i + j] == u[j];
    if (match) {
      occurrences.push_back(i);
      i += u.size();
    } else {
      i++;
    }
  }
  if (static_cast<int>(occurrences.size()) < n)
    throw UsageError("fewer than n disjoint occurrences of u");

  // Prefix-related tail pair: the shift distance is a period of the whole
  // remaining stretch of u, giving a power witness in w.
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      if (compare_lex_spans(u.letters().subspan(i), u.letters().subspan(j)) !=
          LexOrder::Incomparable)
        continue;
      const int p = j - i;
      const int start = occurrences[0] + i;
      int e = periodic_run(w, start, p) / p;
      if (e >= 2) return {CancelKind::Power, std::nullopt, PowerWitness{w.subword(start, p), start, e}};
      if (auto power = find_power(w, std::max(d, 2)))
        return {CancelKind::Power, std::nullopt, power};
      if (auto power = find_power(w, 2)) return {CancelKind::Power, std::nullopt, power};
      // Reachable only at d = 1, where the power disjunct is vacuous.
      return {CancelKind::No, std::nullopt, std::nullopt};
    }
  }

  // All tails comparable: the i-th largest in the i-th copy, blocks extended
  // to be contiguous.
  std::vector<int> offsets(static_cast<size_t>(n));
  std::iota(offsets.begin(), offsets.end(), 0);
  std::sort(offsets.begin(), offsets.end(), [&](int a, int b) {
    return compare_lex_spans(u.letters().subspan(a), u.letters().subspan(b)) == LexOrder::Greater;
  });

  OrdinaryDivision division;
  division.boundaries.push_back(occurrences[0] + offsets[0]);
  for (int c = 1; c < n; c++) division.boundaries.push_back(occurrences[c] + offsets[c]);
  division.boundaries.push_back(w.size());
  if (validate(w, division)) return {CancelKind::Divisible, division, std::nullopt};
  if (auto power = find_power(w, std::max(d, 2)))
    return {CancelKind::Power, std::nullopt, power};
  return {CancelKind::No, std::nullopt, std::nullopt};
}

}  // namespace shirshov

#include "shirshov/periodicity.hpp"

#include <algorithm>
#include <set>

namespace shirshov {

bool validate(const Word& host, const PowerWitness& w) {
  if (w.period.empty() || w.exponent < 2) return false;
  if (w.start < 0 || w.start + w.length() > host.size()) return false;
  const int p = w.period.size();
  for (int i = 0; i < w.length(); i++)
    if (host[w.start + i] != w.period[i % p]) return false;
  return true;
}

int periodic_run(const Word& w, int start, int p) {
  int len = std::min(p, w.size() - start);
  while (start + len < w.size() && w[start + len] == w[start + len - p]) len++;
  return len;
}

std::optional<PowerWitness> find_power(const Word& w, int d) {
  if (d < 2) throw UsageError("power exponent must be at least 2");
  const int n = w.size();
  for (int p = 1; p * d <= n; p++) {
    // match[i] = length of the common extension of w[i..] and w[i+p..]
    std::vector<int> match(static_cast<size_t>(std::max(0, n - p)) + 1, 0);
    for (int i = n - p - 1; i >= 0; i--)
      match[i] = w[i] == w[i + p] ? (i + p + 1 < n ? match[i + 1] + 1 : 1) : 0;
    for (int start = 0; start + p * d <= n; start++) {
      int e = 1 + match[start] / p;
      if (e >= d) return PowerWitness{w.subword(start, p), start, e};
    }
  }
  return std::nullopt;
}

ComparableOrPower check_leading_tails(const Word& w, int d) {
  if (d < 2) throw UsageError("d must be at least 2");
  if (w.size() < d) throw UsageError("word shorter than d");
  const int omega = w.size() / d;
  for (int i = 0; i < omega; i++) {
    for (int j = i + 1; j < omega; j++) {
      if (compare_lex_spans(w.letters().subspan(i), w.letters().subspan(j)) !=
          LexOrder::Incomparable)
        continue;
      // The shorter tail is a prefix of the longer one, so w[i..] carries
      // period j-i through the end of the word; the run holds at least d
      // repetitions because j < |w|/d.
      const int p = j - i;
      const int e = (w.size() - i) / p;
      PowerWitness witness{w.subword(i, p), i, e};
      return {false, witness};
    }
  }
  return {true, find_power(w, d)};
}

FactorBudgetPower check_factor_budget_power(const Word& v, int k, int t) {
  if (k < 1 || t < 1) throw UsageError("factor length and exponent must be positive");
  if (v.size() != k * t) throw UsageError("word length must equal k*t");
  std::set<std::vector<Letter>> factors;
  for (int i = 0; i + k <= v.size(); i++) {
    auto s = v.letters().subspan(static_cast<size_t>(i), static_cast<size_t>(k));
    factors.emplace(s.begin(), s.end());
  }
  FactorBudgetPower out{static_cast<int>(factors.size()), std::nullopt};
  if (t < 2) return out;
  bool exact = true;
  for (int i = k; i < v.size() && exact; i++) exact = v[i] == v[i - k];
  if (exact) out.witness = PowerWitness{v.subword(0, k), 0, t};
  return out;
}

}  // namespace shirshov

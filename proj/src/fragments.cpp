#include "shirshov/fragments.hpp"

#include <algorithm>

#include "shirshov/periodicity.hpp"

namespace shirshov {

namespace {

// Earliest end of an exact x^{2n} occurrence starting at or after `from`,
// with |x| < n and x primitive; returns {start, period} or period 0.
struct Candidate {
  int start = -1;
  int period = 0;
  int end = -1;
};

Candidate earliest_fragment(const Word& w, int n, int from) {
  Candidate best;
  for (int start = from; start < w.size(); start++) {
    for (int p = 1; p < n; p++) {
      const int len = 2 * n * p;
      if (start + len > w.size()) continue;
      if (best.end >= 0 && start + len >= best.end) continue;
      bool ok = true;
      for (int i = start + p; i < start + len && ok; i++) ok = w[i] == w[i - p];
      if (!ok) continue;
      // Skip non-primitive periods; the primitive divisor is found first.
      bool primitive = true;
      for (int q = 1; q < p && primitive; q++) {
        if (p % q != 0) continue;
        bool rep = true;
        for (int i = start + q; i < start + p && rep; i++) rep = w[i] == w[i - q];
        primitive = !rep;
      }
      if (!primitive) continue;
      if (best.end < 0 || start + len < best.end) best = {start, p, start + len};
    }
    if (best.end >= 0 && start >= best.end) break;
  }
  return best;
}

}  // namespace

FragmentDecomposition count_periodic_fragments(const Word& w, int n) {
  if (n < 2) throw UsageError("need n >= 2");
  FragmentDecomposition out;
  int from = 0;
  while (true) {
    Candidate c = earliest_fragment(w, n, from);
    if (c.period == 0) break;
    out.fragments.push_back(
        PeriodicFragment{c.start, w.subword(c.start, c.period), 2 * n});
    from = c.end + n + 1;  // gaps between fragments must exceed n
  }

  // Extend exponents to the right without touching the next fragment's
  // separation zone.
  for (size_t i = 0; i < out.fragments.size(); i++) {
    auto& f = out.fragments[i];
    int limit = i + 1 < out.fragments.size() ? out.fragments[i + 1].start - n - 1 : w.size();
    int run = periodic_run(w, f.start, f.period_len());
    f.exponent = std::min(run, limit - f.start) / f.period_len();
  }

  for (size_t i = 1; i < out.fragments.size(); i++) {
    const auto& prev = out.fragments[i - 1];
    Word gap = w.subword(prev.end(), out.fragments[i].start - prev.end());
    out.gap_comparable.push_back(compare_lex(gap, prev.period) != LexOrder::Incomparable);
  }
  return out;
}

int FragmentDecomposition::s_comparable() const {
  if (fragments.empty()) return 0;
  int kept = 1;
  for (size_t i = 1; i < fragments.size(); i++)
    if (gap_comparable[i - 1]) kept++;
  return kept;
}

bool validate(const Word& w, int n, const FragmentDecomposition& d) {
  int prev_end = -1;
  for (const auto& f : d.fragments) {
    if (f.period_len() < 1 || f.period_len() >= n) return false;
    if (f.exponent < 2 * n) return false;
    if (f.start < 0 || f.end() > w.size()) return false;
    if (prev_end >= 0 && f.start - prev_end <= n) return false;
    if (!is_noncyclic(f.period)) return false;
    for (int i = 0; i < f.length(); i++)
      if (w[f.start + i] != f.period[i % f.period_len()]) return false;
    prev_end = f.end();
  }
  return d.gap_comparable.size() + 1 == d.fragments.size() || d.fragments.empty();
}

}  // namespace shirshov

#include "shirshov/height.hpp"

#include <algorithm>
#include <climits>

#include "shirshov/periodicity.hpp"

namespace shirshov {

int HeightDecomposition::essential() const {
  int count = 0;
  for (const auto& f : factors) count += f.exponent >= 2 ? 1 : 0;
  return count;
}

bool validate(const Word& w, int n, const HeightDecomposition& decomposition) {
  Word rebuilt({}, w.alphabet());
  for (const auto& f : decomposition.factors) {
    if (f.base.empty() || f.base.size() >= n || f.exponent < 1) return false;
    rebuilt = rebuilt + f.base.repeated(f.exponent);
  }
  return rebuilt == w;
}

namespace {

// Smallest period p < n dividing the block length, or 0.
int short_period(const Word& w, int i, int j, int n) {
  const int len = j - i;
  for (int p = 1; p < n && p <= len; p++) {
    if (len % p != 0) continue;
    bool ok = true;
    for (int t = i + p; t < j && ok; t++) ok = w[t] == w[t - p];
    if (ok) return p;
  }
  return 0;
}

struct Cost {
  int height = INT_MAX / 2;
  int essential = INT_MAX / 2;

  bool operator<(const Cost& other) const {
    return height != other.height ? height < other.height : essential < other.essential;
  }
  Cost plus(int h, int e) const { return Cost{height + h, essential + e}; }
};

}  // namespace

HeightDecomposition height_decompose(const Word& w, int n) {
  if (n < 2) throw UsageError("need n >= 2");
  const int len = w.size();

  // suffix_cost[i] = best (height, essential) for w[i..).
  std::vector<Cost> suffix_cost(static_cast<size_t>(len) + 1);
  suffix_cost[static_cast<size_t>(len)] = Cost{0, 0};
  for (int i = len - 1; i >= 0; i--) {
    Cost best;
    for (int j = i + 1; j <= len; j++) {
      int blen = j - i;
      Cost step;
      if (blen < n) {
        step = suffix_cost[static_cast<size_t>(j)].plus(1, 0);
      } else if (short_period(w, i, j, n) != 0) {
        step = suffix_cost[static_cast<size_t>(j)].plus(1, 1);
      } else {
        continue;
      }
      best = std::min(best, step);
    }
    suffix_cost[static_cast<size_t>(i)] = best;
  }

  HeightDecomposition out;
  int i = 0;
  while (i < len) {
    for (int j = i + 1; j <= len; j++) {
      int blen = j - i;
      int p = blen < n ? blen : short_period(w, i, j, n);
      if (p == 0) continue;
      int h = 1, e = blen < n ? 0 : 1;
      Cost via = suffix_cost[static_cast<size_t>(j)].plus(h, e);
      if (suffix_cost[static_cast<size_t>(i)] < via) continue;
      out.factors.push_back(HeightFactor{w.subword(i, blen < n ? blen : p),
                                         blen < n ? 1 : blen / p});
      i = j;
      break;
    }
  }
  return out;
}

namespace {

// power[i][j]: w[i..j) = u^k with |u| < n and k >= 2.
std::vector<std::vector<bool>> short_power_table(const Word& w, int n) {
  const int len = w.size();
  std::vector<std::vector<bool>> power(static_cast<size_t>(len) + 1,
                                       std::vector<bool>(static_cast<size_t>(len) + 1, false));
  for (int p = 1; p < n; p++) {
    // match[i]: longest stretch from i with period p
    std::vector<int> match(static_cast<size_t>(len) + 1, 0);
    for (int i = len - p - 1; i >= 0; i--)
      match[static_cast<size_t>(i)] =
          w[i] == w[i + p] ? match[static_cast<size_t>(i) + 1] + 1 : 0;
    for (int i = 0; i + 2 * p <= len; i++) {
      int reach = i + p + match[static_cast<size_t>(i)];
      for (int j = i + 2 * p; j <= reach; j += p) power[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    }
  }
  return power;
}

struct EssentialSearch {
  const Word& w;
  int n;
  std::vector<std::vector<bool>> power;
  std::vector<int> cuts;
  int best = INT_MAX;
  long long nodes = 0;

  EssentialSearch(const Word& word, int bases) : w(word), n(bases), power(short_power_table(word, bases)) {}

  void dfs(int pos, int powers) {
    if (++nodes > 200'000'000LL) throw BudgetError("essential height search too large");
    if (powers >= best) return;
    if (pos == w.size()) {
      best = powers;
      return;
    }
    for (int j = pos + 1; j <= w.size(); j++) {
      bool gasket = j - pos < n;
      bool is_power = power[static_cast<size_t>(pos)][static_cast<size_t>(j)];
      if (!gasket && !is_power) continue;
      // No run of two or more blocks may concatenate to a short power; the
      // cut list holds every earlier block start.
      bool hidden = false;
      for (size_t c = 0; c < cuts.size() && !hidden; c++)
        hidden = power[static_cast<size_t>(cuts[c])][static_cast<size_t>(j)];
      if (hidden) continue;
      cuts.push_back(pos);
      dfs(j, powers + (gasket ? 0 : 1));
      cuts.pop_back();
    }
  }
};

}  // namespace

int essential_height(const Word& w, int n) {
  if (n < 2) throw UsageError("need n >= 2");
  if (w.empty()) return 0;
  EssentialSearch search(w, n);
  search.dfs(0, 0);
  return search.best;
}

// ---- removal algorithm ----

namespace {

struct FragmentHit {
  int start = -1;
  int period = 0;
};

// Leftmost start holding x^{4n} for some x; smallest period at that start.
FragmentHit leftmost_removable(const std::vector<Letter>& v, int n) {
  const int len = static_cast<int>(v.size());
  const int need = 4 * n;
  FragmentHit hit;
  for (int p = 1; p * need <= len; p++) {
    std::vector<int> match(static_cast<size_t>(std::max(0, len - p)) + 1, 0);
    for (int i = len - p - 1; i >= 0; i--)
      match[static_cast<size_t>(i)] =
          v[static_cast<size_t>(i)] == v[static_cast<size_t>(i + p)]
              ? match[static_cast<size_t>(i) + 1] + 1
              : 0;
    for (int s = 0; s + p * need <= len; s++) {
      if (hit.start >= 0 && s >= hit.start) break;
      if (1 + match[static_cast<size_t>(s)] / p >= need) {
        hit = {s, p};
        break;
      }
    }
  }
  return hit;
}

}  // namespace

RemovalTrace run_removal(const Word& w, int n, int max_steps) {
  if (n < 2) throw UsageError("need n >= 2");
  if (max_steps < 0) throw UsageError("negative step limit");

  RemovalTrace trace;
  trace.original = w;
  trace.n = n;
  trace.removed_at.assign(static_cast<size_t>(w.size()), 0);
  trace.tedious_type.assign(static_cast<size_t>(w.size()), 0);

  std::vector<Letter> current(w.letters().begin(), w.letters().end());
  std::vector<int> to_original(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); i++) to_original[static_cast<size_t>(i)] = i;

  while (trace.step_count() < max_steps) {
    FragmentHit hit = leftmost_removable(current, n);
    if (hit.start < 0) {
      trace.stop_reason = "no-fragment";
      break;
    }
    const int p = hit.period;
    const int len = static_cast<int>(current.size());

    // Absorb whole copies of x on both sides of the mandatory 4n of them.
    int r1 = 0;
    while (hit.start - (r1 + 1) * p >= 0) {
      bool match = true;
      for (int t = 0; t < p && match; t++)
        match = current[static_cast<size_t>(hit.start - (r1 + 1) * p + t)] ==
                current[static_cast<size_t>(hit.start + t)];
      if (!match) break;
      r1++;
    }
    int run = p;
    while (hit.start + run < len &&
           current[static_cast<size_t>(hit.start + run)] ==
               current[static_cast<size_t>(hit.start + run - p)])
      run++;
    int r2 = run / p - 4 * n;

    RemovalStep step;
    step.period = Word(std::vector<Letter>(current.begin() + hit.start,
                                           current.begin() + hit.start + p),
                       w.alphabet());
    step.r1 = r1;
    step.r2 = r2;
    step.exponent = 4 * n + r1 + r2;
    step.start_current = hit.start - r1 * p;
    const int flen = step.exponent * p;

    const int step_no = trace.step_count() + 1;
    for (int i = 0; i < flen; i++) {
      int orig = to_original[static_cast<size_t>(step.start_current + i)];
      trace.removed_at[static_cast<size_t>(orig)] = step_no;
      if (!step.pieces.empty() &&
          step.pieces.back().first + step.pieces.back().second == orig)
        step.pieces.back().second++;
      else
        step.pieces.emplace_back(orig, 1);
    }
    for (int q = 1; q <= n && step.start_current - q >= 0; q++) {
      int orig = to_original[static_cast<size_t>(step.start_current - q)];
      int& type = trace.tedious_type[static_cast<size_t>(orig)];
      type = type == 0 ? q : std::min(type, q);
    }

    current.erase(current.begin() + step.start_current,
                  current.begin() + step.start_current + flen);
    to_original.erase(to_original.begin() + step.start_current,
                      to_original.begin() + step.start_current + flen);
    trace.steps.push_back(std::move(step));
  }
  if (trace.stop_reason.empty()) trace.stop_reason = "max-steps";
  trace.remainder = Word(std::move(current), w.alphabet());
  return trace;
}

Word reconstruct(const RemovalTrace& trace) {
  std::vector<Letter> letters(static_cast<size_t>(trace.original.size()), -1);
  int cursor = 0;
  for (int i = 0; i < trace.original.size(); i++)
    if (trace.removed_at[static_cast<size_t>(i)] == 0)
      letters[static_cast<size_t>(i)] = trace.remainder[cursor++];
  for (const auto& step : trace.steps) {
    int offset = 0;
    const int p = step.period.size();
    for (auto [start, len] : step.pieces) {
      for (int t = 0; t < len; t++)
        letters[static_cast<size_t>(start + t)] = step.period[(offset + t) % p];
      offset += len;
    }
  }
  return Word(std::move(letters), trace.original.alphabet());
}

bool validate(const RemovalTrace& trace) {
  if (static_cast<int>(trace.removed_at.size()) != trace.original.size()) return false;
  for (const auto& step : trace.steps) {
    if (!is_noncyclic(step.period)) return false;
    if (step.exponent < 4 * trace.n) return false;
    int total = 0;
    for (auto [start, len] : step.pieces) total += len;
    if (total != step.exponent * step.period.size()) return false;
  }
  return reconstruct(trace) == trace.original;
}

RemovalAccounting removal_accounting(const RemovalTrace& trace, int t) {
  if (t < 1) throw UsageError("need t >= 1");
  if (trace.step_count() < 4 * t + 1)
    throw UsageError("trace too short for 4t+1 accounting");

  RemovalAccounting out;
  out.t = t;
  int max_pieces = 0;
  for (int i = 0; i < 4 * t; i++)
    max_pieces = std::max(max_pieces, trace.steps[static_cast<size_t>(i)].piece_count());
  out.s_of_k.assign(static_cast<size_t>(max_pieces) + 1, 0);
  for (int i = 0; i < 4 * t; i++) {
    int k = trace.steps[static_cast<size_t>(i)].piece_count();
    out.s_of_k[static_cast<size_t>(k)]++;
    out.weighted += k;
  }
  out.s12 = out.s_of_k[1] + (max_pieces >= 2 ? out.s_of_k[2] : 0);
  out.s12_ok = out.s12 >= 2 * t;
  out.weighted_ok = out.weighted <= 10LL * t;

  // Every other single-or-double-piece fragment, in host order, grows a
  // periodic stretch: its (longer) piece's maximal run plus one more period.
  struct Chosen {
    int start;
    int period;
  };
  std::vector<Chosen> chosen;
  for (int i = 0; i < 4 * t; i++) {
    const auto& step = trace.steps[static_cast<size_t>(i)];
    if (step.piece_count() > 2) continue;
    auto piece = step.pieces[0];
    if (step.piece_count() == 2 && step.pieces[1].second > piece.second)
      piece = step.pieces[1];
    chosen.push_back({piece.first, step.period.size()});
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Chosen& a, const Chosen& b) { return a.start < b.start; });
  for (size_t j = 0; j < chosen.size(); j += 2) {
    int run = periodic_run(trace.original, chosen[j].start, chosen[j].period);
    int end = std::min(trace.original.size(), chosen[j].start + run + chosen[j].period);
    out.z_intervals.emplace_back(chosen[j].start, end);
  }
  for (size_t j = 1; j < out.z_intervals.size(); j++)
    if (out.z_intervals[j].first < out.z_intervals[j - 1].second) out.z_disjoint = false;
  return out;
}

std::vector<RemovalAccounting> removal_accounting_all(const RemovalTrace& trace) {
  std::vector<RemovalAccounting> out;
  for (int t = 1; 4 * t + 1 <= trace.step_count(); t++)
    out.push_back(removal_accounting(trace, t));
  return out;
}

}  // namespace shirshov

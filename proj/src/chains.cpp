#include "shirshov/chains.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

namespace shirshov {

int omega_size(const Word& w, int d) {
  if (d < 1) throw UsageError("need d >= 1");
  if (w.size() < d) throw UsageError("word shorter than d");
  return w.size() / d;
}

namespace {

// Restricted tail i relates to tail j iff both rank orders agree upward:
// agreement rules out prefix pairs (which the two orders resolve oppositely)
// and leaves exactly the comparable lexicographic verdict.
struct TailOrder {
  std::vector<int> srank;  // prefix sorts first
  std::vector<int> frank;  // prefix sorts last

  explicit TailOrder(const Word& w)
      : srank(suffix_ranks(w)), frank(suffix_ranks_prefix_last(w)) {}

  bool less(int i, int j) const { return srank[i] < srank[j] && frank[i] < frank[j]; }
};

}  // namespace

Poset build_tail_poset(const Word& w, int d) {
  const int omega = omega_size(w, d);
  TailOrder order(w);
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < omega; i++)
    for (int j = i + 1; j < omega; j++)
      if (order.less(i, j)) relations.emplace_back(i, j);
  return Poset(omega, relations);
}

ChainCover greedy_tail_chain_cover(const Word& w, int d) {
  const int omega = omega_size(w, d);
  TailOrder order(w);
  ChainCover cover;
  cover.color.assign(static_cast<size_t>(omega), -1);
  std::vector<int> tops;  // last element of each chain
  for (int i = 0; i < omega; i++) {
    int placed = -1;
    for (size_t c = 0; c < tops.size() && placed < 0; c++) {
      if (order.less(tops[c], i)) {
        tops[c] = i;
        placed = static_cast<int>(c);
      }
    }
    if (placed < 0) {
      tops.push_back(i);
      placed = static_cast<int>(tops.size()) - 1;
    }
    cover.color[static_cast<size_t>(i)] = placed;
  }
  cover.chains = static_cast<int>(tops.size());
  return cover;
}

Word BSetTrace::entry_word(int i, int j) const {
  int f = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  if (f < 0) return Word({}, word.alphabet());
  return word.subword(f, std::min(p_level, word.size() - f));
}

bool BSetTrace::tuples_equal_at(int i, int j, int p) const {
  for (int c = 0; c < tuple_len; c++) {
    int f1 = entries[static_cast<size_t>(i)][static_cast<size_t>(c)];
    int f2 = entries[static_cast<size_t>(j)][static_cast<size_t>(c)];
    if ((f1 < 0) != (f2 < 0)) return false;
    if (f1 < 0 || f1 == f2) continue;
    int len1 = std::min(p, word.size() - f1);
    int len2 = std::min(p, word.size() - f2);
    if (len1 != len2) return false;
    bool equal = true;
    for (int t = 0; t < len1 && equal; t++) equal = word[f1 + t] == word[f2 + t];
    if (!equal) return false;
  }
  return true;
}

bool BSetTrace::tuples_equal(int i, int j) const { return tuples_equal_at(i, j, p_level); }

BSetTrace b_set_trace(const Word& w, int n, int d, int p_level) {
  if (n < 1 || d < 1 || p_level < 1) throw UsageError("need n, d, p >= 1");
  const int omega = omega_size(w, d);
  Poset poset = build_tail_poset(w, d);
  ChainCover cover = chain_cover(poset);

  BSetTrace trace;
  trace.word = w;
  trace.n = n;
  trace.d = d;
  trace.p_level = p_level;
  trace.colors = cover.chains;
  trace.tuple_len = std::max(chain_budget(n, d), cover.chains);
  trace.color = cover.color;
  if (cover.chains > chain_budget(n, d)) {
    trace.finding = WidthFinding{cover.chains, max_tail_divisibility_length(w),
                                 find_power(w, std::max(d, 2))};
  }

  std::vector<int> last(static_cast<size_t>(trace.tuple_len), -1);
  trace.entries.reserve(static_cast<size_t>(omega));
  for (int i = 0; i < omega; i++) {
    last[static_cast<size_t>(cover.color[static_cast<size_t>(i)])] = i;
    trace.entries.push_back(last);
  }
  return trace;
}

int psi_measure(const BSetTrace& trace) {
  if (trace.omega() == 0) throw UsageError("empty trace");
  int best = 1, run = 1;
  for (int i = 1; i < trace.omega(); i++) {
    run = trace.tuples_equal(i - 1, i) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::vector<int> psi_profile(const Word& w, int n, int d, int max_p) {
  BSetTrace trace = b_set_trace(w, n, d, 1);
  std::vector<int> profile;
  for (int p = 1; p <= max_p; p++) {
    int best = 1, run = 1;
    for (int i = 1; i < trace.omega(); i++) {
      run = trace.tuples_equal_at(i - 1, i, p) ? run + 1 : 1;
      best = std::max(best, run);
    }
    profile.push_back(best);
  }
  return profile;
}

namespace {

long long saturating_rhs(long long p, int k, long long psi_ka, long long addend) {
  unsigned __int128 value = 1;
  for (int i = 0; i < k; i++) {
    value *= static_cast<unsigned __int128>(p);
    if (value > static_cast<unsigned __int128>(LLONG_MAX)) return LLONG_MAX;
  }
  value = value * static_cast<unsigned __int128>(psi_ka) + static_cast<unsigned __int128>(addend);
  if (value > static_cast<unsigned __int128>(LLONG_MAX)) return LLONG_MAX;
  return static_cast<long long>(value);
}

}  // namespace

PsiRecursionCheck check_psi_recursion(const Word& w, int n, int d, int a, int k) {
  if (a < 1 || k < 1) throw UsageError("need a, k >= 1");
  auto profile = psi_profile(w, n, d, k * a);
  PsiRecursionCheck check;
  check.lhs = profile[static_cast<size_t>(a - 1)];
  check.rhs = saturating_rhs(chain_budget(n, d), k, profile[static_cast<size_t>(k * a - 1)],
                             static_cast<long long>(k) * a);
  check.satisfied = check.lhs <= check.rhs;
  check.hypotheses_met = d >= 2 && is_n_cancellable(w, n, d).kind == CancelKind::No;
  return check;
}

// ---- word-cycle side ----

int OmegaPrime::element_id(int cycle, int shift) const { return cycle * shift_len + shift; }

OmegaPrime build_omega_prime(const std::vector<Word>& representatives, int m) {
  if (m < 1) throw UsageError("need m >= 1");
  OmegaPrime omega;
  omega.shift_len = m;
  for (const Word& rep : representatives) {
    if (rep.size() != m) throw UsageError("cycle representative of wrong length");
    if (!is_noncyclic(rep)) throw UsageError("cycle representative must be non-cyclic");
    omega.cycles.push_back(cyclic_shifts(rep));
  }
  for (int c = 0; c < static_cast<int>(omega.cycles.size()); c++)
    for (int s = 0; s < m; s++)
      omega.elements.push_back(OmegaElement{c, s, omega.cycles[static_cast<size_t>(c)].shifts[static_cast<size_t>(s)]});

  std::vector<std::pair<int, int>> relations;
  const int count = static_cast<int>(omega.elements.size());
  for (int a = 0; a < count; a++)
    for (int b = 0; b < count; b++) {
      if (omega.elements[static_cast<size_t>(a)].cycle >= omega.elements[static_cast<size_t>(b)].cycle) continue;
      if (total_compare(omega.elements[static_cast<size_t>(a)].word,
                        omega.elements[static_cast<size_t>(b)].word) == std::strong_ordering::less)
        relations.emplace_back(a, b);
    }
  omega.order = Poset(count, relations);
  return omega;
}

namespace {

// Rotation amount t with period.rotated_left(t) == target, or -1.
int rotation_offset(const Word& period, const Word& target) {
  for (int t = 0; t < period.size(); t++)
    if (period.rotated_left(t) == target) return t;
  return -1;
}

}  // namespace

RealizedDivision antichain_to_division(const Word& w, const OmegaPrime& omega,
                                       const std::vector<PeriodicFragment>& fragments,
                                       const std::vector<int>& antichain) {
  if (fragments.size() != omega.cycles.size())
    return {std::nullopt, "need one fragment per cycle"};
  for (size_t c = 0; c < fragments.size(); c++) {
    if (fragments[c].period_len() != omega.shift_len)
      return {std::nullopt, "fragment period length differs from cycle length"};
    if (!same_word_cycle(fragments[c].period, omega.cycles[c].base))
      return {std::nullopt, "fragment period is not in its cycle"};
    if (c > 0 && fragments[c].start < fragments[c - 1].end())
      return {std::nullopt, "fragments out of order"};
  }

  // Group members by cycle, lexicographically decreasing inside a group.
  std::map<int, std::vector<const OmegaElement*>> groups;
  for (int id : antichain) {
    if (id < 0 || id >= static_cast<int>(omega.elements.size()))
      return {std::nullopt, "antichain element out of range"};
    const auto& e = omega.elements[static_cast<size_t>(id)];
    groups[e.cycle].push_back(&e);
  }
  for (auto& [cycle, members] : groups) {
    std::sort(members.begin(), members.end(), [](const OmegaElement* a, const OmegaElement* b) {
      return total_compare(a->word, b->word) == std::strong_ordering::greater;
    });
    if (fragments[static_cast<size_t>(cycle)].exponent < 2 * static_cast<int>(members.size()))
      return {std::nullopt, "fragment exponent too small for its antichain members"};
  }

  std::vector<int> starts;
  const Word* prev_word = nullptr;
  for (const auto& [cycle, members] : groups) {
    const auto& frag = fragments[static_cast<size_t>(cycle)];
    for (size_t r = 0; r < members.size(); r++) {
      int t = rotation_offset(frag.period, members[r]->word);
      if (t < 0) return {std::nullopt, "antichain word not realizable in fragment"};
      int start = frag.start + 2 * static_cast<int>(r) * omega.shift_len + t;
      if (!starts.empty() && start <= starts.back())
        return {std::nullopt, "realized subwords out of order"};
      if (prev_word &&
          compare_lex(*prev_word, members[r]->word) != LexOrder::Greater)
        return {std::nullopt, "realized subwords not strictly decreasing"};
      starts.push_back(start);
      prev_word = &members[r]->word;
    }
  }
  if (starts.empty()) return {std::nullopt, "empty antichain"};

  OrdinaryDivision division;
  division.boundaries = starts;
  division.boundaries.push_back(w.size());
  if (!validate(w, division)) return {std::nullopt, "division failed validation"};
  return {division, ""};
}

// ---- C-trace and phi ----

Word PhiTrace::entry_word(int i, int j) const {
  int id = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  if (id < 0) return Word({}, omega.elements.empty() ? Alphabet{1} : omega.elements[0].word.alphabet());
  return omega.elements[static_cast<size_t>(id)].word.subword(0, alpha);
}

bool PhiTrace::tuples_equal(int i, int j) const {
  for (int c = 0; c < q; c++) {
    int a = entries[static_cast<size_t>(i)][static_cast<size_t>(c)];
    int b = entries[static_cast<size_t>(j)][static_cast<size_t>(c)];
    if ((a < 0) != (b < 0)) return false;
    if (a < 0 || a == b) continue;
    const Word& wa = omega.elements[static_cast<size_t>(a)].word;
    const Word& wb = omega.elements[static_cast<size_t>(b)].word;
    bool equal = true;
    for (int t = 0; t < alpha && equal; t++) equal = wa[t] == wb[t];
    if (!equal) return false;
  }
  return true;
}

PhiReport phi_measure(const Word& w, int n, int m, int alpha, const Equivalence& eq) {
  if (n < 2) throw UsageError("need n >= 2");
  if (m < 1 || m >= n) throw UsageError("need 1 <= m < n");
  if (alpha < 1 || alpha > m) throw UsageError("need 1 <= alpha <= m");

  PhiReport report;
  report.trace.alpha = alpha;

  auto decomposition = count_periodic_fragments(w, n);
  std::vector<PeriodicFragment> with_length_m;
  for (const auto& f : decomposition.fragments)
    if (f.period_len() == m) with_length_m.push_back(f);
  if (with_length_m.empty()) return report;  // empty report

  // One representative fragment per equivalence class, in host order.
  std::vector<PeriodicFragment> reps;
  for (const auto& f : with_length_m) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || eq(f.period, r.period);
    if (!seen) reps.push_back(f);
  }

  std::vector<Word> rep_words;
  for (const auto& r : reps) rep_words.push_back(r.period);
  report.trace.omega = build_omega_prime(rep_words, m);
  report.trace.fragments = reps;
  const auto& omega = report.trace.omega;

  ChainCover cover = chain_cover(omega.order);
  report.trace.q = cover.chains;
  report.trace.element_color = cover.color;
  if (cover.chains > n - 1)
    report.trace.finding =
        WidthFinding{cover.chains, max_tail_divisibility_length(w), std::nullopt};

  // Positions of w where some Omega' word occurs.
  std::set<std::vector<Letter>> element_words;
  for (const auto& e : omega.elements) {
    auto s = e.word.letters();
    element_words.emplace(s.begin(), s.end());
  }
  std::vector<bool> initial(static_cast<size_t>(w.size()), false);
  for (int q = 0; q + m <= w.size(); q++) {
    auto s = w.letters().subspan(static_cast<size_t>(q), static_cast<size_t>(m));
    if (element_words.count(std::vector<Letter>(s.begin(), s.end())))
      initial[static_cast<size_t>(q)] = true;
  }

  // An element passes the filter when every letter of its alpha-prefix
  // occurrence begins some Omega' word.
  const int cycles = static_cast<int>(omega.cycles.size());
  report.trace.element_filtered.assign(omega.elements.size(), false);
  for (size_t id = 0; id < omega.elements.size(); id++) {
    const auto& e = omega.elements[id];
    // The representative fragment starts with the cycle base, so shift s
    // first occurs at offset s.
    int pos = reps[static_cast<size_t>(e.cycle)].start + e.shift;
    bool ok = true;
    for (int off = 0; off < alpha && ok; off++) ok = initial[static_cast<size_t>(pos + off)];
    report.trace.element_filtered[id] = ok;
  }

  std::vector<int> last(static_cast<size_t>(report.trace.q), -1);
  for (int c = 0; c < cycles; c++) {
    for (int s = 0; s < m; s++) {
      int id = omega.element_id(c, s);
      if (!report.trace.element_filtered[static_cast<size_t>(id)]) continue;
      int color = cover.color[static_cast<size_t>(id)];
      // Smallest qualifying shift of the current cycle wins.
      if (last[static_cast<size_t>(color)] < 0 ||
          omega.elements[static_cast<size_t>(last[static_cast<size_t>(color)])].cycle < c)
        last[static_cast<size_t>(color)] = id;
    }
    report.trace.entries.push_back(last);
  }

  int best = 1, run = 1;
  for (int i = 1; i < cycles; i++) {
    run = report.trace.tuples_equal(i - 1, i) ? run + 1 : 1;
    best = std::max(best, run);
  }
  report.phi = best;
  return report;
}

PhiFragmentBoundCheck check_phi_fragment_bound(const Word& w, int n, int m,
                                               const Equivalence& eq) {
  PhiReport report = phi_measure(w, n, m, m, eq);
  PhiFragmentBoundCheck check;
  check.m = m;
  check.applicable = report.trace.cycle_count() > 0;
  if (!check.applicable) return check;
  check.phi_m = report.phi;
  check.q = report.trace.q;
  check.satisfied = static_cast<long long>(check.phi_m) * m <= n - 1;
  return check;
}

PhiRecursionCheck check_phi_recursion(const Word& w, int n, int m, int a, int k,
                                      const Equivalence& eq) {
  if (a < 1 || k < 1) throw UsageError("need a, k >= 1");
  PhiRecursionCheck check;
  if (a * k > m) return check;  // not applicable
  PhiReport at_a = phi_measure(w, n, m, a, eq);
  if (at_a.trace.cycle_count() == 0) return check;
  PhiReport at_ka = phi_measure(w, n, m, a * k, eq);
  check.applicable = true;
  check.lhs = at_a.phi;
  check.rhs = saturating_rhs(n - 1, k, at_ka.phi, 0);
  check.satisfied = check.lhs <= check.rhs;
  return check;
}

}  // namespace shirshov

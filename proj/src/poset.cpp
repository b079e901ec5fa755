#include "shirshov/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace shirshov {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
  if (n < 0) throw UsageError("negative poset size");
  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  rows_.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<int>> direct(static_cast<size_t>(n));
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw UsageError("relation element out of range");
    if (a == b) throw UsageError("strict order cannot be reflexive");
    direct[static_cast<size_t>(a)].push_back(b);
    indeg[static_cast<size_t>(b)]++;
  }

  // Reverse topological order; a leftover node means the relation has a cycle.
  std::vector<int> topo;
  std::queue<int> ready;
  for (int v = 0; v < n; v++)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    topo.push_back(v);
    for (int t : direct[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(t)] == 0) ready.push(t);
  }
  if (static_cast<int>(topo.size()) != n) throw UsageError("relation contains a cycle");

  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    auto& row = rows_[static_cast<size_t>(*it)];
    for (int t : direct[static_cast<size_t>(*it)]) {
      row[static_cast<size_t>(t >> 6)] |= std::uint64_t{1} << (t & 63);
      const auto& sub = rows_[static_cast<size_t>(t)];
      for (size_t w = 0; w < row.size(); w++) row[w] |= sub[w];
    }
  }
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; a++)
    for (int b = 0; b < n_; b++)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

namespace {

// Hopcroft-Karp on the split-node graph: left copy of u joined to right copy
// of v whenever u < v.  A maximum matching pairs each chain element with its
// successor.
struct Matching {
  std::vector<int> next;  // element -> matched successor, -1 = chain tail
  std::vector<int> prev;  // element -> matched predecessor, -1 = chain head
  int size = 0;
};

Matching hopcroft_karp(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      if (p.less(a, b)) adj[static_cast<size_t>(a)].push_back(b);

  Matching m;
  m.next.assign(static_cast<size_t>(n), -1);
  m.prev.assign(static_cast<size_t>(n), -1);
  const int inf = n + 1;
  std::vector<int> dist(static_cast<size_t>(n));

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n; u++) {
      if (m.next[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<size_t>(u)] = inf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)]) {
        int w = m.prev[static_cast<size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<size_t>(w)] == inf) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[static_cast<size_t>(u)]) {
      int w = m.prev[static_cast<size_t>(v)];
      if (w < 0 || (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1 && dfs(w))) {
        m.next[static_cast<size_t>(u)] = v;
        m.prev[static_cast<size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<size_t>(u)] = inf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < n; u++)
      if (m.next[static_cast<size_t>(u)] < 0 && dfs(u)) m.size++;
  }
  return m;
}

void check_budget(const Poset& p) {
  if (p.size() > 10000) throw BudgetError("poset too large for the exact matching path");
}

}  // namespace

std::vector<int> max_antichain(const Poset& p) {
  check_budget(p);
  const int n = p.size();
  Matching m = hopcroft_karp(p);

  // Koenig: alternating reachability from unmatched left copies; the
  // antichain collects elements with left copy reachable and right copy not.
  std::vector<bool> left_seen(static_cast<size_t>(n), false);
  std::vector<bool> right_seen(static_cast<size_t>(n), false);
  std::queue<int> q;
  for (int u = 0; u < n; u++)
    if (m.next[static_cast<size_t>(u)] < 0) {
      left_seen[static_cast<size_t>(u)] = true;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n; v++) {
      if (!p.less(u, v) || right_seen[static_cast<size_t>(v)]) continue;
      right_seen[static_cast<size_t>(v)] = true;
      int w = m.prev[static_cast<size_t>(v)];
      if (w >= 0 && !left_seen[static_cast<size_t>(w)]) {
        left_seen[static_cast<size_t>(w)] = true;
        q.push(w);
      }
    }
  }

  std::vector<int> antichain;
  for (int v = 0; v < n; v++)
    if (left_seen[static_cast<size_t>(v)] && !right_seen[static_cast<size_t>(v)])
      antichain.push_back(v);
  return antichain;
}

ChainCover chain_cover(const Poset& p) {
  check_budget(p);
  const int n = p.size();
  Matching m = hopcroft_karp(p);

  ChainCover cover;
  cover.color.assign(static_cast<size_t>(n), -1);
  std::vector<int> heads;
  for (int v = 0; v < n; v++)
    if (m.prev[static_cast<size_t>(v)] < 0) heads.push_back(v);
  std::sort(heads.begin(), heads.end());
  cover.chains = static_cast<int>(heads.size());
  for (int c = 0; c < cover.chains; c++)
    for (int v = heads[static_cast<size_t>(c)]; v >= 0; v = m.next[static_cast<size_t>(v)])
      cover.color[static_cast<size_t>(v)] = c;
  return cover;
}

bool validate(const Poset& p, const ChainCover& cover) {
  if (static_cast<int>(cover.color.size()) != p.size()) return false;
  for (int v = 0; v < p.size(); v++)
    if (cover.color[static_cast<size_t>(v)] < 0 ||
        cover.color[static_cast<size_t>(v)] >= cover.chains)
      return false;
  for (int a = 0; a < p.size(); a++)
    for (int b = a + 1; b < p.size(); b++)
      if (cover.color[static_cast<size_t>(a)] == cover.color[static_cast<size_t>(b)] &&
          !p.related(a, b))
        return false;
  return true;
}

}  // namespace shirshov

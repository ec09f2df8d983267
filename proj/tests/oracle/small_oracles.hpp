#pragma once

// Brute-force references for the small finite facts: permutation parity of
// reversals, Petersen cycles by vertex bitmasks, and exhaustive search for
// cyclic instances where the greedy walk fails.

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Whether n..1 is an even permutation, by counting inversions.
inline bool reversal_is_even(int n)
{
  std::vector<int> w(n);
  std::iota(w.rbegin(), w.rend(), 1);
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      inv += w[i] > w[j];
  return inv % 2 == 0;
}

/// 3-subsets of {1..5} as bitmasks over bits 1..5.
inline std::vector<unsigned> petersen_masks()
{
  std::vector<unsigned> out;
  for (unsigned m = 0; m < 64; m += 2)
    if (std::popcount(m) == 3)
      out.push_back(m);
  return out;
}

inline bool petersen_adjacent(unsigned a, unsigned b)
{
  return std::popcount(a & b) == 1;
}

/// Edge color: the shared element.
inline int petersen_color(unsigned a, unsigned b)
{
  return std::countr_zero(a & b);
}

/// Unoriented simple k-cycles, each as its set of edges (pairs of masks).
inline std::set<std::set<std::pair<unsigned, unsigned>>> petersen_cycles(int k)
{
  auto v = petersen_masks();
  std::set<std::set<std::pair<unsigned, unsigned>>> out;
  std::vector<unsigned> path;
  auto extend = [&](auto &self) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (!petersen_adjacent(path.back(), path.front()))
        return;
      std::set<std::pair<unsigned, unsigned>> edges;
      for (int i = 0; i < k; ++i) {
        auto a = path[i], b = path[(i + 1) % k];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
      out.insert(edges);
      return;
    }
    for (auto w : v) {
      if (std::find(path.begin(), path.end(), w) != path.end())
        continue;
      if (!path.empty() && !petersen_adjacent(path.back(), w))
        continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  extend(extend);
  return out;
}

struct CyclicInstance
{
  int m = 0, n = 0;
  std::vector<std::pair<int, int>> theta;
  std::vector<int> omega;
};

/// Edges (i mod m, i mod n) for i < lcm(m, n).
inline std::vector<std::pair<int, int>> cyclic_edges(int m, int n)
{
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < std::lcm(m, n); ++i)
    e.push_back({i % m, i % n});
  return e;
}

/// Faithful and weight-compatible, checked straight from the definitions.
inline bool cyclic_valid(CyclicInstance const &c, std::vector<int> const &pick)
{
  auto edges = cyclic_edges(c.m, c.n);
  int g = std::gcd(c.m, c.n), lambda = c.n / g, mu = c.m / g;
  std::vector<std::set<int>> ya(c.m), xb(c.n);
  std::vector<int> use(c.theta.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = c.theta[pick[e]];
    if (!ya[edges[e].first].insert(a).second || !xb[edges[e].second].insert(b).second)
      return false;
    ++use[pick[e]];
  }
  for (auto const &s : ya)
    if (static_cast<int>(s.size()) != lambda)
      return false;
  for (auto const &s : xb)
    if (static_cast<int>(s.size()) != mu)
      return false;
  return use == c.omega;
}

/// Greedy walk: the k-th pair fills the next omega[k] edges.
inline std::vector<int> cyclic_greedy(CyclicInstance const &c)
{
  std::vector<int> pick;
  for (std::size_t k = 0; k < c.omega.size(); ++k)
    pick.insert(pick.end(), c.omega[k], static_cast<int>(k));
  return pick;
}

/// Exhaustive backtracking over edges; a branch is cut as soon as a star
/// repeats a color or a pair exceeds its weight. `visit` gets every valid
/// coloring (pair index per edge) and returns false to stop.
template <class Visit>
void for_each_valid(CyclicInstance const &c, Visit &&visit)
{
  auto edges = cyclic_edges(c.m, c.n);
  std::vector<int> pick(edges.size(), 0), use(c.theta.size(), 0);
  std::vector<std::vector<int>> ya(c.m), xb(c.n);
  auto go = [&](auto &self, std::size_t e) -> bool {
    if (e == edges.size())
      return !cyclic_valid(c, pick) || visit(pick);
    for (std::size_t t = 0; t < c.theta.size(); ++t) {
      auto [a, b] = c.theta[t];
      auto &sy = ya[edges[e].first];
      auto &sx = xb[edges[e].second];
      if (use[t] == c.omega[t] || std::find(sy.begin(), sy.end(), a) != sy.end() ||
          std::find(sx.begin(), sx.end(), b) != sx.end())
        continue;
      pick[e] = static_cast<int>(t);
      ++use[t];
      sy.push_back(a);
      sx.push_back(b);
      bool more = self(self, e + 1);
      --use[t];
      sy.pop_back();
      sx.pop_back();
      if (!more)
        return false;
    }
    return true;
  };
  go(go, 0);
}

inline bool cyclic_solvable(CyclicInstance const &c)
{
  bool found = false;
  for_each_valid(c, [&](std::vector<int> const &) {
    found = true;
    return false;
  });
  return found;
}

/// First instance, with n <= m <= max_m, at most `max_edges` edges and
/// lambda*mu <= 12, where Theta (sorted, taken from the subsets of the palette
/// product) admits a valid coloring for some omega that the greedy walk
/// misses. With `chains_only`, Theta ranges over componentwise chains.
/// Instances come in order of (m, n, subset bitmask, omega), the last
/// lexicographic.
inline std::optional<CyclicInstance> first_greedy_failure(int max_m, std::size_t max_edges, bool chains_only)
{
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= m; ++n) {
      int g = std::gcd(m, n), lambda = n / g, mu = m / g;
      int E = m / g * n;
      if (static_cast<std::size_t>(E) > max_edges || lambda * mu > 12)
        continue;
      for (unsigned subset = 1; subset < (1u << (lambda * mu)); ++subset) {
        CyclicInstance c{m, n, {}, {}};
        for (int k = 0; k < lambda * mu; ++k)
          if ((subset >> k) & 1)
            c.theta.push_back({k / mu, k % mu});
        auto const T = c.theta.size();
        if (static_cast<int>(T) > E)
          continue;
        bool chain = true;
        for (std::size_t i = 0; i + 1 < T; ++i)
          chain = chain && c.theta[i].second <= c.theta[i + 1].second;
        if (chains_only && !chain)
          continue;
        c.omega.assign(T, 1);
        c.omega.back() = E - static_cast<int>(T) + 1;
        while (true) {
          // Every alpha is used m times and every beta n times in any valid
          // coloring; other weights are skipped before the exhaustive test.
          std::vector<int> alpha_use(lambda, 0), beta_use(mu, 0);
          for (std::size_t k = 0; k < T; ++k) {
            alpha_use[c.theta[k].first] += c.omega[k];
            beta_use[c.theta[k].second] += c.omega[k];
          }
          bool marginals = std::all_of(alpha_use.begin(), alpha_use.end(), [&](int u) { return u == m; }) &&
                           std::all_of(beta_use.begin(), beta_use.end(), [&](int u) { return u == n; });
          if (marginals && !cyclic_valid(c, cyclic_greedy(c)) && cyclic_solvable(c))
            return c;
          // Next composition of E into T positive parts, lexicographic.
          std::size_t i = T - 1;
          while (i > 0 && c.omega[i] == 1)
            --i;
          if (i == 0)
            break;
          int rest = c.omega[i] - 1;
          ++c.omega[i - 1];
          for (std::size_t j = i; j < T; ++j)
            c.omega[j] = 1;
          c.omega[T - 1] = rest;
        }
      }
    }
  return std::nullopt;
}

} // namespace oracle

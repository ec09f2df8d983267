#include "bicolor/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bicolor {

namespace {

std::string y_loc(int v) { return "y" + std::to_string(v); }
std::string x_loc(int v) { return "x" + std::to_string(v); }
std::string e_loc(std::size_t e) { return "e" + std::to_string(e); }

void require_total(BiregularGraph const &g, EdgeBicoloring const &coloring)
{
  if (coloring.pairs.size() != g.edges.size())
    throw std::invalid_argument("coloring has " + std::to_string(coloring.pairs.size()) +
                                " pairs for " + std::to_string(g.edges.size()) + " edges");
}

bool is_bijection(std::vector<int> const &perm)
{
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

} // namespace

void BiregularGraph::check_well_formed() const
{
  if (y_count < 0 || x_count < 0)
    throw std::invalid_argument("negative part size");
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto const &e = edges[i];
    if (e.y < 0 || e.y >= y_count || e.x < 0 || e.x >= x_count)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    if (!seen.insert(e).second)
      throw std::invalid_argument("edge " + std::to_string(i) + " duplicates an earlier edge and tag");
  }
}

std::vector<int> BiregularGraph::y_degrees() const
{
  std::vector<int> deg(y_count, 0);
  for (auto const &e : edges)
    ++deg[e.y];
  return deg;
}

std::vector<int> BiregularGraph::x_degrees() const
{
  std::vector<int> deg(x_count, 0);
  for (auto const &e : edges)
    ++deg[e.x];
  return deg;
}

std::vector<std::vector<int>> BiregularGraph::y_stars() const
{
  std::vector<std::vector<int>> stars(y_count);
  for (std::size_t i = 0; i < edges.size(); ++i)
    stars[edges[i].y].push_back(static_cast<int>(i));
  return stars;
}

std::vector<std::vector<int>> BiregularGraph::x_stars() const
{
  std::vector<std::vector<int>> stars(x_count);
  for (std::size_t i = 0; i < edges.size(); ++i)
    stars[edges[i].x].push_back(static_cast<int>(i));
  return stars;
}

std::string to_string(ColorPair p)
{
  return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")";
}

std::optional<int> ColorPairSystem::weight(ColorPair p) const
{
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (theta[i] == p)
      return i < omega.size() ? std::optional<int>(omega[i]) : std::nullopt;
  return std::nullopt;
}

long ColorPairSystem::total_weight() const
{
  return std::accumulate(omega.begin(), omega.end(), 0L);
}

SymbolPermutationPair SymbolPermutationPair::identity(int lambda, int mu)
{
  SymbolPermutationPair perms;
  perms.perm_alpha.resize(lambda);
  perms.perm_beta.resize(mu);
  std::iota(perms.perm_alpha.begin(), perms.perm_alpha.end(), 0);
  std::iota(perms.perm_beta.begin(), perms.perm_beta.end(), 0);
  return perms;
}

void SymbolPermutationPair::check_bijective() const
{
  if (!is_bijection(perm_alpha))
    throw std::invalid_argument("alpha permutation is not a bijection");
  if (!is_bijection(perm_beta))
    throw std::invalid_argument("beta permutation is not a bijection");
}

ColorPair SymbolPermutationPair::operator()(ColorPair p) const
{
  if (p.alpha < 0 || static_cast<std::size_t>(p.alpha) >= perm_alpha.size() ||
      p.beta < 0 || static_cast<std::size_t>(p.beta) >= perm_beta.size())
    throw std::invalid_argument("pair " + to_string(p) + " outside the permutation palettes");
  return {perm_alpha[p.alpha], perm_beta[p.beta]};
}

void ValidationReport::add(std::string kind, std::string location, std::string message)
{
  violations.push_back({std::move(kind), std::move(location), std::move(message)});
}

void ValidationReport::merge(ValidationReport const &other)
{
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool ValidationReport::has_kind(std::string_view kind) const
{
  return count_kind(kind) > 0;
}

std::size_t ValidationReport::count_kind(std::string_view kind) const
{
  return std::count_if(violations.begin(), violations.end(),
                       [&](Violation const &v) { return v.kind == kind; });
}

ValidationReport validate_system(ColorPairSystem const &system, std::optional<std::size_t> edge_count)
{
  ValidationReport report;
  if (system.lambda < 1 || system.mu < 1)
    report.add("palette", "system", "palette sizes must be positive");
  if (system.theta.empty())
    report.add("theta", "system", "theta is empty");
  if (system.theta.size() != system.omega.size())
    report.add("omega", "system", "theta and omega differ in length");
  std::set<ColorPair> seen;
  for (std::size_t i = 0; i < system.theta.size(); ++i) {
    auto p = system.theta[i];
    if (p.alpha < 0 || p.alpha >= system.lambda || p.beta < 0 || p.beta >= system.mu)
      report.add("theta", to_string(p), "pair outside I_0^lambda x I_0^mu");
    if (!seen.insert(p).second)
      report.add("theta", to_string(p), "pair repeated");
    if (i < system.omega.size() && system.omega[i] < 1)
      report.add("omega", to_string(p), "weight must be at least 1");
  }
  if (edge_count && system.total_weight() != static_cast<long>(*edge_count))
    report.add("omega", "system",
               "weights sum to " + std::to_string(system.total_weight()) + ", graph has " +
                 std::to_string(*edge_count) + " edges");
  return report;
}

ValidationReport validate_biregular(BiregularGraph const &g)
{
  g.check_well_formed();
  ValidationReport report;
  auto ydeg = g.y_degrees();
  auto xdeg = g.x_degrees();
  for (int v = 0; v < g.y_count; ++v)
    if (ydeg[v] != g.lambda)
      report.add("degree", y_loc(v),
                 "degree " + std::to_string(ydeg[v]) + ", expected " + std::to_string(g.lambda));
  for (int v = 0; v < g.x_count; ++v)
    if (xdeg[v] != g.mu)
      report.add("degree", x_loc(v),
                 "degree " + std::to_string(xdeg[v]) + ", expected " + std::to_string(g.mu));
  return report;
}

bool is_increasing(std::span<ColorPair const> theta)
{
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (std::size_t j = i + 1; j < theta.size(); ++j) {
      auto p = theta[i], q = theta[j];
      bool p_below = p.alpha <= q.alpha && p.beta <= q.beta;
      bool q_below = q.alpha <= p.alpha && q.beta <= p.beta;
      if (!p_below && !q_below)
        return false;
    }
  return true;
}

ValidationReport check_proper(BiregularGraph const &g, EdgeBicoloring const &coloring)
{
  g.check_well_formed();
  require_total(g, coloring);
  ValidationReport report;
  for (std::size_t i = 0; i < coloring.pairs.size(); ++i) {
    auto p = coloring.pairs[i];
    if (p.alpha < 0 || p.alpha >= g.lambda || p.beta < 0 || p.beta >= g.mu)
      report.add("range", e_loc(i), "pair " + to_string(p) + " outside the palettes");
  }

  auto star_clash = [&](std::vector<std::vector<int>> const &stars, bool alpha_side) {
    for (std::size_t v = 0; v < stars.size(); ++v) {
      std::set<int> seen;
      std::set<int> reported;
      for (int e : stars[v]) {
        int c = alpha_side ? coloring.pairs[e].alpha : coloring.pairs[e].beta;
        if (!seen.insert(c).second && reported.insert(c).second)
          report.add("proper", alpha_side ? y_loc(static_cast<int>(v)) : x_loc(static_cast<int>(v)),
                     std::string(alpha_side ? "alpha " : "beta ") + std::to_string(c) +
                       " repeated on the edge star");
      }
    }
  };
  star_clash(g.y_stars(), true);
  star_clash(g.x_stars(), false);
  return report;
}

ValidationReport check_faithful(BiregularGraph const &g, EdgeBicoloring const &coloring,
                                ColorPairSystem const &system)
{
  ValidationReport report = check_proper(g, coloring);
  for (std::size_t i = 0; i < coloring.pairs.size(); ++i)
    if (!system.contains(coloring.pairs[i]))
      report.add("membership", e_loc(i), "pair " + to_string(coloring.pairs[i]) + " not in theta");

  // Coverage only counts pairs drawn from theta.
  auto coverage = [&](std::vector<std::vector<int>> const &stars, int palette, bool alpha_side) {
    for (std::size_t v = 0; v < stars.size(); ++v) {
      std::vector<bool> present(palette, false);
      for (int e : stars[v]) {
        auto p = coloring.pairs[e];
        int c = alpha_side ? p.alpha : p.beta;
        if (system.contains(p) && c >= 0 && c < palette)
          present[c] = true;
      }
      for (int c = 0; c < palette; ++c)
        if (!present[c])
          report.add("faithful", alpha_side ? y_loc(static_cast<int>(v)) : x_loc(static_cast<int>(v)),
                     std::string(alpha_side ? "alpha " : "beta ") + std::to_string(c) + " missing");
    }
  };
  coverage(g.y_stars(), system.lambda, true);
  coverage(g.x_stars(), system.mu, false);
  return report;
}

ValidationReport check_weight_compatible(EdgeBicoloring const &coloring, ColorPairSystem const &system)
{
  ValidationReport report;
  std::vector<int> counts(system.theta.size(), 0);
  for (std::size_t i = 0; i < coloring.pairs.size(); ++i) {
    auto it = std::find(system.theta.begin(), system.theta.end(), coloring.pairs[i]);
    if (it == system.theta.end())
      report.add("membership", e_loc(i), "pair " + to_string(coloring.pairs[i]) + " not in theta");
    else
      ++counts[it - system.theta.begin()];
  }
  for (std::size_t k = 0; k < system.theta.size(); ++k) {
    int expected = k < system.omega.size() ? system.omega[k] : 0;
    if (counts[k] != expected)
      report.add("weight", to_string(system.theta[k]),
                 "used on " + std::to_string(counts[k]) + " edges, weight " + std::to_string(expected));
  }
  return report;
}

EdgeBicoloring apply_pair_permutation(EdgeBicoloring const &coloring, SymbolPermutationPair const &perms)
{
  perms.check_bijective();
  EdgeBicoloring out;
  out.pairs.reserve(coloring.pairs.size());
  for (auto p : coloring.pairs)
    out.pairs.push_back(perms(p));
  return out;
}

bool is_symmetrically_reversible(BiregularGraph const &g, EdgeBicoloring const &coloring,
                                 ColorPairSystem const &system, SymbolPermutationPair const &perms)
{
  if (perms.perm_alpha.size() != static_cast<std::size_t>(system.lambda) ||
      perms.perm_beta.size() != static_cast<std::size_t>(system.mu))
    throw std::invalid_argument("permutation palettes do not match the system");
  if (!check_faithful(g, coloring, system).ok() || !check_weight_compatible(coloring, system).ok())
    throw std::invalid_argument("coloring is not a faithful weight-compatible bicoloring");
  auto permuted = apply_pair_permutation(coloring, perms);
  return check_faithful(g, permuted, system).ok() && check_weight_compatible(permuted, system).ok();
}

} // namespace bicolor

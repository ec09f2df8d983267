#include "bicolor/petersen.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace bicolor::petersen {

std::string_view to_string(Parity p)
{
  return p == Parity::even ? "EVEN" : "ODD";
}

std::string CycleClass::str() const
{
  std::string s = "(";
  for (int v : canonical)
    s += std::to_string(v);
  return s + ")";
}

std::vector<int> parse_word(std::string_view digits)
{
  std::vector<int> word;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("'" + std::string(digits) + "' is not a digit word");
    word.push_back(c - '0');
  }
  return word;
}

CycleClass canonical_cycle(std::span<int const> word)
{
  if (word.size() < 3)
    throw std::invalid_argument("a cycle needs at least 3 symbols");
  std::set<int> seen;
  for (int v : word) {
    if (v < 1)
      throw std::invalid_argument("cycle symbols are 1-based");
    if (!seen.insert(v).second)
      throw std::invalid_argument("symbol " + std::to_string(v) + " repeated in cycle word");
  }
  return {dihedral_min(word)};
}

CycleClass canonical_cycle(std::string_view digits)
{
  auto word = parse_word(digits);
  return canonical_cycle(std::span<int const>(word));
}

Parity permutation_parity(std::span<int const> word)
{
  auto const n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("word is not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (word[i] > word[j])
        ++inversions;
  return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

Parity cycle_parity(CycleClass const &c)
{
  if (c.length() % 4 != 1)
    throw std::domain_error("permutation parity is not a class invariant for length " +
                            std::to_string(c.length()));
  return permutation_parity(c.canonical);
}

bool reversal_preserves_parity(int n)
{
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("n must be odd and at least 3");
  return ((n - 1) / 2) % 2 == 0;
}

std::string Triple::str() const
{
  return std::to_string(elems[0]) + std::to_string(elems[1]) + std::to_string(elems[2]);
}

Triple make_triple(std::span<int const> elems)
{
  if (elems.size() != 3)
    throw std::invalid_argument("a triple has three elements");
  Triple t;
  std::copy(elems.begin(), elems.end(), t.elems.begin());
  std::sort(t.elems.begin(), t.elems.end());
  if (t.elems[0] == t.elems[1] || t.elems[1] == t.elems[2])
    throw std::invalid_argument("triple elements must be distinct");
  return t;
}

Triple parse_triple(std::string_view digits)
{
  auto word = parse_word(digits);
  return make_triple(word);
}

std::optional<int> ColoredGraph::vertex_index(Triple const &t) const
{
  auto it = std::find(vertices.begin(), vertices.end(), t);
  if (it == vertices.end())
    return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

std::optional<int> ColoredGraph::edge_between(int u, int v) const
{
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].u == u && edges[i].v == v) || (edges[i].u == v && edges[i].v == u))
      return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::vector<int>> ColoredGraph::adjacency() const
{
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto const &e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto &row : adj)
    std::sort(row.begin(), row.end());
  return adj;
}

ColoredGraph build_petersen()
{
  ColoredGraph g;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c)
        g.vertices.push_back(Triple{{a, b, c}});

  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      int common = 0;
      int color = 0;
      for (int s : g.vertices[u].elems)
        if (g.vertices[v].contains(s)) {
          ++common;
          color = s;
        }
      if (common == 1)
        g.edges.push_back({static_cast<int>(u), static_cast<int>(v), color});
    }
  return g;
}

std::vector<VertexCycle> enumerate_graph_cycles(ColoredGraph const &g, int k)
{
  auto const n = static_cast<int>(g.vertices.size());
  if (k < 3 || k > n)
    throw std::invalid_argument("cycle length must lie in [3, |V|]");
  auto adj = g.adjacency();
  std::set<VertexCycle> found;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  // Each cycle is rooted at its smallest vertex.
  auto extend = [&](auto &self) -> void {
    int const root = path.front();
    if (static_cast<int>(path.size()) == k) {
      auto const &back = adj[path.back()];
      if (std::binary_search(back.begin(), back.end(), root))
        found.insert(dihedral_min(std::span<int const>(path)));
      return;
    }
    for (int next : adj[path.back()]) {
      if (next <= root || on_path[next])
        continue;
      on_path[next] = true;
      path.push_back(next);
      self(self);
      path.pop_back();
      on_path[next] = false;
    }
  };

  for (int root = 0; root < n; ++root) {
    path = {root};
    on_path[root] = true;
    extend(extend);
    on_path[root] = false;
  }
  return {found.begin(), found.end()};
}

std::vector<int> color_word(ColoredGraph const &g, std::span<int const> cycle)
{
  std::vector<int> word;
  auto const k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto e = g.edge_between(cycle[i], cycle[(i + 1) % k]);
    if (!e)
      throw std::invalid_argument("consecutive cycle vertices are not adjacent");
    word.push_back(g.edges[*e].color);
  }
  return word;
}

CycleClass induced_color_cycle(ColoredGraph const &g, std::span<int const> cycle)
{
  auto word = color_word(g, cycle);
  auto distinct = [](std::span<int const> w) {
    return std::set<int>(w.begin(), w.end()).size() == w.size();
  };
  if (distinct(word))
    return canonical_cycle(std::span<int const>(word));
  auto const half = word.size() / 2;
  if (word.size() % 2 == 0 && half >= 3 && std::equal(word.begin(), word.begin() + half, word.begin() + half)) {
    std::span<int const> first(word.data(), half);
    if (distinct(first))
      return canonical_cycle(first);
  }
  throw std::invalid_argument("colour word is neither distinct nor a doubled distinct word");
}

VertexCycle resolve_cycle(ColoredGraph const &g, std::span<std::string const> names)
{
  VertexCycle cycle;
  for (auto const &name : names) {
    auto v = g.vertex_index(parse_triple(name));
    if (!v)
      throw std::invalid_argument("unknown vertex " + name);
    cycle.push_back(*v);
  }
  (void)color_word(g, cycle);
  return cycle;
}

ThetaCorrespondence theta_correspondence()
{
  ThetaCorrespondence corr;
  corr.graph = build_petersen();

  for (auto const &c : enumerate_graph_cycles(corr.graph, 5)) {
    auto cls = induced_color_cycle(corr.graph, c);
    if (cls.length() != 5)
      throw std::logic_error("a 5-cycle of O_3 repeats an edge colour");
    if (!corr.theta5.emplace(cls, c).second)
      throw std::logic_error("two 5-cycles of O_3 induce " + cls.str());
  }
  for (auto const &c : enumerate_graph_cycles(corr.graph, 6)) {
    auto cls = induced_color_cycle(corr.graph, c);
    if (cls.length() != 3)
      throw std::logic_error("a 6-cycle of O_3 does not have colour period 3");
    if (!corr.theta3.emplace(cls, c).second)
      throw std::logic_error("two 6-cycles of O_3 induce " + cls.str());
  }
  if (corr.theta5.size() != 12 || corr.theta3.size() != 10)
    throw std::logic_error("induced colour maps are not onto the K5 cycle classes");
  return corr;
}

std::vector<int> cycle_edges(ColoredGraph const &g, std::span<int const> cycle)
{
  std::vector<int> out;
  auto const k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto e = g.edge_between(cycle[i], cycle[(i + 1) % k]);
    if (!e)
      throw std::invalid_argument("consecutive cycle vertices are not adjacent");
    out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> shared_edge(ThetaCorrespondence const &corr, CycleClass const &y, Triple const &x)
{
  auto yi = corr.theta5.find(y);
  auto xi = corr.theta3.find(triple_class(x));
  if (yi == corr.theta5.end() || xi == corr.theta3.end())
    throw std::invalid_argument("class not in the theta correspondence");
  auto ye = cycle_edges(corr.graph, yi->second);
  auto xe = cycle_edges(corr.graph, xi->second);
  std::vector<int> common;
  std::set_intersection(ye.begin(), ye.end(), xe.begin(), xe.end(), std::back_inserter(common));
  if (common.size() >= 2)
    throw std::logic_error(y.str() + " and " + x.str() + " share " + std::to_string(common.size()) +
                           " edges of O_3");
  if (common.empty())
    return std::nullopt;
  return common.front();
}

std::vector<CycleClass> k5_five_cycle_classes()
{
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<CycleClass> classes;
  do
    classes.insert(canonical_cycle(std::span<int const>(perm)));
  while (std::next_permutation(perm.begin(), perm.end()));
  return {classes.begin(), classes.end()};
}

std::vector<Triple> k5_triples()
{
  return build_petersen().vertices;
}

CycleClass triple_class(Triple const &t)
{
  return canonical_cycle(std::span<int const>(t.elems));
}

} // namespace bicolor::petersen

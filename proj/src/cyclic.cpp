#include "bicolor/cyclic.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace bicolor::cyclic {

CyclicParams::CyclicParams(int m, int n)
    : m_(m), n_(n), g_(1)
{
  if (n < 1)
    throw std::invalid_argument("n must be at least 1");
  if (m < n)
    throw std::invalid_argument("m must be at least n");
  g_ = std::gcd(m, n);
}

BiregularGraph build_cyclic_bigraph(CyclicParams const &params)
{
  BiregularGraph g;
  g.y_count = params.m();
  g.x_count = params.n();
  g.lambda = params.lambda();
  g.mu = params.mu();
  g.edges.reserve(params.edge_count());
  for (int i = 0; i < params.edge_count(); ++i)
    g.edges.push_back({i % params.m(), i % params.n(), 0});
  return g;
}

EdgeBicoloring greedy_bicolor(CyclicParams const &params, std::span<ColorPair const> ordered_theta,
                              std::span<int const> omega)
{
  if (ordered_theta.size() != omega.size())
    throw std::invalid_argument("theta and weights differ in length");
  std::set<ColorPair> seen(ordered_theta.begin(), ordered_theta.end());
  if (seen.size() != ordered_theta.size())
    throw std::invalid_argument("theta lists a pair twice");
  long sum = 0;
  for (int w : omega) {
    if (w < 1)
      throw std::invalid_argument("weights must be positive");
    sum += w;
  }
  if (sum != params.edge_count())
    throw std::invalid_argument("weights sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(params.edge_count()));

  EdgeBicoloring coloring;
  coloring.pairs.reserve(params.edge_count());
  for (std::size_t k = 0; k < ordered_theta.size(); ++k)
    coloring.pairs.insert(coloring.pairs.end(), omega[k], ordered_theta[k]);
  return coloring;
}

ColorPairSystem make_system(CyclicParams const &params, std::span<ColorPair const> ordered_theta,
                            std::span<int const> omega)
{
  return {params.lambda(), params.mu(), {ordered_theta.begin(), ordered_theta.end()},
          {omega.begin(), omega.end()}};
}

} // namespace bicolor::cyclic

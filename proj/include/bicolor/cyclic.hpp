#pragma once

#include "bicolor/core.hpp"

#include <span>

namespace bicolor::cyclic {

/// Moduli of the two parts Y = Z_m and X = Z_n.
class CyclicParams
{
public:
  /// Throws std::invalid_argument unless m >= n >= 1.
  CyclicParams(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int gcd() const { return g_; }
  int edge_count() const { return m_ / g_ * n_; }
  int lambda() const { return n_ / g_; }
  int mu() const { return m_ / g_; }

private:
  int m_;
  int n_;
  int g_;
};

/// Edge i joins (i mod m) and (i mod n) for i in [0, mn/gcd).
BiregularGraph build_cyclic_bigraph(CyclicParams const &params);

/// Walks the edges in construction order, giving the next omega[k] edges the
/// pair ordered_theta[k] before moving on to k+1. The result is not checked
/// for faithfulness.
///
/// Throws std::invalid_argument on repeated pairs, on a length mismatch
/// between `ordered_theta` and `omega`, on non-positive weights, or when the
/// weights do not sum to the edge count.
EdgeBicoloring greedy_bicolor(CyclicParams const &params, std::span<ColorPair const> ordered_theta,
                              std::span<int const> omega);

/// The system (lambda, mu, theta, omega) that greedy_bicolor's inputs describe.
ColorPairSystem make_system(CyclicParams const &params, std::span<ColorPair const> ordered_theta,
                            std::span<int const> omega);

} // namespace bicolor::cyclic

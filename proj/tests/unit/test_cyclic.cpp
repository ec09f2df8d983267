#include "bicolor/cyclic.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "small_oracles.hpp"

#include <numeric>
#include <set>

using namespace bicolor;

TEST_SUITE("cyclic")
{
  TEST_CASE("params")
  {
    cyclic::CyclicParams p(9, 6);
    CHECK(p.gcd() == 3);
    CHECK(p.edge_count() == 18);
    CHECK(p.lambda() == 2);
    CHECK(p.mu() == 3);
    CHECK_THROWS_AS(cyclic::CyclicParams(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cyclic::CyclicParams(3, 0), std::invalid_argument);
  }

  TEST_CASE("build_cyclic_bigraph examples")
  {
    auto g = cyclic::build_cyclic_bigraph(cyclic::CyclicParams(9, 6));
    CHECK(g.edges.size() == 18);
    CHECK(g.lambda == 2);
    CHECK(g.mu == 3);

    auto m = cyclic::build_cyclic_bigraph(cyclic::CyclicParams(3, 3));
    CHECK(m.edges.size() == 3);
    CHECK(m.lambda == 1);
    CHECK(m.mu == 1);
    for (auto const &e : m.edges)
      CHECK(e.y == e.x);

    auto small = cyclic::build_cyclic_bigraph(cyclic::CyclicParams(4, 2));
    std::set<std::pair<int, int>> got;
    for (auto const &e : small.edges)
      got.insert({e.y, e.x});
    CHECK(got == std::set<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  }

  TEST_CASE("every cyclic graph is biregular with the closed-form neighbourhoods")
  {
    for (int m = 1; m <= 30; ++m)
      for (int n = 1; n <= m; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        cyclic::CyclicParams p(m, n);
        auto g = cyclic::build_cyclic_bigraph(p);
        REQUIRE(validate_biregular(g).ok());
        auto stars = g.y_stars();
        for (int j = 0; j < m; ++j) {
          std::set<int> got, want;
          for (int e : stars[j])
            got.insert(g.edges[e].x);
          for (int t = 0; t < n / p.gcd(); ++t)
            want.insert((j + t * m) % n);
          CHECK(got == want);
        }
      }
  }

  TEST_CASE("greedy_bicolor reproduces the printed (9,6) coloring")
  {
    cyclic::CyclicParams p(9, 6);
    auto theta = fixtures::nine_six_theta();
    auto omega = fixtures::nine_six_omega();
    auto g = cyclic::build_cyclic_bigraph(p);
    auto col = cyclic::greedy_bicolor(p, theta, omega);
    REQUIRE(col.pairs.size() == 18);
    for (auto const &a : fixtures::nine_six_printed()) {
      CAPTURE(a.y);
      CAPTURE(a.x);
      int hits = 0;
      for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].y == a.y && g.edges[i].x == a.x) {
          ++hits;
          CHECK(col.pairs[i] == a.pair);
        }
      CHECK(hits == 1);
    }
    auto system = cyclic::make_system(p, theta, omega);
    CHECK(check_faithful(g, col, system).ok());
    CHECK(check_weight_compatible(col, system).ok());
  }

  TEST_CASE("greedy_bicolor trivial and malformed inputs")
  {
    cyclic::CyclicParams p(3, 3);
    std::vector<ColorPair> theta = {{0, 0}};
    std::vector<int> omega = {3};
    auto col = cyclic::greedy_bicolor(p, theta, omega);
    for (auto const &pair : col.pairs)
      CHECK(pair == ColorPair{0, 0});
    auto g = cyclic::build_cyclic_bigraph(p);
    CHECK(check_faithful(g, col, cyclic::make_system(p, theta, omega)).ok());

    std::vector<int> short_omega = {2};
    CHECK_THROWS_AS(cyclic::greedy_bicolor(p, theta, short_omega), std::invalid_argument);
    std::vector<ColorPair> twice = {{0, 0}, {0, 0}};
    std::vector<int> split = {1, 2};
    CHECK_THROWS_AS(cyclic::greedy_bicolor(p, twice, split), std::invalid_argument);
    std::vector<int> zero = {0, 3};
    std::vector<ColorPair> two = {{0, 0}, {0, 1}};
    CHECK_THROWS_AS(cyclic::greedy_bicolor(p, two, zero), std::invalid_argument);
  }

  TEST_CASE("greedy output always meets the weights")
  {
    for (int m = 1; m <= 12; ++m)
      for (int n = 1; n <= m; ++n) {
        cyclic::CyclicParams p(m, n);
        std::vector<ColorPair> theta;
        for (int a = 0; a < p.lambda(); ++a)
          theta.push_back({a, 0});
        for (int b = 1; b < p.mu(); ++b)
          theta.push_back({p.lambda() - 1, b});
        if (static_cast<int>(theta.size()) > p.edge_count())
          continue;
        std::vector<int> omega(theta.size(), 1);
        omega.back() = p.edge_count() - static_cast<int>(theta.size()) + 1;
        auto col = cyclic::greedy_bicolor(p, theta, omega);
        CHECK(check_weight_compatible(col, cyclic::make_system(p, theta, omega)).ok());
      }
  }

  TEST_CASE("greedy walk is not always faithful")
  {
    // Frozen output of the exhaustive search: the first solvable instance the
    // greedy walk gets wrong.
    auto found = oracle::first_greedy_failure(12, 24, false);
    REQUIRE(found.has_value());
    CHECK(found->m == 4);
    CHECK(found->n == 3);
    CHECK(found->theta == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
    CHECK(found->omega == std::vector<int>{1, 3, 2, 2, 1, 3});

    cyclic::CyclicParams p(4, 3);
    std::vector<ColorPair> theta;
    for (auto [a, b] : found->theta)
      theta.push_back({a, b});
    auto col = cyclic::greedy_bicolor(p, theta, found->omega);
    auto system = cyclic::make_system(p, theta, found->omega);
    auto g = cyclic::build_cyclic_bigraph(p);
    CHECK(check_weight_compatible(col, system).ok());
    CHECK_FALSE(check_faithful(g, col, system).ok());
    CHECK_FALSE(is_increasing(theta));
  }

  TEST_CASE("on increasing theta the greedy walk finds a coloring whenever one exists")
  {
    CHECK_FALSE(oracle::first_greedy_failure(10, 20, true).has_value());
  }
}

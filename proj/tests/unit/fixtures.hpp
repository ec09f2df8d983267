#pragma once

#include "bicolor/core.hpp"
#include "bicolor/io.hpp"

#include <array>
#include <utility>
#include <vector>

namespace fixtures {

inline std::vector<bicolor::ColorPair> nine_six_theta()
{
  return {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
}

inline std::vector<int> nine_six_omega()
{
  return {6, 3, 3, 6};
}

struct Assignment
{
  int y, x;
  bicolor::ColorPair pair;
};

/// The printed (9,6) coloring, keyed by endpoints.
inline std::vector<Assignment> nine_six_printed()
{
  return {{0, 0, {0, 0}}, {1, 1, {0, 0}}, {2, 2, {0, 0}}, {3, 3, {0, 0}}, {4, 4, {0, 0}}, {5, 5, {0, 0}},
          {6, 0, {0, 1}}, {7, 1, {0, 1}}, {8, 2, {0, 1}}, {0, 3, {1, 1}}, {1, 4, {1, 1}}, {2, 5, {1, 1}},
          {3, 0, {1, 2}}, {6, 3, {1, 2}}, {4, 1, {1, 2}}, {7, 4, {1, 2}}, {5, 2, {1, 2}}, {8, 5, {1, 2}}};
}

inline bicolor::SymbolPermutationPair nine_six_reversal()
{
  return {{1, 0}, {2, 1, 0}};
}

/// Hand-propagated GCC solution: 1a/3b/5c on colors 1/3/5 plus twelve entries.
inline bicolor::io::Json gcc_reference()
{
  return {{"ansatz135", true},
          {"entries",
           {{{"y", "y_0"}, {"x", "x'_2"}, {"w", 2}, {"pair", "4c"}},
            {{"y", "y_0"}, {"x", "x'_4"}, {"w", 4}, {"pair", "2a"}},
            {{"y", "y_1"}, {"x", "x'_3"}, {"w", 2}, {"pair", "2a"}},
            {{"y", "y_1"}, {"x", "x_4"}, {"w", 4}, {"pair", "4c"}},
            {{"y", "y_2"}, {"x", "x'_1"}, {"w", 2}, {"pair", "2b"}},
            {{"y", "y_2"}, {"x", "x_1"}, {"w", 4}, {"pair", "4c"}},
            {{"y", "y_3"}, {"x", "x_5"}, {"w", 2}, {"pair", "2a"}},
            {{"y", "y_3"}, {"x", "x'_5"}, {"w", 4}, {"pair", "4b"}},
            {{"y", "y_4"}, {"x", "x_2"}, {"w", 2}, {"pair", "2a"}},
            {{"y", "y_4"}, {"x", "x'_3"}, {"w", 4}, {"pair", "4c"}},
            {{"y", "y_5"}, {"x", "x_4"}, {"w", 2}, {"pair", "2b"}},
            {{"y", "y_5"}, {"x", "x_2"}, {"w", 4}, {"pair", "4b"}}}}};
}

} // namespace fixtures

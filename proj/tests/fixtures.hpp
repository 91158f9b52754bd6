#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sctk/io.hpp"

namespace fixture {

inline std::string path(const std::string& name) {
  return std::string(SCTK_FIXTURE_DIR) + "/" + name + ".json";
}

inline sctk::SystemDef load(const std::string& name) {
  return sctk::toSystem(sctk::readSystemFile(path(name)), name);
}

// M[A_i]: the rows of the pencil in one block, on the full column ground.
inline sctk::VectorMatroid blockMatroid(const sctk::SystemDef& sys, const std::vector<std::size_t>& rows) {
  return sctk::VectorMatroid(sys.pencil().selectRows(rows));
}

// K12*K23 - K13*K22 of the pendulum, fully reduced.
inline const char* kPendulumWitness =
    "-9*g^2*(z1 + 2*z2 + 2*z3)*(4*z1 + 21*z2 + 12*z3)/(4*z4*z5*(4*z1 + 3*z2 + 12*z3)^2)";

}  // namespace fixture

namespace fixture {

// Seeded random system with n <= max_n states and m <= max_m inputs.
inline sctk::SystemDef randomSystem(oracle::Gen& gen, const sctk::SpacePtr& space,
                                    std::size_t max_n, std::size_t max_m, int index) {
  const auto n = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(max_n)));
  const auto m = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(max_m)));
  return sctk::SystemDef("random" + std::to_string(index), gen.matrix(space, n, n, false),
                         gen.matrix(space, n, m, false));
}

// Consecutive blocks of random sizes covering n rows.
inline sctk::RowPartition randomPartition(oracle::Gen& gen, std::size_t n) {
  std::vector<std::size_t> sizes;
  std::size_t left = n;
  while (left > 0) {
    sizes.push_back(static_cast<std::size_t>(gen.uniform(1, static_cast<int>(left))));
    left -= sizes.back();
  }
  return sctk::RowPartition::consecutive(sizes);
}

}  // namespace fixture

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skymec/model/types.hpp"

namespace skymec::model {

// Deterministic scenario generation: the instance is a pure function of
// (seed, profile). Draw order is fixed per profile and documented in the
// implementation so ports can reproduce instances exactly.
//
// Registered profiles:
//   "paper" — 2 UAVs, 6 stations (one ISD each), 313 s horizon, 1 s slots,
//             1920 tasks. Capacities from the published scenario table;
//             coordinates, values, weights, rate factors, and energy
//             coefficients are artifact defaults.
//   "tiny"  — 1 UAV, 1-2 stations, 1-3 tasks, 24-30 slots. Small enough for
//             exhaustive solving; used by tests and the oracle suite.
Instance generate_scenario(std::uint64_t seed, const std::string& profile);

std::vector<std::string> registered_profiles();

struct Violation {
  std::string where;   // which entity, e.g. "task 17"
  std::string what;    // human-readable description
};

// Checks every type invariant; empty report iff the instance is valid.
// Violations are data, not exceptions.
std::vector<Violation> validate_instance(const Instance& inst);

// Euclidean distance matrix over {depot} + stations.
std::vector<std::vector<double>> euclidean_dist(
    double depot_x, double depot_y, const std::vector<Station>& stations);

}  // namespace skymec::model

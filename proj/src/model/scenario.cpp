#include "skymec/model/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "skymec/rng.hpp"

namespace skymec::model {

std::vector<std::vector<double>> euclidean_dist(
    double depot_x, double depot_y, const std::vector<Station>& stations) {
  const int n = static_cast<int>(stations.size()) + 1;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  auto px = [&](int i) { return i == 0 ? depot_x : stations[i - 1].x; };
  auto py = [&](int i) { return i == 0 ? depot_y : stations[i - 1].y; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d[i][j] = std::hypot(px(i) - px(j), py(i) - py(j));
    }
  }
  return d;
}

namespace {

// Draw order for "paper" (one SplitMix64 stream, seeded with `seed`):
//   1. per station m = 0..5: x, y
//   2. per station m = 0..5: value (uniform int 1..10)
//   3. per station m = 0..5: weight (uniform 5..10)
//   4. per task i = 0..1919: isd, gen_slot, workload, input_bits, deadline
Instance make_paper(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst;
  inst.profile = "paper";
  inst.seed = seed;
  inst.grid = {1.0, 313, 313.0};

  constexpr int n_station = 6;
  constexpr int n_uav = 2;
  constexpr int n_task = 1920;
  // Station square side, meters. Small enough that a balanced 3+3 station
  // split (minimum service 480 s total) plus travel fits the 313 s horizon.
  constexpr double side = 150.0;
  const double min_service[n_station] = {100, 80, 80, 80, 70, 70};

  inst.stations.resize(n_station);
  for (int m = 0; m < n_station; ++m) {
    inst.stations[m].id = m;
    inst.stations[m].x = rng.uniform(-side / 2, side / 2);
    inst.stations[m].y = rng.uniform(-side / 2, side / 2);
    inst.stations[m].min_service = min_service[m];
    inst.stations[m].isds = {m};
  }
  for (int m = 0; m < n_station; ++m) {
    inst.stations[m].value = 1.0 + static_cast<double>(rng.uniform_int(10));
  }
  for (int m = 0; m < n_station; ++m) {
    inst.stations[m].weight = rng.uniform(5.0, 10.0);
  }

  inst.uavs.resize(n_uav);
  for (int u = 0; u < n_uav; ++u) {
    auto& uav = inst.uavs[u];
    uav.id = u;
    uav.speed = 10.0;
    uav.dist_budget = 4800.0;
    uav.payload_cap = 30.0;
    uav.energy_budget = 540000.0;  // 150 Wh
    uav.f_uav = 400.0;
    uav.b_ul = 500e6;
    uav.b_bh = 120e6;
  }

  inst.isds.resize(n_station);
  for (int k = 0; k < n_station; ++k) {
    inst.isds[k] = {k, k, 300.0, 80.0};
  }

  inst.tasks.resize(n_task);
  for (int i = 0; i < n_task; ++i) {
    auto& t = inst.tasks[i];
    t.isd = static_cast<int>(rng.uniform_int(n_station));
    t.gen_slot = static_cast<int>(rng.uniform_int(inst.grid.n_slot));
    t.workload = std::max(1.0, rng.normal(10.0, 2.0));
    t.input_bits = std::max(1e3, rng.normal(1e5, 2e4));
    t.deadline_dur = rng.uniform(20.0, 80.0);
  }

  inst.energy = {80.0, 200.0, 0.5, 1e-6, 1e-6};
  inst.weights = {1.0, 1.0, 1.0, 0.01, 0.1};
  inst.cloud_cap = 400.0;
  inst.dist = euclidean_dist(0.0, 0.0, inst.stations);
  return inst;
}

// Draw order for "tiny": n_station, n_task, n_slot, then per station
// (x, y, value, weight, min_service), then per task
// (isd, gen_slot, workload, input_bits, deadline).
Instance make_tiny(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst;
  inst.profile = "tiny";
  inst.seed = seed;

  const int n_station = 1 + static_cast<int>(rng.uniform_int(2));
  const int n_task = 1 + static_cast<int>(rng.uniform_int(3));
  const int n_slot = 24 + static_cast<int>(rng.uniform_int(7));
  inst.grid = {1.0, n_slot, static_cast<double>(n_slot)};

  inst.stations.resize(n_station);
  for (int m = 0; m < n_station; ++m) {
    auto& s = inst.stations[m];
    s.id = m;
    s.x = rng.uniform(-60.0, 60.0);
    s.y = rng.uniform(-60.0, 60.0);
    s.value = 1.0 + static_cast<double>(rng.uniform_int(10));
    s.weight = rng.uniform(5.0, 10.0);
    s.min_service = 6.0 + static_cast<double>(rng.uniform_int(4));
    s.isds = {m};
  }

  inst.uavs.resize(1);
  inst.uavs[0] = {0, 10.0, 400.0, 30.0, 50000.0, 64.0, 4e4, 2e4};

  inst.isds.resize(n_station);
  for (int k = 0; k < n_station; ++k) {
    inst.isds[k] = {k, k, 16.0, 20.0};
  }

  inst.tasks.resize(n_task);
  for (int i = 0; i < n_task; ++i) {
    auto& t = inst.tasks[i];
    t.isd = static_cast<int>(rng.uniform_int(n_station));
    t.gen_slot = static_cast<int>(rng.uniform_int((2 * n_slot) / 3));
    t.workload = rng.uniform(8.0, 20.0);
    t.input_bits = rng.uniform(1e4, 3e4);
    t.deadline_dur = rng.uniform(8.0, 20.0);
  }

  inst.energy = {80.0, 200.0, 0.5, 1e-6, 1e-6};
  inst.weights = {1.0, 1.0, 1.0, 0.01, 0.1};
  inst.cloud_cap = 64.0;
  inst.dist = euclidean_dist(0.0, 0.0, inst.stations);
  return inst;
}

}  // namespace

Instance generate_scenario(std::uint64_t seed, const std::string& profile) {
  if (profile == "paper") return make_paper(seed);
  if (profile == "tiny") return make_tiny(seed);
  throw std::invalid_argument("unknown scenario profile: " + profile);
}

std::vector<std::string> registered_profiles() { return {"paper", "tiny"}; }

namespace {

void check(std::vector<Violation>& out, bool ok, const std::string& where,
           const std::string& what) {
  if (!ok) out.push_back({where, what});
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const auto& g = inst.grid;
  check(out, g.delta > 0, "grid", "delta must be > 0");
  check(out, g.n_slot >= 1, "grid", "n_slot must be >= 1");
  check(out, std::abs(g.n_slot * g.delta - g.t_mission) <= 1e-9,
        "grid", "n_slot * delta must equal t_mission");

  for (const auto& s : inst.stations) {
    const std::string where = "station " + std::to_string(s.id);
    check(out, s.value >= 0, where, "value must be >= 0");
    check(out, s.weight >= 0, where, "weight must be >= 0");
    check(out, s.min_service >= 0, where, "min_service must be >= 0");
    for (int k : s.isds) {
      check(out, k >= 0 && k < inst.n_isds(), where,
            "isd id " + std::to_string(k) + " out of range");
    }
  }

  for (const auto& u : inst.uavs) {
    const std::string where = "uav " + std::to_string(u.id);
    check(out, u.speed > 0, where, "speed must be > 0");
    check(out, u.dist_budget > 0, where, "dist_budget must be > 0");
    check(out, u.payload_cap > 0, where, "payload_cap must be > 0");
    check(out, u.energy_budget > 0, where, "energy_budget must be > 0");
    check(out, u.f_uav > 0, where, "f_uav must be > 0");
    check(out, u.b_ul > 0, where, "b_ul must be > 0");
    check(out, u.b_bh > 0, where, "b_bh must be > 0");
  }

  for (const auto& k : inst.isds) {
    const std::string where = "isd " + std::to_string(k.id);
    check(out, k.f_loc > 0, where, "f_loc must be > 0");
    check(out, k.deadline_dur > 0, where, "deadline_dur must be > 0");
    check(out, k.station >= 0 && k.station < inst.n_stations(), where,
          "station id out of range");
  }

  for (int i = 0; i < inst.n_tasks(); ++i) {
    const auto& t = inst.tasks[i];
    const std::string where = "task " + std::to_string(i);
    check(out, t.isd >= 0 && t.isd < inst.n_isds(), where,
          "isd id out of range");
    check(out, t.gen_slot >= 0 && t.gen_slot < g.n_slot, where,
          "gen_slot outside the slot grid");
    check(out, t.workload > 0, where, "workload must be > 0");
    check(out, t.input_bits > 0, where, "input_bits must be > 0");
    check(out, t.deadline_dur >= 0, where, "deadline_dur must be >= 0");
  }

  check(out, inst.energy.a_fly >= 0 && inst.energy.a_hov >= 0 &&
                 inst.energy.a_cmp >= 0 && inst.energy.a_ul >= 0 &&
                 inst.energy.a_bh >= 0,
        "energy", "all coefficients must be >= 0");
  check(out, inst.rates.ul_default > 0 && inst.rates.ul_default <= 1.0,
        "rates", "ul_default must be in (0,1]");
  check(out, inst.rates.bh_default > 0 && inst.rates.bh_default <= 1.0,
        "rates", "bh_default must be in (0,1]");
  for (const auto& [key, v] : inst.rates.ul_overrides) {
    check(out, v > 0 && v <= 1.0, "rates", "ul override must be in (0,1]");
    (void)key;
  }
  for (const auto& [key, v] : inst.rates.bh_overrides) {
    check(out, v > 0 && v <= 1.0, "rates", "bh override must be in (0,1]");
    (void)key;
  }
  check(out, inst.weights.w_col >= 0 && inst.weights.w_cmp >= 0 &&
                 inst.weights.w_miss >= 0 && inst.weights.w_flow >= 0 &&
                 inst.weights.w_res >= 0,
        "weights", "all objective weights must be >= 0");
  check(out, inst.cloud_cap > 0, "cloud", "cloud_cap must be > 0");

  const int n_nodes = inst.n_stations() + 1;
  if (static_cast<int>(inst.dist.size()) != n_nodes) {
    out.push_back({"dist", "matrix must be (stations+1) square"});
    return out;
  }
  for (int i = 0; i < n_nodes; ++i) {
    if (static_cast<int>(inst.dist[i].size()) != n_nodes) {
      out.push_back({"dist", "matrix must be (stations+1) square"});
      return out;
    }
  }
  for (int i = 0; i < n_nodes; ++i) {
    check(out, inst.dist[i][i] == 0.0, "dist",
          "nonzero diagonal at (" + std::to_string(i) + ")");
    for (int j = 0; j < n_nodes; ++j) {
      check(out, inst.dist[i][j] >= 0.0, "dist", "negative entry");
      if (std::abs(inst.dist[i][j] - inst.dist[j][i]) > 1e-9) {
        out.push_back({"dist", "distance asymmetry at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")"});
      }
    }
  }
  for (int i = 0; i < n_nodes; ++i) {
    for (int j = 0; j < n_nodes; ++j) {
      for (int k = 0; k < n_nodes; ++k) {
        if (inst.dist[i][j] > inst.dist[i][k] + inst.dist[k][j] + 1e-9) {
          out.push_back({"dist", "triangle inequality violated at (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + "," +
                                     std::to_string(k) + ")"});
        }
      }
    }
  }
  return out;
}

}  // namespace skymec::model

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace skymec::model {

// Discrete time grid of the mission. Slot t covers [t*delta, (t+1)*delta).
struct SlotGrid {
  double delta = 1.0;      // seconds per slot
  int n_slot = 0;          // number of slots
  double t_mission = 0.0;  // mission horizon, seconds
};

struct Station {
  int id = 0;
  double x = 0.0, y = 0.0;     // planar coordinates, meters
  double value = 0.0;          // collection reward
  double weight = 0.0;         // product weight, payload-units
  double min_service = 0.0;    // minimum service duration, seconds
  std::vector<int> isds;       // hosted ISD ids
};

struct UavSpec {
  int id = 0;
  double speed = 0.0;          // m/s
  double dist_budget = 0.0;    // m
  double payload_cap = 0.0;    // payload-units
  double energy_budget = 0.0;  // joules
  double f_uav = 0.0;          // onboard compute, work-units/s
  double b_ul = 0.0;           // uplink limit, bits/s
  double b_bh = 0.0;           // backhaul limit, bits/s
};

struct IsdSpec {
  int id = 0;
  int station = 0;             // hosting station id
  double f_loc = 0.0;          // local compute, work-units/s
  double deadline_dur = 0.0;   // default deadline duration, seconds
};

struct TaskSpec {
  int isd = 0;
  int gen_slot = 0;
  double workload = 0.0;       // work-units
  double input_bits = 0.0;     // bits
  // Per-task deadline duration in seconds. Generated scenarios draw this per
  // task; 0 means "use the ISD default".
  double deadline_dur = 0.0;
};

struct EnergyCoeffs {
  double a_fly = 0.0;  // J/m
  double a_hov = 0.0;  // J/s
  double a_cmp = 0.0;  // J per work-unit
  double a_ul = 0.0;   // J per effective bit
  double a_bh = 0.0;   // J per effective bit
};

// Effective-rate factors in (0, 1]. Stored as defaults plus sparse overrides
// so the common all-ones case serializes compactly.
struct RateFactors {
  double ul_default = 1.0;
  double bh_default = 1.0;
  std::map<std::tuple<int, int, int>, double> ul_overrides;  // (isd, slot, uav)
  std::map<std::pair<int, int>, double> bh_overrides;        // (slot, uav)

  double ul(int isd, int slot, int uav) const {
    auto it = ul_overrides.find({isd, slot, uav});
    return it == ul_overrides.end() ? ul_default : it->second;
  }
  double bh(int slot, int uav) const {
    auto it = bh_overrides.find({slot, uav});
    return it == bh_overrides.end() ? bh_default : it->second;
  }
};

struct ObjectiveWeights {
  double w_col = 1.0;
  double w_cmp = 1.0;
  double w_miss = 1.0;
  double w_flow = 0.01;
  double w_res = 0.1;
};

// Immutable scenario. Node 0 of `dist` is the depot; node m+1 is station m.
struct Instance {
  SlotGrid grid;
  double depot_x = 0.0, depot_y = 0.0;
  std::vector<Station> stations;
  std::vector<UavSpec> uavs;
  std::vector<IsdSpec> isds;
  std::vector<TaskSpec> tasks;
  EnergyCoeffs energy;
  RateFactors rates;
  ObjectiveWeights weights;
  double cloud_cap = 0.0;                  // work-units/s
  std::vector<std::vector<double>> dist;   // (M+1) x (M+1), meters
  std::string profile;                     // generator profile name, if any
  std::uint64_t seed = 0;                  // generator seed, if any

  int n_stations() const { return static_cast<int>(stations.size()); }
  int n_uavs() const { return static_cast<int>(uavs.size()); }
  int n_isds() const { return static_cast<int>(isds.size()); }
  int n_tasks() const { return static_cast<int>(tasks.size()); }

  // Effective deadline duration of a task, seconds.
  double task_deadline(const TaskSpec& t) const {
    return t.deadline_dur > 0.0 ? t.deadline_dur
                                : isds[t.isd].deadline_dur;
  }
  // Absolute deadline of a task, seconds from mission start.
  double task_deadline_abs(const TaskSpec& t) const {
    return t.gen_slot * grid.delta + task_deadline(t);
  }
  int station_of_task(const TaskSpec& t) const { return isds[t.isd].station; }

  double node_dist(int i, int j) const { return dist[i][j]; }
  // Distance between depot/station nodes; station m is node m+1.
  double depot_station_dist(int m) const { return dist[0][m + 1]; }
  double station_dist(int a, int b) const { return dist[a + 1][b + 1]; }

  double total_local_capacity() const {
    double s = 0.0;
    for (const auto& k : isds) s += k.f_loc;
    return s;
  }
  double total_uav_compute() const {
    double s = 0.0;
    for (const auto& u : uavs) s += u.f_uav;
    return s;
  }
  double total_comm_capacity() const {
    double s = 0.0;
    for (const auto& u : uavs) s += u.b_ul + u.b_bh;
    return s;
  }
};

}  // namespace skymec::model

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skymec/model/types.hpp"

namespace skymec::routing {

struct Visit {
  int station = -1;
  double arrival = 0.0;    // seconds
  double departure = 0.0;  // seconds
};

struct UavRoute {
  std::vector<Visit> visits;   // visit order; empty means the UAV never flies
  double depart_depot = 0.0;   // s_u
  double return_depot = 0.0;   // r_u
};

// Per-UAV single closed tours. Visit sequences encode the arc and assignment
// variables; `collected` is derived (a station is collected iff visited).
struct RoutePlan {
  std::vector<UavRoute> routes;

  std::vector<int> collected_stations() const;
  // Tour length of one UAV including both depot legs, meters.
  double tour_distance(const model::Instance& inst, int uav) const;
  double total_service(int uav) const;
  bool visits(int uav, int station) const;
};

enum class RouteConstraint {
  station_shared,        // station assigned to more than one UAV
  duplicate_visit,       // station appears twice in one tour
  payload_budget,
  distance_budget,
  depart_time,           // s_u != 0
  mission_horizon,       // r_u > T_mission
  first_leg_time,        // arrival before depot departure + travel
  inter_leg_time,        // arrival before previous departure + travel
  return_leg_time,       // depot return before last departure + travel
  min_service,
  visit_order,           // departure earlier than arrival
};

const char* constraint_name(RouteConstraint c);

struct RouteViolation {
  RouteConstraint constraint;
  int uav = -1;
  int station = -1;   // offending station, when applicable
  int prev_station = -1;
  double amount = 0.0;  // magnitude of the violation
  std::string detail;
};

struct RouteReport {
  std::vector<RouteViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Evaluates assignment, payload/distance budgets, mission timing, and
// minimum-service constraints. Enumerates all violations rather than failing
// fast. Throws std::invalid_argument on unknown station ids.
RouteReport check_route(const model::Instance& inst, const RoutePlan& plan);

// Earliest-arrival schedule: depart at 0, arrival = previous departure +
// travel, departure = arrival + service duration. service_durs[u][i] must be
// >= the station's min_service (throws std::invalid_argument otherwise).
RoutePlan compute_timing(const model::Instance& inst,
                         const std::vector<std::vector<int>>& visit_seqs,
                         const std::vector<std::vector<double>>& service_durs);

// Same, with every service duration equal to the station minimum.
RoutePlan compute_timing_min_service(
    const model::Instance& inst,
    const std::vector<std::vector<int>>& visit_seqs);

// Slot-level service windows: eta(u,m,t) is true exactly when UAV u is
// hovering at station m throughout slot boundary t*delta (closed interval
// [arrival, departure]).
class ServiceWindowTable {
 public:
  struct Window {
    int uav = -1;
    int station = -1;
    int t_begin = 0;  // first slot index in the window
    int t_end = -1;   // last slot index (inclusive); empty if t_end < t_begin
  };

  ServiceWindowTable() = default;
  ServiceWindowTable(int n_uav, int n_station, int n_slot);

  void add_window(int uav, int station, int t_begin, int t_end);

  bool eta(int uav, int station, int t) const;
  // Station served by `uav` in slot t, or -1.
  int serving_station(int uav, int t) const;
  // First window slot >= t for (uav, station), if any.
  std::optional<int> next_window_slot(int uav, int station, int t) const;
  bool has_window(int uav, int station) const;

  const std::vector<Window>& windows() const { return windows_; }
  int n_uav() const { return n_uav_; }
  int n_station() const { return n_station_; }
  int n_slot() const { return n_slot_; }

  // Total number of (u,t) pairs with a serving station.
  long long true_count() const;

 private:
  int n_uav_ = 0, n_station_ = 0, n_slot_ = 0;
  std::vector<Window> windows_;
  // Dense (u, t) -> station map for O(1) queries.
  std::vector<int> serving_;
};

// Builds the window table from a feasible plan. Throws std::invalid_argument
// if the plan fails check_route or would put one UAV at two stations in the
// same slot.
ServiceWindowTable service_windows(const model::Instance& inst,
                                   const RoutePlan& plan);

// Flight plus hover energy per UAV, joules.
std::vector<double> flight_energy(const model::Instance& inst,
                                  const RoutePlan& plan);

// route-v1 serialization.
std::string plan_to_json(const RoutePlan& plan);
RoutePlan plan_from_json(const std::string& text);

}  // namespace skymec::routing

#include "skymec/routing/plan.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace skymec::routing {

namespace {
// Absolute slack for floating-point feasibility comparisons, seconds/meters.
constexpr double kTol = 1e-9;

void require_known_stations(const model::Instance& inst,
                            const RoutePlan& plan) {
  for (const auto& route : plan.routes) {
    for (const auto& v : route.visits) {
      if (v.station < 0 || v.station >= inst.n_stations()) {
        throw std::invalid_argument("unknown station id " +
                                    std::to_string(v.station));
      }
    }
  }
}
}  // namespace

std::vector<int> RoutePlan::collected_stations() const {
  std::set<int> seen;
  for (const auto& r : routes) {
    for (const auto& v : r.visits) seen.insert(v.station);
  }
  return {seen.begin(), seen.end()};
}

double RoutePlan::tour_distance(const model::Instance& inst, int uav) const {
  const auto& visits = routes[uav].visits;
  if (visits.empty()) return 0.0;
  double d = inst.depot_station_dist(visits.front().station);
  for (std::size_t i = 1; i < visits.size(); ++i) {
    d += inst.station_dist(visits[i - 1].station, visits[i].station);
  }
  d += inst.depot_station_dist(visits.back().station);
  return d;
}

double RoutePlan::total_service(int uav) const {
  double s = 0.0;
  for (const auto& v : routes[uav].visits) s += v.departure - v.arrival;
  return s;
}

bool RoutePlan::visits(int uav, int station) const {
  const auto& vs = routes[uav].visits;
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Visit& v) { return v.station == station; });
}

const char* constraint_name(RouteConstraint c) {
  switch (c) {
    case RouteConstraint::station_shared: return "station_shared";
    case RouteConstraint::duplicate_visit: return "duplicate_visit";
    case RouteConstraint::payload_budget: return "payload_budget";
    case RouteConstraint::distance_budget: return "distance_budget";
    case RouteConstraint::depart_time: return "depart_time";
    case RouteConstraint::mission_horizon: return "mission_horizon";
    case RouteConstraint::first_leg_time: return "first_leg_time";
    case RouteConstraint::inter_leg_time: return "inter_leg_time";
    case RouteConstraint::return_leg_time: return "return_leg_time";
    case RouteConstraint::min_service: return "min_service";
    case RouteConstraint::visit_order: return "visit_order";
  }
  return "?";
}

RouteReport check_route(const model::Instance& inst, const RoutePlan& plan) {
  require_known_stations(inst, plan);
  RouteReport report;
  auto add = [&](RouteConstraint c, int uav, int station, int prev,
                 double amount, std::string detail) {
    report.violations.push_back(
        {c, uav, station, prev, amount, std::move(detail)});
  };

  // Station assigned to at most one UAV, and at most once within a tour.
  std::vector<int> owner(inst.n_stations(), -1);
  for (int u = 0; u < static_cast<int>(plan.routes.size()); ++u) {
    std::set<int> in_tour;
    for (const auto& v : plan.routes[u].visits) {
      if (!in_tour.insert(v.station).second) {
        add(RouteConstraint::duplicate_visit, u, v.station, -1, 1.0,
            "station visited twice in one tour");
      } else if (owner[v.station] >= 0 && owner[v.station] != u) {
        add(RouteConstraint::station_shared, u, v.station, owner[v.station],
            1.0, "station assigned to two UAVs");
      } else {
        owner[v.station] = u;
      }
    }
  }

  for (int u = 0; u < static_cast<int>(plan.routes.size()); ++u) {
    const auto& route = plan.routes[u];
    const auto& spec = inst.uavs[u];

    double payload = 0.0;
    for (const auto& v : route.visits) payload += inst.stations[v.station].weight;
    if (payload > spec.payload_cap + kTol) {
      add(RouteConstraint::payload_budget, u, -1, -1,
          payload - spec.payload_cap, "assigned payload exceeds capacity");
    }

    const double dist = plan.tour_distance(inst, u);
    if (dist > spec.dist_budget + kTol) {
      add(RouteConstraint::distance_budget, u, -1, -1,
          dist - spec.dist_budget, "tour distance exceeds budget");
    }

    if (std::abs(route.depart_depot) > kTol) {
      add(RouteConstraint::depart_time, u, -1, -1, route.depart_depot,
          "depot departure must be at time 0");
    }
    if (route.return_depot > inst.grid.t_mission + kTol) {
      add(RouteConstraint::mission_horizon, u, -1, -1,
          route.return_depot - inst.grid.t_mission,
          "depot return after the mission horizon");
    }

    if (!route.visits.empty()) {
      const auto& first = route.visits.front();
      const double travel0 =
          inst.depot_station_dist(first.station) / spec.speed;
      if (first.arrival + kTol < route.depart_depot + travel0) {
        add(RouteConstraint::first_leg_time, u, first.station, -1,
            route.depart_depot + travel0 - first.arrival,
            "arrival earlier than depot departure plus travel");
      }
      for (std::size_t i = 1; i < route.visits.size(); ++i) {
        const auto& prev = route.visits[i - 1];
        const auto& cur = route.visits[i];
        const double travel =
            inst.station_dist(prev.station, cur.station) / spec.speed;
        if (cur.arrival + kTol < prev.departure + travel) {
          add(RouteConstraint::inter_leg_time, u, cur.station, prev.station,
              prev.departure + travel - cur.arrival,
              "arrival earlier than previous departure plus travel");
        }
      }
      const auto& last = route.visits.back();
      const double travel_back =
          inst.depot_station_dist(last.station) / spec.speed;
      if (route.return_depot + kTol < last.departure + travel_back) {
        add(RouteConstraint::return_leg_time, u, last.station, -1,
            last.departure + travel_back - route.return_depot,
            "depot return earlier than last departure plus travel");
      }
      for (const auto& v : route.visits) {
        if (v.departure + kTol < v.arrival) {
          add(RouteConstraint::visit_order, u, v.station, -1,
              v.arrival - v.departure, "departure precedes arrival");
        }
        const double min_service = inst.stations[v.station].min_service;
        if (v.departure - v.arrival + kTol < min_service) {
          add(RouteConstraint::min_service, u, v.station, -1,
              min_service - (v.departure - v.arrival),
              "service shorter than the station minimum");
        }
      }
    }
  }
  return report;
}

RoutePlan compute_timing(const model::Instance& inst,
                         const std::vector<std::vector<int>>& visit_seqs,
                         const std::vector<std::vector<double>>& service_durs) {
  if (visit_seqs.size() != static_cast<std::size_t>(inst.n_uavs()) ||
      service_durs.size() != visit_seqs.size()) {
    throw std::invalid_argument("one visit sequence per UAV required");
  }
  RoutePlan plan;
  plan.routes.resize(inst.n_uavs());
  for (int u = 0; u < inst.n_uavs(); ++u) {
    const auto& seq = visit_seqs[u];
    const auto& durs = service_durs[u];
    if (seq.size() != durs.size()) {
      throw std::invalid_argument("service duration per visit required");
    }
    auto& route = plan.routes[u];
    route.depart_depot = 0.0;
    if (seq.empty()) {
      route.return_depot = 0.0;
      continue;
    }
    const double speed = inst.uavs[u].speed;
    double clock = 0.0;
    int prev = -1;  // -1 = depot
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const int m = seq[i];
      if (m < 0 || m >= inst.n_stations()) {
        throw std::invalid_argument("unknown station id " + std::to_string(m));
      }
      if (durs[i] + 1e-12 < inst.stations[m].min_service) {
        throw std::invalid_argument(
            "service duration below the station minimum at station " +
            std::to_string(m));
      }
      const double travel = (prev < 0 ? inst.depot_station_dist(m)
                                      : inst.station_dist(prev, m)) /
                            speed;
      const double arrival = clock + travel;
      const double departure = arrival + durs[i];
      route.visits.push_back({m, arrival, departure});
      clock = departure;
      prev = m;
    }
    route.return_depot = clock + inst.depot_station_dist(prev) / speed;
  }
  return plan;
}

RoutePlan compute_timing_min_service(
    const model::Instance& inst,
    const std::vector<std::vector<int>>& visit_seqs) {
  std::vector<std::vector<double>> durs(visit_seqs.size());
  for (std::size_t u = 0; u < visit_seqs.size(); ++u) {
    for (int m : visit_seqs[u]) {
      durs[u].push_back(inst.stations.at(m).min_service);
    }
  }
  return compute_timing(inst, visit_seqs, durs);
}

ServiceWindowTable::ServiceWindowTable(int n_uav, int n_station, int n_slot)
    : n_uav_(n_uav),
      n_station_(n_station),
      n_slot_(n_slot),
      serving_(static_cast<std::size_t>(n_uav) * n_slot, -1) {}

void ServiceWindowTable::add_window(int uav, int station, int t_begin,
                                    int t_end) {
  windows_.push_back({uav, station, t_begin, t_end});
  for (int t = std::max(0, t_begin); t <= std::min(t_end, n_slot_ - 1); ++t) {
    auto& cell = serving_[static_cast<std::size_t>(uav) * n_slot_ + t];
    if (cell != -1 && cell != station) {
      throw std::invalid_argument(
          "one UAV cannot serve two stations in the same slot");
    }
    cell = station;
  }
}

bool ServiceWindowTable::eta(int uav, int station, int t) const {
  return serving_station(uav, t) == station;
}

int ServiceWindowTable::serving_station(int uav, int t) const {
  if (t < 0 || t >= n_slot_ || uav < 0 || uav >= n_uav_) return -1;
  return serving_[static_cast<std::size_t>(uav) * n_slot_ + t];
}

std::optional<int> ServiceWindowTable::next_window_slot(int uav, int station,
                                                        int t) const {
  std::optional<int> best;
  for (const auto& w : windows_) {
    if (w.uav != uav || w.station != station || w.t_end < w.t_begin) continue;
    if (w.t_end < t) continue;
    const int slot = std::max(w.t_begin, t);
    if (slot < n_slot_ && (!best || slot < *best)) best = slot;
  }
  return best;
}

bool ServiceWindowTable::has_window(int uav, int station) const {
  for (const auto& w : windows_) {
    if (w.uav == uav && w.station == station && w.t_end >= w.t_begin)
      return true;
  }
  return false;
}

long long ServiceWindowTable::true_count() const {
  long long n = 0;
  for (int c : serving_) n += (c >= 0);
  return n;
}

ServiceWindowTable service_windows(const model::Instance& inst,
                                   const RoutePlan& plan) {
  const auto report = check_route(inst, plan);
  if (!report.ok()) {
    throw std::invalid_argument(
        "cannot build service windows from an infeasible plan (" +
        std::string(constraint_name(report.violations.front().constraint)) +
        ")");
  }
  ServiceWindowTable table(inst.n_uavs(), inst.n_stations(),
                           inst.grid.n_slot);
  const double delta = inst.grid.delta;
  for (int u = 0; u < static_cast<int>(plan.routes.size()); ++u) {
    for (const auto& v : plan.routes[u].visits) {
      const int t_begin =
          static_cast<int>(std::ceil(v.arrival / delta - 1e-9));
      const int t_end =
          static_cast<int>(std::floor(v.departure / delta + 1e-9));
      table.add_window(u, v.station, std::max(0, t_begin),
                       std::min(t_end, inst.grid.n_slot - 1));
    }
  }
  return table;
}

std::vector<double> flight_energy(const model::Instance& inst,
                                  const RoutePlan& plan) {
  std::vector<double> energy(plan.routes.size(), 0.0);
  for (int u = 0; u < static_cast<int>(plan.routes.size()); ++u) {
    energy[u] = inst.energy.a_fly * plan.tour_distance(inst, u) +
                inst.energy.a_hov * plan.total_service(u);
  }
  return energy;
}

std::string plan_to_json(const RoutePlan& plan) {
  nlohmann::ordered_json j;
  j["schema"] = "route-v1";
  auto routes = nlohmann::ordered_json::array();
  for (const auto& r : plan.routes) {
    auto visits = nlohmann::ordered_json::array();
    for (const auto& v : r.visits) {
      visits.push_back({{"station", v.station},
                        {"arrival", v.arrival},
                        {"departure", v.departure}});
    }
    routes.push_back({{"visits", std::move(visits)},
                      {"depart_depot", r.depart_depot},
                      {"return_depot", r.return_depot}});
  }
  j["routes"] = std::move(routes);
  return j.dump(2) + "\n";
}

RoutePlan plan_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema").get<std::string>() != "route-v1") {
    throw std::runtime_error("unsupported route schema");
  }
  RoutePlan plan;
  for (const auto& r : j.at("routes")) {
    UavRoute route;
    for (const auto& v : r.at("visits")) {
      route.visits.push_back({v.at("station").get<int>(),
                              v.at("arrival").get<double>(),
                              v.at("departure").get<double>()});
    }
    route.depart_depot = r.at("depart_depot").get<double>();
    route.return_depot = r.at("return_depot").get<double>();
    plan.routes.push_back(std::move(route));
  }
  return plan;
}

}  // namespace skymec::routing

#include "skymec/mec/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace skymec::mec {

namespace {
inline double cap_tol(double cap) { return 1e-9 * (cap > 1.0 ? cap : 1.0); }
}  // namespace

const char* mode_name(ExecMode m) {
  switch (m) {
    case ExecMode::unassigned: return "unassigned";
    case ExecMode::local: return "local";
    case ExecMode::on_uav: return "on_uav";
    case ExecMode::cloud_via: return "cloud_via";
  }
  return "?";
}

const char* admit_reason_name(AdmitReason r) {
  switch (r) {
    case AdmitReason::accepted: return "accepted";
    case AdmitReason::unassigned_task: return "unassigned_task";
    case AdmitReason::task_complete: return "task_complete";
    case AdmitReason::mode_gate: return "mode_gate";
    case AdmitReason::window_gate: return "window_gate";
    case AdmitReason::cap_local: return "cap_local";
    case AdmitReason::cap_uav: return "cap_uav";
    case AdmitReason::cap_cloud: return "cap_cloud";
    case AdmitReason::cap_uplink: return "cap_uplink";
    case AdmitReason::cap_backhaul: return "cap_backhaul";
  }
  return "?";
}

SlotLedger::SlotLedger(const model::Instance& inst) {
  slots.resize(inst.grid.n_slot);
  for (auto& s : slots) {
    s.used_loc.assign(inst.n_isds(), 0.0);
    s.used_uav.assign(inst.n_uavs(), 0.0);
    s.used_cld_via.assign(inst.n_uavs(), 0.0);
    s.used_ul.assign(inst.n_uavs(), 0.0);
    s.used_bh.assign(inst.n_uavs(), 0.0);
  }
}

void assign_mode(const model::Instance& inst, TaskRecord& rec, ExecMode mode,
                 int uav, const routing::ServiceWindowTable& windows) {
  if (rec.assigned()) {
    throw std::logic_error("task mode is locked once assigned");
  }
  if (mode == ExecMode::unassigned) {
    throw std::invalid_argument("cannot assign the unassigned mode");
  }
  const auto& task = inst.tasks[rec.task_index];
  if (mode == ExecMode::on_uav || mode == ExecMode::cloud_via) {
    if (uav < 0 || uav >= inst.n_uavs()) {
      throw std::invalid_argument("unknown UAV id " + std::to_string(uav));
    }
    const int station = inst.station_of_task(task);
    if (!windows.next_window_slot(uav, station, task.gen_slot)) {
      throw std::invalid_argument(
          "UAV " + std::to_string(uav) + " never serves station " +
          std::to_string(station) + " after the task is generated");
    }
    rec.uav = uav;
  } else {
    rec.uav = -1;
  }
  rec.mode = mode;
}

namespace {

struct ComponentCheck {
  AdmitReason reason = AdmitReason::accepted;
};

}  // namespace

std::vector<Rejection> apply_slot(const model::Instance& inst, int t,
                                  SlotLedger& ledger,
                                  std::vector<TaskRecord>& recs,
                                  const std::vector<Proposal>& proposed,
                                  const routing::ServiceWindowTable& windows) {
  if (t < 0 || t >= inst.grid.n_slot) {
    throw std::out_of_range("slot outside the grid");
  }
  std::vector<Rejection> rejected;
  auto& usage = ledger.at(t);
  const double delta = inst.grid.delta;

  for (const auto& p : proposed) {
    if (p.cmp < 0 || p.ul < 0 || p.bh < 0) {
      throw std::invalid_argument("allocations must be nonnegative");
    }
    auto& rec = recs.at(p.task_index);
    const auto& task = inst.tasks[rec.task_index];
    if (t < task.gen_slot) {
      throw std::logic_error("allocation before the task generation slot");
    }
    auto reject_all = [&](AdmitReason why) {
      if (p.cmp > 0) rejected.push_back({p.task_index, 'c', why, p.cmp});
      if (p.ul > 0) rejected.push_back({p.task_index, 'u', why, p.ul});
      if (p.bh > 0) rejected.push_back({p.task_index, 'b', why, p.bh});
    };
    if (!rec.assigned()) {
      reject_all(AdmitReason::unassigned_task);
      continue;
    }
    if (rec.finished()) {
      reject_all(AdmitReason::task_complete);
      continue;
    }

    const int station = inst.station_of_task(task);
    const int k = task.isd;
    const int u = rec.uav;
    const bool in_window = u >= 0 && windows.eta(u, station, t);

    double acc_cmp = 0.0, acc_ul = 0.0, acc_bh = 0.0;

    if (p.cmp > 0) {
      AdmitReason why = AdmitReason::accepted;
      switch (rec.mode) {
        case ExecMode::local: {
          const double cap = inst.isds[k].f_loc;
          if (usage.used_loc[k] + p.cmp > cap + cap_tol(cap)) {
            why = AdmitReason::cap_local;
          }
          break;
        }
        case ExecMode::on_uav: {
          if (!in_window) {
            why = AdmitReason::window_gate;
          } else {
            const double cap = inst.uavs[u].f_uav;
            if (usage.used_uav[u] + p.cmp > cap + cap_tol(cap)) {
              why = AdmitReason::cap_uav;
            }
          }
          break;
        }
        case ExecMode::cloud_via: {
          // Cloud compute is not window-gated; the data path is.
          double used = 0.0;
          for (double v : usage.used_cld_via) used += v;
          if (used + p.cmp > inst.cloud_cap + cap_tol(inst.cloud_cap)) {
            why = AdmitReason::cap_cloud;
          }
          break;
        }
        default: why = AdmitReason::unassigned_task;
      }
      if (why == AdmitReason::accepted) {
        acc_cmp = p.cmp;
        if (rec.mode == ExecMode::local) usage.used_loc[k] += p.cmp;
        if (rec.mode == ExecMode::on_uav) usage.used_uav[u] += p.cmp;
        if (rec.mode == ExecMode::cloud_via) usage.used_cld_via[u] += p.cmp;
        rec.done_cmp += p.cmp * delta;
      } else {
        rejected.push_back({p.task_index, 'c', why, p.cmp});
      }
    }

    if (p.ul > 0) {
      AdmitReason why = AdmitReason::accepted;
      if (!rec.needs_ul()) {
        why = AdmitReason::mode_gate;
      } else if (!in_window) {
        why = AdmitReason::window_gate;
      } else {
        const double cap = inst.uavs[u].b_ul;
        if (usage.used_ul[u] + p.ul > cap + cap_tol(cap)) {
          why = AdmitReason::cap_uplink;
        }
      }
      if (why == AdmitReason::accepted) {
        acc_ul = p.ul;
        usage.used_ul[u] += p.ul;
        rec.done_ul += inst.rates.ul(k, t, u) * p.ul * delta;
      } else {
        rejected.push_back({p.task_index, 'u', why, p.ul});
      }
    }

    if (p.bh > 0) {
      AdmitReason why = AdmitReason::accepted;
      if (!rec.needs_bh()) {
        why = AdmitReason::mode_gate;
      } else if (!in_window) {
        why = AdmitReason::window_gate;
      } else {
        const double cap = inst.uavs[u].b_bh;
        if (usage.used_bh[u] + p.bh > cap + cap_tol(cap)) {
          why = AdmitReason::cap_backhaul;
        }
      }
      if (why == AdmitReason::accepted) {
        acc_bh = p.bh;
        usage.used_bh[u] += p.bh;
        rec.done_bh += inst.rates.bh(t, u) * p.bh * delta;
      } else {
        rejected.push_back({p.task_index, 'b', why, p.bh});
      }
    }

    if (acc_cmp > 0 || acc_ul > 0 || acc_bh > 0) {
      rec.history.push_back({t, acc_cmp, acc_ul, acc_bh});
    }
  }
  return rejected;
}

void check_completion(const model::Instance& inst, TaskRecord& rec, int t) {
  if (!rec.assigned() || rec.finished()) return;
  const auto& task = inst.tasks[rec.task_index];
  const double tol = 1e-9;
  bool done = rec.done_cmp + tol >= task.workload;
  if (rec.needs_ul()) done = done && rec.done_ul + tol >= task.input_bits;
  if (rec.needs_bh()) done = done && rec.done_bh + tol >= task.input_bits;
  if (!done) return;
  rec.complete_slot = t;
  rec.completion_time = (t + 1) * inst.grid.delta;
  rec.ontime = rec.completion_time <=
               inst.task_deadline_abs(task) + 1e-9;
}

void finalize_records(const model::Instance& inst,
                      std::vector<TaskRecord>& recs) {
  for (auto& rec : recs) {
    if (!rec.finished()) {
      rec.completion_time = inst.grid.t_mission;
      rec.ontime = false;
    }
  }
}

std::pair<double, double> occupation(const SlotLedger& ledger,
                                     const model::Instance& inst, int t) {
  const auto& s = ledger.at(t);
  double used_cmp = 0.0;
  for (double v : s.used_loc) used_cmp += v;
  for (double v : s.used_uav) used_cmp += v;
  for (double v : s.used_cld_via) used_cmp += v;
  double used_com = 0.0;
  for (double v : s.used_ul) used_com += v;
  for (double v : s.used_bh) used_com += v;
  const double cap_cmp =
      inst.total_local_capacity() + inst.total_uav_compute() + inst.cloud_cap;
  const double cap_com = inst.total_comm_capacity();
  const double r_cmp = cap_cmp > 0 ? used_cmp / cap_cmp : 0.0;
  const double r_com = cap_com > 0 ? used_com / cap_com : 0.0;
  return {r_cmp, r_com};
}

void finalize_slot(SlotLedger& ledger, const model::Instance& inst, int t) {
  const auto [r_cmp, r_com] = occupation(ledger, inst, t);
  ledger.at(t).r_cmp = r_cmp;
  ledger.at(t).r_com = r_com;
}

std::vector<UavEnergy> uav_energy(const model::Instance& inst,
                                  const std::vector<TaskRecord>& recs,
                                  const routing::RoutePlan& plan) {
  std::vector<UavEnergy> out(inst.n_uavs());
  const auto fly = routing::flight_energy(inst, plan);
  for (int u = 0; u < inst.n_uavs(); ++u) out[u].fly = fly[u];

  const double delta = inst.grid.delta;
  for (const auto& rec : recs) {
    if (rec.uav < 0) continue;
    const auto& task = inst.tasks[rec.task_index];
    auto& e = out[rec.uav];
    for (const auto& h : rec.history) {
      if (rec.mode == ExecMode::on_uav) {
        e.cmp += inst.energy.a_cmp * h.cmp * delta;
      }
      e.com += inst.energy.a_ul * inst.rates.ul(task.isd, h.slot, rec.uav) *
               h.ul * delta;
      e.com += inst.energy.a_bh * inst.rates.bh(h.slot, rec.uav) * h.bh *
               delta;
    }
  }
  for (int u = 0; u < inst.n_uavs(); ++u) {
    out[u].total = out[u].fly + out[u].cmp + out[u].com;
    out[u].within_budget =
        out[u].total <= inst.uavs[u].energy_budget + 1e-9;
  }
  return out;
}

std::vector<TaskRecord> make_records(const model::Instance& inst) {
  std::vector<TaskRecord> recs(inst.n_tasks());
  for (int i = 0; i < inst.n_tasks(); ++i) recs[i].task_index = i;
  return recs;
}

}  // namespace skymec::mec

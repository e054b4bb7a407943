#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skymec/model/types.hpp"
#include "skymec/routing/plan.hpp"

namespace skymec::mec {

enum class ExecMode { unassigned, local, on_uav, cloud_via };

const char* mode_name(ExecMode m);

// One accepted allocation. Rates are the allocated (pre-rate-factor) values;
// cumulative progress applies the effective-rate factors.
struct SlotAlloc {
  int slot = 0;
  double cmp = 0.0;  // work-units/s
  double ul = 0.0;   // bits/s
  double bh = 0.0;   // bits/s
};

// Lifecycle of one task. Mode selection is irrevocable; allocations accrue
// effective cumulants until the first slot where the mode's sufficiency
// conditions all hold.
struct TaskRecord {
  int task_index = -1;
  ExecMode mode = ExecMode::unassigned;
  int uav = -1;           // first hop for on_uav / cloud_via
  int dispatch_slot = -1;
  double done_cmp = 0.0;  // work-units
  double done_ul = 0.0;   // effective bits
  double done_bh = 0.0;   // effective bits
  std::optional<int> complete_slot;
  double completion_time = 0.0;  // seconds; valid once finalized
  std::optional<bool> ontime;    // deadline flag; valid once finalized
  std::vector<SlotAlloc> history;

  bool assigned() const { return mode != ExecMode::unassigned; }
  bool finished() const { return complete_slot.has_value(); }
  bool finalized() const { return ontime.has_value(); }
  bool needs_ul() const {
    return mode == ExecMode::on_uav || mode == ExecMode::cloud_via;
  }
  bool needs_bh() const { return mode == ExecMode::cloud_via; }
  // Completed by the end of slot t.
  bool completed_by(int t) const {
    return complete_slot.has_value() && *complete_slot <= t;
  }
};

// Per-slot aggregate usage. Occupation ratios are filled by finalize_slot.
struct SlotUsage {
  std::vector<double> used_loc;      // per ISD, work-units/s
  std::vector<double> used_uav;      // per UAV, work-units/s
  std::vector<double> used_cld_via;  // per UAV, work-units/s
  std::vector<double> used_ul;       // per UAV, bits/s
  std::vector<double> used_bh;       // per UAV, bits/s
  double r_cmp = 0.0;
  double r_com = 0.0;
};

struct SlotLedger {
  explicit SlotLedger(const model::Instance& inst);
  SlotLedger() = default;

  std::vector<SlotUsage> slots;

  SlotUsage& at(int t) { return slots[t]; }
  const SlotUsage& at(int t) const { return slots[t]; }
};

enum class AdmitReason {
  accepted,
  unassigned_task,   // no execution mode selected yet
  task_complete,     // allocations after the completion slot are zero
  mode_gate,         // component not permitted by the selected mode
  window_gate,       // UAV not serving the task's station this slot
  cap_local,
  cap_uav,
  cap_cloud,
  cap_uplink,
  cap_backhaul,
};

const char* admit_reason_name(AdmitReason r);

struct Proposal {
  int task_index = -1;
  double cmp = 0.0;
  double ul = 0.0;
  double bh = 0.0;
};

struct Rejection {
  int task_index = -1;
  char component = '?';  // 'c' compute, 'u' uplink, 'b' backhaul
  AdmitReason reason = AdmitReason::accepted;
  double amount = 0.0;
};

// Locks the execution mode of a waiting task. For UAV-involved modes the
// task's station must have a service window at or after its generation slot.
// Throws std::logic_error on reassignment and std::invalid_argument when no
// feasible window exists.
void assign_mode(const model::Instance& inst, TaskRecord& rec, ExecMode mode,
                 int uav, const routing::ServiceWindowTable& windows);

// Admits the proposals for slot t in order. Each component of a proposal is
// accepted iff it passes mode gating, window gating, and the per-slot caps
// cumulatively with prior acceptances; accepted amounts accrue to the task
// cumulants (rate factors applied) and the ledger. Rejected components are
// returned. Proposals for tasks not yet generated throw std::logic_error;
// negative amounts throw std::invalid_argument.
std::vector<Rejection> apply_slot(const model::Instance& inst, int t,
                                  SlotLedger& ledger,
                                  std::vector<TaskRecord>& recs,
                                  const std::vector<Proposal>& proposed,
                                  const routing::ServiceWindowTable& windows);

// Marks the task complete at slot t if its cumulative service is sufficient
// for its mode; on completion sets the completion time and the deadline flag.
void check_completion(const model::Instance& inst, TaskRecord& rec, int t);

// Applies the horizon convention to every unfinished task: completion time
// equals the mission horizon and the deadline flag is false.
void finalize_records(const model::Instance& inst,
                      std::vector<TaskRecord>& recs);

// Normalized compute / communication occupation of a finalized slot.
std::pair<double, double> occupation(const SlotLedger& ledger,
                                     const model::Instance& inst, int t);

// Computes r_cmp / r_com for slot t and stores them in the ledger.
void finalize_slot(SlotLedger& ledger, const model::Instance& inst, int t);

struct UavEnergy {
  double fly = 0.0;
  double cmp = 0.0;
  double com = 0.0;
  double total = 0.0;
  bool within_budget = true;
};

// Per-UAV energy decomposition over a finished episode. Compute and
// communication terms are re-derived from the task allocation histories.
std::vector<UavEnergy> uav_energy(const model::Instance& inst,
                                  const std::vector<TaskRecord>& recs,
                                  const routing::RoutePlan& plan);

// Fresh records for every task of the instance.
std::vector<TaskRecord> make_records(const model::Instance& inst);

}  // namespace skymec::mec

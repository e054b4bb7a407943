#include "skymec/model/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "skymec/model/scenario.hpp"

namespace skymec::model {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["schema"] = "instance-v1";
  j["profile"] = inst.profile;
  j["seed"] = inst.seed;
  j["grid"] = {{"delta", inst.grid.delta},
               {"n_slot", inst.grid.n_slot},
               {"t_mission", inst.grid.t_mission}};
  j["depot"] = {inst.depot_x, inst.depot_y};
  auto stations = ordered_json::array();
  for (const auto& s : inst.stations) {
    stations.push_back({{"id", s.id},
                        {"pos", {s.x, s.y}},
                        {"value", s.value},
                        {"weight", s.weight},
                        {"min_service", s.min_service},
                        {"isds", s.isds}});
  }
  j["stations"] = std::move(stations);
  auto uavs = ordered_json::array();
  for (const auto& u : inst.uavs) {
    uavs.push_back({{"id", u.id},
                    {"speed", u.speed},
                    {"dist_budget", u.dist_budget},
                    {"payload_cap", u.payload_cap},
                    {"energy_budget", u.energy_budget},
                    {"f_uav", u.f_uav},
                    {"b_ul", u.b_ul},
                    {"b_bh", u.b_bh}});
  }
  j["uavs"] = std::move(uavs);
  auto isds = ordered_json::array();
  for (const auto& k : inst.isds) {
    isds.push_back({{"id", k.id},
                    {"station", k.station},
                    {"f_loc", k.f_loc},
                    {"deadline_dur", k.deadline_dur}});
  }
  j["isds"] = std::move(isds);
  auto tasks = ordered_json::array();
  for (const auto& t : inst.tasks) {
    tasks.push_back({{"isd", t.isd},
                     {"gen_slot", t.gen_slot},
                     {"workload", t.workload},
                     {"input_bits", t.input_bits},
                     {"deadline_dur", t.deadline_dur}});
  }
  j["tasks"] = std::move(tasks);
  j["energy"] = {{"a_fly", inst.energy.a_fly},
                 {"a_hov", inst.energy.a_hov},
                 {"a_cmp", inst.energy.a_cmp},
                 {"a_ul", inst.energy.a_ul},
                 {"a_bh", inst.energy.a_bh}};
  auto ul_over = ordered_json::array();
  for (const auto& [key, v] : inst.rates.ul_overrides) {
    ul_over.push_back({{"isd", std::get<0>(key)},
                       {"slot", std::get<1>(key)},
                       {"uav", std::get<2>(key)},
                       {"factor", v}});
  }
  auto bh_over = ordered_json::array();
  for (const auto& [key, v] : inst.rates.bh_overrides) {
    bh_over.push_back(
        {{"slot", key.first}, {"uav", key.second}, {"factor", v}});
  }
  j["rates"] = {{"ul_default", inst.rates.ul_default},
                {"bh_default", inst.rates.bh_default},
                {"ul_overrides", std::move(ul_over)},
                {"bh_overrides", std::move(bh_over)}};
  j["weights"] = {{"w_col", inst.weights.w_col},
                  {"w_cmp", inst.weights.w_cmp},
                  {"w_miss", inst.weights.w_miss},
                  {"w_flow", inst.weights.w_flow},
                  {"w_res", inst.weights.w_res}};
  j["cloud_cap"] = inst.cloud_cap;
  j["dist"] = inst.dist;
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  if (j.at("schema").get<std::string>() != "instance-v1") {
    throw std::runtime_error("unsupported instance schema: " +
                             j.at("schema").get<std::string>());
  }
  Instance inst;
  inst.profile = j.value("profile", std::string{});
  inst.seed = j.value("seed", std::uint64_t{0});
  inst.grid.delta = j.at("grid").at("delta").get<double>();
  inst.grid.n_slot = j.at("grid").at("n_slot").get<int>();
  inst.grid.t_mission = j.at("grid").at("t_mission").get<double>();
  inst.depot_x = j.at("depot").at(0).get<double>();
  inst.depot_y = j.at("depot").at(1).get<double>();
  for (const auto& s : j.at("stations")) {
    Station st;
    st.id = s.at("id").get<int>();
    st.x = s.at("pos").at(0).get<double>();
    st.y = s.at("pos").at(1).get<double>();
    st.value = s.at("value").get<double>();
    st.weight = s.at("weight").get<double>();
    st.min_service = s.at("min_service").get<double>();
    st.isds = s.at("isds").get<std::vector<int>>();
    inst.stations.push_back(std::move(st));
  }
  for (const auto& u : j.at("uavs")) {
    UavSpec spec;
    spec.id = u.at("id").get<int>();
    spec.speed = u.at("speed").get<double>();
    spec.dist_budget = u.at("dist_budget").get<double>();
    spec.payload_cap = u.at("payload_cap").get<double>();
    spec.energy_budget = u.at("energy_budget").get<double>();
    spec.f_uav = u.at("f_uav").get<double>();
    spec.b_ul = u.at("b_ul").get<double>();
    spec.b_bh = u.at("b_bh").get<double>();
    inst.uavs.push_back(spec);
  }
  for (const auto& k : j.at("isds")) {
    inst.isds.push_back({k.at("id").get<int>(), k.at("station").get<int>(),
                         k.at("f_loc").get<double>(),
                         k.at("deadline_dur").get<double>()});
  }
  for (const auto& t : j.at("tasks")) {
    TaskSpec spec;
    spec.isd = t.at("isd").get<int>();
    spec.gen_slot = t.at("gen_slot").get<int>();
    spec.workload = t.at("workload").get<double>();
    spec.input_bits = t.at("input_bits").get<double>();
    spec.deadline_dur = t.value("deadline_dur", 0.0);
    inst.tasks.push_back(spec);
  }
  const auto& e = j.at("energy");
  inst.energy = {e.at("a_fly").get<double>(), e.at("a_hov").get<double>(),
                 e.at("a_cmp").get<double>(), e.at("a_ul").get<double>(),
                 e.at("a_bh").get<double>()};
  const auto& r = j.at("rates");
  inst.rates.ul_default = r.at("ul_default").get<double>();
  inst.rates.bh_default = r.at("bh_default").get<double>();
  for (const auto& o : r.at("ul_overrides")) {
    inst.rates.ul_overrides[{o.at("isd").get<int>(), o.at("slot").get<int>(),
                             o.at("uav").get<int>()}] =
        o.at("factor").get<double>();
  }
  for (const auto& o : r.at("bh_overrides")) {
    inst.rates.bh_overrides[{o.at("slot").get<int>(), o.at("uav").get<int>()}] =
        o.at("factor").get<double>();
  }
  const auto& w = j.at("weights");
  inst.weights = {w.at("w_col").get<double>(), w.at("w_cmp").get<double>(),
                  w.at("w_miss").get<double>(), w.at("w_flow").get<double>(),
                  w.at("w_res").get<double>()};
  inst.cloud_cap = j.at("cloud_cap").get<double>();
  inst.dist = j.at("dist").get<std::vector<std::vector<double>>>();
  return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

Instance resolve_scenario(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    const std::string profile = arg.substr(0, colon);
    const auto profiles = registered_profiles();
    for (const auto& p : profiles) {
      if (p == profile) {
        const std::uint64_t seed = std::stoull(arg.substr(colon + 1));
        return generate_scenario(seed, profile);
      }
    }
  }
  return load_instance(arg);
}

}  // namespace skymec::model

#include "guderley/solution_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "guderley/errors.hpp"

namespace guderley {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "guderley-solution";
constexpr int kVersion = 1;

json trajectory_to_json(const Trajectory& t) {
  json samples = json::array();
  for (const PhasePoint& q : t.samples) samples.push_back({q.V, q.C});
  json ivals = json::array();
  for (const TrajInterval& iv : t.ivals)
    ivals.push_back({iv.axis == Axis::V ? "V" : "C", iv.dir, iv.slope0,
                     iv.slope1});
  return json{{"x_sign", t.x_sign},
              {"samples", std::move(samples)},
              {"ivals", std::move(ivals)},
              {"lnx", t.lnx},
              {"lnR", t.lnR}};
}

Trajectory trajectory_from_json(const json& j, const std::string& name) {
  Trajectory t;
  t.x_sign = j.at("x_sign").get<int>();
  for (const json& q : j.at("samples"))
    t.samples.push_back({q.at(0).get<double>(), q.at(1).get<double>()});
  for (const json& iv : j.at("ivals")) {
    TrajInterval ti;
    const std::string axis = iv.at(0).get<std::string>();
    if (axis != "V" && axis != "C")
      throw domain_error("solution " + name + ": bad interval axis '" + axis +
                         "'");
    ti.axis = axis == "V" ? Axis::V : Axis::C;
    ti.dir = iv.at(1).get<int>();
    ti.slope0 = iv.at(2).get<double>();
    ti.slope1 = iv.at(3).get<double>();
    t.ivals.push_back(ti);
  }
  t.lnx = j.at("lnx").get<std::vector<double>>();
  t.lnR = j.at("lnR").get<std::vector<double>>();

  if (t.samples.size() < 2)
    throw domain_error("solution " + name + ": needs at least two samples");
  if (t.ivals.size() + 1 != t.samples.size())
    throw domain_error("solution " + name + ": interval count does not match "
                       "the samples");
  if (t.lnx.size() != t.samples.size() || t.lnR.size() != t.samples.size())
    throw domain_error("solution " + name + ": annotation arrays do not "
                       "match the samples");
  return t;
}

} // namespace

std::string solution_to_json(const GlobalSolution& sol) {
  json j{{"format", kFormat},
         {"version", kVersion},
         {"gamma", sol.p.gamma},
         {"m", sol.p.m},
         {"lambda", sol.p.lambda},
         {"z", sol.p.z},
         {"rho0", sol.rho0},
         {"x_H", sol.x_H},
         {"x_s", sol.x_s},
         {"sigma", sol.sigma},
         {"R_pre", sol.R_pre},
         {"terminal",
          {{"R0", sol.terminal.R0},
           {"v1", sol.terminal.v1},
           {"c1", sol.terminal.c1}}},
         {"match",
          {{"V_H", sol.match.P_H.V},
           {"C_H", sol.match.C_H},
           {"pre_V", sol.match.pre_state.V},
           {"pre_C", sol.match.pre_state.C},
           {"x_H", sol.match.x_H},
           {"intersection_count", sol.match.intersection_count}}},
         {"branches",
          {{"collapse", trajectory_to_json(sol.collapse)},
           {"outbound", trajectory_to_json(sol.outbound)},
           {"downstream", trajectory_to_json(sol.downstream)}}}};
  return j.dump(1);
}

GlobalSolution solution_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("solution parse error: ") + e.what());
  }

  try {
    if (j.at("format").get<std::string>() != kFormat)
      throw domain_error("solution file has format tag '" +
                         j.at("format").get<std::string>() + "'");
    if (j.at("version").get<int>() != kVersion)
      throw domain_error("solution file has unsupported version " +
                         std::to_string(j.at("version").get<int>()));

    GlobalSolution s;
    s.p = params_from_z(j.at("gamma").get<double>(), j.at("m").get<int>(),
                        j.at("z").get<double>());
    s.rho0 = j.at("rho0").get<double>();
    s.x_H = j.at("x_H").get<double>();
    s.x_s = j.at("x_s").get<double>();
    s.sigma = j.at("sigma").get<double>();
    s.R_pre = j.at("R_pre").get<double>();

    const json& term = j.at("terminal");
    s.terminal.R0 = term.at("R0").get<double>();
    s.terminal.v1 = term.at("v1").get<double>();
    s.terminal.c1 = term.at("c1").get<double>();

    const json& match = j.at("match");
    s.match.P_H.V = match.at("V_H").get<double>();
    s.match.C_H = match.at("C_H").get<double>();
    s.match.P_H.C = s.match.C_H;
    s.match.pre_state.V = match.at("pre_V").get<double>();
    s.match.pre_state.C = match.at("pre_C").get<double>();
    s.match.x_H = match.at("x_H").get<double>();
    s.match.intersection_count = match.at("intersection_count").get<int>();

    const json& br = j.at("branches");
    s.collapse = trajectory_from_json(br.at("collapse"), "collapse branch");
    s.outbound = trajectory_from_json(br.at("outbound"), "outbound branch");
    s.downstream =
        trajectory_from_json(br.at("downstream"), "downstream branch");
    return s;
  } catch (const json::exception& e) {
    throw domain_error(std::string("solution file is missing fields: ") +
                       e.what());
  }
}

void save_solution(const GlobalSolution& sol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot open '" + path + "' for writing");
  out << solution_to_json(sol) << "\n";
  if (!out.flush()) throw domain_error("failed writing '" + path + "'");
}

GlobalSolution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str());
}

} // namespace guderley

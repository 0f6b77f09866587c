#include "slicepow/json_io.hpp"

#include <fstream>

namespace slicepow {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw SchemaError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

double number(const json& j) {
  if (!j.is_number()) throw SchemaError("expected a number, got " + j.dump());
  return j.get<double>();
}

std::vector<cplx> cplx_list(const json& j) {
  if (!j.is_array()) throw SchemaError("expected a list of [re, im] pairs");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(cplx_from_json(e));
  return out;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Quaternion& q) { return json::array({q.q0, q.q1, q.q2, q.q3}); }

json to_json(const CQuat& w) {
  return json::array({to_json(w[0]), to_json(w[1]), to_json(w[2]), to_json(w[3])});
}

json to_json(const StemPoly& F) {
  json j;
  for (int h = 0; h < 4; ++h) {
    json c = json::array();
    for (const cplx z : F.component(h)) c.push_back(to_json(z));
    j["c" + std::to_string(h)] = std::move(c);
  }
  j["domain"] = F.domain() == StemDomain::UPPER_ONLY ? "upper" : "whole";
  return j;
}

json to_json(const DomainPath& path) {
  json pts = json::array();
  for (const cplx z : path.points) pts.push_back(to_json(z));
  json j{{"points", std::move(pts)}, {"closed", path.closed}};
  if (path.anchor) j["anchor"] = *path.anchor;
  return j;
}

json to_json(const RootBranch& b) {
  return json{{"label", b.label.str()},
              {"value", to_json(b.value)},
              {"lift", {{"u0", to_json(b.lift.u0)}, {"u1", to_json(b.lift.u1)}, {"s", to_json(b.lift.s)}}},
              {"t", to_json(b.t)},
              {"residual", b.residual},
              {"in_omega_k", b.in_omega_k}};
}

json to_json(const GlobalRoot& g) {
  json pts = json::array(), vals = json::array();
  for (const cplx z : g.points) pts.push_back(to_json(z));
  for (const auto& v : g.values) vals.push_back(to_json(v));
  return json{{"label", g.label},
              {"t_class", g.t_class ? json(*g.t_class) : json(nullptr)},
              {"points", std::move(pts)},
              {"values", std::move(vals)}};
}

json to_json(const Permutation& p) {
  json map = json::object();
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    map[p.labels[i].str()] = p.labels[static_cast<std::size_t>(p.image[i])].str();
  json cycles = json::array();
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    json cj = json::array();
    for (const int i : c) cj.push_back(p.labels[static_cast<std::size_t>(i)].str());
    cycles.push_back(std::move(cj));
  }
  return json{{"map", std::move(map)}, {"cycles", std::move(cycles)}, {"identity", p.is_identity()}};
}

json to_json(const GroupTableReport& r) {
  return json{{"k", r.k},
              {"order", r.order},
              {"expected_order", r.expected_order},
              {"kernel_size", r.kernel_size},
              {"s_squared", r.s_squared_ok},
              {"s_power_k", r.s_power_k_ok},
              {"abelian", r.abelian},
              {"closed", r.closed},
              {"zk_x_zk", r.zk_zk},
              {"passed", r.passed()}};
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError("expected [re, im], got " + j.dump());
  return {number(j[0]), number(j[1])};
}

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("expected [q0, q1, q2, q3]");
  return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

CQuat cquat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("expected four [re, im] pairs");
  return {cplx_from_json(j[0]), cplx_from_json(j[1]), cplx_from_json(j[2]), cplx_from_json(j[3])};
}

StemPoly stem_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("stem must be an object");
  StemDomain domain = StemDomain::WHOLE_PLANE;
  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    if (d == "whole") domain = StemDomain::WHOLE_PLANE;
    else if (d == "upper") domain = StemDomain::UPPER_ONLY;
    else throw SchemaError("domain must be \"whole\" or \"upper\"");
  }
  std::vector<cplx> c[4];
  for (int h = 0; h < 4; ++h) {
    const std::string key = "c" + std::to_string(h);
    if (j.contains(key)) c[h] = cplx_list(j.at(key));
  }
  return StemPoly::from_components(c[0], c[1], c[2], c[3], domain);
}

DomainPath path_from_json(const json& j) {
  DomainPath p;
  p.points = cplx_list(field(j, "points"));
  if (p.points.empty()) throw SchemaError("path has no points");
  if (j.contains("closed")) {
    if (!j.at("closed").is_boolean()) throw SchemaError("\"closed\" must be a boolean");
    p.closed = j.at("closed").get<bool>();
  }
  if (j.contains("anchor")) {
    const auto& a = j.at("anchor");
    if (!a.is_number_unsigned() || a.get<std::size_t>() >= p.points.size())
      throw SchemaError("\"anchor\" must index a path point");
    p.anchor = a.get<std::size_t>();
  }
  if (p.closed && p.points.front() != p.points.back()) p.points.push_back(p.points.front());
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace slicepow

#include "slicepow/cli.hpp"

#include <iomanip>
#include <ostream>

#include "slicepow/continuation.hpp"
#include "slicepow/error.hpp"
#include "slicepow/json_io.hpp"
#include "slicepow/power_map.hpp"
#include "slicepow/verification.hpp"

namespace slicepow {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json error_object(std::string_view kind, const std::optional<std::string>& stratum,
                  const std::string& message) {
  return json{{"error",
               {{"kind", kind}, {"stratum", stratum ? json(*stratum) : json(nullptr)}, {"message", message}}}};
}

TrackingOptions tracking(const RunConfig& c) {
  TrackingOptions t;
  t.stratum_tol = c.eps_stratum;
  t.real_tol = c.eps_real;
  t.match_tol = c.eps_match;
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError(what);
}

StemPoly load_stem(const std::string& file) {
  require(!file.empty(), "--stem is required");
  return stem_from_json(read_json_file(file));
}

json global_root_list(const std::vector<GlobalRoot>& roots) {
  json arr = json::array();
  for (const auto& g : roots) arr.push_back(to_json(g));
  return arr;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  require(c.eps_real > 0 && c.eps_stratum > 0 && c.eps_match > 0, "tolerances must be positive");
  const bool needs_k = c.command != Command::StarProd && c.command != Command::Verify &&
                       !(c.command == Command::Classify && c.w_file.empty());
  if (needs_k) require(c.k >= 1, "--k must be a positive integer");

  switch (c.command) {
    case Command::StarPow: {
      emit(out, json{{"k", c.k}, {"stem", to_json(star_power(load_stem(c.stem_file), c.k))}});
      return 0;
    }
    case Command::StarProd: {
      require(!c.other_stem_file.empty(), "--other is required");
      const StemPoly G = stem_from_json(read_json_file(c.other_stem_file));
      emit(out, json{{"stem", to_json(star_product(load_stem(c.stem_file), G))}});
      return 0;
    }
    case Command::RootsPoint: {
      require(!c.w_file.empty(), "--w is required");
      const CQuat w = cquat_from_json(read_json_file(c.w_file));
      json arr = json::array();
      for (const auto& b : point_star_roots(w, c.k, c.eps_stratum)) arr.push_back(to_json(b));
      emit(out, json{{"k", c.k},
                     {"w", to_json(w)},
                     {"stratum", to_string(classify_stratum(w, c.k, c.eps_stratum).tag)},
                     {"branches", std::move(arr)}});
      return 0;
    }
    case Command::RootsGlobal: {
      const StemPoly F = load_stem(c.stem_file);
      require(!c.path_file.empty(), "--path is required");
      DomainPath path = path_from_json(read_json_file(c.path_file));
      if (c.anchor_real) {
        path.anchor.reset();
        for (std::size_t i = 0; i < path.points.size(); ++i)
          if (path.points[i] == cplx(*c.anchor_real, 0.0)) path.anchor = i;
        if (!path.anchor)
          throw Error(ErrorKind::AnchorNotReal, "--anchor-real is not a point of the path");
      } else if (!path.anchor) {
        for (std::size_t i = 0; i < path.points.size() && !path.anchor; ++i)
          if (path.points[i].imag() == 0.0) path.anchor = i;
      }
      if (path.anchor) {
        const auto roots = global_roots_with_real(stem_fn(F), path, c.k, tracking(c));
        emit(out, json{{"k", c.k}, {"mode", "with_real"}, {"anchor", *path.anchor},
                       {"roots", global_root_list(roots)}});
      } else {
        const auto nr = no_real_construction(stem_fn(F), path, c.k, tracking(c));
        json tau = json::object();
        for (std::size_t m = 0; m < nr.tau.size(); ++m)
          tau[nr.upper[m].label] = nr.lower[static_cast<std::size_t>(nr.tau[m])].label;
        emit(out, json{{"k", c.k}, {"mode", "no_real"}, {"tau", std::move(tau)},
                       {"tau_involutive", nr.tau_involutive}, {"roots", global_root_list(nr.roots)}});
      }
      return 0;
    }
    case Command::Monodromy: {
      const StemPoly F = load_stem(c.stem_file);
      require(!c.loop_file.empty(), "--loop is required");
      const DomainPath loop = path_from_json(read_json_file(c.loop_file));
      const Permutation p = monodromy_of_loop(stem_fn(F), loop, c.k, tracking(c));
      emit(out, json{{"k", c.k}, {"basepoint", to_json(loop.points.front())}, {"permutation", to_json(p)}});
      return 0;
    }
    case Command::Classify: {
      if (!c.w_file.empty()) {
        const CQuat w = cquat_from_json(read_json_file(c.w_file));
        const Stratum st = classify_stratum(w, c.k, c.eps_stratum);
        json j{{"k", c.k}, {"stratum", to_string(st.tag)}};
        if (st.tag == StratumTag::V_RSQ)
          j["r"] = PowerTables(c.k).positive_roots()[static_cast<std::size_t>(st.root_index)];
        emit(out, j);
        return 0;
      }
      const StemPoly F = load_stem(c.stem_file);
      require(!c.z_json.empty() && !c.unit_json.empty(), "classify needs --z and --unit (or --w)");
      json zj, uj;
      try {
        zj = json::parse(c.z_json);
        uj = json::parse(c.unit_json);
      } catch (const json::exception& e) {
        throw SchemaError(e.what());
      }
      const cplx z = cplx_from_json(zj);
      const ImUnit unit = ImUnit::from_vector(quaternion_from_json(uj));
      json j{{"z", to_json(z)}, {"unit", to_json(unit.value())},
             {"verdict", to_string(classify_differential(F, z, unit))}};
      try {
        j["phi_multiplicity"] = phi_multiplicity(F, z, unit);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IdenticallyZero) throw;
        j["phi_multiplicity"] = "infinite";
      }
      emit(out, j);
      return 0;
    }
    case Command::GroupTable: {
      emit(out, to_json(verify_group_table(c.k)));
      return 0;
    }
    case Command::Verify: {
      require(c.samples >= 1, "--samples must be positive");
      const auto results = run_invariant_suite({c.seed, c.samples});
      bool all = true;
      out << std::left << std::setw(34) << "check" << std::setw(6) << "ok" << std::setw(14) << "measured"
          << std::setw(12) << "tolerance" << "detail\n";
      for (const auto& r : results) {
        all = all && r.passed;
        std::ostringstream m, t;
        m << std::scientific << std::setprecision(3) << r.measured;
        t << std::scientific << std::setprecision(1) << r.tolerance;
        out << std::setw(34) << r.name << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(14)
            << m.str() << std::setw(12) << t.str() << r.detail << '\n';
      }
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      return all ? 0 : 3;
    }
  }
  return 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    emit(out, error_object(to_string(e.kind()), e.stratum(), e.what()));
    return e.kind() == ErrorKind::InvalidArgument ? 1 : 2;
  } catch (const SchemaError& e) {
    emit(out, error_object("SchemaError", std::nullopt, e.what()));
    return 1;
  } catch (const json::exception& e) {
    emit(out, error_object("SchemaError", std::nullopt, e.what()));
    return 1;
  }
}

}  // namespace slicepow

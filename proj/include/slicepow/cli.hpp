#pragma once

// Command dispatch for the slicepow executable. Parsing of argv lives in
// tools/; this layer takes a filled RunConfig, writes JSON (or the verify
// table) to `out`, and returns the process exit status:
//   0 success, 1 I/O, schema or argument failure, 2 domain failure
//   (structured {"error": {...}} object), 3 verify found a failing check.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "slicepow/complexified.hpp"
#include "slicepow/quaternion.hpp"

namespace slicepow {

enum class Command { StarPow, StarProd, RootsPoint, RootsGlobal, Monodromy, Classify, GroupTable, Verify };

struct RunConfig {
  Command command = Command::Verify;
  int k = 2;

  double eps_real = kRealTolerance;
  double eps_stratum = kStratumTolerance;
  double eps_match = 1e-7;

  std::string stem_file;
  std::string other_stem_file;  // right factor for star-prod
  std::string w_file;
  std::string path_file;
  std::string loop_file;
  std::optional<double> anchor_real;

  // classify: a stem with a point z and unit I, or a point w of C (x) H.
  std::string z_json;     // "[re, im]"
  std::string unit_json;  // "[0, a, b, c]" (normalized)

  int samples = 1000;
  std::uint64_t seed = 20240917;
};

int run(const RunConfig& config, std::ostream& out);

}  // namespace slicepow

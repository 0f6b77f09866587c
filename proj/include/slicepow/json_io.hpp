#pragma once

// JSON encodings used by the CLI. Complex numbers are [re, im] pairs,
// quaternions [q0, q1, q2, q3], points of C (x) H four complex pairs.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "slicepow/continuation.hpp"

namespace slicepow {

using json = nlohmann::json;

/// Malformed input (wrong shape, missing field, unparsable text).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(cplx z);
json to_json(const Quaternion& q);
json to_json(const CQuat& w);
json to_json(const StemPoly& F);
json to_json(const DomainPath& path);
json to_json(const RootBranch& b);
json to_json(const GlobalRoot& g);
json to_json(const Permutation& p);
json to_json(const GroupTableReport& r);

cplx cplx_from_json(const json& j);
Quaternion quaternion_from_json(const json& j);
CQuat cquat_from_json(const json& j);
StemPoly stem_from_json(const json& j);
DomainPath path_from_json(const json& j);

/// Reads and parses a file; SchemaError on I/O or syntax failure.
json read_json_file(const std::string& path);

}  // namespace slicepow

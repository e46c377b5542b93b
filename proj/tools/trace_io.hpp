#ifndef QUADELL_TOOLS_TRACE_IO_HPP
#define QUADELL_TOOLS_TRACE_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quadell/errors.hpp"
#include "quadell/families.hpp"
#include "quadell/transport.hpp"

namespace quadell::cli {

/// Input that failed to parse or validate; the driver maps it to exit 2.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* One problem instance: either a pair of symmetric 4x4 matrices with a
 * rational point, or one of the two built-in families. */
struct Instance {
  QuadricForm a, b;
  ProjectivePoint3 point;
  nlohmann::json echo;  // how the instance reads back in the trace
};

Instance instance_from_json(const nlohmann::json& doc);
Instance instance_from_file(const std::string& path);
Instance euler_instance(const Int& m, const Int& n);
Instance klm_instance(const Int& k, const Int& l, const Int& m);

nlohmann::json trace_to_json(const Instance& inst, const PipelineTrace& trace);
std::string trace_to_text(const Instance& inst, const PipelineTrace& trace);

nlohmann::json point2_json(const ProjectivePoint2& p);
nlohmann::json point3_json(const ProjectivePoint3& p);

/// Parses "a,b,c" or "a,b,c,d" with integer or rational entries.
std::optional<ProjectivePoint2> parse_point2(const std::string& text);
std::optional<ProjectivePoint3> parse_point3(const std::string& text);

nlohmann::json error_json(const Error& e);

}  // namespace quadell::cli

#endif

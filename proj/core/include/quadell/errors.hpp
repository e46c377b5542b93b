#ifndef QUADELL_ERRORS_HPP
#define QUADELL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadell {

enum class ErrorKind {
  ZeroVector,
  PointNotOnIntersection,
  DegenerateIntersection,
  MapUndefined,
  PointNotOnCubic,
  SingularPoint,
  NotOnCurve,
  InflectionShouldHaveShortcut,
  SingularCurve,
  DegenerateCubic,
  NotAProgression,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/* Every failure the transformation chain can report. `where()` names the
 * step or operation that raised it, which the CLI surfaces verbatim. */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string where, const std::string& detail = {})
      : std::runtime_error(std::string(to_string(kind)) + " in " + where +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& where() const { return where_; }

 private:
  ErrorKind kind_;
  std::string where_;
};

}  // namespace quadell

#endif

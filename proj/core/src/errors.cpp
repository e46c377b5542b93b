#include "quadell/errors.hpp"

namespace quadell {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::PointNotOnIntersection: return "PointNotOnIntersection";
    case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorKind::MapUndefined: return "MapUndefined";
    case ErrorKind::PointNotOnCubic: return "PointNotOnCubic";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::InflectionShouldHaveShortcut: return "InflectionShouldHaveShortcut";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::DegenerateCubic: return "DegenerateCubic";
    case ErrorKind::NotAProgression: return "NotAProgression";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace quadell

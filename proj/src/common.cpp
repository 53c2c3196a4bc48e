#include "polysym/common.hpp"

namespace polysym {

void Tolerances::set(std::string_view key, double value) {
  if (key == "geom") geom = value;
  else if (key == "color") color = value;
  else if (key == "kern") kern = value;
  else if (key == "eig") eig = value;
  else if (key == "match") match = value;
  else if (key == "orth") orth = value;
  else if (key == "fd_step") fd_step = value;
  else if (key == "fd_agree") fd_agree = value;
  else if (key == "trust") trust = value;
  else if (key == "max_vertices") max_vertices = static_cast<int>(value);
  else if (key == "group_limit") group_limit = static_cast<long>(value);
  else throw std::invalid_argument("unknown tolerance key: " + std::string(key));
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::SingularAngle: return "SingularAngle";
    case ErrorKind::KernelResidual: return "KernelResidual";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::TooManyCandidates: return "TooManyCandidates";
  }
  return "Error";
}

}  // namespace polysym

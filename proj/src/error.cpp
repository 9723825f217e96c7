#include "qpkit/error.hpp"

namespace qpkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::EmptyRelator: return "EmptyRelator";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::NotStein: return "NotStein";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace qpkit

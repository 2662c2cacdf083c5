#include "uitws/error.hpp"

namespace uitws {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySentence: return "EmptySentence";
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelArity: return "LabelArity";
    case ErrorKind::NotEnoughData: return "NotEnoughData";
    case ErrorKind::ResourceIO: return "ResourceIO";
    case ErrorKind::MalformedEntry: return "MalformedEntry";
    case ErrorKind::NeedsLabels: return "NeedsLabels";
    case ErrorKind::DegenerateLabels: return "DegenerateLabels";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::ModelVersion: return "ModelVersion";
    case ErrorKind::AlignmentError: return "AlignmentError";
  }
  return "Error";
}

}  // namespace uitws

#include "alterfold/common.hpp"

namespace alterfold {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Index: return "index error";
    case ErrorKind::Inconsistent: return "inconsistent declaration";
    case ErrorKind::UnknownName: return "unknown name";
    case ErrorKind::InvalidParams: return "invalid parameters";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::NonEndomorphism: return "not an endomorphism";
    case ErrorKind::Inapplicable: return "inapplicable move";
    case ErrorKind::Unglued: return "unglued face";
    case ErrorKind::NonInvolutive: return "non-involutive gluing";
    case ErrorKind::NonOrientable: return "non-orientable";
    case ErrorKind::Decomposition: return "decomposition failure";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "error";
}

}  // namespace alterfold

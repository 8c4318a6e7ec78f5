#include "tennisball/error.hpp"

namespace tennis {

void throw_error(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tennis

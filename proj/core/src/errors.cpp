#include "thermcap/errors.hpp"

#include <sstream>

namespace thermcap::detail {

void throw_domain(const std::string& what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  throw DomainError(os.str());
}

}  // namespace thermcap::detail

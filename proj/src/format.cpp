#include "spotopt/format.hpp"

#include <cstdlib>
#include <sstream>

namespace spotopt {

std::string format_double(double v) {
  for (int prec = 1; prec <= 17; ++prec) {
    std::ostringstream ss;
    ss.precision(prec);
    ss << v;
    if (std::strtod(ss.str().c_str(), nullptr) == v) return ss.str();
  }
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace spotopt

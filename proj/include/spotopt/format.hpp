#ifndef SPOTOPT_FORMAT_HPP
#define SPOTOPT_FORMAT_HPP

#include <string>

namespace spotopt {

// Shortest decimal representation that round-trips through strtod.
std::string format_double(double v);

}  // namespace spotopt

#endif  // SPOTOPT_FORMAT_HPP

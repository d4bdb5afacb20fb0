#pragma once
// Two failure modes are distinguished everywhere in the library.
//
//   input_error        the caller asked for something outside the documented
//                      domain (malformed field data, a non-curve, p outside
//                      the supported set without the conjectural flag, ...)
//   computation_error  the input was legal but the computation cannot be
//                      completed with the data at hand (splitting data
//                      missing at a ramified prime, factorization budget
//                      exceeded, closure bound exceeded, ...)
//
// The command line maps these to exit codes 2 and 3.

#include <stdexcept>
#include <string>

namespace selbound {

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct computation_error : std::runtime_error {
  explicit computation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace selbound

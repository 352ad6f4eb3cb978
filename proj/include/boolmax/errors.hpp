#ifndef BOOLMAX_ERRORS_HPP
#define BOOLMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boolmax {

// Validation problems (bad arguments, malformed input files) are reported
// with std::invalid_argument.  NumericalFailure is reserved for cases where
// the inputs were valid but a numerical procedure broke down: a root finder
// lost roots to the complex plane, a norming bracket never closed, a tail
// estimate had no usable probes.  The CLI maps the two classes to distinct
// exit codes.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boolmax

#endif  // BOOLMAX_ERRORS_HPP

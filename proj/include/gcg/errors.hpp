#ifndef GCG_ERRORS_HPP
#define GCG_ERRORS_HPP

#include <stdexcept>

namespace gcg {

// An exhaustive search was asked to run above its documented ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcg

#endif  // GCG_ERRORS_HPP

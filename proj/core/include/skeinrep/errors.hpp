#ifndef SKEINREP_ERRORS_HPP
#define SKEINREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skeinrep {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: rejected specs, malformed descriptors, out-of-range labels.
struct usage_error : error {
  explicit usage_error(const std::string& what) : error(what) {}
};

// A cross-check that can only fail if some computation upstream is wrong
// (spectrum outside the expected eigenvalue set, saturation/commutant
// disagreement, cache value mismatch).
struct integrity_error : error {
  explicit integrity_error(const std::string& what) : error(what) {}
};

}  // namespace skeinrep

#endif

#ifndef MINK_ERRORS_HPP
#define MINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mink {

// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input polytope (or point set) does not span the required dimension.
struct NotFullDimensional : Error {
  explicit NotFullDimensional(const std::string& msg) : Error(msg) {}
};

struct TooFewVertices : Error {
  explicit TooFewVertices(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Two distinct vertex tuples of a Minkowski sum landed on the same extreme
// point; such instances are rejected, generators re-draw.
struct DegenerateCoincidence : Error {
  explicit DegenerateCoincidence(const std::string& msg) : Error(msg) {}
};

// A sum face without exact decomposition, or a degenerate spherical overlay
// (concurrent or overlapping arcs).
struct NotGeneralOrientation : Error {
  explicit NotGeneralOrientation(const std::string& msg) : Error(msg) {}
};

struct GeneralOrientationRequired : Error {
  explicit GeneralOrientationRequired(const std::string& msg) : Error(msg) {}
};

// Query on a spherical cell that contains a pole (west is undefined there).
struct PoleCell : Error {
  explicit PoleCell(const std::string& msg) : Error(msg) {}
};

// West ordering queried for a ray on the pole axis.
struct WestUndefined : Error {
  explicit WestUndefined(const std::string& msg) : Error(msg) {}
};

// A mathematical identity this library exists to check failed on a valid
// instance. CLI maps this to exit code 4 so CI can tell it apart from bad
// input.
struct ClaimViolation : Error {
  explicit ClaimViolation(const std::string& msg) : Error(msg) {}
};

// Randomized search (generators) ran out of attempts.
struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

}  // namespace mink

#endif

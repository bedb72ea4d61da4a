#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace towerpc {

// Error kinds map one-to-one onto the CLI's `error=<kind>: <detail>` lines
// and onto its exit codes.
class TowerError : public std::runtime_error {
 public:
  TowerError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct ParseError : TowerError {
  explicit ParseError(const std::string& what) : TowerError("parse-error", what) {}
};

struct StructuralError : TowerError {
  explicit StructuralError(const std::string& what) : TowerError("structural-error", what) {}
};

struct IndexError : TowerError {
  explicit IndexError(const std::string& what) : TowerError("index-out-of-range", what) {}
};

struct NotPrimeError : TowerError {
  explicit NotPrimeError(const std::string& what) : TowerError("not-prime", what) {}
};

struct FormError : TowerError {
  explicit FormError(const std::string& what) : TowerError("form-error", what) {}
};

struct PreconditionError : TowerError {
  explicit PreconditionError(const std::string& what)
      : TowerError("precondition-violation", what) {}
};

struct InconsistencyError : TowerError {
  explicit InconsistencyError(const std::string& what)
      : TowerError("inconsistency-error", what) {}
};

// Raised when an internal invariant is violated; signals inconsistent input
// that slipped past a precondition, or a genuine bug.
struct InternalError : TowerError {
  explicit InternalError(const std::string& what) : TowerError("assertion-failure", what) {}
};

namespace detail {
inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}
}  // namespace detail

}  // namespace towerpc

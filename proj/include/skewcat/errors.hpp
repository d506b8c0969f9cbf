#ifndef SKEWCAT_ERRORS_HPP
#define SKEWCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewcat {

// Base class of all exceptions thrown by the library.  `code()` is a stable
// machine-readable tag; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed input: wrong shape, out-of-range entry, broken order axioms,
// unparsable JSON.  The CLI reports these as input errors (exit 2).
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
};

// A table-building operation would exceed the configured size cap.
struct SizeOverflow : Error {
  explicit SizeOverflow(const std::string& what) : Error("SizeOverflow", what) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionUnmet : Error {
  explicit PreconditionUnmet(const std::string& what) : Error("PreconditionUnmet", what) {}
};

struct NotMonotone : Error {
  explicit NotMonotone(const std::string& what) : Error("NotMonotone", what) {}
};

struct NotProper : Error {
  explicit NotProper(const std::string& what) : Error("NotProper", what) {}
};

struct NotSubdownset : Error {
  explicit NotSubdownset(const std::string& what) : Error("NotSubdownset", what) {}
};

struct NotACongruence : Error {
  explicit NotACongruence(const std::string& what) : Error("NotACongruence", what) {}
};

struct NotDistributiveReflection : Error {
  explicit NotDistributiveReflection(const std::string& what)
      : Error("NotDistributiveReflection", what) {}
};

// Two sections disagree on the overlap of their domains.
struct IncompatibleFamily : Error {
  int i, j, point;
  IncompatibleFamily(int i_, int j_, int point_)
      : Error("IncompatibleFamily",
              "sections " + std::to_string(i_) + " and " + std::to_string(j_) +
                  " disagree at point " + std::to_string(point_)),
        i(i_), j(j_), point(point_) {}
};

// The patching construction failed to reproduce the requested section.
struct NoRealization : Error {
  explicit NoRealization(const std::string& what) : Error("NoRealization", what) {}
};

// A structural fact the theory guarantees failed to hold at runtime.  Always a
// bug in the library or a corrupted value, never a user error.
struct InternalCompatibilityViolation : Error {
  explicit InternalCompatibilityViolation(const std::string& what)
      : Error("InternalCompatibilityViolation", what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalCompatibilityViolation(what);
}

}  // namespace skewcat

#endif  // SKEWCAT_ERRORS_HPP

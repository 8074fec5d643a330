#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Evaluation requested at a pole (Gamma at -n, zeta at 1, ...).
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Argument outside an operation's domain (x <= 0, x == 1, ...).
class domain_violation : public std::domain_error {
 public:
  explicit domain_violation(const std::string& what) : std::domain_error(what) {}
};

// A truncated computation cannot certify its stated tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// hardy_z asked for a family without a canonical real rotation.
class unsupported_family_error : public std::invalid_argument {
 public:
  explicit unsupported_family_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Sign-change scan and argument-principle count disagree after refinement.
class completeness_error : public std::runtime_error {
 public:
  explicit completeness_error(const std::string& what) : std::runtime_error(what) {}
};

// A zero bracket touched the axis without crossing it.
class multiplicity_suspected_error : public std::runtime_error {
 public:
  explicit multiplicity_suspected_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Argument tracking lost phase continuity even at the smallest step.
class evaluation_failure : public std::runtime_error {
 public:
  explicit evaluation_failure(const std::string& what) : std::runtime_error(what) {}
};

// Persistent-file problems; carries the 1-based offending line when known.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (row " + std::to_string(line) + ")"
                                     : what),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace zetalab

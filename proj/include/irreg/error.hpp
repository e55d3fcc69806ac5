#pragma once

#include <stdexcept>
#include <string>

namespace irreg {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
      : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class range_error : public error {
 public:
  using error::error;
};

/// Structurally invalid input, e.g. a self-loop.
class validity_error : public error {
 public:
  using error::error;
};

/// graph6 byte outside [63,126] or a truncated bit field.
class encoding_error : public error {
 public:
  using error::error;
};

/// Operation evaluated outside its mathematical domain.
class domain_error : public error {
 public:
  using error::error;
};

class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double best_estimate, long iterations)
      : error(what), best_estimate_(best_estimate), iterations_(iterations) {}
  double best_estimate() const noexcept { return best_estimate_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double best_estimate_;
  long iterations_;
};

}  // namespace irreg

#ifndef PREXT_ERRORS_HPP
#define PREXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prext {

// Thrown when a cost guard (vertex/size limit) or a solver node budget stops
// a computation before it finishes.  Distinct from invalid input.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace prext

#endif

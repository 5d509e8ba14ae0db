#ifndef RDV_ERRORS_H_
#define RDV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rdv {

// Structurally invalid graph or instance (self-loop, parallel edge,
// disconnected graph, non-positive weight, ...).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance file could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Protocol requires a weight-function class the instance does not have.
class ClassMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A received bit string does not decode under the protocol's schema.
class MalformedMessage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rdv

#endif  // RDV_ERRORS_H_

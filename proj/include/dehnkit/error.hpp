#pragma once

#include <stdexcept>
#include <string>

namespace dehnkit {

enum class ErrorKind {
  cap_exceeded,
  mixed_carriers,
  bound_exceeded,
  not_automorphism,
  seeds_do_not_generate,
  parse_error,
  invalid_arc_usage,
  unknown_generator,
  length_mismatch,
  degenerate_form,
  axiom_violation,
  bad_input,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dehnkit

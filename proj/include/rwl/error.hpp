#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rwl {

enum class ErrorKind {
  invalid_spec,
  parse_error,
  loop_rejected,
  vertex_out_of_range,
  too_large,
  order_mismatch,
  zero_constant_term,
  constant_term_not_one,
  nonzero_inner_constant,
  index_out_of_range,
  invalid_n,
  non_integral,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, int line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based input line for parse failures, 0 otherwise.
  int line() const noexcept { return line_; }

private:
  ErrorKind kind_;
  int line_;
};

}  // namespace rwl

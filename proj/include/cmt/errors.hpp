#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmt {

// Raised for malformed formula or file text; pos is a byte offset into the input.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t pos_)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct vocab_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filter would not be proper (empty kernel).
struct filter_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructed universe would exceed the configured size bound.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure fails a precondition (not reduced, not increasing, bad grid).
struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariant breakage inside the library itself; never a user error.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cmt

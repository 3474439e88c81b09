#pragma once

#include <stdexcept>
#include <string>

namespace monodeg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction parameters violate a feasibility requirement; the message
// names the violated inequality.
struct InfeasibleError : Error {
  using Error::Error;
};

// Enumeration would exceed the configured search budget.
struct BudgetError : Error {
  using Error::Error;
};

struct Graph6Error : Error {
  std::size_t offset;
  Graph6Error(const std::string& msg, std::size_t off)
      : Error(msg + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

enum class ColoringErrorKind {
  bad_header,
  bad_record,
  unknown_edge,
  duplicate_edge,
  missing_edge,
  color_out_of_range,
  graph_mismatch,
};

struct ColoringError : Error {
  ColoringErrorKind kind;
  std::size_t line;
  ColoringError(ColoringErrorKind k, const std::string& msg, std::size_t ln)
      : Error(msg + " (line " + std::to_string(ln) + ")"), kind(k), line(ln) {}
};

}  // namespace monodeg

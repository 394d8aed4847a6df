#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treesplit {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Base class for errors raised by the library. Parameter validation uses
/// std::invalid_argument; everything else derives from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An embedding violates a hypothesis of planar duality (e.g. a bridge with
/// the same face on both of its sides).
class DualityError : public Error {
 public:
  using Error::Error;
};

/// An edge set that was supposed to be a spanning tree/forest is not one.
class NotATreeError : public Error {
 public:
  using Error::Error;
};

/// A walk or sampler loop exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace treesplit

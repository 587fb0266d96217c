#pragma once

#include <stdexcept>
#include <string>

namespace dseidel {

/// Input text could not be decoded as a graph.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distance-based quantity was requested for a graph with more than one component.
class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph() : std::runtime_error("graph is not connected") {}
  using std::runtime_error::runtime_error;
};

/// Parameters outside the validity range of a family or construction.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal arithmetic invariant failed (e.g. an inexact division that must be exact).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dseidel

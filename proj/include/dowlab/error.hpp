#pragma once

#include <stdexcept>
#include <string>

namespace dowlab {

// Index outside the triangle 0 <= k <= n, or a coefficient past a series'
// truncation order.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed polynomial or rational text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid parameters: m < 1, unknown family, bad series division, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dowlab

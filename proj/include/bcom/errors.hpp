#pragma once

#include <stdexcept>
#include <string>

namespace bcom {

// Structural problem with the input (bad table, illegal pair of cosimplicial
// specs, malformed JSON, ...). CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded. CLI maps this to exit code 3.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bcom

#pragma once

#include <stdexcept>
#include <string>

namespace refsig {

// Raised for invalid inputs: bad arguments, malformed files, contract
// violations the caller can fix. The CLI maps it to exit code 2; plain
// std::runtime_error (I/O failures and the like) maps to exit code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace refsig

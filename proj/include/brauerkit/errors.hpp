// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace brauerkit {

// Malformed input: bad indices, unparsable text, type mismatches.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (matrix dimension) would be exceeded.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A guard that should be unreachable fired (e.g. the rewrite step budget).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace brauerkit

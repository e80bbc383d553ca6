#pragma once

#include <stdexcept>
#include <string>

namespace ctk {

/// Shape or size contract violated (mismatched dims, zero extents, wrong vector length).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure: non-finite values, singular systems, division hazards, breakdown
/// where the caller cannot continue.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or malformed files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A model configuration outside what the library supports.
class UnsupportedModelError : public std::invalid_argument {
public:
    explicit UnsupportedModelError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ctk

#pragma once

#include <stdexcept>
#include <string>

namespace mucode {

/// Violated precondition or invalid argument. CLI exit 1, prefix E_PARAM.
class parameter_error : public std::invalid_argument {
  public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Instance exceeds a configured resource ceiling. CLI exit 1, prefix E_CAPACITY.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Encoded input is malformed or internally inconsistent. CLI exit 2, prefix E_CORRUPT.
class corruption_error : public std::runtime_error {
  public:
    explicit corruption_error(const std::string& what) : std::runtime_error(what) {}
};

/// Received word lies outside the decoder's error model. CLI exit 2, prefix E_CORRUPT.
class decode_failure : public corruption_error {
  public:
    explicit decode_failure(const std::string& what) : corruption_error(what) {}
};

}  // namespace mucode

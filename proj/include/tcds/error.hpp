#pragma once

#include <stdexcept>
#include <string>

namespace tcds {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_a_group : error {
  using error::error;
};

struct invalid_order : error {
  using error::error;
};

struct shape_mismatch : error {
  using error::error;
};

struct system_mismatch : error {
  using error::error;
};

struct not_unitary : error {
  using error::error;
};

struct numerical_failure : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct overflow_error : error {
  using error::error;
};

}  // namespace tcds

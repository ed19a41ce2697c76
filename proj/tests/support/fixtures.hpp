#pragma once

#include <string>

#include "autoequiv/errors.hpp"
#include "autoequiv/model_io.hpp"

namespace autoequiv::testing {

inline std::string data_path(const std::string& name) {
  return std::string(AUTOEQUIV_TEST_DATA) + "/" + name;
}

/// Loads a fixture that must be valid.
inline MultiModel fixture(const std::string& name) {
  auto r = load_model_file(data_path(name));
  if (!r.ok()) throw ValidationError("fixture " + name + " is invalid");
  return *r.model;
}

}  // namespace autoequiv::testing

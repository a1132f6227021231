#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "infocoh/json_io.hpp"
#include "infocoh/structure.hpp"

#ifndef INFOCOH_FIXTURES
#error "INFOCOH_FIXTURES must point at the fixture directory"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(INFOCOH_FIXTURES) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fixtures are all valid; throwing keeps test bodies free of plumbing.
inline infocoh::Structure load_fixture(const std::string& name) {
  auto raw = infocoh::load_structure_file(fixture_path(name));
  auto out = infocoh::validate(raw);
  if (!out.ok()) throw std::runtime_error("fixture " + name + " failed validation");
  return *std::move(out.structure);
}

}  // namespace testutil

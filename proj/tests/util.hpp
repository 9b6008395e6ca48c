#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "ba/error.hpp"

namespace test_util {

// Runs f and reports which error kind it threw, if any.
template <typename F>
std::optional<ba::ErrorKind> raises(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const ba::Error& e) {
    return e.kind();
  }
}

inline std::string corpus_file(const std::string& name) {
  return std::string(BANOT_CORPUS_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace test_util

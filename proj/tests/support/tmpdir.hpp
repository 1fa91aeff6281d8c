#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

namespace ctxstat::testing {

// Fresh scratch directory under CTXSTAT_TEST_TMP (or the system temp dir).
inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* base = std::getenv("CTXSTAT_TEST_TMP");
  auto dir = (base ? std::filesystem::path(base) : std::filesystem::temp_directory_path() / "ctxstat") / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ctxstat::testing

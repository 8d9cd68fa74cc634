#include "argmine/resources.hpp"

#include <cstdlib>

#ifndef ARGMINE_DEFAULT_DATA_DIR
#define ARGMINE_DEFAULT_DATA_DIR "data"
#endif

namespace argmine {

std::filesystem::path data_directory(const std::optional<std::filesystem::path>& override_dir) {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv("ARGMINE_DATA"); env && *env) return env;
  return ARGMINE_DEFAULT_DATA_DIR;
}

}  // namespace argmine

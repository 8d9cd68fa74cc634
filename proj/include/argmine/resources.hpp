#pragma once

#include <filesystem>
#include <optional>

namespace argmine {

// Directory holding lexicon/ and emoji.tsv: the explicit override if given,
// else $ARGMINE_DATA, else the data/ directory of the source tree.
std::filesystem::path data_directory(const std::optional<std::filesystem::path>& override_dir = {});

}  // namespace argmine

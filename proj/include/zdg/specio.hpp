#pragma once

#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

RingSpec parse_spec(const std::string& json_text);
RingSpec load_spec(const std::string& path);
std::string spec_to_json(const RingSpec& spec);

// Custom partition file: a JSON list of blocks of element ids.
std::vector<std::vector<int>> load_partition(const std::string& path);

// One ring name per line; '#' starts a comment.
std::vector<std::string> load_manifest(const std::string& path);

} // namespace zdg

#pragma once

#include <map>
#include <string>

namespace hocolim::io {

/// Bundled instance files by id (file stem under data/instances).
const std::map<std::string, std::string>& bundled_examples();

}  // namespace hocolim::io

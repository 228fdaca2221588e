#pragma once

#include <string>
#include <vector>

#include "logchern/arrangements.hpp"

namespace logchern {

struct BundledExample {
  std::string name;  // file stem under data/arrangements
  std::string description;
  std::string json;
};

const std::vector<BundledExample>& bundled_examples();
// Throws InputError for an unknown name.
Arrangement bundled_arrangement(const std::string& name);

}  // namespace logchern

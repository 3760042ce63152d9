#pragma once

#include <string>
#include <vector>

namespace wres {

/// One verification record. Flags are warnings and never turn a record red.
struct CheckRecord {
  std::string check;
  std::string name;
  std::string computed;
  std::string expected;
  bool match = false;
  std::string anchor;
  std::vector<std::string> flags;
};

}  // namespace wres

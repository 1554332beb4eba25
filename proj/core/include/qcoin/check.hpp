#pragma once

#include <string>
#include <vector>

namespace qcoin {

struct CheckItem {
  std::string label;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }

  int failure_count() const {
    int n = 0;
    for (const auto& item : items)
      if (!item.pass) ++n;
    return n;
  }
};

}  // namespace qcoin

// Verification reports shared by every sweep.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pita/finskel.hpp"

namespace pita {

struct Violation {
  std::string check;
  std::vector<FinMap> witnesses;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> skipped;
  // Informational lines that do not affect ok().
  std::vector<std::string> notes;
  // Sweeps stop collecting once this many violations are recorded; 0 means
  // no limit.
  std::size_t limit = 0;

  bool ok() const { return violations.empty(); }
  bool full() const { return limit != 0 && violations.size() >= limit; }

  // Counts one check; records a violation when !holds.
  bool expect(bool holds, const std::string& check,
              std::vector<FinMap> witnesses, const std::string& lhs,
              const std::string& rhs);
  // Lazy form for hot loops: make() builds the Violation only on failure.
  template <class Make>
  bool check(bool holds, Make&& make) {
    ++checked;
    if (!holds && !full()) violations.push_back(make());
    return holds;
  }
  void merge(const Report& other);
};

std::string render_table(const Report& r);

}  // namespace pita

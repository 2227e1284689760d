#include "pita/report.hpp"

#include <algorithm>
#include <sstream>

namespace pita {

bool Report::expect(bool holds, const std::string& check,
                    std::vector<FinMap> witnesses, const std::string& lhs,
                    const std::string& rhs) {
  ++checked;
  if (!holds && !full()) {
    violations.push_back({check, std::move(witnesses), lhs, rhs});
  }
  return holds;
}

void Report::merge(const Report& other) {
  checked += other.checked;
  for (const auto& v : other.violations) {
    if (full()) break;
    violations.push_back(v);
  }
  skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string render_table(const Report& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"check", "witnesses", "lhs", "rhs"});
  for (const auto& v : r.violations) {
    std::string w;
    for (std::size_t k = 0; k < v.witnesses.size(); ++k) {
      if (k) w += " ";
      w += v.witnesses[k].str();
    }
    rows.push_back({v.check, w, v.lhs, v.rhs});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream os;
  os << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checked
     << " checks, " << r.violations.size() << " violations)\n";
  for (const auto& s : r.skipped) os << "  skipped: " << s << "\n";
  for (const auto& s : r.notes) os << "  note: " << s << "\n";
  if (!r.ok()) {
    for (const auto& row : rows) {
      os << "  ";
      for (std::size_t c = 0; c < 4; ++c) {
        os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace pita

// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#include "levyfield/report.hpp"

#include <cstdio>
#include <sstream>

namespace levyfield {

void RunReport::merge(const RunReport& other, const std::string& prefix) {
  for (CheckEntry e : other.checks) {
    e.name = prefix + e.name;
    add(std::move(e));
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << "CHECK " << c.name << " " << format_double(c.max_error) << " "
       << format_double(c.tolerance) << " " << (c.pass ? "PASS" : "FAIL") << "\n";
  os << "RESULT " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace levyfield

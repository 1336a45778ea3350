// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace levyfield {

/// One verified identity: its worst observed error, the absolute tolerance
/// it was held to, and the verdict.
struct CheckEntry {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline CheckEntry make_check(std::string name, double max_error, double tolerance) {
  CheckEntry e;
  e.name = std::move(name);
  e.max_error = max_error;
  e.tolerance = tolerance;
  e.pass = (max_error == max_error) && max_error <= tolerance;  // NaN fails
  return e;
}

/// Result of one command or verification run. `pass` is maintained as the
/// conjunction of the entries. Timing and timestamp are optional so that
/// reports can be byte-deterministic.
struct RunReport {
  std::string command;
  std::vector<CheckEntry> checks;
  bool pass = true;
  double elapsed_seconds = -1.0;  // < 0: suppressed
  std::string timestamp;          // empty: suppressed

  void add(CheckEntry e) {
    pass = pass && e.pass;
    checks.push_back(std::move(e));
  }
  void add(std::string name, double max_error, double tolerance) {
    add(make_check(std::move(name), max_error, tolerance));
  }
  void merge(const RunReport& other, const std::string& prefix = "");

  /// Line-oriented text form: one `CHECK name max_error tol PASS|FAIL` per
  /// entry plus a trailing RESULT line.
  std::string to_text() const;
};

/// Fixed-precision scientific rendering used by both text and JSON output;
/// keeps reports byte-identical across runs.
std::string format_double(double v);

}  // namespace levyfield

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpo {

struct GoldenItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

// Worked examples with known answers, replayed by `check --suite paper-golden`.
std::vector<GoldenItem> paperGolden();

// Runs one command line (args[0] is the program name). Exit codes: 0 success,
// 1 a requested check failed, 2 bad arguments or input, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpo

// Acceptance runner: one pass/fail line per criterion.
//   acceptance            run all criteria
//   acceptance --only N   run criterion N

#include <cstring>
#include <iostream>
#include <string>

#include "qreg/acceptance.hpp"

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
    only = std::stoi(argv[2]);
  } else if (argc != 1) {
    std::cerr << "usage: acceptance [--only N]\n";
    return 2;
  }

  int failed = 0;
  int ran = 0;
  for (const auto& c : qreg::acceptance::criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto r = qreg::acceptance::run(c);
    std::cout << qreg::acceptance::format(r) << '\n';
    ++ran;
    failed += r.passed ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "no criterion with id " << only << '\n';
    return 2;
  }
  if (only == 0) std::cout << ran - failed << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

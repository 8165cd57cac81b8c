// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "partfn/acceptance.hpp"

int main(int argc, char** argv) {
  partfn::AcceptanceOptions opt;
  if (argc > 1) opt.threads = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  auto report = partfn::run_acceptance(opt, [](const partfn::CriterionResult& r) {
    std::printf("%s\n", partfn::format_criterion_line(r).c_str());
    std::fflush(stdout);
  });
  std::printf("%s: %zu criteria\n", report.all_pass() ? "ALL PASS" : "FAILURES", report.criteria.size());
  return report.all_pass() ? 0 : 1;
}

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.
#include <iostream>
#include <string>

#include "hesscurve/reproduce.hpp"

int main(int argc, char** argv) {
  hesscurve::SuiteOptions options;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--figures") options.figure_dir = argv[i + 1];
    else if (flag == "--data") options.data_dir = argv[i + 1];
    else {
      std::cerr << "usage: acceptance_test [--figures DIR] [--data DIR]\n";
      return 2;
    }
  }
  int failed = 0;
  hesscurve::run_paper_suite(options, [&](const hesscurve::CriterionResult& r) {
    std::cout << hesscurve::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed;
}

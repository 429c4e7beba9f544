#include "ssice/acceptance.hpp"

#include <cstdio>
#include <string>

using namespace ssice::acceptance;

int main(int argc, char** argv) {
  Options options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto r = run_criterion(c, options);
    std::printf("[%s] %2d %-16s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, c.name.c_str(), r.seconds,
                r.detail.c_str());
    for (const auto& f : r.failures)
      std::printf("       at %s: lhs %s rhs %s %s\n", ssice::to_string(f.point).c_str(), ssice::to_string(f.lhs).c_str(),
                  ssice::to_string(f.rhs).c_str(), f.note.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return failed == 0 ? 0 : 1;
}

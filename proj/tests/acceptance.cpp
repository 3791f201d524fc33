// Acceptance run: one CLI invocation per criterion, checked for exit status,
// report content and wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ffp/cli.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> args;
  double budget_seconds;
  std::function<bool(const std::string&)> check;
};

bool report_passed(const std::string& out) {
  try {
    const auto j = nlohmann::json::parse(out);
    return j.at("all_passed").get<bool>();
  } catch (const std::exception&) {
    return false;
  }
}

bool hermite_rows(const std::string& out) {
  return out.find("m_2 = 1 - 1/d\n") != std::string::npos && out.find("m_4 = 2 - 5/d + 3/d^2\n") != std::string::npos &&
         out.find("m_6 = 5 - 22/d + 32/d^2 - 15/d^3\n") != std::string::npos;
}

std::vector<std::string> verify(const std::string& identity) { return {"verify", "--identity", identity, "--seed", "7"}; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hermite 1/d expansions (n=2,4,6)", {"expand", "--family", "hermite"}, 5, hermite_rows},
      {2, "product formulas, 200 cases per d in 2..8", verify("thm1.1"), 120, report_passed},
      {3, "genus decomposition n<=7 with k=0,1 enumerator checks", verify("genus-expansion"), 600, report_passed},
      {4, "first-order coefficient equals annular sum, n<=8", verify("thm1.3"), 300, report_passed},
      {5, "infinitesimal constants by three paths", verify("infinitesimal-constants"), 300, report_passed},
      {6, "R_inf, Markov identity to order 9", verify("thm5.2"), 60, report_passed},
      {7, "Moebius algebra n<=5 and counting formulas n<=7", verify("appendix"), 300, report_passed},
      {8, "convergence trends, ratio window [1.5,2.5]", verify("trends"), 60, report_passed},
      {9, "second-order functional equation to total order 8", verify("lemma2.1"), 120, report_passed},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = ffp::cli::run(c.args, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool content = c.check(out.str());
    const bool in_time = seconds < c.budget_seconds;
    const bool ok = code == 0 && content && in_time;
    if (!ok) ++failures;
    std::string cmd = "ffp";
    for (const auto& a : c.args) cmd += " " + a;
    std::printf("criterion %d: %s  %s  [%.2f s / %.0f s]  %s\n", c.id, ok ? "PASS" : "FAIL", c.title, seconds,
                c.budget_seconds, cmd.c_str());
    if (!ok) {
      std::printf("  exit=%d content=%s in_time=%s\n", code, content ? "ok" : "bad", in_time ? "yes" : "no");
      if (!err.str().empty()) std::printf("  stderr: %s", err.str().c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

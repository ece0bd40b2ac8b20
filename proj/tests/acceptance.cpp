// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are exact equality throughout; the time limits
// are the ones printed next to each line.

#include "qkchev/checks.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

using namespace qkchev;

namespace {

// Edges of the G2 graph against the hand-transcribed file: "B|Q src tgt".
void compare_g2_golden(Workbench& wb, CheckReport& rep) {
  const Context& ctx = wb.context("G2");
  const WeylGroup& g = ctx.group();
  std::ifstream in(std::string(QK_TEST_DATA) + "/g2_qbg_golden.txt");
  ++rep.instances;
  if (!in) {
    rep.fail("golden file g2_qbg_golden.txt not readable");
    return;
  }
  std::set<std::tuple<char, Elem, Elem>> golden, built;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind, src, tgt;
    ls >> kind >> src >> tgt;
    golden.emplace(kind[0], g.parse(src), g.parse(tgt));
  }
  for (Elem x : ctx.full().vertices())
    for (const QbgEdge& e : ctx.full().out_edges(x))
      built.emplace(e.kind == EdgeKind::Bruhat ? 'B' : 'Q', e.source, e.target);
  if (golden != built)
    rep.fail("G2 graph differs from the golden file (" + std::to_string(built.size()) + " edges built, " +
             std::to_string(golden.size()) + " transcribed)");
}

}  // namespace

int main() {
  Workbench wb;
  bool ok = true;
  run_acceptance(
      wb, 2, [&](CheckReport& rep) { compare_g2_golden(wb, rep); },
      [&](const Criterion& c) {
        ok = ok && c.passed();
        std::printf("%s criterion %2d: %s (%lld instances, %lld failed, %.2f s", c.passed() ? "PASS" : "FAIL",
                    c.number, c.title.c_str(), c.report.instances, c.report.failed, c.seconds);
        if (c.time_limit > 0) std::printf(", limit %.0f s", c.time_limit);
        std::printf(")\n");
        if (!c.report.detail.empty()) std::printf("     %s\n", c.report.detail.c_str());
        for (const auto& f : c.report.failures) std::printf("     %s\n", f.c_str());
        std::fflush(stdout);
      });
  return ok ? 0 : 1;
}

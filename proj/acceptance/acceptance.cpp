// Acceptance suite: one pass/fail line per criterion.
//   acceptance            run all criteria
//   acceptance --criterion N

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qheun/runner.hpp"

using namespace qheun;

namespace {

// Pinned settings. All identities are checked for exact equality; there is
// no numeric tolerance anywhere.
constexpr std::uint64_t kSeed = 20240611;
constexpr int kQHahnSets = 20;
constexpr int kCharSets = 20;
constexpr int kHeunAwSets = 10;
constexpr int kTripleSets = 3;
constexpr int kPastroSets = 10;
constexpr int kPastroNmax = 10;
constexpr int kGridSets = 5;
constexpr int kEigenSets = 10;
constexpr int kEigenNmax = 10;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Report suite(const std::string& name, int trials, std::map<std::string, std::string> extra = {}) {
  extra["suite"] = name;
  extra["trials"] = std::to_string(trials);
  extra["seed"] = std::to_string(kSeed);
  return run_suite(resolve_config(extra));
}

std::string first_failures(const Report& r, std::size_t limit = 3) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& rec : r.records) {
    if (rec.passed()) continue;
    if (shown++ == limit) {
      out += " ...";
      break;
    }
    out += (out.empty() ? "" : " | ") + rec.name + (rec.witness.empty() ? "" : " [" + rec.witness.substr(0, 160) + "]");
  }
  return out;
}

std::string tally(const Report& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.records.size()) + " records";
}

Outcome criterion1() {
  Outcome o;
  const Report r = suite("qhahn", kQHahnSets);
  o.require(r.records.size() == static_cast<std::size_t>(kQHahnSets), "expected one record per set");
  o.require(r.ok(), "q-Hahn relations: " + first_failures(r));
  o.detail = o.ok ? tally(r) + ", residuals exactly zero" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Report r = suite("characterizations", kCharSets, {{"nmax", "8"}});
  o.require(r.ok(), first_failures(r));
  if (o.ok) o.detail = tally(r) + ", degree raising to n=12, bands to n=8";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Report aw = suite("heun-aw", kHeunAwSets);
  const Report deg = suite("degenerations", kHeunAwSets);
  std::size_t printed_fail = 0, other_fail = 0;
  for (const auto& rec : aw.records) {
    if (rec.passed()) continue;
    const bool printed = rec.name.find("printed") != std::string::npos;
    (printed ? printed_fail : other_fail) += 1;
  }
  o.require(other_fail == 0, "corrected-extras fit: " + first_failures(aw));
  o.require(printed_fail == 0, std::to_string(printed_fail) +
                                   " records on the printed e1..e4 fail (fitted e2, e4 differ from the printed "
                                   "values; the fit is inconsistent with them), e.g. " +
                                   first_failures(aw, 1));
  o.require(deg.ok(), "degenerations: " + first_failures(deg));
  if (o.ok) o.detail = tally(aw) + " heun-aw, " + tally(deg) + " degenerations";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Report r = suite("aw-triple", kTripleSets);
  o.require(r.ok(), first_failures(r));
  std::string fields;
  for (const auto& rec : r.records)
    for (const auto& [k, v] : rec.inputs)
      if (k == "field" && rec.name.find("verified") != std::string::npos) fields += " " + v;
  if (o.ok) o.detail = tally(r) + ", fields:" + fields;
  // Fixed set that needs sqrt(15).
  const auto ex = solve_aw_triple(Params(Rational(2), Rational(1, 3), Rational(1, 5), Rational(1, 7)));
  o.require(ex.status == TripleStatus::Solved && ex.verified, "q=2 a=1/3 b=1/5 c=1/7 not solved: " + ex.reason);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Report r = suite("pastro", kPastroSets, {{"nmax", std::to_string(kPastroNmax)}});
  o.require(r.ok(), first_failures(r));
  o.require(pastro_lambda(Rational(2), 2) == Rational(4), "lambda_2 at q=2 is not 4");
  if (o.ok) o.detail = tally(r) + ", GEVP to n=10, recurrence to n=8";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string parts;
  for (int n : {2, 4, 8}) {
    const Report r = suite("finite-matrix", kGridSets, {{"N", std::to_string(n)}});
    o.require(r.ok(), "N=" + std::to_string(n) + ": " + first_failures(r));
    parts += " N=" + std::to_string(n) + " " + tally(r);
  }
  if (o.ok) o.detail = parts.substr(1);
  return o;
}

Outcome criterion7() {
  Outcome o;
  RationalSampler rng(kSeed);
  int sets = 0;
  while (sets < kEigenSets) {
    const Rational q = rng.nonzero(), a = rng.nonzero(), b = rng.nonzero(), c = rng.nonzero();
    if (q == Rational(1) || q == Rational(-1) || detail::Drawer::generic_reason(q, a, b)) continue;
    std::optional<Params> maybe;
    try {
      maybe.emplace(q, a, b, c);
    } catch (const Error&) {
      continue;
    }
    const Params& p = *maybe;
    ++sets;
    const SkewOperator y = big_qjacobi_operator(p);
    const Poly x = Poly::x();
    for (int n = 0; n <= kEigenNmax; ++n) {
      const Poly phi = pochhammer_basis(p.q, n), next = pochhammer_basis(p.q, n + 1);
      const Poly prev = n > 0 ? pochhammer_basis(p.q, n - 1) : Poly();
      const std::string at = " (" + p.to_string() + ", n=" + std::to_string(n) + ")";
      o.require(y.apply(phi) == lambda_n(p, n) * phi + mu_n(p, n) * prev, "Y phi_n" + at);
      o.require(x * phi == p.q.pow(-n) * (phi - next), "x phi_n" + at);
      const Poly pn = big_qjacobi_poly(p, n);
      o.require(pn.degree() == n && (y.apply(pn) - lambda_n(p, n) * pn).is_zero(), "big q-Jacobi residual" + at);
    }
  }
  if (o.ok) o.detail = std::to_string(sets) + " sets, n <= 10, all residuals exactly zero";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QHEUN_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion8() {
  Outcome o;
  // In-process: same config renders the same bytes; a new seed changes them.
  auto cfg = resolve_config({{"suite", "pastro"}, {"trials", "3"}, {"seed", "7"}});
  const std::string r1 = render_report(cfg, run_suite(cfg)), r2 = render_report(cfg, run_suite(cfg));
  o.require(r1 == r2, "in-process reports differ");
  auto other = resolve_config({{"suite", "pastro"}, {"trials", "3"}, {"seed", "8"}});
  o.require(render_report(other, run_suite(other)) != r1, "seed has no effect");

  // Through the executable.
  const std::string dir = std::filesystem::temp_directory_path() / "qheun_acceptance_";
  const std::string a = dir + "a.json", b = dir + "b.json";
  const std::string base = "run --suite aw-triple --trials 2 --seed 11 --out ";
  o.require(run_cli(base + a) == 0, "passing run did not exit 0");
  o.require(run_cli(base + b) == 0, "second passing run did not exit 0");
  o.require(!slurp(a).empty() && slurp(a) == slurp(b), "CLI reports are not byte-identical");
  // A suite with failing records exits nonzero; configuration errors exit 2.
  o.require(run_cli("run --suite heun-aw --trials 1 --out " + dir + "c.json") == 1, "failing run did not exit 1");
  o.require(run_cli("run --suite qhahn --q 1") == 2, "q = 1 did not raise a config error");
  o.require(run_cli("run --suite pastro --pastro-a 0") == 2, "Pastro a = 0 did not raise a config error");
  o.require(run_cli("run --suite nope") == 2, "unknown suite did not raise a config error");
  if (o.ok) o.detail = "byte-identical reports; exit codes 0/1/2 as expected";
  return o;
}

struct Criterion {
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"q-Hahn realization", 5, criterion1},        {"characterization equivalences", 30, criterion2},
      {"Heun-AW fit", 60, criterion3},              {"AW triple", 120, criterion4},
      {"Pastro", 10, criterion5},                   {"finite q-Hahn restriction", 5, criterion6},
      {"eigen-data", 5, criterion7},                {"determinism and reporting", 60, criterion8}};
  return all;
}

bool run_one(std::size_t idx) {
  const auto& c = criteria()[idx];
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
  }
  char took[32];
  std::snprintf(took, sizeof took, "%.2f s", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << idx + 1 << " " << c.title << " [" << took << "]: "
            << o.detail << std::endl;
  return o.ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::size_t> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > static_cast<int>(criteria().size())) {
        std::cerr << "criterion must be 1.." << criteria().size() << "\n";
        return 2;
      }
      only = static_cast<std::size_t>(n - 1);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool ok = true;
  for (std::size_t i = 0; i < criteria().size(); ++i)
    if (!only || *only == i) ok = run_one(i) && ok;
  return ok ? 0 : 1;
}

#ifndef QHEUN_RUNNER_HPP
#define QHEUN_RUNNER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qheun/aw_triple.hpp"
#include "qheun/checks.hpp"
#include "qheun/heun.hpp"
#include "qheun/pastro.hpp"
#include "qheun/relations.hpp"
#include "qheun/report.hpp"

namespace qheun {

inline constexpr const char* kVersion = "qheun 0.1.0";

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qhahn",   "heun-aw",    "degenerations", "tridiagonal",
                                              "characterizations", "pastro", "aw-triple", "finite-matrix"};
  return names;
}

/// Rational-valued flags, in report order.
inline const std::vector<std::string>& rational_keys() {
  static const std::vector<std::string> keys{"q",    "a",    "b",    "c",        "tau0",    "tau1",
                                             "tau2", "tau3", "tau4", "pastro-a", "pastro-b"};
  return keys;
}

struct RunConfig {
  std::string suite;
  std::map<std::string, Rational> fixed;  // explicit rationals keyed as in rational_keys()
  int trials = 10;
  std::uint64_t seed = 0;
  int nmax = 8;
  int grid = 4;  // N
  std::size_t budget = AwTripleConfig{}.node_budget;
  std::string out;
  std::vector<std::string> notes;

  [[nodiscard]] std::optional<Rational> get(const std::string& key) const {
    auto it = fixed.find(key);
    return it == fixed.end() ? std::nullopt : std::optional<Rational>(it->second);
  }
};

namespace detail {

inline long parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("--" + key + ": expected an integer, got '" + text + "'");
  }
}

inline std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  // Floats would lose exactness.
  throw ConfigError("config value " + v.dump() + " must be an integer or a \"p/q\" string");
}

}  // namespace detail

/// Merges a JSON config file (object mirroring the flags) with flag values;
/// flags win and every conflict is noted. Raw values are strings.
inline RunConfig resolve_config(const std::map<std::string, std::string>& flags, const std::string& config_path = {}) {
  std::map<std::string, std::string> merged;
  std::vector<std::string> notes;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file " + config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + config_path + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [k, v] : j.items()) merged[k] = detail::json_scalar(v);
  }
  for (const auto& [k, v] : flags) {
    auto it = merged.find(k);
    if (it != merged.end() && it->second != v) notes.push_back(k + ": flag " + v + " overrides file " + it->second);
    merged[k] = v;
  }

  RunConfig cfg;
  cfg.notes = std::move(notes);
  static const std::vector<std::string> other{"suite", "trials", "seed", "nmax", "N", "out", "budget"};
  for (const auto& [k, v] : merged) {
    const bool known = std::find(rational_keys().begin(), rational_keys().end(), k) != rational_keys().end() ||
                       std::find(other.begin(), other.end(), k) != other.end();
    if (!known) throw ConfigError("unknown option '" + k + "'");
  }
  auto value = [&](const std::string& k) -> const std::string* {
    auto it = merged.find(k);
    return it == merged.end() ? nullptr : &it->second;
  };

  if (const auto* s = value("suite")) cfg.suite = *s;
  if (cfg.suite.empty()) throw ConfigError("no suite given");
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  for (const auto& k : rational_keys()) {
    const auto* s = value(k);
    if (!s) continue;
    try {
      cfg.fixed.emplace(k, Rational::parse(*s));
    } catch (const std::exception&) {
      throw ConfigError("--" + k + ": not an exact rational: '" + *s + "'");
    }
  }
  if (auto q = cfg.get("q")) {
    try {
      Params::check_base(*q);
    } catch (const Error& e) {
      throw ConfigError(std::string("--q: ") + e.what());
    }
  }
  if (const auto* s = value("trials")) cfg.trials = static_cast<int>(detail::parse_int("trials", *s));
  if (const auto* s = value("nmax")) cfg.nmax = static_cast<int>(detail::parse_int("nmax", *s));
  if (const auto* s = value("N")) cfg.grid = static_cast<int>(detail::parse_int("N", *s));
  if (const auto* s = value("budget")) {
    const long b = detail::parse_int("budget", *s);
    if (b < 1) throw ConfigError("--budget must be positive");
    cfg.budget = static_cast<std::size_t>(b);
  }
  if (const auto* s = value("seed")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(*s, &used);
      if (used != s->size() || s->front() == '-') throw std::invalid_argument(*s);
    } catch (const std::exception&) {
      throw ConfigError("--seed: expected a nonnegative 64-bit integer, got '" + *s + "'");
    }
  }
  if (const auto* s = value("out")) cfg.out = *s;
  if (cfg.trials < 1) throw ConfigError("--trials must be at least 1");
  if (cfg.nmax < 2) throw ConfigError("--nmax must be at least 2");
  if (cfg.grid < 1) throw ConfigError("--N must be at least 1");

  if (cfg.suite == "finite-matrix" && cfg.get("c"))
    cfg.notes.push_back("c: replaced by q^-(N+1) for the grid");
  if (cfg.suite == "pastro") {
    // --a/--b stand in for --pastro-a/--pastro-b when those are absent.
    for (const auto& [k, alt] : {std::pair{"pastro-a", "a"}, std::pair{"pastro-b", "b"}}) {
      const char* used = cfg.get(k) ? k : alt;
      auto v = cfg.get(used);
      if (v && v->is_zero()) throw ConfigError(std::string("--") + used + ": Pastro parameters must be nonzero");
    }
  }
  return cfg;
}

/// Seeded rationals with numerator in [-10, 10] and denominator in [1, 10].
/// Uses plain modular reduction so streams agree across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rational any() {
    const long num = static_cast<long>(rng_() % 21) - 10;
    const long den = static_cast<long>(rng_() % 10) + 1;
    return {num, den};
  }
  Rational nonzero() {
    for (;;)
      if (auto r = any(); !r.is_zero()) return r;
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

using Inputs = std::vector<std::pair<std::string, std::string>>;

inline Inputs params_inputs(const Params& p) {
  return {{"q", p.q.to_string()}, {"a", p.a.to_string()}, {"b", p.b.to_string()}, {"c", p.c.to_string()}};
}
inline Inputs tau_inputs(const TauSet& t) {
  return {{"tau0", t.t0.to_string()}, {"tau1", t.t1.to_string()}, {"tau2", t.t2.to_string()},
          {"tau3", t.t3.to_string()}, {"tau4", t.t4.to_string()}};
}
inline Inputs concat(Inputs a, const Inputs& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Draws parameters, taking explicit values where given, until `guard`
/// accepts. A guard message means rejection.
class Drawer {
 public:
  Drawer(const RunConfig& cfg, RationalSampler& rng) : cfg_(cfg), rng_(rng) {}

  Rational value(const std::string& key, bool nonzero) {
    if (auto v = cfg_.get(key)) return *v;
    return nonzero ? rng_.nonzero() : rng_.any();
  }

  template <class T>
  T until(const std::function<std::optional<T>(std::string&)>& attempt) {
    std::string why;
    for (int i = 0; i < 2000; ++i)
      if (auto v = attempt(why)) return *v;
    throw ConfigError("no admissible parameters after 2000 draws: " + why);
  }

  Params big_qjacobi(bool need_c = true) {
    return until<Params>([&](std::string& why) -> std::optional<Params> {
      Rational q = value("q", true);
      if (q == Rational(1) || q == Rational(-1)) {
        why = "q must avoid 1 and -1";
        return std::nullopt;
      }
      Rational a = value("a", true), b = value("b", true), c = value("c", need_c);
      if (auto r = generic_reason(q, a, b)) {
        why = *r;
        return std::nullopt;
      }
      try {
        return Params(q, a, b, c);
      } catch (const Error& e) {
        why = e.what();
        return std::nullopt;
      }
    });
  }

  TauSet taus() {
    return {value("tau0", false), value("tau1", true), value("tau2", true), value("tau3", true), value("tau4", true)};
  }

  [[nodiscard]] static std::optional<std::string> generic_reason(const Rational& q, const Rational& a,
                                                                 const Rational& b) {
    if (a.is_zero() || b.is_zero()) return "a and b must be nonzero";
    Rational pw = a * b;
    for (int k = 0; k <= 40; ++k, pw = pw * q)
      if (pw == Rational(1)) return "a b q^" + std::to_string(k) + " = 1 makes the spectrum degenerate";
    return std::nullopt;
  }

 private:
  const RunConfig& cfg_;
  RationalSampler& rng_;
};

inline std::string join_failures(const Report& r) {
  std::string out;
  for (const auto& rec : r.records)
    if (!rec.passed()) out += (out.empty() ? "" : "; ") + rec.name + ": " + rec.witness;
  return out;
}

inline std::string matrix_string(const Matrix<Rational>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

inline void suite_qhahn(Report& rep, const std::string& tag, Drawer& d, const RunConfig&) {
  const Params p = d.big_qjacobi();
  const Report r = verify_qhahn(p);
  rep.add(tag + "qhahn relations", r.ok(), join_failures(r), params_inputs(p));
}

inline void suite_heun_aw(Report& rep, const std::string& tag, Drawer& d, const RunConfig&) {
  const Params p = d.big_qjacobi();
  const TauSet t = d.taus();
  const Inputs in = concat(params_inputs(p), tau_inputs(t));
  try {
    const auto pub = fit_heun_aw(p, t, ExtrasMode::Published);
    rep.add(tag + "fit with printed extras", pub.fit.residual_zero, pub.fit.residual_zero ? "" : "nonzero residual",
            in);
  } catch (const InconsistentFit& e) {
    rep.add(tag + "fit with printed extras", false, e.what(), in);
  }
  try {
    const auto cor = fit_heun_aw(p, t, ExtrasMode::Corrected);
    const auto rev = fit_heun_aw(p, t, ExtrasMode::Corrected, true);
    const bool unique = cor.fit.kind == SolveKind::Unique;
    rep.add(tag + "fit with corrected extras", unique && cor.fit.residual_zero,
            unique ? "" : std::string("fit is ") + to_string(cor.fit.kind), in);
    rep.add(tag + "fit independent of ordering", cor.s == rev.s, cor.s == rev.s ? "" : "orderings disagree", in);
  } catch (const InconsistentFit& e) {
    rep.add(tag + "fit with corrected extras", false, e.what(), in);
  }
  try {
    const auto free = fit_heun_aw(p, t, ExtrasMode::Free);
    const auto pub = heun_aw_extras_published(p, t);
    std::string wit = free.r == structure_r(p.q) ? "" : "r = " + free.r.to_string();
    for (std::size_t k = 0; k < 4; ++k)
      if (free.e[k] != pub[k])
        wit += (wit.empty() ? "" : "; ") + ("e" + std::to_string(k + 1)) + " fitted " + free.e[k].to_string() +
               " printed " + pub[k].to_string();
    rep.add(tag + "printed extras match free fit", wit.empty(), wit, in);
  } catch (const InconsistentFit& e) {
    rep.add(tag + "printed extras match free fit", false, e.what(), in);
  }
}

inline void suite_degenerations(Report& rep, const std::string& tag, Drawer& d, const RunConfig&) {
  const Params p = d.big_qjacobi();
  const TauSet t = d.taus();
  const Inputs in = concat(params_inputs(p), tau_inputs(t));
  for (auto rec : check_degenerations(p, t).records) {
    rec.name = tag + rec.name;
    rep.add(std::move(rec));
  }
  // Generic parameters need the extra terms.
  bool fits = false;
  try {
    fits = fit_heun_aw(p, t, ExtrasMode::Zero).fit.residual_zero;
  } catch (const InconsistentFit&) {
  }
  rep.add(tag + "generic set rejects the pure AW fit", !fits, fits ? "pure AW fit unexpectedly consistent" : "", in);
}

inline void suite_tridiagonal(Report& rep, const std::string& tag, Drawer& d, const RunConfig& cfg) {
  const Params p = d.big_qjacobi();
  const TauSet t = d.taus();
  const Inputs in = concat(params_inputs(p), tau_inputs(t));
  const SkewOperator w = algebraic_heun(p, t);
  const auto poch = check_tridiagonal(w, PolyFamily::pochhammer(p.q), cfg.nmax);
  rep.add(tag + "tridiagonal in (x;q)_n", poch.report.ok(), join_failures(poch.report), in);
  const auto bqj = check_tridiagonal(w, PolyFamily::big_qjacobi(p), cfg.nmax, t);
  rep.add(tag + "tridiagonal in big q-Jacobi with closed entries", bqj.report.ok(), join_failures(bqj.report), in);
}

inline void suite_characterizations(Report& rep, const std::string& tag, Drawer& d, const RunConfig& cfg) {
  const Params p = d.big_qjacobi();
  const TauSet t = d.taus();
  const Inputs in = concat(params_inputs(p), tau_inputs(t));
  const SkewOperator w = algebraic_heun(p, t);
  const bool same = w == algebraic_heun_closed(p, t);
  rep.add(tag + "bilinear form equals closed form", same, same ? "" : (w - algebraic_heun_closed(p, t)).to_string(),
          in);
  try {
    const HeunData hd = extract_heun_data(w);
    const Report dr = check_degree_raising(w, std::max(cfg.nmax, 12), hd);
    rep.add(tag + "degree raising with closed W x^n", dr.ok(), join_failures(dr), in);
    const bool back = big_qheun(hd) == w;
    rep.add(tag + "big q-Heun data round trip", back, back ? "" : "rebuilt operator differs", in);
  } catch (const Error& e) {
    rep.add(tag + "degree raising with closed W x^n", false, e.what(), in);
  }
  const auto poch = check_tridiagonal(w, PolyFamily::pochhammer(p.q), cfg.nmax);
  rep.add(tag + "tridiagonal in (x;q)_n", poch.report.ok(), join_failures(poch.report), in);
  const auto bqj = check_tridiagonal(w, PolyFamily::big_qjacobi(p), cfg.nmax, t);
  rep.add(tag + "tridiagonal in big q-Jacobi with closed entries", bqj.report.ok(), join_failures(bqj.report), in);
}

inline void suite_pastro(Report& rep, const std::string& tag, Drawer& d, const RunConfig& cfg) {
  const PastroParams pp = d.until<PastroParams>([&](std::string& why) -> std::optional<PastroParams> {
    const Rational a = cfg.get("pastro-a") ? *cfg.get("pastro-a") : d.value("a", true);
    const Rational b = cfg.get("pastro-b") ? *cfg.get("pastro-b") : d.value("b", true);
    const Rational q = d.value("q", true);
    if (a.is_zero() || b.is_zero()) throw ConfigError("Pastro parameters a and b must be nonzero");
    try {
      PastroParams out(a, b, q);
      for (int n = 0; n <= cfg.nmax + 1; ++n) (void)pastro_poly(a, b, q, n);
      return out;
    } catch (const Error& e) {
      why = e.what();
      return std::nullopt;
    }
  });
  const Inputs in{{"pastro-a", pp.a.to_string()}, {"pastro-b", pp.b.to_string()}, {"q", pp.q.to_string()}};
  const Report g = pastro_gevp_check(pp, cfg.nmax);
  rep.add(tag + "(L1 - lambda_n L2) P_n = 0", g.ok(), join_failures(g), in);

  // lambda_n as the ratio of the x^n coefficients of L1 x^n and L2 x^n.
  const SkewOperator l1 = pastro_l1(pp), l2 = pastro_l2(pp);
  std::string lw;
  for (int n = 0; n <= cfg.nmax; ++n) {
    const Poly xn = Poly::monomial(Rational(1), n);
    const Rational ratio = l1.apply(xn).coeff(n) / l2.apply(xn).coeff(n);
    if (ratio != pastro_lambda(pp.q, n)) lw += " n=" + std::to_string(n) + ": " + ratio.to_string();
  }
  rep.add(tag + "lambda_n = q^n/(q-1)", lw.empty(), lw, in);

  try {
    const int top = std::min(cfg.nmax, 8);
    const auto rec = pastro_by_recurrence(pp, top);
    std::string rw;
    for (int n = 0; n <= top; ++n)
      if (!(rec[static_cast<std::size_t>(n)] == pastro_poly(pp.a, pp.b, pp.q, n))) rw += " n=" + std::to_string(n);
    rep.add(tag + "recurrence reproduces the sum", rw.empty(), rw.empty() ? "" : "mismatch at" + rw, in);
  } catch (const Error& e) {
    rep.add(tag + "recurrence reproduces the sum", false, e.what(), in);
  }
}

inline void suite_aw_triple(Report& rep, const std::string& tag, Drawer& d, const RunConfig& cfg) {
  const Params p = d.until<Params>([&](std::string& why) -> std::optional<Params> {
    Params cand = d.big_qjacobi();
    if (cand.c.is_zero()) {
      why = "c must be nonzero";
      return std::nullopt;
    }
    if ((Rational(1) + cand.a * cand.b * cand.q).is_zero()) {
      why = "1 + a b q must be nonzero";
      return std::nullopt;
    }
    return cand;
  });
  Inputs in = params_inputs(p);
  AwTripleConfig tc;
  tc.node_budget = cfg.budget;
  try {
    const auto res = solve_aw_triple(p, tc);
    if (res.status != TripleStatus::Solved) {
      rep.add(tag + "triple solved and verified", false, "no solution: " + res.reason, in);
      return;
    }
    for (std::size_t i = 0; i < kTripleVars; ++i)
      in.emplace_back(triple_variable_names()[i], res.values[i].to_string());
    in.emplace_back("field", res.field ? "Q(sqrt(" + res.field->to_string() + "))" : "Q");
    in.emplace_back("free parameters", std::to_string(res.free_parameters));
    std::string wit;
    for (std::size_t i = 0; i < 3; ++i)
      if (!res.residuals[i].empty()) wit += "relation " + std::to_string(i + 1) + ": " + res.residuals[i] + " ";
    rep.add(tag + "triple solved and verified", res.verified, wit, in);

    // Relation 1 is linear in W2: shifting it by eps leaves exactly -eps.
    auto shifted = res.values;
    const Rational eps(1, 3);
    shifted[kTau0p] = shifted[kTau0p] + QuadraticNumber(eps);
    const auto r = aw_triple_residuals(p, shifted);
    using QOp = BasicSkewOperator<QuadraticNumber>;
    const std::string expect = (QuadraticNumber(-eps) * QOp::identity(QuadraticNumber(p.q))).to_string();
    rep.add(tag + "W2 + eps I leaves -eps I in relation 1", r[0] == expect, r[0] == expect ? "" : r[0], in);
  } catch (const SolverBlowup& e) {
    rep.add(tag + "triple solved and verified", false, e.what(), in);
  }
}

inline void suite_finite_matrix(Report& rep, const std::string& tag, Drawer& d, const RunConfig& cfg) {
  const int n = cfg.grid;
  const Params p = d.until<Params>([&](std::string& why) -> std::optional<Params> {
    const Rational q = d.value("q", true);
    if (q == Rational(1) || q == Rational(-1)) {
      why = "q must avoid 1 and -1";
      return std::nullopt;
    }
    const Rational a = d.value("a", true), b = d.value("b", true);
    if (auto r = Drawer::generic_reason(q, a, b)) {
      why = *r;
      return std::nullopt;
    }
    try {
      return Params(q, a, b, q.pow(-n - 1));
    } catch (const Error& e) {
      why = e.what();
      return std::nullopt;
    }
  });
  Inputs in = params_inputs(p);
  in.emplace_back("N", std::to_string(n));
  const SkewOperator y = big_qjacobi_operator(p);
  const Rational b0 = big_qjacobi_b(p).evaluate(grid_point(p.q, 0));
  const Rational dn = big_qjacobi_d(p).evaluate(grid_point(p.q, n));
  rep.add(tag + "boundary coefficients vanish", b0.is_zero() && dn.is_zero(),
          "B(x_0) = " + b0.to_string() + ", D(x_N) = " + dn.to_string(), in);
  try {
    const auto m = finite_restriction_matrix(y, p, n);
    in.emplace_back("matrix", matrix_string(m));
    std::string bad;
    for (int k = 0; k <= n; ++k) {
      const Poly pk = big_qjacobi_poly(p, k);
      if (!(m * grid_samples(pk, p.q, n) == grid_samples(y.apply(pk), p.q, n))) bad += " P" + std::to_string(k);
    }
    rep.add(tag + "matrix action matches the operator", bad.empty(), bad.empty() ? "" : "differs on" + bad, in);
    rep.add(tag + "matrix is tridiagonal", m.is_banded(1, 1), "", in);
  } catch (const Error& e) {
    rep.add(tag + "matrix action matches the operator", false, e.what(), in);
  }
}

}  // namespace detail

/// Runs the configured suite. Per-trial errors become failed records.
inline Report run_suite(const RunConfig& cfg) {
  using Fn = void (*)(Report&, const std::string&, detail::Drawer&, const RunConfig&);
  static const std::map<std::string, Fn> table{{"qhahn", detail::suite_qhahn},
                                               {"heun-aw", detail::suite_heun_aw},
                                               {"degenerations", detail::suite_degenerations},
                                               {"tridiagonal", detail::suite_tridiagonal},
                                               {"characterizations", detail::suite_characterizations},
                                               {"pastro", detail::suite_pastro},
                                               {"aw-triple", detail::suite_aw_triple},
                                               {"finite-matrix", detail::suite_finite_matrix}};
  auto it = table.find(cfg.suite);
  if (it == table.end()) throw ConfigError("unknown suite '" + cfg.suite + "'");
  RationalSampler rng(cfg.seed);
  detail::Drawer drawer(cfg, rng);
  Report rep;
  for (int i = 0; i < cfg.trials; ++i) {
    const std::string tag = "trial " + std::to_string(i) + ": ";
    try {
      it->second(rep, tag, drawer, cfg);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      rep.add(tag + cfg.suite, false, e.what());
    }
  }
  return rep;
}

/// Report as JSON text; deterministic for a given config.
inline std::string render_report(const RunConfig& cfg, const Report& rep) {
  nlohmann::ordered_json j;
  j["suite"] = cfg.suite;
  nlohmann::ordered_json c;
  for (const auto& k : rational_keys())
    if (auto v = cfg.get(k)) c[k] = v->to_string();
  c["trials"] = cfg.trials;
  c["seed"] = std::to_string(cfg.seed);
  c["nmax"] = cfg.nmax;
  c["N"] = cfg.grid;
  c["budget"] = cfg.budget;
  c["notes"] = cfg.notes;
  j["config"] = c;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) {
    nlohmann::ordered_json rec;
    rec["name"] = r.name;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    rec["inputs"] = in;
    rec["status"] = to_string(r.status);
    if (!r.witness.empty()) rec["witness"] = r.witness;
    j["records"].push_back(rec);
  }
  j["summary"] = {{"passed", rep.passed()}, {"failed", rep.failed()}};
  j["version"] = kVersion;
  return j.dump(2) + "\n";
}

inline int exit_code(const Report& rep) { return rep.ok() ? 0 : 1; }

}  // namespace qheun

#endif  // QHEUN_RUNNER_HPP

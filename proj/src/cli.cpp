#include "partfn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partfn/acceptance.hpp"
#include "partfn/bounds_audit.hpp"
#include "partfn/constructions.hpp"
#include "partfn/csv.hpp"
#include "partfn/parallel.hpp"
#include "partfn/partition_core.hpp"
#include "partfn/ratio.hpp"

namespace partfn::cli {

namespace {

using u64 = std::uint64_t;
using Opt = std::optional<u64>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rough operation counts (parts x target) above which a request is refused.
constexpr double kWorkBudget = 2e10;
constexpr u64 kMaxPentagonal = 200'000;
constexpr std::size_t kMaxGridPoints = 10'000'000;

void check_work(double work, const std::string& what) {
  if (work > kWorkBudget) throw UsageError(what + ": parameters exceed the work budget");
}

void check_unit_interval(std::optional<double> v, const char* name) {
  if (v && !(*v > 0.0 && *v < 1.0)) throw UsageError(std::string("--") + name + " must lie in (0,1)");
}

template <class T>
T need(const std::optional<T>& v, const char* name) {
  if (!v) throw UsageError(std::string("--") + name + " is required here");
  return *v;
}

// {v}, [v, vmax], [lo, vmax] depending on which of --x / --xmax were given.
std::vector<u64> values(const Opt& v, const Opt& vmax, u64 lo, const char* name) {
  u64 a, b;
  if (v && vmax) {
    a = *v;
    b = *vmax;
  } else if (v) {
    a = b = *v;
  } else if (vmax) {
    a = lo;
    b = *vmax;
  } else {
    throw UsageError(std::string("--") + name + " or --" + name + "max is required here");
  }
  if (a > b) throw UsageError(std::string("--") + name + " exceeds --" + name + "max");
  if (b - a >= kMaxGridPoints) throw UsageError(std::string("--") + name + " range too large");
  std::vector<u64> out;
  for (u64 x = a;; ++x) {
    out.push_back(x);
    if (x == b) break;
  }
  return out;
}

PartSet parse_set(const std::string& text) {
  try {
    return PartSet::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed --set: ") + e.what());
  }
}

void emit(const CsvTable& t, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << to_csv(t);
  else
    write_csv(t, path);
}

struct Global {
  unsigned threads = 1;
  std::string out;
};

// ---- count -------------------------------------------------------------

struct CountArgs {
  Opt n, exact_parts, max_part;
  std::optional<std::string> set;
  bool log = false;
  bool oracle = false;
  u64 oracle_cap = kDefaultOracleCap;
};

void add_count(CLI::App& app, CountArgs& a) {
  auto* c = app.add_subcommand("count", "Count partitions of n");
  c->add_option("--n", a.n, "Target integer")->required();
  c->add_option("--set", a.set, "Allowed parts, e.g. \"1,3-5,9\" (default: all)");
  c->add_option("--exact-parts", a.exact_parts, "Count partitions into exactly k parts");
  c->add_option("--max-part", a.max_part, "Restrict parts to [1, k]");
  c->add_flag("--log", a.log, "Use the log-domain engine and print e^<log>");
  c->add_flag("--oracle", a.oracle, "Use brute-force enumeration");
  c->add_option("--oracle-cap", a.oracle_cap, "Largest n accepted by --oracle");
}

int run_count(const CountArgs& a, std::ostream& out) {
  u64 n = *a.n;
  if (a.exact_parts) {
    if (a.set || a.max_part || a.log || a.oracle) throw UsageError("--exact-parts takes no other selectors");
    check_work(static_cast<double>(*a.exact_parts) * static_cast<double>(n), "count");
    out << format_count(count_exact_parts(n, *a.exact_parts)) << '\n';
    return kExitOk;
  }
  if (n > PartSet::kMaxElement) throw UsageError("--n out of range");
  bool restricted = a.set || a.max_part;
  PartSet parts = a.set ? parse_set(*a.set) : PartSet::range(1, n);
  if (a.max_part) parts = parts.restrict_to(1, *a.max_part);
  if (a.oracle) {
    if (n > a.oracle_cap) throw UsageError("--n exceeds --oracle-cap");
    out << brute_force_count(parts, n, a.oracle_cap) << '\n';
    return kExitOk;
  }
  double work = static_cast<double>(parts.prefix_count(n)) * static_cast<double>(n);
  if (a.log) {
    check_work(work, "count");
    auto v = log_count_restricted(parts, n);
    out << (v.is_zero() ? std::string("0") : v.to_string()) << '\n';
    return kExitOk;
  }
  if (!restricted) {
    if (n > kMaxPentagonal) throw UsageError("--n too large for exact counting (max " + std::to_string(kMaxPentagonal) + ")");
    out << format_count(count_partitions(n)) << '\n';
    return kExitOk;
  }
  check_work(work, "count");
  out << format_count(count_restricted(parts, n)) << '\n';
  return kExitOk;
}

// ---- construct ---------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::optional<double> alpha, beta;
  Opt n0, cap, gap_index;
  std::vector<u64> checkpoints;
  bool show_set = false;
};

void add_construct(CLI::App& app, ConstructArgs& a) {
  auto* c = app.add_subcommand("construct", "Build a set family and its density profile");
  c->add_option("--family", a.family, "lower or upper")->required()->check(CLI::IsMember({"lower", "upper"}));
  c->add_option("--alpha", a.alpha, "Lower density (lower family)");
  c->add_option("--beta", a.beta, "Upper density (upper family)");
  c->add_option("--n0", a.n0, "f(1) of the lower family (default max(ceil(2/alpha), 16))");
  c->add_option("--cap", a.cap, "Materialization bound")->required();
  c->add_option("--checkpoints", a.checkpoints, "Density checkpoints (default: f(i) <= cap)")->delimiter(',');
  c->add_flag("--show-set", a.show_set, "Print the set literal instead of the density CSV");
  c->add_option("--gap-index", a.gap_index, "Print the gap region for n = f(i) (lower family)");
}

int run_construct(const ConstructArgs& a, const Global& g, std::ostream& out) {
  check_unit_interval(a.alpha, "alpha");
  check_unit_interval(a.beta, "beta");
  PartSet set;
  std::vector<u64> cps = a.checkpoints;
  if (a.family == "lower") {
    LowerFamilyParams p{need(a.alpha, "alpha"), 0, *a.cap};
    p.n0 = a.n0 ? *a.n0 : LowerFamilyParams::default_n0(p.alpha);
    if (a.gap_index) {
      auto r = gap_region(p, *a.gap_index);
      out << "lo=" << r.lo << " hi=" << r.hi << (r.empty() ? " empty" : "") << '\n';
      return kExitOk;
    }
    set = build_lower_set(p);
    if (cps.empty()) cps = lower_family_checkpoints(p);
  } else {
    if (a.gap_index || a.n0) throw UsageError("--gap-index and --n0 apply to the lower family only");
    UpperFamilyParams p{need(a.beta, "beta"), *a.cap};
    set = build_upper_set(p);
    if (cps.empty()) cps = upper_family_checkpoints(p);
  }
  if (a.show_set) {
    out << set.to_string() << '\n';
    if (g.out.empty()) return kExitOk;
  }
  CsvTable t = density_csv(density_profile(set, cps, *a.cap));
  if (a.show_set)
    write_csv(t, g.out);
  else
    emit(t, g.out, out);
  return kExitOk;
}

// ---- audit -------------------------------------------------------------

struct AuditArgs {
  std::string lemma;
  Opt n, nmax, k, kmax, m, mmax, big_l, big_lmax, big_k, big_kmax, s, smax, samples;
  std::optional<double> alpha, beta, gamma, lambda;
  std::optional<std::string> set;
  Thresholds t;
};

void add_audit(CLI::App& app, AuditArgs& a) {
  auto* c = app.add_subcommand("audit", "Evaluate one lemma at a point or over a grid");
  std::vector<std::string> names;
  for (auto id : all_lemmas()) names.emplace_back(lemma_name(id));
  c->add_option("--lemma", a.lemma, "Lemma id")->required()->check(CLI::IsMember(names));
  c->add_option("--n", a.n);
  c->add_option("--nmax", a.nmax);
  c->add_option("--k", a.k);
  c->add_option("--kmax", a.kmax);
  c->add_option("--m", a.m);
  c->add_option("--mmax", a.mmax);
  c->add_option("--L", a.big_l);
  c->add_option("--Lmax", a.big_lmax);
  c->add_option("--K", a.big_k);
  c->add_option("--Kmax", a.big_kmax);
  c->add_option("--s", a.s);
  c->add_option("--smax", a.smax);
  c->add_option("--samples", a.samples, "Number of m samples across the gap region (liminf-lower-main)");
  c->add_option("--alpha", a.alpha);
  c->add_option("--beta", a.beta);
  c->add_option("--gamma", a.gamma);
  c->add_option("--lambda", a.lambda);
  c->add_option("--set", a.set, "Set literal, e.g. \"1,3-5,9\"");
  c->add_option("--n1", a.t.n1);
  c->add_option("--n2", a.t.n2);
  c->add_option("--n3", a.t.n3);
  c->add_option("--alpha0", a.t.alpha0);
  c->add_option("--lambda0", a.t.lambda0);
  c->add_option("--loglog-coeff", a.t.loglog_coeff);
}

template <class Fn>
void grid(std::vector<std::function<BoundReport()>>& jobs, Fn&& fn) {
  jobs.emplace_back(std::forward<Fn>(fn));
}

int run_audit(const AuditArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  check_unit_interval(a.alpha, "alpha");
  check_unit_interval(a.beta, "beta");
  check_unit_interval(a.gamma, "gamma");
  if (a.lambda && !(*a.lambda > 0.0)) throw UsageError("--lambda must be positive");
  try {
    a.t.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const LemmaId id = *lemma_from_name(a.lemma);
  const Thresholds& t = a.t;
  std::vector<std::function<BoundReport()>> jobs;
  auto set = [&] { return parse_set(need(a.set, "set")); };
  auto max_of = [](const std::vector<u64>& v) { return static_cast<double>(v.back()); };

  switch (id) {
    case LemmaId::trivial_bound:
    case LemmaId::first_is_best: {
      PartSet s = set();
      auto ns = values(a.n, a.nmax, 0, "n");
      check_work(static_cast<double>(s.prefix_count(ns.back()) + 1) * max_of(ns), a.lemma);
      if (id == LemmaId::first_is_best) check_work(static_cast<double>(s.size()) * max_of(ns), a.lemma);
      for (u64 n : ns)
        grid(jobs, [=] { return id == LemmaId::trivial_bound ? audit_trivial_bound(s, n) : audit_first_is_best(s, n); });
      break;
    }
    case LemmaId::pk_sandwich:
    case LemmaId::shift_identity: {
      auto ns = values(a.n, a.nmax, id == LemmaId::pk_sandwich ? 1 : 0, "n");
      auto ks = values(a.k, a.kmax, 1, "k");
      check_work(max_of(ks) * (max_of(ns) + max_of(ks)), a.lemma);
      for (u64 n : ns)
        for (u64 k : ks)
          grid(jobs, [=] { return id == LemmaId::pk_sandwich ? audit_pk_sandwich(n, k) : audit_shift_identity(n, k); });
      break;
    }
    case LemmaId::stars_bars_injection: {
      auto ns = values(a.n, a.nmax, 2, "n");
      auto bks = values(a.big_k, a.big_kmax, 0, "K");
      auto ss = values(a.s, a.smax, 0, "s");
      auto ms = values(a.m, a.mmax, 0, "m");
      check_work((max_of(bks) + 2) * max_of(ms), a.lemma);
      for (u64 n : ns)
        for (u64 bk : bks)
          for (u64 s : ss)
            for (u64 m : ms) grid(jobs, [=] { return stars_bars_injection_bound(n, bk, s, m); });
      break;
    }
    case LemmaId::liminf_lower_main: {
      double alpha = need(a.alpha, "alpha");
      u64 n = need(a.n, "n");
      std::vector<u64> ms;
      if (a.m || a.mmax) {
        ms = values(a.m, a.mmax, 0, "m");
      } else {
        GapRegion r = gap_region(alpha, n);
        if (r.empty()) throw UsageError("gap region is empty for these alpha, n");
        u64 count = a.samples.value_or(8);
        if (count == 0) throw UsageError("--samples must be positive");
        for (u64 i = 0; i < count; ++i) {
          u64 m = count == 1 ? r.lo : r.lo + static_cast<u64>((static_cast<unsigned __int128>(r.hi - r.lo) * i) / (count - 1));
          if (ms.empty() || ms.back() != m) ms.push_back(m);
        }
      }
      check_work(alpha * static_cast<double>(n) * static_cast<double>(n) * max_of(ms), a.lemma);
      for (u64 m : ms) grid(jobs, [=, &t] { return audit_liminf_lower_main(alpha, n, m, t); });
      break;
    }
    case LemmaId::szekeres: {
      double gamma = need(a.gamma, "gamma");
      auto ns = values(a.n, a.nmax, 1, "n");
      check_work(gamma * std::sqrt(max_of(ns)) * max_of(ns), a.lemma);
      for (u64 n : ns) grid(jobs, [=, &t] { return audit_szekeres(gamma, n, t); });
      break;
    }
    case LemmaId::shift_bijection: {
      auto ls = values(a.big_l, a.big_lmax, 1, "L");
      auto ks = values(a.k, a.kmax, 1, "k");
      auto ns = values(a.n, a.nmax, 0, "n");
      check_work(max_of(ns) * max_of(ns) + max_of(ks) * max_of(ns), a.lemma);
      for (u64 l : ls)
        for (u64 k : ks)
          for (u64 n : ns) grid(jobs, [=] { return shift_bijection_bound(l, k, n); });
      break;
    }
    case LemmaId::dixmier_nicolas_upper: {
      double lambda = need(a.lambda, "lambda");
      auto ns = values(a.n, a.nmax, 1, "n");
      check_work(max_of(ns) * max_of(ns), a.lemma);
      for (u64 n : ns) grid(jobs, [=, &t] { return audit_dixmier_nicolas_upper(lambda, n, t); });
      break;
    }
    case LemmaId::liminf_upper_main: {
      PartSet s = set();
      double alpha = need(a.alpha, "alpha");
      auto ns = values(a.n, a.nmax, 1, "n");
      double m = alpha * max_of(ns) * max_of(ns);
      check_work(static_cast<double>(s.prefix_count(static_cast<u64>(m)) + 1) * m, a.lemma);
      for (u64 n : ns) grid(jobs, [=, &t] { return audit_liminf_upper_main(s, alpha, n, t); });
      break;
    }
    case LemmaId::pigeonhole: {
      PartSet s = set();
      auto ms = values(a.m, a.mmax, 1, "m");
      double sz = static_cast<double>(s.size());
      check_work(sz * sz * max_of(ms), a.lemma);
      for (u64 m : ms) grid(jobs, [=] { return audit_pigeonhole(s, m); });
      break;
    }
    case LemmaId::interval_upper: {
      double beta = need(a.beta, "beta");
      auto ns = values(a.n, a.nmax, 1, "n");
      if (a.m) {
        auto ms = values(a.m, a.mmax, 0, "m");
        check_work(beta * max_of(ns) * max_of(ms) + max_of(ms), a.lemma);
        for (u64 n : ns)
          for (u64 m : ms) grid(jobs, [=] { return audit_interval_upper(beta, n, m); });
      } else {
        u64 mmax = need(a.mmax, "mmax");
        check_work((beta * max_of(ns) + 1) * static_cast<double>(mmax), a.lemma);
        for (u64 n : ns) grid(jobs, [=] { return audit_interval_upper_range(beta, n, mmax); });
      }
      break;
    }
    case LemmaId::entropy_binomial: {
      auto ns = values(a.n, a.nmax, 1, "n");
      check_work(max_of(ns) * max_of(ns), a.lemma);
      if (a.k || a.kmax) {
        auto ks = values(a.k, a.kmax, 0, "k");
        for (u64 n : ns)
          for (u64 k : ks)
            if (k <= n) grid(jobs, [=] { return entropy_binomial_bound(n, k); });
      } else {
        for (u64 n : ns) grid(jobs, [=] { return entropy_binomial_row(n); });
      }
      break;
    }
    case LemmaId::fbeta_peak: {
      double beta = need(a.beta, "beta");
      grid(jobs, [=] { return audit_fbeta_peak(beta, default_fbeta_grid(beta)); });
      break;
    }
  }
  if (jobs.size() > kMaxGridPoints) throw UsageError("grid too large");

  auto reports = parallel_map<BoundReport>(jobs.size(), g.threads, [&](std::size_t i) { return jobs[i](); });
  std::size_t failed = 0, unmet = 0, marginal = 0;
  for (const auto& r : reports) {
    if (!r.preconditions_met)
      ++unmet;
    else if (!r.pass)
      ++failed;
    marginal += r.marginal;
  }
  emit(audit_csv(reports), g.out, out);
  err << a.lemma << ": " << reports.size() << " audited, " << failed << " failed, " << unmet
      << " without verdict (preconditions unmet), " << marginal << " marginal\n";
  return failed ? kExitAuditFailed : kExitOk;
}

// ---- ratio -------------------------------------------------------------

struct RatioArgs {
  std::optional<std::string> set, family;
  std::optional<double> alpha, beta, scale;
  Opt n0, cap, mmin, mmax, step;
  std::vector<u64> ms;
};

void add_ratio(CLI::App& app, RatioArgs& a) {
  auto* c = app.add_subcommand("ratio", "log p_A(m) / log p(floor(scale m)) along samples of m");
  c->add_option("--set", a.set, "Set literal");
  c->add_option("--family", a.family, "lower or upper construction")->check(CLI::IsMember({"lower", "upper"}));
  c->add_option("--alpha", a.alpha, "Lower family density");
  c->add_option("--beta", a.beta, "Upper family density");
  c->add_option("--n0", a.n0, "f(1) of the lower family");
  c->add_option("--scale", a.scale, "Denominator scale in (0,1] (default alpha or beta)");
  c->add_option("--cap", a.cap, "Materialization bound")->required();
  c->add_option("--m", a.ms, "Sample points")->delimiter(',');
  c->add_option("--mmin", a.mmin);
  c->add_option("--mmax", a.mmax);
  c->add_option("--step", a.step, "Spacing between --mmin and --mmax (default 1)");
}

int run_ratio(const RatioArgs& a, const Global& g, std::ostream& out) {
  check_unit_interval(a.alpha, "alpha");
  check_unit_interval(a.beta, "beta");
  if (a.set.has_value() == a.family.has_value()) throw UsageError("give exactly one of --set, --family");
  u64 cap = *a.cap;
  PartSet set;
  std::optional<double> scale = a.scale;
  if (a.set) {
    set = parse_set(*a.set);
  } else if (*a.family == "lower") {
    LowerFamilyParams p{need(a.alpha, "alpha"), 0, cap};
    p.n0 = a.n0 ? *a.n0 : LowerFamilyParams::default_n0(p.alpha);
    set = build_lower_set(p);
    if (!scale) scale = p.alpha;
  } else {
    UpperFamilyParams p{need(a.beta, "beta"), cap};
    set = build_upper_set(p);
    if (!scale) scale = p.beta;
  }
  if (!scale) throw UsageError("--scale is required with --set");
  if (!(*scale > 0.0 && *scale <= 1.0)) throw UsageError("--scale must lie in (0,1]");

  std::vector<u64> ms = a.ms;
  if (a.mmin || a.mmax) {
    u64 lo = need(a.mmin, "mmin"), hi = need(a.mmax, "mmax"), step = a.step.value_or(1);
    if (step == 0 || lo > hi) throw UsageError("bad --mmin/--mmax/--step");
    if ((hi - lo) / step >= kMaxGridPoints) throw UsageError("too many samples");
    for (u64 m = lo; m <= hi; m += step) ms.push_back(m);
  }
  if (ms.empty()) throw UsageError("no samples: give --m or --mmin/--mmax");
  u64 top = *std::max_element(ms.begin(), ms.end());
  check_work(static_cast<double>(set.prefix_count(std::min(top, cap)) + 1) * static_cast<double>(top), "ratio");
  emit(ratio_csv(ratio_curve(set, *scale, ms, cap)), g.out, out);
  return kExitOk;
}

// ---- hr ----------------------------------------------------------------

struct HrArgs {
  Opt n, nmax, step;
};

void add_hr(CLI::App& app, HrArgs& a) {
  auto* c = app.add_subcommand("hr", "Exact log p(n) against the Hardy-Ramanujan estimate");
  c->add_option("--n", a.n, "Single n, or the start of a range");
  c->add_option("--nmax", a.nmax);
  c->add_option("--step", a.step, "Spacing within the range (default 1)");
}

int run_hr(const HrArgs& a, const Global& g, std::ostream& out) {
  u64 lo = a.n.value_or(1), hi = a.nmax.value_or(lo), step = a.step.value_or(1);
  if (!a.n && !a.nmax) throw UsageError("--n or --nmax is required");
  if (lo < 1 || lo > hi || step == 0) throw UsageError("bad --n/--nmax/--step");
  if (hi > kMaxPentagonal) throw UsageError("--nmax too large (max " + std::to_string(kMaxPentagonal) + ")");
  auto p = partition_table(hi);
  CsvTable t{{"n", "log_p", "hr_log", "log_p_over_leading"}, {}};
  for (u64 n = lo; n <= hi; n += step) {
    double lp = LogMag::of(p[n]).log();
    double leading = std::numbers::pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0);
    t.add_row({std::to_string(n), format_real(lp), format_real(hardy_ramanujan_log(n)), format_real(lp / leading)});
  }
  emit(t, g.out, out);
  return kExitOk;
}

// ---- verify-all --------------------------------------------------------

int run_verify_all(const Global& g, std::ostream& out) {
  AcceptanceOptions opt;
  opt.threads = g.threads;
  auto report = run_acceptance(opt, [&](const CriterionResult& r) { out << format_criterion_line(r) << std::endl; });
  if (!g.out.empty()) {
    std::filesystem::create_directories(g.out);
    for (const auto& [name, text] : acceptance_csv_files(report)) {
      std::ofstream f(std::filesystem::path(g.out) / name, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot write " + name + " in " + g.out);
      f << text;
    }
  }
  out << (report.all_pass() ? "ALL PASS" : "FAILURES") << ": " << report.criteria.size() << " criteria\n";
  return report.all_pass() ? kExitOk : kExitAuditFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted partition functions: exact counts, set constructions and bound audits", "partfn"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "Worker threads for parameter grids")
      ->check(CLI::Range(1u, 256u))
      ->default_val(1);
  app.add_option("--out", g.out, "Write CSV here (directory for verify-all)");
  app.fallthrough();

  CountArgs count;
  ConstructArgs construct;
  AuditArgs audit;
  RatioArgs ratio;
  HrArgs hr;
  add_count(app, count);
  add_construct(app, construct);
  add_audit(app, audit);
  add_ratio(app, ratio);
  add_hr(app, hr);
  app.add_subcommand("verify-all", "Run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "count") return run_count(count, out);
    if (name == "construct") return run_construct(construct, g, out);
    if (name == "audit") return run_audit(audit, g, out, err);
    if (name == "ratio") return run_ratio(ratio, g, out);
    if (name == "hr") return run_hr(hr, g, out);
    return run_verify_all(g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace partfn::cli

// Command-line runner: every library computation as a subcommand with
// reproducible seeds and '#'-commented CSV output.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "monoclt/clt.hpp"
#include "monoclt/ergodic.hpp"
#include "monoclt/inversion.hpp"
#include "monoclt/measure_io.hpp"
#include "monoclt/measures.hpp"
#include "monoclt/transforms.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace monoclt;

std::size_t atom_budget_from_env() {
  if (const char* s = std::getenv("MONOCLT_ATOM_BUDGET")) {
    const long long v = std::atoll(s);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultAtomBudget;
}

std::string fmt(double v, int sig) {
  std::ostringstream os;
  os.precision(sig);
  os << v;
  return os.str();
}

struct Output {
  std::ofstream file;
  std::ostream& stream() { return file.is_open() ? file : std::cout; }

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw InvalidSpec("cannot open output file " + path);
    }
  }
};

void write_header(std::ostream& os, const std::string& subcommand,
                  const std::vector<std::pair<std::string, std::string>>&
                      config) {
  os << "# monoclt " << kVersion << "\n";
  os << "# subcommand=" << subcommand << "\n";
  for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
}

int choose_k_for(const MeasureSpec& m) {
  if (m.kind() == MeasureKind::atomic) {
    return choose_k(nevanlinna_extract(m.atomic_measure()));
  }
  return 1;  // arcsine and nu_r: nu is centered with unit mass
}

struct CommonOpts {
  std::string spec_path;
  std::string out_path;
  long n = 1;
  std::string n_list;
  std::string method = "exact";
  double y = 1e-5;
  int grid = 16001;
  std::string interval = "0,1";
  long orbits = 1000;
  long samples = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
};

std::vector<std::pair<std::string, std::string>> echo_common(
    const CommonOpts& o) {
  return {{"spec", o.spec_path}, {"seed", std::to_string(o.seed)},
          {"threads", std::to_string(o.threads)},
          {"budget", std::to_string(atom_budget_from_env())}};
}

int run_power(const CommonOpts& o) {
  const MeasureSpec spec = load_measure_spec(o.spec_path);
  Output out(o.out_path);
  auto cfg = echo_common(o);
  cfg.push_back({"n", std::to_string(o.n)});
  cfg.push_back({"method", o.method});
  if (o.method == "exact") {
    if (spec.kind() != MeasureKind::atomic) {
      throw InvalidSpec("exact powers need an atomic measure spec");
    }
    // Empty-iteration convention: the zeroth power is the point mass at 0.
    const AtomicMeasure p =
        o.n == 0 ? AtomicMeasure::from_pairs({{0.0, 1.0}})
                 : monotone_power_exact(spec.atomic_measure(), o.n,
                                        atom_budget_from_env());
    write_header(out.stream(), "power", cfg);
    out.stream() << "t,w\n";
    for (const Atom& a : p.atoms()) {
      out.stream() << fmt(a.t, 17) << "," << fmt(a.w, 17) << "\n";
    }
  } else {
    cfg.push_back({"y", fmt(o.y, 12)});
    cfg.push_back({"grid", std::to_string(o.grid)});
    NumericDistanceConfig nc;
    nc.y = o.y;
    nc.grid_points = o.grid;
    const FEval f = make_normalized_power_eval(spec, std::max(o.n, 1L));
    const CdfCurve c = stieltjes_cdf(f, nc.y, distance_grid(nc));
    write_header(out.stream(), "power", cfg);
    out.stream() << "x,cdf\n";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      out.stream() << fmt(c.x[i], 12) << "," << fmt(c.cdf[i], 12) << "\n";
    }
  }
  return 0;
}

std::vector<long> parse_n_list(const std::string& s) {
  std::vector<long> ns;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    ns.push_back(std::stol(tok));
  }
  if (ns.empty()) throw InvalidSpec("--n-list is empty");
  return ns;
}

int run_rates(const CommonOpts& o) {
  const MeasureSpec spec = load_measure_spec(o.spec_path);
  const std::vector<long> ns = parse_n_list(o.n_list);
  const DistanceMethod method = o.method == "numeric"
                                    ? DistanceMethod::numeric
                                    : DistanceMethod::exact;
  NumericDistanceConfig nc;
  nc.y = o.y;
  nc.grid_points = o.grid;
  const std::size_t budget = atom_budget_from_env();

  struct Row {
    RatePoint p;
    int part = 0;
    double bound = 0.0;
    bool ok = false;
  };
  auto compute = [&](long n) {
    Row row;
    row.p = clt_distance(spec, n, method, budget, nc);
    if (spec.kind() == MeasureKind::atomic) {
      const MomentConstants mc = constants_c_d(spec.atomic_measure());
      row.part = mc.c == 0.0 ? 3 : 1;
      const BoundReport b =
          berry_esseen_bound(spec.atomic_measure(), n, row.part);
      row.bound = b.bound_value;
      row.ok = b.applicable;
    }
    return row;
  };

  std::vector<Row> rows(ns.size());
  const int threads = o.threads > 0
                          ? o.threads
                          : static_cast<int>(
                                std::thread::hardware_concurrency());
  if (threads > 1 && ns.size() > 1) {
    std::vector<std::future<Row>> futs;
    futs.reserve(ns.size());
    for (long n : ns) {
      futs.push_back(std::async(std::launch::async, compute, n));
    }
    for (std::size_t i = 0; i < futs.size(); ++i) rows[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = compute(ns[i]);
  }

  Output out(o.out_path);
  auto cfg = echo_common(o);
  cfg.push_back({"n_list", o.n_list});
  cfg.push_back({"method", o.method});
  cfg.push_back({"y", fmt(o.y, 12)});
  cfg.push_back({"grid", std::to_string(o.grid)});
  write_header(out.stream(), "rates", cfg);
  out.stream() << "n,distance,method,bound_part,bound_value,threshold_ok\n";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const Row& r = rows[i];
    out.stream() << ns[i] << "," << fmt(r.p.distance, 12) << ","
                 << (r.p.method == DistanceMethod::exact ? "exact"
                                                         : "numeric")
                 << "," << r.part << "," << fmt(r.bound, 12) << ","
                 << (r.ok ? 1 : 0) << "\n";
  }
  return 0;
}

int run_return_seq(const CommonOpts& o) {
  const MeasureSpec spec = load_measure_spec(o.spec_path);
  const int k = choose_k_for(spec);
  const ReturnSeries rs = return_sequence_partial(spec, k, o.n);
  Output out(o.out_path);
  auto cfg = echo_common(o);
  cfg.push_back({"n", std::to_string(o.n)});
  cfg.push_back({"k", std::to_string(k)});
  write_header(out.stream(), "return_seq", cfg);
  out.stream() << "n,S_n,sqrt_2n,ratio\n";
  for (long j = 1; j <= o.n; ++j) {
    out.stream() << j << "," << fmt(rs.partial_sums[j - 1], 12) << ","
                 << fmt(rs.comparator(j), 12) << "," << fmt(rs.ratio(j), 12)
                 << "\n";
  }
  return 0;
}

std::pair<double, double> parse_interval(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw InvalidSpec("--interval wants A,B");
  }
  const double a = std::stod(s.substr(0, comma));
  const double b = std::stod(s.substr(comma + 1));
  if (b < a) throw InvalidSpec("--interval wants A <= B");
  return {a, b};
}

int run_occupation(const CommonOpts& o) {
  const MeasureSpec spec = load_measure_spec(o.spec_path);
  if (spec.kind() != MeasureKind::atomic) {
    throw InvalidSpec("occupation needs an atomic measure spec");
  }
  const auto [a, b] = parse_interval(o.interval);
  const OccupationResult res = darling_kac_mc(spec.atomic_measure(), a, b,
                                              o.n, o.orbits, o.seed);
  Output out(o.out_path);
  auto cfg = echo_common(o);
  cfg.push_back({"n", std::to_string(o.n)});
  cfg.push_back({"orbits", std::to_string(o.orbits)});
  cfg.push_back({"interval", o.interval});
  write_header(out.stream(), "occupation", cfg);
  out.stream() << "t,empirical_cdf,limit_cdf\n";
  const double m = static_cast<double>(res.normalized.size());
  for (std::size_t i = 0; i < res.normalized.size(); ++i) {
    const double t = res.normalized[i];
    out.stream() << fmt(t, 12) << "," << fmt((i + 1) / m, 12) << ","
                 << fmt(half_gaussian_cdf(t), 12) << "\n";
  }
  out.stream() << "ks=" << fmt(res.ks, 12) << ",dropped=" << res.dropped
               << "\n";
  return 0;
}

int run_cone_check(const CommonOpts& o) {
  const MeasureSpec spec = load_measure_spec(o.spec_path);
  const int k = choose_k_for(spec);
  const long exits = cone_invariance_check(spec, k, o.samples, o.seed);
  Output out(o.out_path);
  auto cfg = echo_common(o);
  cfg.push_back({"samples", std::to_string(o.samples)});
  cfg.push_back({"k", std::to_string(k)});
  write_header(out.stream(), "cone_check", cfg);
  out.stream() << "violations: " << exits << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone convolution powers, arcsine-limit rates and "
               "boundary-map ergodics"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* s = sub->add_option("--spec", o.spec_path,
                              "path to a JSON measure spec");
    if (needs_spec) s->required();
    sub->add_option("--out", o.out_path, "output path (default stdout)");
    sub->add_option("--seed", o.seed, "RNG seed, echoed in the header");
    sub->add_option("--threads", o.threads,
                    "worker threads (default: hardware concurrency)");
  };

  CLI::App* power = app.add_subcommand("power", "n-th convolution power");
  add_common(power, true);
  power->add_option("--n", o.n, "power index")->required();
  power->add_option("--method", o.method, "exact|numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  power->add_option("--y", o.y, "inversion height (numeric method)");
  power->add_option("--grid", o.grid, "grid points (numeric method)");

  CLI::App* rates =
      app.add_subcommand("rates", "arcsine-limit distances and bounds");
  add_common(rates, true);
  rates->add_option("--n-list", o.n_list, "comma-separated powers")
      ->required();
  rates->add_option("--method", o.method, "exact|numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  rates->add_option("--y", o.y, "inversion height (numeric method)");
  rates->add_option("--grid", o.grid, "grid points (numeric method)");

  CLI::App* ret =
      app.add_subcommand("return_seq", "partial return sums along (2k+2)i");
  add_common(ret, true);
  ret->add_option("--n", o.n, "orbit length")->required();

  CLI::App* occ = app.add_subcommand(
      "occupation", "Monte Carlo occupation-time distribution");
  add_common(occ, true);
  occ->add_option("--n", o.n, "orbit length")->required();
  occ->add_option("--orbits", o.orbits, "number of orbits");
  occ->add_option("--interval", o.interval, "target interval A,B");

  CLI::App* cone =
      app.add_subcommand("cone_check", "invariant-cone exit counter");
  add_common(cone, true);
  cone->add_option("--samples", o.samples, "slab sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (power->parsed()) return run_power(o);
    if (rates->parsed()) return run_rates(o);
    if (ret->parsed()) return run_return_seq(o);
    if (occ->parsed()) return run_occupation(o);
    if (cone->parsed()) return run_cone_check(o);
  } catch (const monoclt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.category()) {
      case monoclt::ErrorCategory::resource:
        return 2;
      case monoclt::ErrorCategory::validation:
        return 3;
      case monoclt::ErrorCategory::numeric:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}

// dp4: counting runs, verification suites, fiber surveys, the growth
// experiment and the lower-bound generator.
//
// Exit codes: 0 success, 1 verification failure, 2 count mismatch,
// 3 configuration or range error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>

#include "dp4/counting.hpp"
#include "dp4/growth.hpp"
#include "dp4/lowerbound.hpp"
#include "dp4/quadrics.hpp"
#include "dp4/verify.hpp"

namespace {

using namespace dp4;

enum Exit { kOk = 0, kVerifyFailed = 1, kMismatch = 2, kConfig = 3 };

struct Config {
  std::string max_height = "1000";
  std::string method = "fiber";
  std::string eta = "1/4";
  std::string out;
  unsigned workers = detail::default_workers();
  u64 seed = 1;
  i64 schedule_start = 1000;
  int schedule_steps = 10;
  i64 rmax = 50;
  std::vector<std::string> suites;
  std::string mutate;
  std::string format = "points";
  bool timings = false;
};

// Accepts 1000, 10^6 and 1e6.
i64 parse_bound(const std::string& text) {
  static const std::regex plain(R"(\d+)"), power(R"((\d+)\^(\d+))"), sci(R"((\d+)[eE](\d+))");
  std::smatch m;
  auto pow_checked = [&](i64 base, i64 e, i64 scale) {
    i128 v = scale;
    for (i64 i = 0; i < e; ++i) {
      v *= base;
      if (v > std::numeric_limits<i64>::max()) throw BoundTooLarge("bound " + text + " exceeds 64 bits");
    }
    return static_cast<i64>(v);
  };
  try {
    if (std::regex_match(text, plain)) return std::stoll(text);
    if (std::regex_match(text, m, power)) return pow_checked(std::stoll(m[1]), std::stoll(m[2]), 1);
    if (std::regex_match(text, m, sci)) return pow_checked(10, std::stoll(m[2]), std::stoll(m[1]));
  } catch (const std::out_of_range&) {
    throw BoundTooLarge("bound " + text + " exceeds 64 bits");
  }
  throw BadInput("cannot parse bound '" + text + "'");
}

// Accepts 1/4 and 0.25.
double parse_eta(const std::string& text) {
  double v = 0;
  const auto slash = text.find('/');
  try {
    v = slash == std::string::npos ? std::stod(text) : std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw BadInput("cannot parse eta '" + text + "'");
  }
  if (!(v > 0 && v <= 0.5)) throw BadInput("eta must lie in (0, 1/2]");
  return v;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw BadInput("cannot open " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

CountOptions count_options(const Config& c) {
  if (c.workers < 1) throw BadInput("--workers must be >= 1");
  CountOptions o;
  o.workers = c.workers;
  return o;
}

Method parse_method(const std::string& m) {
  if (m == "brute") return Method::brute;
  if (m == "fiber") return Method::fiber;
  if (m == "split") return Method::split;
  throw BadInput("unknown method '" + m + "'");
}

void write_count(std::ostream& os, const CountRecord& r) {
  os << r.bound << ',' << to_string(r.method) << ',' << r.count << ',' << std::fixed << std::setprecision(3) << r.seconds
     << '\n';
  os.unsetf(std::ios::floatfield);
}

int cmd_count(const Config& c) {
  const i64 B = parse_bound(c.max_height);
  if (B < 1) throw BadInput("--max-height must be >= 1");
  const CountOptions opt = count_options(c);
  Output out(c.out);
  if (c.method == "both") {
    // Check both limits before doing any work.
    if (B > opt.brute_ceiling) throw BoundTooLarge("brute force is limited to B <= " + std::to_string(opt.brute_ceiling));
    try {
      const auto rows = counting::reconcile({B}, opt);
      out.os() << "B,method,count,seconds\n";
      write_count(out.os(), rows.front().brute);
      write_count(out.os(), rows.front().fiber);
    } catch (const MismatchError& e) {
      std::cerr << e.what() << '\n';
      for (const auto& x : e.only_brute) std::cerr << "  brute only: " << surface::format_point(x) << '\n';
      for (const auto& x : e.only_fiber) std::cerr << "  fiber only: " << surface::format_point(x) << '\n';
      return kMismatch;
    }
    return kOk;
  }
  const CountRecord r = counting::count(B, parse_method(c.method), opt);
  out.os() << "B,method,count,seconds\n";
  write_count(out.os(), r);
  return kOk;
}

int cmd_verify(const Config& c) {
  verify::VerifyOptions opt;
  opt.seed = c.seed;
  opt.workers = c.workers;
  if (c.mutate == "fprime-sign") {
    opt.f_prime = [](i64 n) { return Rational(-arith::f_prime_closed(n)); };
  } else if (!c.mutate.empty()) {
    throw BadInput("unknown mutation '" + c.mutate + "'");
  }
  auto suites = verify::default_suites();
  if (!c.suites.empty()) {
    std::vector<verify::Suite> chosen;
    for (const auto& name : c.suites) {
      auto it = std::find_if(suites.begin(), suites.end(), [&](const verify::Suite& s) { return s.name == name; });
      if (it == suites.end()) throw BadInput("unknown suite '" + name + "'");
      chosen.push_back(*it);
    }
    suites = std::move(chosen);
  }
  Output out(c.out);
  out.os() << "suite,range,checked,failures,status,detail" << (c.timings ? ",seconds" : "") << '\n';
  int failed = 0;
  for (const auto& s : suites) {
    const verify::SuiteReport r = s.run(opt);
    const std::string detail = r.passed() ? r.note : r.first_failure;
    out.os() << r.suite << ",\"" << r.range << "\"," << r.checked << ',' << r.failures << ','
             << (r.passed() ? "pass" : "FAIL") << ",\"" << detail << '"';
    if (c.timings) out.os() << ',' << std::fixed << std::setprecision(2) << r.seconds << std::defaultfloat;
    out.os() << '\n' << std::flush;
    if (!r.passed()) {
      if (failed == 0) std::cerr << "first counterexample (" << r.suite << "): " << r.first_failure << '\n';
      ++failed;
    }
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_fibers(const Config& c) {
  const i64 B = parse_bound(c.max_height);
  if (B < 1) throw BadInput("--max-height must be >= 1");
  if (c.rmax < 1) throw BadInput("--rmax must be >= 1");
  const auto rep = quadrics::hb_ratio_survey(B, c.rmax, c.workers);
  Output out(c.out);
  out.os() << "r,s,count,hb_bound,ratio\n" << std::setprecision(10);
  for (const auto& row : rep.skipped) out.os() << row.r << ',' << row.s << ',' << row.count << ",,\n";
  for (const auto& row : rep.rows) out.os() << row.r << ',' << row.s << ',' << row.count << ',' << row.hb << ',' << row.ratio << '\n';
  std::cerr << rep.rows.size() << " fibers (" << rep.skipped.size() << " singular without a bound); max ratio "
            << rep.max_ratio << ", mean " << rep.mean_ratio << "; max over first half " << rep.max_first_half
            << ", second half " << rep.max_second_half << (rep.bounded ? " (bounded)" : " (NOT bounded)") << '\n';
  return kOk;
}

int cmd_growth(const Config& c) {
  const CountOptions opt = count_options(c);
  const Method method = parse_method(c.method == "both" ? "split" : c.method);
  const auto bounds = growth::schedule(c.schedule_start, c.schedule_steps);
  const i64 ceiling = method == Method::brute ? opt.brute_ceiling : opt.fiber_ceiling;
  if (bounds.back() > ceiling)
    throw BoundTooLarge("schedule reaches B=" + std::to_string(bounds.back()) + " above the ceiling " + std::to_string(ceiling));
  Output out(c.out);
  out.os() << "B,count,normalized\n" << std::flush;
  const auto rows = growth::run(bounds, method, opt, [&](const growth::Row& r) {
    out.os() << r.bound << ',' << r.count << ',' << std::setprecision(8) << r.normalized << '\n' << std::flush;
  });
  const auto s = growth::summarize(rows);
  if (s.rows < 2) {
    std::cerr << "single row, no stability check\n";
    return kOk;
  }
  std::cerr << "top half max/min " << s.top_half_ratio << ", top-5 max/min " << s.top5_ratio
            << (s.stable ? " (stable)" : " (NOT stable)") << (s.diverging ? ", diverging" : ", no monotone divergence")
            << '\n';
  return kOk;
}

int cmd_generate(const Config& c) {
  const i64 B = parse_bound(c.max_height);
  const double eta = parse_eta(c.eta);
  const auto pts = lowerbound::generate_points(B, eta);
  Output out(c.out);
  if (c.format == "csv") {
    out.os() << "r,s,x,y,n,height\n";
    for (const auto& g : pts) out.os() << g.r << ',' << g.s << ',' << g.x << ',' << g.y << ',' << g.n << ',' << g.point.height << '\n';
  } else if (c.format == "points") {
    for (const auto& g : pts) out.os() << surface::format_point(g.point.x) << '\n';
  } else {
    throw BadInput("unknown format '" + c.format + "'");
  }
  std::cerr << pts.size() << " points\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points of height at most B on the quartic del Pezzo surface x1 x2 = x3 x4, "
               "x1^2 + x2^2 + x3^2 = x4^2 + 2 x5^2, off its lines"};
  app.require_subcommand(1);
  Config cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto* count = app.add_subcommand("count", "Count U-points of height <= B");
  count->add_option("--max-height", cfg.max_height, "Height bound B")->required();
  count->add_option("--method", cfg.method, "brute, fiber, split or both")
      ->check(CLI::IsMember({"brute", "fiber", "split", "both"}));
  add_common(count);

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--seed", cfg.seed, "Seed for randomized suites");
  ver->add_option("--suite", cfg.suites, "Run only these suites");
  ver->add_option("--mutate", cfg.mutate, "Inject a fault (fprime-sign)");
  ver->add_flag("--timings", cfg.timings, "Add a seconds column");
  add_common(ver);

  auto* fib = app.add_subcommand("fibers", "Heath-Brown ratio survey over fibers");
  fib->add_option("--max-height", cfg.max_height, "Height bound B")->default_str("10000");
  fib->add_option("--rmax", cfg.rmax, "Largest max(|r|,|s|)");
  add_common(fib);

  auto* gro = app.add_subcommand("growth", "Normalized counts over B0 * 2^k");
  gro->add_option("--schedule-start", cfg.schedule_start, "B0");
  gro->add_option("--schedule-steps", cfg.schedule_steps, "Number of rows");
  gro->add_option("--method", cfg.method, "fiber or split (default split)")
      ->check(CLI::IsMember({"brute", "fiber", "split"}));
  add_common(gro);

  auto* gen = app.add_subcommand("generate", "Points from the lower-bound construction");
  gen->add_option("--max-height", cfg.max_height, "Height bound B")->required();
  gen->add_option("--eta", cfg.eta, "Exponent for 1 <= r, s <= B^eta (default 1/4)");
  gen->add_option("--format", cfg.format, "points or csv")->check(CLI::IsMember({"points", "csv"}));
  add_common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  if (fib->parsed() && fib->count("--max-height") == 0) cfg.max_height = "10000";
  if (gro->parsed() && gro->count("--method") == 0) cfg.method = "split";
  try {
    if (count->parsed()) return cmd_count(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (fib->parsed()) return cmd_fibers(cfg);
    if (gro->parsed()) return cmd_growth(cfg);
    if (gen->parsed()) return cmd_generate(cfg);
  } catch (const BoundTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kConfig;
}

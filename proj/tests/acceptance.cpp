// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "dp4/growth.hpp"
#include "dp4/verify.hpp"

using namespace dp4;

namespace {

// Pinned tolerances.
constexpr double kDedekindTol = 0.3;
constexpr double kSurveyFactor = 2.0;
constexpr double kGrowthTop5 = 2.0;
constexpr double kPhiRelError = 1e-3;
constexpr double kDirichletFactor = 3.0;

int failed = 0;

void report(int id, const char* name, bool ok, const std::string& detail, double seconds) {
  std::printf("%-4s %2d %-22s %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failed;
}

template <class Fn>
void criterion(int id, const char* name, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, name, ok, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

bool from_suite(const verify::SuiteReport& r, std::string& detail) {
  detail = r.range + ", " + std::to_string(r.checked) + " checks";
  if (!r.note.empty()) detail += ", " + r.note;
  if (!r.passed()) detail += ", first failure " + r.first_failure;
  return r.passed();
}

}  // namespace

int main() {
  const verify::VerifyOptions opt;

  criterion(1, "oracle-equivalence", [&](std::string& d) {
    i64 bad = 0;
    std::string first;
    auto check = [&](i64 B) {
      const i64 a = counting::brute_enumerate(B).count, b = counting::fiber_count(B).count;
      if (a != b && bad++ == 0) first = "B=" + std::to_string(B) + ": " + std::to_string(a) + " vs " + std::to_string(b);
      return a;
    };
    for (i64 B = 1; B <= 200; ++B) check(B);
    const i64 n500 = check(500), n1000 = check(1000), n2000 = check(2000);
    d = "B=1..200,500,1000,2000; N(2000)=" + std::to_string(n2000) + " N(1000)=" + std::to_string(n1000) +
        " N(500)=" + std::to_string(n500) + (bad ? "; " + first : "");
    return bad == 0;
  });

  criterion(2, "content-lemma", [&](std::string& d) { return from_suite(verify::content_lemma(opt), d); });
  criterion(3, "height-lemma", [&](std::string& d) { return from_suite(verify::height_lemma(500, opt), d); });

  criterion(4, "F-table", [&](std::string& d) { return from_suite(verify::F_table(10000, 500, opt), d); });

  criterion(5, "f-prime", [&](std::string& d) {
    std::string a, b;
    const bool ok = from_suite(verify::inversion_identity(10000, opt), a) & from_suite(verify::f_prime_local(100, 6, opt), b);
    d = a + "; " + b;
    return ok;
  });

  criterion(6, "rho-properties", [&](std::string& d) {
    std::string a, b;
    const bool ok = from_suite(verify::rho_properties(500, 6, opt), a) & from_suite(verify::hensel_vs_scan(10000, opt), b);
    d = a + "; " + b;
    return ok;
  });

  criterion(7, "dedekind-landau", [&](std::string& d) {
    const double ratio = arith::dedekind_ratio({PolySpec{1, 0, 1}, PolySpec{1, 1}, PolySpec{1, -1}}, 1000000, opt.workers);
    char buf[96];
    std::snprintf(buf, sizeof buf, "t=10^6 ratio %.6f, |ratio-3| %.6f <= %.1f", ratio, std::fabs(ratio - 3), kDedekindTol);
    d = buf;
    return std::fabs(ratio - 3) <= kDedekindTol;
  });

  criterion(8, "hb-survey", [&](std::string& d) {
    const auto rep = quadrics::hb_ratio_survey(10000, 50, opt.workers);
    char buf[160];
    std::snprintf(buf, sizeof buf, "B=10^4 rmax=50, %zu fibers, max ratio small-r %.4f, large-r %.4f, factor <= %.0f",
                  rep.rows.size(), rep.max_first_half, rep.max_second_half, kSurveyFactor);
    d = buf;
    return !rep.rows.empty() && rep.max_second_half <= kSurveyFactor * rep.max_first_half;
  });

  criterion(9, "growth", [&](std::string& d) {
    std::vector<i64> bounds;
    for (i64 B = 1000; B <= CountOptions{}.fiber_ceiling; B *= 2) bounds.push_back(B);
    const auto rows = growth::run(bounds, Method::split, {}, [](const growth::Row& r) {
      std::printf("     B=%-8lld N=%-12lld normalized=%.6f\n", static_cast<long long>(r.bound), static_cast<long long>(r.count),
                  r.normalized);
      std::fflush(stdout);
    });
    const auto s = growth::summarize(rows);
    char buf[128];
    std::snprintf(buf, sizeof buf, "B=1000..%lld, top-5 ratio %.4f < %.0f, diverging %s", static_cast<long long>(bounds.back()),
                  s.top5_ratio, kGrowthTop5, s.diverging ? "yes" : "no");
    d = buf;
    return s.top5_ratio < kGrowthTop5 && !s.diverging;
  });

  criterion(10, "phi-average", [&](std::string& d) {
    const auto s = arith::phi_sum_check(100000);
    const i64 c = arith::coprime_count(100, 6);
    char buf[128];
    std::snprintf(buf, sizeof buf, "N=10^5 relative error %.2e < %.0e, coprime_count(100,6)=%lld", s.rel_error, kPhiRelError,
                  static_cast<long long>(c));
    d = buf;
    return s.rel_error < kPhiRelError && c == 33;
  });

  criterion(11, "generator", [&](std::string& d) { return from_suite(verify::generator_subset(2000, 0.25, opt), d); });
  criterion(12, "complex-lines", [&](std::string& d) { return from_suite(verify::complex_lines(1000, 10, opt), d); });

  criterion(13, "dirichlet", [&](std::string& d) {
    const auto a = arith::dirichlet_partial(1000), b = arith::dirichlet_partial(1000000);
    const double factor = std::max(a.ratio_log3, b.ratio_log3) / std::min(a.ratio_log3, b.ratio_log3);
    char buf[128];
    std::snprintf(buf, sizeof buf, "ratio at 10^3 %.4f, at 10^6 %.4f, factor %.4f < %.0f", a.ratio_log3, b.ratio_log3, factor,
                  kDirichletFactor);
    d = buf;
    return factor < kDirichletFactor;
  });

  std::printf("%s: %d of 13 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}

#include <gtest/gtest.h>

#include "dp4/verify.hpp"

using namespace dp4;

TEST(Verify, MutatedFPrimeIsCaught) {
  verify::VerifyOptions opt;
  opt.f_prime = [](i64 n) { return Rational(-arith::f_prime_closed(n)); };
  const auto r = verify::inversion_identity(100, opt);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure.rfind("n=1:", 0), 0U) << r.first_failure;
}

TEST(Verify, OffByOnePrimePowerIsCaught) {
  verify::VerifyOptions opt;
  opt.f_prime = [](i64 n) { return n == 49 ? Rational(0) : arith::f_prime_closed(n); };
  const auto r = verify::inversion_identity(100, opt);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure.rfind("n=49:", 0), 0U) << r.first_failure;
}

TEST(Verify, SameSeedSameReport) {
  verify::VerifyOptions opt;
  opt.seed = 42;
  const auto a = verify::q_vanishing(2000, opt), b = verify::q_vanishing(2000, opt);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.note, b.note);
  const auto c = verify::sieve_multiplicative(10000, 50, opt), d = verify::sieve_multiplicative(10000, 50, opt);
  EXPECT_EQ(c.checked, d.checked);
}

TEST(Verify, QuickSuitesPass) {
  const verify::VerifyOptions opt;
  for (const auto& r : {verify::height_lemma(80, opt), verify::normalize_classes(60, opt), verify::line_patterns(10, opt),
                        verify::complex_lines(100, 5, opt), verify::partition(40, opt), verify::determinism(60, opt),
                        verify::content_lemma(opt), verify::fiber_distinctness(opt), verify::q_vanishing(500, opt),
                        verify::quadric_invariants(100, opt), verify::inversion_identity(500, opt),
                        verify::f_prime_local(30, 4, opt), verify::F_table(500, 50, opt), verify::rho_properties(50, 4, opt),
                        verify::hensel_vs_scan(300, opt), verify::phi_average(5000, opt), verify::nair(opt)}) {
    EXPECT_TRUE(r.passed()) << r.suite << ": " << r.first_failure;
    EXPECT_GT(r.checked, 0) << r.suite;
  }
}

TEST(Verify, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& s : verify::default_suites()) EXPECT_TRUE(names.insert(s.name).second) << s.name;
  EXPECT_EQ(names.size(), 23U);
}

#pragma once

// N_U(B) / (B (ln B)^4) over a doubling schedule B_k = B0 * 2^k.

#include <algorithm>
#include <cmath>
#include <vector>

#include "dp4/counting.hpp"
#include "dp4/surface.hpp"

namespace dp4::growth {

struct Row {
  i64 bound = 0;
  i64 count = 0;
  double normalized = 0;  // count / (B (ln B)^(rho - 1)), natural log
  double seconds = 0;
};

struct Summary {
  std::size_t rows = 0;
  double top_half_ratio = 0;  // max / min of normalized over the upper half
  double top5_ratio = 0;      // max / min over the last five rows
  bool stable = false;        // top5_ratio < 2 (needs two rows)
  bool diverging = false;     // see summarize
};

inline double normalize(i64 B, i64 count) {
  const double lg = std::log(static_cast<double>(B));
  return static_cast<double>(count) / (static_cast<double>(B) * std::pow(lg, kPicardRank - 1));
}

inline std::vector<i64> schedule(i64 start, int steps) {
  if (start < 2 || steps < 1) throw BadInput("growth schedule needs start >= 2 and steps >= 1");
  std::vector<i64> b;
  i64 B = start;
  for (int k = 0; k < steps; ++k, B *= 2) b.push_back(B);
  return b;
}

template <class OnRow>
std::vector<Row> run(const std::vector<i64>& bounds, Method method, const CountOptions& opt, OnRow&& on_row) {
  std::vector<Row> rows;
  for (i64 B : bounds) {
    const CountRecord rec = counting::count(B, method, opt);
    rows.push_back({B, rec.count, normalize(B, rec.count), rec.seconds});
    on_row(rows.back());
  }
  return rows;
}

inline double spread(const std::vector<Row>& rows, std::size_t from) {
  double lo = rows[from].normalized, hi = lo;
  for (std::size_t i = from; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].normalized);
    hi = std::max(hi, rows[i].normalized);
  }
  return hi / lo;
}

/// The upper half of the schedule counts as diverging when it is monotone
/// and its log-steps do not shrink (last step at least as large as the
/// first), i.e. nothing suggests it levels off.
inline Summary summarize(const std::vector<Row>& rows) {
  Summary s;
  s.rows = rows.size();
  if (rows.size() < 2) return s;
  const std::size_t half = rows.size() / 2;
  s.top_half_ratio = spread(rows, half);
  s.top5_ratio = spread(rows, rows.size() > 5 ? rows.size() - 5 : 0);
  s.stable = s.top5_ratio < 2;
  std::vector<double> steps;
  for (std::size_t i = half + 1; i < rows.size(); ++i)
    steps.push_back(std::log(rows[i].normalized / rows[i - 1].normalized));
  if (steps.size() >= 2) {
    const bool up = std::all_of(steps.begin(), steps.end(), [](double d) { return d > 0; });
    const bool down = std::all_of(steps.begin(), steps.end(), [](double d) { return d < 0; });
    s.diverging = (up || down) && std::fabs(steps.back()) >= std::fabs(steps.front());
  }
  return s;
}

}  // namespace dp4::growth

// Lists U-points of small height with their fiber data, then compares the
// three counters at a few bounds.

#include <cstdio>
#include <cstdlib>

#include "dp4/counting.hpp"

int main(int argc, char** argv) {
  using namespace dp4;
  const i64 B = argc > 1 ? std::atoll(argv[1]) : 12;

  std::vector<SurfacePoint> pts;
  counting::brute_enumerate(B, true, &pts);
  std::printf("%zu U-points of height <= %lld\n", pts.size(), static_cast<long long>(B));
  for (const SurfacePoint& p : pts) {
    const auto f1 = surface::project(1, p), f2 = surface::project(2, p);
    std::printf("  (%s)  h=%lld  f1=[%lld:%lld]  f2=[%lld:%lld]\n", surface::format_point(p.x).c_str(),
                static_cast<long long>(p.height), static_cast<long long>(f1.first), static_cast<long long>(f1.second),
                static_cast<long long>(f2.first), static_cast<long long>(f2.second));
  }

  for (i64 b : {100, 500, 1000}) {
    std::printf("B=%-5lld brute %-8lld fiber %-8lld split %lld\n", static_cast<long long>(b),
                static_cast<long long>(counting::brute_enumerate(b).count),
                static_cast<long long>(counting::fiber_count(b).count), static_cast<long long>(counting::split_count(b).count));
  }
}

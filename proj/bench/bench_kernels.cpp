// Times the OpenMP kernels against their serial reference implementations
// and verifies agreement on the way.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "infoplane/info_calculus.hpp"
#include "infoplane/kernels.hpp"
#include "infoplane/sorted.hpp"

using namespace infoplane;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, agree ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "openmp", "speedup");

  {
    Window win{0, 699, 0, 699, 1};
    auto spec = ElasticSpec::constant(2);
    std::vector<SurfaceSample> a, b;
    double s = time_ms([&] { a = surface_grid(spec, win, Exec::Serial); });
    double p = time_ms([&] { b = surface_grid(spec, win, Exec::Parallel); });
    bool agree = a.size() == b.size();
    for (size_t i = 0; i < a.size() && agree; ++i) {
      agree = a[i].cell == b[i].cell && a[i].delta == b[i].delta;
    }
    row("surface 700x700 constant(2)", s, p, agree);
  }

  {
    Window win{0, 499, 0, 499, 1};
    auto spec = ElasticSpec::polynomial(1, 2);
    std::vector<SurfaceSample> a, b;
    double s = time_ms([&] { a = surface_grid(spec, win, Exec::Serial); });
    double p = time_ms([&] { b = surface_grid(spec, win, Exec::Parallel); });
    bool agree = a.size() == b.size();
    for (size_t i = 0; i < a.size() && agree; ++i) {
      agree = a[i].cell == b[i].cell && a[i].delta == b[i].delta;
    }
    row("surface 500x500 poly(x^2)", s, p, agree);
  }

  {
    std::vector<FinSet> a, b;
    double s = time_ms([&] { a = decode_canonical_range(0, 200000, Exec::Serial); });
    double p = time_ms([&] { b = decode_canonical_range(0, 200000, Exec::Parallel); });
    bool agree = a == b;
    row("decode 200k canonical sets", s, p, agree);
  }

  {
    // spectrum over 8 leaves; the parallel loop sits inside delta_spectrum
    std::vector<Nat> vals{2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<SpectrumLine> sp;
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    double s = time_ms([&] { sp = delta_spectrum(vals, OpKind::Add, DeltaMode::Collapse); });
    omp_set_num_threads(saved);
    std::vector<SpectrumLine> sp2;
    double p = time_ms([&] { sp2 = delta_spectrum(vals, OpKind::Add, DeltaMode::Collapse); });
    bool agree = sp.size() == sp2.size();
    for (size_t i = 0; i < sp.size() && agree; ++i) {
      agree = sp[i].total == sp2[i].total && sp[i].multiplicity == sp2[i].multiplicity;
    }
    row("spectrum 8 leaves collapse", s, p, agree);
  }

  return 0;
}

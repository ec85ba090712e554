#include "infoplane/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "infoplane/set_codec.hpp"

namespace infoplane {

std::vector<SurfaceSample> surface_grid(const ElasticSpec& spec, const Window& window,
                                        Exec exec) {
  if (window.x_hi < window.x_lo || window.y_hi < window.y_lo) {
    throw std::invalid_argument("surface_grid: empty window");
  }
  if (window.stride < 1) throw std::invalid_argument("surface_grid: stride must be >= 1");

  std::vector<SurfaceSample> samples;
  for (Nat x = window.x_lo; x <= window.x_hi; x += window.stride) {
    for (Nat y = window.y_lo; y <= window.y_hi; y += window.stride) {
      samples.push_back(SurfaceSample{Cell{x, y}, 0.0});
    }
  }
  std::sort(samples.begin(), samples.end(), [](const SurfaceSample& a, const SurfaceSample& b) {
    Nat wa = a.cell.x + a.cell.y;
    Nat wb = b.cell.x + b.cell.y;
    if (wa != wb) return wa < wb;
    return a.cell.y < b.cell.y;
  });

  const long n = static_cast<long>(samples.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i) {
      samples[i].delta = delta_pi(elastic_apply(spec, samples[i].cell));
    }
  } else {
    for (long i = 0; i < n; ++i) {
      samples[i].delta = delta_pi(elastic_apply(spec, samples[i].cell));
    }
  }
  return samples;
}

std::vector<FinSet> decode_canonical_range(const Nat& lo, size_t count, Exec exec) {
  std::vector<FinSet> out(count);
  const long n = static_cast<long>(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < n; ++i) {
      out[i] = set_decode(lo + static_cast<unsigned long>(i), CodecMode::Canonical);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      out[i] = set_decode(lo + static_cast<unsigned long>(i), CodecMode::Canonical);
    }
  }
  return out;
}

}  // namespace infoplane

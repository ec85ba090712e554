#pragma once

#include <vector>

#include "infoplane/elastic.hpp"
#include "infoplane/finset.hpp"
#include "infoplane/nat.hpp"

namespace infoplane {

/// Execution mode for the data-parallel kernels. Serial is the reference
/// implementation; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

struct SurfaceSample {
  Cell cell;
  Bits delta;
};

/// Inclusive sampling window over N^2.
struct Window {
  Nat x_lo, x_hi;
  Nat y_lo, y_hi;
  Nat stride = 1;
};

/// delta_pi(eps(x, y)) for every sampled cell of the window, emitted in
/// counter-diagonal order: ascending x + y, then ascending y (the packing
/// order restricted to the samples). The order is fixed before any delta is
/// evaluated, so scheduling cannot reorder output.
std::vector<SurfaceSample> surface_grid(const ElasticSpec& spec, const Window& window,
                                        Exec exec = Exec::Parallel);

/// Canonical sets for indices [lo, lo + count); each decode is independent.
std::vector<FinSet> decode_canonical_range(const Nat& lo, size_t count,
                                           Exec exec = Exec::Parallel);

}  // namespace infoplane

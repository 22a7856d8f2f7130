#pragma once

// Umbrella header for the reversible data-hiding toolkit: bit-plane
// decomposition, MED pre-processing, the double-peak two-layer codec, the
// single-peak TLE baseline, and the metrics/benchmark harness.

#include "dtle/arith.hpp"
#include "dtle/bench.hpp"
#include "dtle/bitplane.hpp"
#include "dtle/bits.hpp"
#include "dtle/codec.hpp"
#include "dtle/errors.hpp"
#include "dtle/image.hpp"
#include "dtle/location_map.hpp"
#include "dtle/med.hpp"
#include "dtle/metrics.hpp"
#include "dtle/pgm.hpp"
#include "dtle/pipeline.hpp"
#include "dtle/scan.hpp"
#include "dtle/synth.hpp"
#include "dtle/tle.hpp"

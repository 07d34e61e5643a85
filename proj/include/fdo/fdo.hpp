#pragma once

// Convenience umbrella for the whole library.

#include "fdo/adaptive.hpp"
#include "fdo/algorithms.hpp"
#include "fdo/benchmarks.hpp"
#include "fdo/binpack.hpp"
#include "fdo/chaotic.hpp"
#include "fdo/core.hpp"
#include "fdo/harness.hpp"
#include "fdo/objective.hpp"
#include "fdo/quasi.hpp"
#include "fdo/rng.hpp"
#include "fdo/stats.hpp"
#include "fdo/variants.hpp"

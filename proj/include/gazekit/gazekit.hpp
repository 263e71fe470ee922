#ifndef GAZEKIT_GAZEKIT_HPP
#define GAZEKIT_GAZEKIT_HPP

/// Umbrella header: fixation/saccade classification (I-VT, I-AVT, I-DT),
/// K-ratio threshold selection, Gaussian noise augmentation, frame-wise
/// metrics, synthetic trajectory generation, and CSV ingest.

#include "gazekit/classify.hpp"
#include "gazekit/error.hpp"
#include "gazekit/ingest.hpp"
#include "gazekit/kratio.hpp"
#include "gazekit/metrics.hpp"
#include "gazekit/noise.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/synth.hpp"
#include "gazekit/types.hpp"

#endif  // GAZEKIT_GAZEKIT_HPP

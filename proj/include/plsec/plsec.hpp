#pragma once

// Umbrella header: physical-layer secrecy metrics over fading channels.

#include "plsec/channels.hpp"
#include "plsec/errors.hpp"
#include "plsec/foxh.hpp"
#include "plsec/metrics.hpp"
#include "plsec/mixtures.hpp"
#include "plsec/montecarlo.hpp"
#include "plsec/quadrature.hpp"
#include "plsec/rng.hpp"
#include "plsec/specfun.hpp"

#pragma once

#include "routesim/experiment.hpp"
#include "routesim/histogram.hpp"
#include "routesim/metrics.hpp"
#include "routesim/models.hpp"
#include "routesim/rng.hpp"
#include "routesim/route.hpp"
#include "routesim/shortest_path.hpp"
#include "routesim/synth.hpp"
#include "routesim/topology.hpp"
#include "routesim/trace_io.hpp"
#include "routesim/version.hpp"
#include "routesim/weights.hpp"

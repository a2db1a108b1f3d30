#pragma once

// Umbrella header: geometry model and metrics, WKT/GeoJSON codecs, MPP/DIV
// encoders with grid construction and point decoding, DBSCAN over encoding
// vectors, and the probe-model evaluation harness.

#include "geomenc/corpus.hpp"
#include "geomenc/dbscan.hpp"
#include "geomenc/enc_io.hpp"
#include "geomenc/encoding.hpp"
#include "geomenc/errors.hpp"
#include "geomenc/experiment.hpp"
#include "geomenc/fixtures.hpp"
#include "geomenc/geojson.hpp"
#include "geomenc/geometry.hpp"
#include "geomenc/geometry_ops.hpp"
#include "geomenc/grid.hpp"
#include "geomenc/metrics.hpp"
#include "geomenc/pairs.hpp"
#include "geomenc/probe.hpp"
#include "geomenc/rng.hpp"
#include "geomenc/svg.hpp"
#include "geomenc/wkt.hpp"

#pragma once

// Graphviz text for the exported structures. Simplex nodes are named by their
// canonical string ("1,2,3"), so output is stable across runs.

#include "diskgeo/complex.hpp"
#include "diskgeo/frame_flow.hpp"
#include "diskgeo/poincare_hopf.hpp"
#include "diskgeo/sheets.hpp"

#include <string>

namespace diskgeo {

/// Facets joined when they share a wall.
std::string dual_graph_dot(const SimplicialComplex& c);

/// The orbit as a directed walk between facets; edges carry the step number
/// and nodes visited more than once are annotated with their visit count.
std::string orbit_dot(const Orbit& o);

/// Embedded facets of a sheet with their immersion counts.
std::string sheet_dot(const Sheet& sheet);

std::string self_map_dot(const VertexSelfMap& m);

}  // namespace diskgeo

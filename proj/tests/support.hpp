#pragma once

#include "diskgeo/catalog.hpp"
#include "oracle.hpp"

#include <string>
#include <vector>

namespace support {

inline oracle::Complex to_oracle(const diskgeo::SimplicialComplex& c) {
    oracle::Complex out;
    for (const auto& s : c.simplices()) out.insert(oracle::Set(s.vector().begin(), s.vector().end()));
    return out;
}

// Catalog complexes small enough for exhaustive oracle comparisons.
inline std::vector<std::string> small_catalog() {
    return {"point", "path3", "cycle3", "cycle5", "simplex2", "simplex3", "octahedron", "icosahedron",
            "rp2", "rp3", "torus13", "cat3", "cat4", "cat7", "cat11"};
}

// Every named entry including refinements.
inline std::vector<std::string> full_catalog() {
    std::vector<std::string> names;
    for (const auto& e : diskgeo::catalog_entries()) names.push_back(e.name);
    names.push_back("simplex3");
    return names;
}

inline std::vector<std::string> closed_surfaces() {
    return {"octahedron", "icosahedron", "rp2", "torus13", "cat3", "cat4", "cat7", "cat11",
            "octahedron-b1", "octahedron-b2", "icosahedron-b1", "torus13-b1", "torus13-b2"};
}

}  // namespace support

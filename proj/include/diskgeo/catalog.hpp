#pragma once

// Built-in complexes and the two JSON file formats:
//
//   facets-json  {"name": "...", "facets": [[1,2,3], ...]}   closure is taken
//   graph-json   {"vertices": [...], "edges": [[1,2], ...]}  Whitney complex

#include "diskgeo/complex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diskgeo {

struct CatalogEntry {
    std::string name;
    std::string construction;          // e.g. "whitney(K_{2,2,2})"
    std::vector<std::string> aliases;
    std::vector<long long> expected_f; // f_0 .. f_q
    long long expected_euler = 0;
    std::optional<int> manifold_dimension;  // closed manifold dimension, when known
};

/// Fixed entries in listing order. Parametric families (cycleN, simplexQ) are
/// listed by one representative each.
const std::vector<CatalogEntry>& catalog_entries();

/// Resolves names, aliases and the parametric families cycleN (N >= 3) and
/// simplexQ (0 <= Q <= 16). Returns nothing for unknown names.
std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

/// Throws lookup (listing the available names) for unknown names.
SimplicialComplex catalog_complex(std::string_view name);

/// Bytes of an embedded data file such as "rp3.json"; throws lookup.
std::string_view embedded_data(std::string_view file);
std::vector<std::string> embedded_data_files();

enum class InputFormat { auto_detect, facets_json, graph_json };

/// "auto", "facets-json" or "graph-json"; throws invalid_input.
InputFormat parse_input_format(std::string_view text);

/// `source` names the text in error messages. Throws parse with the JSON
/// location or the offending field.
SimplicialComplex parse_complex(std::string_view text, InputFormat format, std::string_view source = "<input>");
SimplicialComplex load_complex(const std::string& path, InputFormat format = InputFormat::auto_detect);

/// facets-json text of the maximal simplices.
std::string to_facets_json(const SimplicialComplex& c, std::string_view name);

}  // namespace diskgeo

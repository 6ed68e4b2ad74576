#include "diskgeo/catalog.hpp"

#include "diskgeo/error.hpp"
#include "embedded_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace diskgeo {

namespace {

using nlohmann::json;

Graph complete_multipartite(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int k = 0; k < parts[p]; ++k) part_of.push_back(static_cast<int>(p));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t a = 0; a < part_of.size(); ++a)
        for (std::size_t b = a + 1; b < part_of.size(); ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a + 1, b + 1);
    std::vector<VertexId> vertices;
    for (std::size_t a = 0; a < part_of.size(); ++a) vertices.push_back(static_cast<VertexId>(a + 1));
    return Graph::make(std::move(vertices), std::move(edges));
}

Graph circulant(int n, const std::vector<int>& residues) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int r : residues) {
            const int j = (i + r) % n;
            if (i < j) edges.emplace_back(i + 1, j + 1);
        }
    std::vector<VertexId> vertices;
    for (int i = 1; i <= n; ++i) vertices.push_back(i);
    return Graph::make(std::move(vertices), std::move(edges));
}

long long binomial(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Trailing decimal parameter of `name` after `prefix`, if the rest is all digits.
std::optional<long long> parameter(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size() || name.size() - prefix.size() > 9)
        return std::nullopt;
    long long value = 0;
    const auto rest = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
    return value;
}

CatalogEntry cycle_entry(long long n) {
    return {"cycle" + std::to_string(n), "closure of the edges {k,k+1} and {n,1}", n == 3 ? std::vector<std::string>{"triangle"} : std::vector<std::string>{},
            {n, n}, 0, 1};
}

CatalogEntry simplex_entry(long long q) {
    CatalogEntry e{"simplex" + std::to_string(q), "closure of {1,...,q+1}", {}, {}, 1, std::nullopt};
    for (long long k = 0; k <= q; ++k) e.expected_f.push_back(binomial(q + 1, k + 1));
    return e;
}

std::string available_names() {
    std::string out;
    for (const auto& e : catalog_entries()) {
        if (!out.empty()) out += ", ";
        out += e.name;
        for (const auto& a : e.aliases) out += ", " + a;
    }
    return out + ", cycleN (N >= 3), simplexQ (0 <= Q <= 16)";
}

SimplicialComplex build(const CatalogEntry& e) {
    const std::string& n = e.name;
    if (n == "point") return generate_closure({{1}});
    if (n == "path3") return generate_closure({{1, 2}, {2, 3}, {3, 4}});
    if (auto k = parameter(n, "cycle")) {
        std::vector<std::vector<VertexId>> edges;
        for (long long i = 1; i <= *k; ++i) edges.push_back({i, i % *k + 1});
        return generate_closure(std::span<const std::vector<VertexId>>(edges));
    }
    if (auto q = parameter(n, "simplex")) {
        std::vector<VertexId> all;
        for (long long i = 1; i <= *q + 1; ++i) all.push_back(i);
        return generate_closure({all});
    }
    if (n == "octahedron") return whitney(complete_multipartite({2, 2, 2}));
    if (n == "torus13") return whitney(circulant(13, {1, 3, 4, 9, 10, 12}));
    if (n == "icosahedron" || n == "rp2" || n == "rp3" || n == "tetrakis-hexahedron" ||
        n == "pentakis-dodecahedron" || n == "disdyakis-dodecahedron" || n == "disdyakis-triacontahedron")
        return parse_complex(embedded_data(n + ".json"), InputFormat::auto_detect, n + ".json");
    const auto dash = n.rfind("-b");
    if (dash != std::string::npos) {
        const auto base = find_catalog_entry(std::string_view(n).substr(0, dash));
        const auto depth = parameter(std::string_view(n).substr(dash), "-b");
        if (base && depth) return barycentric(build(*base), static_cast<int>(*depth));
    }
    throw Error(ErrorKind::internal, "catalog entry " + n + " has no construction");
}

void require_expected(const SimplicialComplex& c, const CatalogEntry& e) {
    std::vector<long long> f;
    for (const auto& v : f_vector(c).counts) f.push_back(static_cast<long long>(v));
    if (f != e.expected_f || euler_characteristic(c) != e.expected_euler)
        throw Error(ErrorKind::internal, "catalog entry " + e.name + " does not reproduce its f-vector");
}

long long as_vertex(const json& value, const std::string& where) {
    if (!value.is_number_integer())
        throw Error(ErrorKind::parse, where + ": expected an integer vertex label");
    const bool in_range = value.is_number_unsigned()
                              ? value.get<std::uint64_t>() - 1 < static_cast<std::uint64_t>(INT64_MAX)
                              : value.get<std::int64_t>() >= 1;
    if (!in_range)
        throw Error(ErrorKind::parse, where + ": vertex labels must be positive 64-bit integers");
    return value.get<std::int64_t>();
}

const json& require_array(const json& doc, const char* key, const std::string& source) {
    if (!doc.contains(key)) throw Error(ErrorKind::parse, source + ": missing \"" + key + "\"");
    const json& value = doc.at(key);
    if (!value.is_array()) throw Error(ErrorKind::parse, source + ": \"" + key + "\" must be an array");
    return value;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"point", "closure of {1}", {}, {1}, 1, 0},
        {"path3", "closure of {1,2},{2,3},{3,4}", {}, {4, 3}, 1, std::nullopt},
        cycle_entry(3),
        cycle_entry(5),
        simplex_entry(2),
        {"octahedron", "whitney(K_{2,2,2})", {}, {6, 12, 8}, 2, 2},
        {"icosahedron", "whitney of the icosahedron graph (icosahedron.json)", {}, {12, 30, 20}, 2, 2},
        {"rp2", "whitney of the 15-vertex projective plane graph (rp2.json)", {}, {15, 42, 28}, 1, 2},
        {"rp3", "closure of 40 tetrahedra (rp3.json)", {}, {11, 51, 80, 40}, 0, 3},
        {"torus13", "whitney(circulant(13; 1,3,4,9,10,12))", {}, {13, 39, 26}, 0, 2},
        {"disdyakis-dodecahedron", "facet list (disdyakis-dodecahedron.json)", {"cat3"}, {26, 72, 48}, 2, 2},
        {"disdyakis-triacontahedron", "facet list (disdyakis-triacontahedron.json)", {"cat4"}, {62, 180, 120}, 2, 2},
        {"pentakis-dodecahedron", "facet list (pentakis-dodecahedron.json)", {"cat7"}, {32, 90, 60}, 2, 2},
        {"tetrakis-hexahedron", "facet list (tetrakis-hexahedron.json)", {"cat11"}, {14, 36, 24}, 2, 2},
        {"octahedron-b1", "barycentric(octahedron)", {}, {26, 72, 48}, 2, 2},
        {"octahedron-b2", "barycentric(octahedron, 2)", {}, {146, 432, 288}, 2, 2},
        {"icosahedron-b1", "barycentric(icosahedron)", {}, {62, 180, 120}, 2, 2},
        {"torus13-b1", "barycentric(torus13)", {}, {78, 234, 156}, 0, 2},
        {"torus13-b2", "barycentric(torus13, 2)", {}, {468, 1404, 936}, 0, 2},
        {"rp3-b1", "barycentric(rp3)", {}, {182, 1142, 1920, 960}, 0, 3},
    };
    return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog_entries()) {
        if (e.name == name) return e;
        for (const auto& a : e.aliases)
            if (a == name) return e;
    }
    if (auto n = parameter(name, "cycle"); n && *n >= 3) return cycle_entry(*n);
    if (auto q = parameter(name, "simplex"); q && *q <= 16) return simplex_entry(*q);
    return std::nullopt;
}

SimplicialComplex catalog_complex(std::string_view name) {
    const auto entry = find_catalog_entry(name);
    if (!entry)
        throw Error(ErrorKind::lookup, "unknown catalog name '" + std::string(name) + "'; available: " + available_names());
    SimplicialComplex c = build(*entry);
    require_expected(c, *entry);
    return c;
}

std::string_view embedded_data(std::string_view file) {
    for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i)
        if (detail::kEmbeddedFiles[i].name == file) return detail::kEmbeddedFiles[i].bytes;
    throw Error(ErrorKind::lookup, "no embedded data file " + std::string(file));
}

std::vector<std::string> embedded_data_files() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) out.emplace_back(detail::kEmbeddedFiles[i].name);
    return out;
}

InputFormat parse_input_format(std::string_view text) {
    if (text == "auto") return InputFormat::auto_detect;
    if (text == "facets-json") return InputFormat::facets_json;
    if (text == "graph-json") return InputFormat::graph_json;
    throw Error(ErrorKind::invalid_input, "unknown format '" + std::string(text) + "' (auto, facets-json, graph-json)");
}

SimplicialComplex parse_complex(std::string_view text, InputFormat format, std::string_view source_view) {
    const std::string source(source_view);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, source + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::parse, source + ": top level must be an object");
    if (format == InputFormat::auto_detect) {
        if (doc.contains("facets")) format = InputFormat::facets_json;
        else if (doc.contains("edges")) format = InputFormat::graph_json;
        else throw Error(ErrorKind::parse, source + ": neither \"facets\" nor \"edges\" present");
    }

    if (format == InputFormat::facets_json) {
        const json& facets = require_array(doc, "facets", source);
        std::vector<std::vector<VertexId>> sets;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const std::string where = source + ": facets[" + std::to_string(i) + "]";
            if (!facets[i].is_array()) throw Error(ErrorKind::parse, where + ": expected an array");
            if (facets[i].empty()) throw Error(ErrorKind::parse, where + ": empty facet");
            std::vector<VertexId> set;
            for (std::size_t k = 0; k < facets[i].size(); ++k)
                set.push_back(as_vertex(facets[i][k], where + "[" + std::to_string(k) + "]"));
            std::sort(set.begin(), set.end());
            if (std::adjacent_find(set.begin(), set.end()) != set.end())
                throw Error(ErrorKind::parse, where + ": repeated vertex");
            sets.push_back(std::move(set));
        }
        return generate_closure(std::span<const std::vector<VertexId>>(sets));
    }

    const json& edges = require_array(doc, "edges", source);
    std::vector<VertexId> vertices;
    if (doc.contains("vertices")) {
        const json& vs = require_array(doc, "vertices", source);
        for (std::size_t i = 0; i < vs.size(); ++i)
            vertices.push_back(as_vertex(vs[i], source + ": vertices[" + std::to_string(i) + "]"));
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = source + ": edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) throw Error(ErrorKind::parse, where + ": expected a pair");
        const auto a = as_vertex(edges[i][0], where + "[0]");
        const auto b = as_vertex(edges[i][1], where + "[1]");
        if (a == b) throw Error(ErrorKind::parse, where + ": loop");
        pairs.emplace_back(a, b);
    }
    try {
        return whitney(Graph::make(std::move(vertices), std::move(pairs)));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, source + ": " + e.what());
    }
}

SimplicialComplex load_complex(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str(), format, path);
}

std::string to_facets_json(const SimplicialComplex& c, std::string_view name) {
    nlohmann::ordered_json doc;
    doc["name"] = name;
    doc["facets"] = json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.up_set(i).size() == 1) doc["facets"].push_back(c[i].vector());
    return doc.dump() + "\n";
}

}  // namespace diskgeo

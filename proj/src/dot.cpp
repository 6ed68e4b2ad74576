#include "diskgeo/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace diskgeo {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string sorted_name(const Frame& f) {
    std::vector<VertexId> v = f;
    std::sort(v.begin(), v.end());
    return quoted(to_string(Simplex::from_sorted(std::move(v))));
}

// Undirected graph on facets given by their canonical strings.
void facet_edges(std::ostringstream& out, const std::vector<Simplex>& facets) {
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = a + 1; b < facets.size(); ++b) {
            std::size_t shared = 0;
            for (VertexId v : facets[a].vertices()) shared += facets[b].contains(v) ? 1 : 0;
            if (shared + 1 == facets[a].size())
                out << "  " << quoted(to_string(facets[a])) << " -- " << quoted(to_string(facets[b])) << ";\n";
        }
}

}  // namespace

std::string dual_graph_dot(const SimplicialComplex& c) {
    const auto top = c.of_dimension(c.dimension());
    std::vector<Simplex> facets(top.begin(), top.end());
    std::ostringstream out;
    out << "graph dual {\n";
    for (const auto& f : facets) out << "  " << quoted(to_string(f)) << ";\n";
    facet_edges(out, facets);
    out << "}\n";
    return out.str();
}

std::string orbit_dot(const Orbit& o) {
    std::map<std::string, std::size_t> visits;
    std::vector<std::string> order;
    for (const auto& f : o.frames) {
        const auto name = sorted_name(f);
        if (visits[name]++ == 0) order.push_back(name);
    }
    std::ostringstream out;
    out << "digraph orbit {\n";
    for (const auto& name : order) {
        out << "  " << name;
        if (visits[name] > 1) out << " [label=" << quoted(name.substr(1, name.size() - 2) + " x" + std::to_string(visits[name])) << "]";
        out << ";\n";
    }
    for (std::size_t k = 0; k < o.frames.size(); ++k) {
        const auto& next = o.frames[(k + 1) % o.frames.size()];
        out << "  " << sorted_name(o.frames[k]) << " -> " << sorted_name(next) << " [label=\"" << k + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string sheet_dot(const Sheet& sheet) {
    std::vector<Simplex> facets;
    std::ostringstream out;
    out << "graph sheet {\n";
    for (const auto& [f, count] : sheet.facet_multiplicity) {
        facets.push_back(f);
        out << "  " << quoted(to_string(f));
        if (count > 1) out << " [label=" << quoted(to_string(f) + " x" + std::to_string(count)) << "]";
        out << ";\n";
    }
    facet_edges(out, facets);
    out << "}\n";
    return out.str();
}

std::string self_map_dot(const VertexSelfMap& m) {
    std::ostringstream out;
    out << "digraph selfmap {\n";
    for (const auto& [v, w] : m.image) out << "  " << quoted(std::to_string(v)) << " -> " << quoted(std::to_string(w)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace diskgeo

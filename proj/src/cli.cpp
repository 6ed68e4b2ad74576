#include "diskgeo/cli.hpp"

#include "diskgeo/catalog.hpp"
#include "diskgeo/curvature.hpp"
#include "diskgeo/dot.hpp"
#include "diskgeo/error.hpp"
#include "diskgeo/frame_flow.hpp"
#include "diskgeo/poincare_hopf.hpp"
#include "diskgeo/sheets.hpp"
#include "diskgeo/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <climits>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

namespace diskgeo::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input, name, format = "auto", out_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 0;
    bool csv = false;

    bool fast = false;
    std::size_t ceiling = 50'000;

    std::string start;
    bool all = false, billiard = false, dot = false;

    std::string bone, ordering;
    bool grow = false;
    std::size_t max_patches = 64;

    bool per_vertex = false, per_triangle = false;
    std::string first_order;

    std::optional<int> n, n_max;
    int min_part = 4;
    std::size_t min_parts = 4;
    std::vector<int> exclude;
    bool verify31 = false;

    std::size_t trials = 1;
    bool emit_map = false;
    std::string rule = "random";

    int depth = 0;
    std::size_t max_simplices = 5'000'000;

    std::string dot_target;
};

json integer(const Integer& v) {
    if (v >= LLONG_MIN && v <= LLONG_MAX) return static_cast<long long>(v);
    return v.str();
}

json rational(const Rational& r) { return to_string(r); }

json approx(const Rational& r) { return static_cast<double>(r); }

json f_vector_json(const SimplicialComplex& c) {
    json a = json::array();
    for (const auto& v : f_vector(c).counts) a.push_back(integer(v));
    return a;
}

json decision(Decision d) {
    if (d == Decision::undecided) return "undecided";
    return d == Decision::yes;
}

json partition_json(const Partition& p) { return p.parts; }

json value_counts(const std::map<Rational, std::size_t>& counts) {
    json a = json::array();
    for (const auto& [value, count] : counts)
        a.push_back({{"value", rational(value)}, {"count", count}, {"approx", approx(value)}});
    return a;
}

class Session {
public:
    Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void emit_text(const std::string& text) {
        if (o_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(o_.out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::invalid_input, "cannot write " + o_.out_path);
        file << text;
    }
    void emit(const json& j) { emit_text(j.dump(2) + "\n"); }

    json header(const std::string& command) const {
        json j;
        j["schema"] = "diskgeo/1";
        j["command"] = command;
        if (!source_.empty()) j["source"] = source_;
        return j;
    }

    const SimplicialComplex& complex() {
        if (complex_) return *complex_;
        if (o_.input.empty() == o_.name.empty()) throw UsageError("exactly one of --input or --name is required");
        if (!o_.name.empty()) {
            complex_ = catalog_complex(o_.name);
            source_ = o_.name;
        } else {
            complex_ = load_complex(o_.input, parse_input_format(o_.format));
            source_ = o_.input;
        }
        return *complex_;
    }

    const std::string& source() const { return source_; }

private:
    const Options& o_;
    std::ostream& out_;
    std::optional<SimplicialComplex> complex_;
    std::string source_;
};

std::vector<VertexId> vertex_list(const std::string& text, const char* flag) {
    try {
        return parse_vertex_list(text);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int cmd_info(Session& s) {
    const auto& c = s.complex();
    json j = s.header("info");
    j["dimension"] = c.dimension();
    j["f_vector"] = f_vector_json(c);
    j["euler"] = integer(euler_characteristic(c));
    j["simplices"] = c.size();
    j["pure"] = is_pure(c);
    s.emit(j);
    return 0;
}

int cmd_check(Session& s, const Options& o) {
    const auto& c = s.complex();
    RecognitionOptions ro;
    ro.vertex_links_only = o.fast;
    ro.size_ceiling = o.ceiling;
    const CheckReport r = check(c, ro);
    json j = s.header("check");
    j["pure"] = r.pure;
    j["dimension"] = r.dimension;
    j["manifold"] = decision(r.manifold);
    j["sphere"] = decision(r.sphere);
    j["contractible"] = decision(r.contractible);
    j["geodesic_ready"] = r.geodesic_ready;
    j["boundary_walls"] = r.boundary_walls;
    j["verdict"] = to_string(r.verdict.kind);
    if (r.verdict.witness) j["witness"] = *r.verdict.witness;
    if (r.higher_link_failure) j["higher_link_failure"] = to_string(*r.higher_link_failure);
    j["mode"] = o.fast ? "vertex-links" : "all-links";
    s.emit(j);
    return 0;
}

int cmd_flow(Session& s, const Options& o) {
    const FrameFlow flow(s.complex());
    json j = s.header("flow");
    j["dimension"] = flow.dimension();
    j["bundle_size"] = flow.bundle_size();
    if (!o.start.empty()) {
        const Frame start = vertex_list(o.start, "--start");
        const Orbit orbit = flow.orbit(start);
        if (o.dot) {
            s.emit_text(orbit_dot(orbit));
            return 0;
        }
        j["start"] = to_string(start);
        j["period"] = orbit.period;
        j["boundary"] = orbit.boundary_touching;
        json frames = json::array();
        for (const auto& f : orbit.frames) frames.push_back(to_string(f));
        j["frames"] = frames;
        j["facet_walk"] = facet_walk(flow, orbit);
        s.emit(j);
        return 0;
    }
    if (o.dot) throw UsageError("--dot needs --start");

    const OrbitPartition p = flow.orbit_partition();
    json cycles = json::array();
    for (const auto& cycle : p.cycles)
        cycles.push_back({{"start", to_string(cycle.start)}, {"period", cycle.period}, {"boundary", cycle.boundary_touching}});
    j["cycles"] = cycles;
    j["ergodic"] = p.ergodic;
    if (o.billiard) {
        std::map<std::uint64_t, std::size_t> histogram;
        std::size_t boundary = 0;
        std::uint64_t longest = 0;
        for (const auto& cycle : p.cycles) {
            ++histogram[cycle.period];
            boundary += cycle.boundary_touching ? 1 : 0;
            longest = std::max(longest, cycle.period);
        }
        json periods = json::array();
        for (const auto& [period, count] : histogram) periods.push_back({{"period", period}, {"count", count}});
        const WallCensus census = wall_census(s.complex());
        j["billiard"] = {{"cycle_count", p.cycles.size()},
                         {"boundary_cycles", boundary},
                         {"interior_cycles", p.cycles.size() - boundary},
                         {"longest_period", longest},
                         {"period_histogram", periods},
                         {"boundary_walls", census.boundary_walls}};
    }
    s.emit(j);
    return 0;
}

json patch_json(const SimplicialComplex& c, const SheetPatch& p) {
    json petals = json::array();
    for (std::size_t k = 0; k < p.petal_bones.size(); ++k)
        petals.push_back({{"bone", to_string(p.petal_bones[k])}, {"facets", p.petal_numbers[k]}});
    const Rational k = sectional_curvature(c, p.bone, p.ordering);
    return {{"bone", to_string(p.bone)},
            {"ordering", to_string(p.ordering)},
            {"transport_frame", to_string(p.transport_frame)},
            {"petals", petals},
            {"facets", p.facets.size()},
            {"dual_edges", p.dual_subgraph.edges.size()},
            {"sectional", rational(k)},
            {"approx", approx(k)}};
}

int cmd_sheets(Session& s, const Options& o) {
    const auto& c = s.complex();
    if (o.bone.empty()) throw UsageError("--bone is required");
    const Simplex bone(vertex_list(o.bone, "--bone"));
    std::vector<VertexId> ordering;
    if (!o.ordering.empty()) ordering = vertex_list(o.ordering, "--ordering");

    if (o.grow) {
        const Sheet sheet = grow_sheet(c, bone, ordering, o.max_patches);
        if (o.dot) {
            s.emit_text(sheet_dot(sheet));
            return 0;
        }
        std::size_t max_multiplicity = 0;
        for (const auto& [_, count] : sheet.facet_multiplicity) max_multiplicity = std::max(max_multiplicity, count);
        json patches = json::array();
        for (const auto& p : sheet.patches) patches.push_back(patch_json(c, p));
        json j = s.header("sheets");
        j["grown"] = true;
        j["closed"] = sheet.closed;
        j["boundary_bones"] = sheet.boundary_bones;
        j["facets"] = sheet.facet_multiplicity.size();
        j["max_multiplicity"] = max_multiplicity;
        j["dual_edges"] = sheet.dual_subgraph.edges.size();
        j["patches"] = patches;
        s.emit(j);
        return 0;
    }

    const SheetPatch patch = local_disk(c, bone, ordering);
    if (o.dot) {
        Sheet single;
        for (const auto& f : patch.facets) single.facet_multiplicity[f] = 1;
        s.emit_text(sheet_dot(single));
        return 0;
    }
    json j = s.header("sheets");
    j["grown"] = false;
    j["m"] = bone_ring(c, bone).m;
    for (auto& [key, value] : patch_json(c, patch).items()) j[key] = value;
    s.emit(j);
    return 0;
}

int cmd_sectional(Session& s, const Options& o) {
    const SectionalSpectrum spectrum = sectional_spectrum(s.complex(), o.threads);
    json j = s.header("sectional");
    j["dimension"] = spectrum.dimension;
    j["bones"] = spectrum.bones;
    j["spectrum"] = value_counts(spectrum.counts);
    j["total"] = rational(spectrum.total);
    j["euler"] = integer(spectrum.euler);
    if (o.csv) {
        std::string text = "value,count\n";
        for (const auto& [value, count] : spectrum.counts) text += to_string(value) + "," + std::to_string(count) + "\n";
        s.emit_text(text);
        return 0;
    }
    s.emit(j);
    return 0;
}

int cmd_curvature(Session& s, const Options& o) {
    const auto& c = s.complex();
    CurvatureReport r;
    std::string kind = "second-order";
    if (o.per_triangle) {
        r = triangle_curvatures(c);
        kind = "triangle";
    } else if (!o.first_order.empty()) {
        r = first_order_report(c, o.first_order == "eberhard" ? FirstOrderKind::eberhard : FirstOrderKind::levitt);
        kind = o.first_order;
    } else {
        r = gauss_bonnet_2m(c);
    }
    if (o.csv) {
        std::string text = "site,value\n";
        for (const auto& [site, value] : r.values) text += "\"" + to_string(site) + "\"," + to_string(value) + "\n";
        s.emit_text(text);
        return 0;
    }
    json values = json::array();
    for (const auto& [site, value] : r.values)
        values.push_back({{"site", to_string(site)}, {"value", rational(value)}});
    json j = s.header("curvature");
    j["kind"] = kind;
    j["values"] = values;
    j["value_counts"] = value_counts(r.value_counts());
    j["total"] = rational(r.total);
    j["euler"] = integer(r.euler);
    s.emit(j);
    return 0;
}

json scan_entries(const std::vector<std::pair<Partition, Rational>>& items) {
    json a = json::array();
    for (const auto& [p, k] : items) a.push_back({{"parts", partition_json(p)}, {"value", rational(k)}});
    return a;
}

int cmd_partitions(Session& s, const Options& o) {
    PartitionFilter filter;
    filter.min_part = o.min_part;
    filter.min_parts = o.min_parts;
    filter.excluded_parts = o.exclude;
    json j = s.header("partitions");
    j["filter"] = {{"min_part", filter.min_part}, {"min_parts", filter.min_parts}, {"excluded_parts", filter.excluded_parts}};

    if (o.verify31) {
        const int n_max = o.n_max.value_or(33);
        if (n_max < 33) throw UsageError("--verify-31 needs --n-max >= 33");
        const ThresholdReport r = threshold_verify(n_max);
        j.erase("filter");
        j["verdict"] = r.ok() ? "PASS" : "FAIL";
        j["n_max"] = n_max;
        j["positive_up_to_31"] = r.positive_up_to_31;
        j["zero_set_at_32"] = r.zero_set_at_32;
        j["negative_set_at_33"] = r.negative_set_at_33;
        j["family_n_minus_12"] = r.family_n_minus_12;
        j["family_all_fives"] = r.family_all_fives;
        j["zero_at_32"] = scan_entries(r.scans[31].zero);
        j["negative_at_33"] = scan_entries(r.scans[32].negative);
        json minima = json::array();
        for (const auto& scan : r.scans)
            minima.push_back({{"n", scan.n}, {"count", scan.count}, {"minimum", scan.minimum ? rational(*scan.minimum) : json()}});
        j["minima"] = minima;
        j["failures"] = r.failures;
        s.emit(j);
        return r.ok() ? 0 : 1;
    }

    if (o.n) {
        if (*o.n < 1) throw UsageError("--n must be at least 1");
        const auto items = partition_scan(*o.n, filter);
        if (o.csv) {
            std::string text = "parts,value\n";
            for (const auto& [p, k] : items) text += "\"" + to_string(p).substr(1, to_string(p).size() - 2) + "\"," + to_string(k) + "\n";
            s.emit_text(text);
            return 0;
        }
        j["n"] = *o.n;
        j["count"] = items.size();
        j["partitions"] = scan_entries(items);
        s.emit(j);
        return 0;
    }

    if (o.n_max) {
        if (*o.n_max < 1) throw UsageError("--n-max must be at least 1");
        if (o.csv) {
            std::string text = "n,count,minimum,zero,negative\n";
            for (int n = 1; n <= *o.n_max; ++n) {
                const ScanSummary scan = summarize_scan(n, filter);
                text += std::to_string(n) + "," + std::to_string(scan.count) + "," +
                        (scan.minimum ? to_string(*scan.minimum) : "") + "," + std::to_string(scan.zero.size()) + "," +
                        std::to_string(scan.negative.size()) + "\n";
            }
            s.emit_text(text);
            return 0;
        }
        json scans = json::array();
        for (int n = 1; n <= *o.n_max; ++n) {
            const ScanSummary scan = summarize_scan(n, filter);
            scans.push_back({{"n", n},
                             {"count", scan.count},
                             {"minimum", scan.minimum ? rational(*scan.minimum) : json()},
                             {"zero", scan_entries(scan.zero)},
                             {"negative", scan_entries(scan.negative)}});
        }
        j["scans"] = scans;
        s.emit(j);
        return 0;
    }
    throw UsageError("partitions needs --n, --n-max or --verify-31");
}

EnergyRule make_rule(const SimplicialComplex& c, const std::string& rule, std::uint64_t seed) {
    return rule == "min" ? min_rule(c, seed) : random_rule(c, seed);
}

json census_json(const SelfMapCensus& census) {
    return {{"cycles", census.cycles},
            {"fixed_points", census.fixed_points},
            {"cycle_vertices", census.cycle_vertices},
            {"tree_vertices", census.tree_vertices},
            {"cycle_lengths", census.cycle_lengths}};
}

int cmd_ph(Session& s, const Options& o) {
    const auto& c = s.complex();
    if (o.trials < 1) throw UsageError("--trials must be at least 1");
    const EnergyRule first = make_rule(c, o.rule, o.seed);
    const VertexSelfMap self_map = vertex_self_map(c, first);
    if (o.emit_map) {
        s.emit_text(self_map_dot(self_map));
        return 0;
    }
    const Divisor d = push_energy(c, first);
    json divisor = json::object();
    for (const auto& [v, index] : d.indices) divisor[std::to_string(v)] = integer(index);

    json j = s.header("ph");
    j["rule"] = o.rule;
    j["seed"] = o.seed;
    j["divisor"] = divisor;
    j["total"] = integer(d.total);
    j["euler"] = integer(euler_characteristic(c));
    j["self_map"] = census_json(self_map.census);
    if (o.trials > 1) {
        json trials = json::array();
        std::set<std::map<VertexId, Integer>> distinct;
        bool conserved = true;
        for (std::size_t t = 0; t < o.trials; ++t) {
            const std::uint64_t seed = o.seed + t;
            const Divisor dt = push_energy(c, make_rule(c, o.rule, seed));
            conserved = conserved && dt.total == euler_characteristic(c);
            distinct.insert(dt.indices);
            trials.push_back({{"seed", seed}, {"total", integer(dt.total)}});
        }
        j["trials"] = trials;
        j["all_conserved"] = conserved;
        j["distinct_divisors"] = distinct.size();
    }
    s.emit(j);
    return 0;
}

int cmd_catalog(Session& s) {
    json entries = json::array();
    for (const auto& e : catalog_entries()) {
        entries.push_back({{"name", e.name},
                           {"aliases", e.aliases},
                           {"construction", e.construction},
                           {"f_vector", e.expected_f},
                           {"euler", e.expected_euler},
                           {"manifold_dimension", e.manifold_dimension ? json(*e.manifold_dimension) : json()}});
    }
    json j = s.header("catalog");
    j["entries"] = entries;
    j["families"] = {"cycleN (N >= 3)", "simplexQ (0 <= Q <= 16)"};
    s.emit(j);
    return 0;
}

int cmd_refine(Session& s, const Options& o, std::ostream& out) {
    if (o.depth < 1) throw UsageError("--depth must be at least 1");
    SimplicialComplex current = s.complex();
    for (int k = 1; k <= o.depth; ++k) {
        const Integer next = barycentric_size(current);
        if (next > o.max_simplices) {
            json j = s.header("refine");
            j["error"] = {{"kind", "too_large"},
                          {"message", "refinement " + std::to_string(k) + " would have " + next.str() +
                                          " simplices, above the ceiling of " + std::to_string(o.max_simplices)}};
            j["partial"] = {{"depth_reached", k - 1}, {"f_vector", f_vector_json(current)}, {"next_size", integer(next)}};
            out << j.dump(2) << "\n";
            return 1;
        }
        current = barycentric(current);
    }
    json j = s.header("refine");
    j["depth"] = o.depth;
    j["f_vector"] = f_vector_json(current);
    j["euler"] = integer(euler_characteristic(current));
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::invalid_input, "cannot write " + o.out_path);
        file << to_facets_json(current, s.source() + "-b" + std::to_string(o.depth));
        j["out"] = o.out_path;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_export(Session& s, const Options& o) {
    const auto& c = s.complex();
    if (o.dot_target == "dual") {
        s.emit_text(dual_graph_dot(c));
    } else if (o.dot_target == "orbit") {
        const FrameFlow flow(c);
        const Frame start = o.start.empty() ? flow.frame_at(0) : vertex_list(o.start, "--start");
        s.emit_text(orbit_dot(flow.orbit(start)));
    } else if (o.dot_target == "sheet") {
        if (o.bone.empty()) throw UsageError("--dot sheet needs --bone");
        std::vector<VertexId> ordering;
        if (!o.ordering.empty()) ordering = vertex_list(o.ordering, "--ordering");
        s.emit_text(sheet_dot(grow_sheet(c, Simplex(vertex_list(o.bone, "--bone")), ordering, o.max_patches)));
    } else {
        s.emit_text(self_map_dot(vertex_self_map(c, make_rule(c, o.rule, o.seed))));
    }
    return 0;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "Complex file");
    sub->add_option("--name", o.name, "Catalog name");
    sub->add_option("--format", o.format, "Input format")
        ->check(CLI::IsMember({"auto", "facets-json", "graph-json"}));
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--out", o.out_path, "Write the output to this file");
    sub->add_flag("--json", "JSON output (default)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Geodesic flow, sheets and curvature on finite simplicial complexes", "diskgeo"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "f-vector and Euler characteristic");
    auto* check_cmd = app.add_subcommand("check", "Manifold, sphere and contractibility recognition");
    check_cmd->add_flag("--fast", o.fast, "Check vertex links only");
    check_cmd->add_option("--ceiling", o.ceiling, "Largest complex examined by recognition");

    auto* flow = app.add_subcommand("flow", "Geodesic flow on the frame bundle");
    flow->add_option("--start", o.start, "Ordered facet, e.g. 1,2,3");
    flow->add_flag("--all", o.all, "Full orbit partition (default without --start)");
    flow->add_flag("--billiard-stats", o.billiard, "Period histogram and boundary statistics");
    flow->add_flag("--dot", o.dot, "Emit the orbit as DOT");

    auto* sheets = app.add_subcommand("sheets", "Local geodesic disks and grown sheets");
    sheets->add_option("--bone", o.bone, "Bone, e.g. 1,2");
    sheets->add_option("--ordering", o.ordering, "Bone ordering, head first");
    sheets->add_flag("--grow", o.grow, "Grow a sheet breadth-first");
    sheets->add_option("--max-patches", o.max_patches, "Patch limit for --grow");
    sheets->add_flag("--dot", o.dot, "Emit the facet subgraph as DOT");

    auto* sectional = app.add_subcommand("sectional", "Sectional curvature spectrum over all bones");
    sectional->add_flag("--csv", o.csv, "CSV output");

    auto* curvature = app.add_subcommand("curvature", "Curvatures of a closed 2-manifold");
    auto* per_vertex = curvature->add_flag("--per-vertex", o.per_vertex, "Second-order vertex curvature (default)");
    auto* per_triangle = curvature->add_flag("--per-triangle", o.per_triangle, "Triangle curvature");
    auto* first_order = curvature->add_option("--first-order", o.first_order, "First-order curvature")
                            ->check(CLI::IsMember({"eberhard", "levitt"}));
    per_vertex->excludes(per_triangle)->excludes(first_order);
    per_triangle->excludes(first_order);
    curvature->add_flag("--csv", o.csv, "CSV output");

    auto* partitions = app.add_subcommand("partitions", "Partition curvature scans");
    partitions->add_option("--n", o.n, "Scan one n");
    partitions->add_option("--n-max", o.n_max, "Summaries for n = 1 .. n-max");
    partitions->add_option("--min-part", o.min_part, "Smallest allowed part")->check(CLI::PositiveNumber);
    partitions->add_option("--min-parts", o.min_parts, "Fewest allowed parts");
    partitions->add_option("--exclude-part", o.exclude, "Forbidden part size (repeatable)");
    partitions->add_flag("--verify-31", o.verify31, "Check the positivity threshold at 31, 32 and 33");
    partitions->add_flag("--csv", o.csv, "CSV output");

    auto* ph = app.add_subcommand("ph", "Poincare-Hopf divisors of energy rules");
    ph->add_option("--trials", o.trials, "Seeds seed .. seed+trials-1");
    ph->add_flag("--emit-map", o.emit_map, "Emit the vertex self-map as DOT");
    ph->add_option("--rule", o.rule, "random or min")->check(CLI::IsMember({"random", "min"}));

    auto* catalog = app.add_subcommand("catalog", "Built-in complexes");
    auto* list = catalog->add_subcommand("list", "List entries with expected invariants");
    catalog->require_subcommand(1);

    auto* refine = app.add_subcommand("refine", "Iterated barycentric refinement");
    refine->add_option("--depth", o.depth, "Number of refinements (>= 1)")->required();
    refine->add_option("--max-simplices", o.max_simplices, "Resource ceiling per refinement");

    auto* exp = app.add_subcommand("export", "DOT export");
    exp->add_option("--dot", o.dot_target, "dual, orbit, sheet or selfmap")
        ->required()
        ->check(CLI::IsMember({"dual", "orbit", "sheet", "selfmap"}));
    exp->add_option("--start", o.start, "Orbit start frame");
    exp->add_option("--bone", o.bone, "Sheet bone");
    exp->add_option("--ordering", o.ordering, "Sheet bone ordering");
    exp->add_option("--max-patches", o.max_patches, "Sheet patch limit");
    exp->add_option("--rule", o.rule, "Self-map rule: random or min")->check(CLI::IsMember({"random", "min"}));

    for (auto* sub : {info, check_cmd, flow, sheets, sectional, curvature, ph, refine, exp}) add_common(sub, o);
    for (auto* sub : {partitions, list}) {
        sub->add_option("--out", o.out_path, "Write the output to this file");
        sub->add_flag("--json", "JSON output (default)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    Session session(o, out);
    try {
        if (info->parsed()) return cmd_info(session);
        if (check_cmd->parsed()) return cmd_check(session, o);
        if (flow->parsed()) return cmd_flow(session, o);
        if (sheets->parsed()) return cmd_sheets(session, o);
        if (sectional->parsed()) return cmd_sectional(session, o);
        if (curvature->parsed()) return cmd_curvature(session, o);
        if (partitions->parsed()) return cmd_partitions(session, o);
        if (ph->parsed()) return cmd_ph(session, o);
        if (catalog->parsed()) return cmd_catalog(session);
        if (refine->parsed()) return cmd_refine(session, o, out);
        if (exp->parsed()) return cmd_export(session, o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        json j;
        j["schema"] = "diskgeo/1";
        j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["schema"] = "diskgeo/1";
        j["error"] = {{"kind", "internal"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace diskgeo::cli

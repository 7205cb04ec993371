#pragma once

// File formats, catalog records, and the bodies of the CLI subcommands.
//
// Formats:
//   polytope file:  "d n" header, then d rows of n integers; columns are
//                   vertices (pass transpose=true when rows are vertices)
//   vertex lists:   blocks of "r k" headers with r x k integer matrices;
//                   the smaller side is the dimension, so r < k means columns
//                   are vertices, r > k means rows are vertices, square
//                   matrices default to columns
//   scaling file:   one weight per line, "re" or "re im"
//   data file:      whitespace-separated nonnegative integer counts
//   graph file:     "u v" edges, 1-indexed, '#' comments
//
// Catalog output is JSON lines (stable key order) or a CSV projection, and
// appending resumes: existing lines are counted and the corresponding blocks
// skipped, so an interrupted run continues byte-identically.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "builders.hpp"
#include "solver.hpp"

namespace toriml {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// File readers and writers
// ---------------------------------------------------------------------------

namespace detail {

inline bool blank_or_comment(const std::string& s) {
    for (char ch : s) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

inline std::string strip_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace detail

inline Polytope polytope_from_matrix(int rows, int cols, const std::vector<std::vector<long long>>& mat,
                                     bool rows_are_points) {
    std::vector<IntVec> pts;
    if (rows_are_points) {
        for (int i = 0; i < rows; ++i) {
            IntVec p(static_cast<std::size_t>(cols));
            for (int j = 0; j < cols; ++j) p[static_cast<std::size_t>(j)] = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            pts.push_back(std::move(p));
        }
    } else {
        for (int j = 0; j < cols; ++j) {
            IntVec p(static_cast<std::size_t>(rows));
            for (int i = 0; i < rows; ++i) p[static_cast<std::size_t>(i)] = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            pts.push_back(std::move(p));
        }
    }
    return Polytope::from_points(pts);
}

// "d n" header followed by d rows of n integers, columns = vertices.
inline Polytope read_polytope_file(const std::string& path, bool transpose = false) {
    std::ifstream in = detail::open_or_throw(path);
    int d = 0, n = 0;
    if (!(in >> d >> n) || d <= 0 || n <= 0) throw MalformedBlock(path + ": expected 'd n' header");
    std::vector<std::vector<long long>> mat(static_cast<std::size_t>(d), std::vector<long long>(static_cast<std::size_t>(n)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
                throw MalformedBlock(path + ": matrix ends early at row " + std::to_string(i + 1));
    return polytope_from_matrix(d, n, mat, transpose);
}

inline void write_polytope(std::ostream& out, const Polytope& P) {
    const auto& V = P.vertices();
    const int d = P.dim(), n = static_cast<int>(V.size());
    out << d << ' ' << n << '\n';
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? " " : "") << V[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].str();
        out << '\n';
    }
}

inline Scaling read_scaling_file(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    Scaling c;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ss(detail::strip_comment(line));
        double re = 0.0, im = 0.0;
        if (!(ss >> re)) throw MalformedBlock(path + ": bad scaling line '" + line + "'");
        ss >> im;
        c.weights.emplace_back(re, im);
    }
    return c;
}

inline std::vector<long long> read_data_file(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    std::vector<long long> u;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(detail::strip_comment(line));
        long long x = 0;
        while (ss >> x) u.push_back(x);
    }
    return u;
}

// Edge list, one "u v" pair per line, vertices 1-indexed, size = max label.
inline Graph read_graph_file(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ss(detail::strip_comment(line));
        int u = 0, v = 0;
        if (!(ss >> u >> v) || u < 1 || v < 1)
            throw MalformedBlock(path + ": line " + std::to_string(lineno) + ": expected two 1-indexed labels");
        edges.emplace_back(u - 1, v - 1);
        max_label = std::max({max_label, u, v});
    }
    return Graph::make(max_label, edges);
}

// ---------------------------------------------------------------------------
// Vertex-list blocks (Kreuzer-Skarke style)
// ---------------------------------------------------------------------------

// Parses consecutive "r k" blocks. Orientation: r < k reads columns as
// vertices, r > k reads rows, square blocks read columns; force_transpose
// flips the choice. max_blocks < 0 reads everything.
inline std::vector<Polytope> parse_ks(std::istream& in, bool force_transpose = false, long long max_blocks = -1) {
    std::vector<Polytope> out;
    std::string line;
    long long lineno = 0;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            if (!detail::blank_or_comment(line)) return line;
        }
        return std::nullopt;
    };
    while (max_blocks < 0 || static_cast<long long>(out.size()) < max_blocks) {
        auto header = next_line();
        if (!header) break;
        std::istringstream hs(*header);
        long long r = 0, k = 0;
        if (!(hs >> r >> k) || r <= 0 || k <= 0 || r > 64 || k > 4096)
            throw MalformedBlock("line " + std::to_string(lineno) + ": expected 'rows cols' block header");
        std::vector<std::vector<long long>> mat;
        for (long long i = 0; i < r; ++i) {
            auto row = next_line();
            if (!row) throw MalformedBlock("line " + std::to_string(lineno) + ": block ends before row " + std::to_string(i + 1));
            std::istringstream rs(*row);
            std::vector<long long> vals(static_cast<std::size_t>(k));
            for (long long j = 0; j < k; ++j)
                if (!(rs >> vals[static_cast<std::size_t>(j)]))
                    throw MalformedBlock("line " + std::to_string(lineno) + ": expected " + std::to_string(k) + " integers");
            mat.push_back(std::move(vals));
        }
        bool rows_are_points = (r > k);
        if (force_transpose) rows_are_points = !rows_are_points;
        out.push_back(polytope_from_matrix(static_cast<int>(r), static_cast<int>(k), mat, rows_are_points));
    }
    return out;
}

inline std::vector<Polytope> parse_ks_file(const std::string& path, bool force_transpose = false,
                                           long long max_blocks = -1) {
    std::ifstream in = detail::open_or_throw(path);
    return parse_ks(in, force_transpose, max_blocks);
}

// ---------------------------------------------------------------------------
// Catalog records
// ---------------------------------------------------------------------------

struct CatalogRecord {
    std::string id;
    int dim = 0;
    long long n_lattice_points = 0;
    std::vector<long long> f_vector;
    long long degree = 0;
    long long ml_degree = 0;
    long long drop = 0;
    bool reflexive = false;
    int seeds = 0;
    bool consistent = true;
    long long runtime_ms = 0;
};

inline ojson record_to_json(const CatalogRecord& r) {
    ojson j;
    j["id"] = r.id;
    j["dim"] = r.dim;
    j["n_lattice_points"] = r.n_lattice_points;
    j["f_vector"] = r.f_vector;
    j["degree"] = r.degree;
    j["ml_degree"] = r.ml_degree;
    j["drop"] = r.drop;
    j["reflexive"] = r.reflexive;
    j["seeds"] = r.seeds;
    j["consistent"] = r.consistent;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline std::string record_csv_header() {
    return "id,dim,n_lattice_points,degree,ml_degree,drop,reflexive,seeds,consistent,runtime_ms";
}

inline std::string record_to_csv(const CatalogRecord& r) {
    std::ostringstream ss;
    ss << r.id << ',' << r.dim << ',' << r.n_lattice_points << ',' << r.degree << ',' << r.ml_degree << ','
       << r.drop << ',' << (r.reflexive ? "true" : "false") << ',' << r.seeds << ','
       << (r.consistent ? "true" : "false") << ',' << r.runtime_ms;
    return ss.str();
}

// Full record for one polytope under the standard scaling. with_runtime=false
// pins runtime_ms to 0 so reruns are byte-identical.
inline CatalogRecord compute_record(const std::string& id, const Polytope& P, const TrackerConfig& cfg,
                                    bool with_runtime = true) {
    auto t0 = std::chrono::steady_clock::now();
    CatalogRecord rec;
    rec.id = id;
    rec.dim = P.dim();
    rec.n_lattice_points = static_cast<long long>(P.lattice_points().size());
    for (const Int& f : f_vector(P)) rec.f_vector.push_back(f.convert_to<long long>());
    rec.reflexive = P.is_reflexive();
    rec.seeds = cfg.seeds;
    MLReport rep = ml_degree(P, standard_scaling(static_cast<int>(rec.n_lattice_points)), cfg);
    rec.degree = rep.degree;
    rec.ml_degree = rep.ml_degree;
    rec.drop = rep.drop;
    rec.consistent = rep.consistent;
    auto t1 = std::chrono::steady_clock::now();
    rec.runtime_ms = with_runtime ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
    return rec;
}

// ---------------------------------------------------------------------------
// Subcommand bodies (shared between the CLI and the tests)
// ---------------------------------------------------------------------------

struct SourceOpts {
    std::string builtin;
    std::string file;
    std::string graph;
    bool transpose = false;
};

inline std::string path_stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// Exactly one of builtin/file/graph must be set; returns (id, polytope).
inline std::pair<std::string, Polytope> resolve_source(const SourceOpts& src) {
    int given = (src.builtin.empty() ? 0 : 1) + (src.file.empty() ? 0 : 1) + (src.graph.empty() ? 0 : 1);
    if (given != 1) throw std::invalid_argument("give exactly one of --builtin, --file, --graph");
    if (!src.builtin.empty()) return {src.builtin, builtin_polytope(src.builtin)};
    if (!src.file.empty()) return {path_stem(src.file), read_polytope_file(src.file, src.transpose)};
    Graph G = read_graph_file(src.graph);
    return {"graph:" + path_stem(src.graph), sym_edge_polytope(G)};
}

inline int cmd_info(const SourceOpts& src, std::ostream& out) {
    auto [id, P] = resolve_source(src);
    ojson j;
    j["id"] = id;
    j["dim"] = P.dim();
    j["n_vertices"] = static_cast<long long>(P.vertices().size());
    j["n_lattice_points"] = static_cast<long long>(P.lattice_points().size());
    std::vector<long long> fv;
    for (const Int& f : f_vector(P)) fv.push_back(f.convert_to<long long>());
    j["f_vector"] = fv;
    j["degree"] = P.normalized_volume().convert_to<long long>();
    j["reflexive"] = P.is_reflexive();
    out << j.dump() << '\n';
    return 0;
}

inline ojson report_to_json(const std::string& id, const MLReport& rep, long long runtime_ms) {
    ojson j;
    j["id"] = id;
    j["degree"] = rep.degree;
    j["ml_degree"] = rep.ml_degree;
    j["drop"] = rep.drop;
    j["per_seed_counts"] = rep.per_seed_counts;
    j["consistent"] = rep.consistent;
    if (!rep.drop_witness.empty()) j["drop_witness"] = rep.drop_witness;
    if (!rep.witness_complete) j["witness_complete"] = false;
    if (runtime_ms >= 0) j["runtime_ms"] = runtime_ms;
    return j;
}

// ML degree of the polytope's model. With a data file, reports the critical
// points for that data vector instead of a multi-seed count.
inline int cmd_mldeg(const SourceOpts& src, const std::string& scaling_path, const std::string& data_path,
                     const TrackerConfig& cfg, bool no_runtime, std::ostream& out) {
    auto [id, P] = resolve_source(src);
    DesignMatrix A = design_matrix(P);
    Scaling c = scaling_path.empty() ? standard_scaling(A.n) : read_scaling_file(scaling_path);
    if (!data_path.empty()) {
        DataVector u = DataVector::from_counts(A, read_data_file(data_path));
        std::vector<TrackedSolution> sols = score_solutions(A, c, u, cfg, cfg.base_seed);
        ojson j;
        j["id"] = id;
        j["n_solutions"] = static_cast<long long>(sols.size());
        ojson arr = ojson::array();
        for (const TrackedSolution& s : sols) {
            ojson sj;
            ojson pt = ojson::array();
            for (const Complex& x : s.point) pt.push_back(ojson::array({x.real(), x.imag()}));
            sj["point"] = pt;  // (s, theta_1..theta_d)
            sj["status"] = to_string(s.status);
            sj["residual"] = s.residual;
            sj["birch_residual"] = birch_residual(A, c, s.point, u);
            sj["statistically_valid"] = solution_to_distribution(A, c, s.point).statistically_valid;
            arr.push_back(std::move(sj));
        }
        j["solutions"] = arr;
        out << j.dump() << '\n';
        return 0;
    }
    auto t0 = std::chrono::steady_clock::now();
    MLReport rep = ml_degree(P, c, cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    out << report_to_json(id, rep, no_runtime ? -1 : ms).dump() << '\n';
    return 0;
}

// drop-check: ML degree drop vs principal-A-determinant verdict, optionally
// along iterates of a construction (levels X^0, X^1, ..., X^k).
inline int cmd_drop_check(const SourceOpts& src, std::optional<Construction> cons, int iterate_k,
                          const std::string& scaling_path, const TrackerConfig& cfg, std::ostream& out) {
    auto [id, P] = resolve_source(src);
    int levels = cons ? iterate_k : 0;
    bool all_consistent = true;
    Polytope cur = P;
    for (int level = 0; level <= levels; ++level) {
        if (level > 0) cur = apply_construction(*cons, cur);
        std::string label = id;
        if (cons) {
            char letter = *cons == Construction::A ? 'A' : (*cons == Construction::B ? 'B' : 'C');
            label = std::string(1, letter) + "^" + std::to_string(level) + "(" + id + ")";
        }
        DesignMatrix A = design_matrix(cur);
        Scaling c = scaling_path.empty() ? standard_scaling(A.n) : read_scaling_file(scaling_path);
        if (!scaling_path.empty() && level != levels && levels > 0)
            throw std::invalid_argument("--scaling with --iterate applies only to a single level");
        MLReport rep = ml_degree(cur, c, cfg);
        EAResult ea = principal_A_determinant_vanishes(cur, c, cfg);
        bool agree = (rep.drop > 0) == ea.vanishes;
        if (!ea.certain && !ea.vanishes) agree = true;  // undecided, not a contradiction
        all_consistent = all_consistent && agree && rep.consistent;
        ojson j;
        j["level"] = label;
        j["degree"] = rep.degree;
        j["ml_degree"] = rep.ml_degree;
        j["drop"] = rep.drop;
        j["ea_vanishes"] = ea.vanishes;
        if (!ea.witness.empty()) j["ea_witness"] = ea.witness;
        j["ea_certain"] = ea.certain;
        j["agree"] = agree;
        out << j.dump() << '\n';
    }
    return all_consistent ? 0 : 1;
}

// construct: apply A/B/C (iterated) and emit the polytope file.
inline int cmd_construct(const SourceOpts& src, Construction cons, int iterate_k, std::ostream& out,
                         std::ostream& warn) {
    auto [id, P] = resolve_source(src);
    if (!P.is_reflexive()) warn << "warning: input '" << id << "' is not reflexive\n";
    Polytope R = iterate(cons, iterate_k, P);
    write_polytope(out, R);
    return 0;
}

// catalog: records for every block of a vertex-list file, appended as JSON
// lines or CSV rows, resuming after existing output.
inline int cmd_catalog(const std::string& ks_path, bool transpose, long long limit, const TrackerConfig& cfg,
                       const std::string& out_path, const std::string& format, bool no_runtime, std::ostream& log) {
    if (format != "json" && format != "csv") throw std::invalid_argument("--format must be json or csv");
    std::vector<Polytope> blocks = parse_ks_file(ks_path, transpose, limit);
    long long existing = 0;
    bool have_header = false;
    if (std::filesystem::exists(out_path)) {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (format == "csv" && !have_header) {
                have_header = true;
                continue;
            }
            ++existing;
        }
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for append");
    if (format == "csv" && !have_header) out << record_csv_header() << '\n';
    const std::string stem = path_stem(ks_path);
    long long done = 0;
    for (long long i = existing; i < static_cast<long long>(blocks.size()); ++i) {
        TrackerConfig rec_cfg = cfg;
        rec_cfg.base_seed = detail::mix_seed(cfg.base_seed, static_cast<std::uint64_t>(i));
        CatalogRecord rec = compute_record(stem + "#" + std::to_string(i), blocks[static_cast<std::size_t>(i)],
                                           rec_cfg, !no_runtime);
        out << (format == "csv" ? record_to_csv(rec) : record_to_json(rec).dump()) << '\n';
        out.flush();
        ++done;
    }
    log << "catalog: " << done << " new record(s), " << existing << " resumed, output " << out_path << "\n";
    return 0;
}

}  // namespace toriml

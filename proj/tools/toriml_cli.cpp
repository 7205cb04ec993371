// Command-line interface: polytope inspection, ML degrees, drop checks,
// constructions, catalog runs over vertex-list files, and the verification
// suites. Exit codes: 0 success, 1 computation or check failure, 2 usage.

#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include <toriml/verify.hpp>

namespace {

struct Options {
    toriml::SourceOpts src;
    std::string scaling;
    std::string data;
    std::string output;
    std::string format = "json";
    std::string construct;
    std::vector<std::string> suites;
    long long limit = -1;
    int iterate = 1;
    int seeds = 3;
    std::uint64_t seed = 2024;
    bool force = false;
    bool no_runtime = false;
};

void add_source_flags(CLI::App* sub, Options& o) {
    sub->add_option("--builtin", o.src.builtin, "built-in polytope name (P3..P9, P0, P132, cube-D, cross-D, Q-D, R-D, S-D, T-D)");
    sub->add_option("--file", o.src.file, "polytope file: 'd n' header, d rows of n integers, columns = vertices");
    sub->add_option("--graph", o.src.graph, "edge-list file; uses the symmetric edge polytope of the graph");
    sub->add_flag("--transpose", o.src.transpose, "read rows of --file as vertices");
}

void add_solver_flags(CLI::App* sub, Options& o) {
    sub->add_option("--seeds", o.seeds, "independent data vectors per ML degree run")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "base random seed");
}

toriml::TrackerConfig make_config(const Options& o) {
    toriml::TrackerConfig cfg;
    cfg.seeds = o.seeds;
    cfg.base_seed = o.seed;
    if (o.force) cfg.bezout_cap = std::numeric_limits<long long>::max() / 4;
    return cfg;
}

toriml::Construction parse_construction(const std::string& s) {
    if (s == "A") return toriml::Construction::A;
    if (s == "B") return toriml::Construction::B;
    if (s == "C") return toriml::Construction::C;
    throw std::invalid_argument("--construct must be A, B, or C");
}

// Output stream selector: --output file or stdout.
struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* out = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw std::runtime_error("cannot open '" + path + "' for writing");
            out = file.get();
        }
    }
};

int run_verify(const Options& o) {
    toriml::TrackerConfig cfg = make_config(o);
    std::vector<std::string> names = o.suites.empty() ? toriml::verify::suite_names() : o.suites;
    int failures = 0;
    for (const std::string& name : names) {
        toriml::verify::Rows rows = toriml::verify::run_suite(name, cfg);
        for (const toriml::verify::CheckResult& r : rows) {
            std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << name << " / " << r.name << ": " << r.detail << '\n';
            if (!r.pass) ++failures;
        }
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice polytopes, toric score equations, and ML degrees"};
    app.require_subcommand(1);
    Options o;

    CLI::App* info = app.add_subcommand("info", "polytope summary: f-vector, degree, reflexivity");
    add_source_flags(info, o);
    info->add_option("--output", o.output, "write to file instead of stdout");

    CLI::App* mldeg = app.add_subcommand("mldeg", "ML degree of the scaled toric model");
    add_source_flags(mldeg, o);
    add_solver_flags(mldeg, o);
    mldeg->add_option("--scaling", o.scaling, "scaling file, one weight per line ('re' or 're im')");
    mldeg->add_option("--data", o.data, "data file of counts; reports the critical points for this data");
    mldeg->add_option("--output", o.output, "write to file instead of stdout");
    mldeg->add_flag("--force", o.force, "solve even above the path-count cap");
    mldeg->add_flag("--no-runtime", o.no_runtime, "omit runtime_ms for reproducible output");

    CLI::App* drop = app.add_subcommand("drop-check", "ML degree drop vs principal A-determinant verdict");
    add_source_flags(drop, o);
    add_solver_flags(drop, o);
    drop->add_option("--scaling", o.scaling, "scaling file (single level only)");
    drop->add_option("--construct", o.construct, "apply construction A|B|C and report every level");
    drop->add_option("--iterate", o.iterate, "construction iterations (levels 0..k)")->check(CLI::NonNegativeNumber);
    drop->add_option("--output", o.output, "write to file instead of stdout");

    CLI::App* cons = app.add_subcommand("construct", "apply construction A|B|C and print the polytope file");
    add_source_flags(cons, o);
    cons->add_option("--construct", o.construct, "construction to apply")->required();
    cons->add_option("--iterate", o.iterate, "number of applications")->check(CLI::NonNegativeNumber);
    cons->add_option("--output", o.output, "write to file instead of stdout");

    CLI::App* cat = app.add_subcommand("catalog", "ML degree records for every block of a vertex-list file");
    cat->add_option("--file", o.src.file, "vertex-list file with 'r k' blocks")->required();
    cat->add_flag("--transpose", o.src.transpose, "flip the row/column orientation of every block");
    cat->add_option("--limit", o.limit, "process at most this many blocks");
    cat->add_option("--output", o.output, "output file (appends; resumes after existing records)")->required();
    cat->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
    add_solver_flags(cat, o);
    cat->add_flag("--no-runtime", o.no_runtime, "write runtime_ms as 0 for byte-identical resumes");

    CLI::App* ver = app.add_subcommand("verify-paper", "run the reference verification suites");
    ver->add_option("--suite", o.suites, "suite name (repeatable); default runs all");
    add_solver_flags(ver, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(info)) {
            Sink sink(o.output);
            return toriml::cmd_info(o.src, *sink.out);
        }
        if (app.got_subcommand(mldeg)) {
            Sink sink(o.output);
            return toriml::cmd_mldeg(o.src, o.scaling, o.data, make_config(o), o.no_runtime, *sink.out);
        }
        if (app.got_subcommand(drop)) {
            Sink sink(o.output);
            std::optional<toriml::Construction> cc;
            if (!o.construct.empty()) cc = parse_construction(o.construct);
            return toriml::cmd_drop_check(o.src, cc, o.iterate, o.scaling, make_config(o), *sink.out);
        }
        if (app.got_subcommand(cons)) {
            Sink sink(o.output);
            return toriml::cmd_construct(o.src, parse_construction(o.construct), o.iterate, *sink.out, std::cerr);
        }
        if (app.got_subcommand(cat))
            return toriml::cmd_catalog(o.src.file, o.src.transpose, o.limit, make_config(o), o.output, o.format,
                                       o.no_runtime, std::cerr);
        if (app.got_subcommand(ver)) return run_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

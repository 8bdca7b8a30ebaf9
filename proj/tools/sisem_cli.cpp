// Command-line front end: classification, oracle search, enumeration,
// s-values, builders and the gallery reproduction demo. JSON on stdout for
// scripting; exit 0 = computed, 2 = input error, 3 = numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sisem/demo.hpp"
#include "sisem/io.hpp"

namespace {

using namespace sisem;

struct GlobalConfig {
    Tolerance tol;
    OracleBounds bounds;
    std::string format = "json";
    unsigned seed = 0;  // reserved for randomized suites; commands are deterministic
};

CMatrix load_input(const std::string& input) {
    if (input.rfind("gallery:", 0) == 0) {
        const std::string name = input.substr(8);
        if (const auto e = gallery_find(name)) return e->matrix;
        throw ParseError("unknown gallery entry: '" + name + "'");
    }
    std::ifstream f(input);
    if (!f) throw ParseError("cannot open input file: '" + input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return matrix_from_json_string(ss.str());
}

void emit_matrix(const CMatrix& m, const std::string& out_path) {
    const std::string text = to_json_string(m);
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot open output file: '" + out_path + "'");
    f << text << "\n";
}

int cmd_classify(const GlobalConfig& cfg, const std::string& input, const std::string& goal) {
    const CMatrix m = load_input(input);
    Verdict v;
    if (goal == "si") {
        v = classify_si(m, cfg.tol, cfg.bounds);
    } else if (goal == "simple") {
        v = classify_simple(m, cfg.tol, cfg.bounds);
    } else {
        // Combined view: SI verdict and certificate, simplicity verdict
        // merged in, traces concatenated.
        v = classify_si(m, cfg.tol, cfg.bounds);
        if (v.simple == Ternary::Inconclusive) {
            Verdict vs = classify_simple(m, cfg.tol, cfg.bounds);
            v.simple = vs.simple;
            if (v.si == Ternary::Inconclusive && vs.si != Ternary::Inconclusive) v.si = vs.si;
            if (v.si == Ternary::Inconclusive && vs.simple != Ternary::Inconclusive)
                v.certificate = vs.certificate;
            for (std::string& r : vs.rule_trace)
                if (!r.empty() && r.front() == 'S') v.rule_trace.push_back(std::move(r));
        }
    }
    if (cfg.format == "text") {
        std::cout << "si: " << to_string(v.si) << "\nsimple: " << to_string(v.simple)
                  << "\ncertificate: " << v.certificate.tag() << "\nrules:";
        for (const std::string& r : v.rule_trace) std::cout << " " << r;
        std::cout << "\n";
    } else {
        std::cout << to_json_string(v) << "\n";
    }
    return 0;
}

int cmd_oracle(const GlobalConfig& cfg, const std::string& input, const std::string& mode,
               bool full) {
    const CMatrix m = load_input(input);
    const SemigroupTable table =
        enumerate_semigroup(m, cfg.bounds.factor_max_len, cfg.bounds.enum_limits(), cfg.tol);
    const OracleReport report = mode == "simplicity"
                                    ? simplicity_scan(m, cfg.bounds.w_max, table, cfg.tol, !full)
                                    : si_scan(m, cfg.bounds.w_max, table, cfg.tol, !full);
    std::cout << to_json_string(report) << "\n";
    return 0;
}

int cmd_enumerate(const GlobalConfig& cfg, const std::string& input, int max_len, int threads) {
    const CMatrix m = load_input(input);
    EnumLimits limits = cfg.bounds.enum_limits();
    limits.threads = threads;
    const SemigroupTable table = enumerate_semigroup(m, max_len, limits, cfg.tol);
    std::cout << dump_table(table);
    std::cerr << "elements=" << table.size() << " closed=" << (table.closed() ? "yes" : "no")
              << " truncated=" << (table.truncated() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_svals(const std::string& input) {
    std::cout << to_json_string(svalues(load_input(input))) << "\n";
    return 0;
}

int cmd_demo(const GlobalConfig& cfg, const std::string& only, bool json_requested) {
    const DemoReport report = run_demo(cfg.tol, cfg.bounds, only);
    if (report.rows.empty()) throw ParseError("no gallery entry matches '" + only + "'");
    if (!json_requested) {
        std::cout << format_demo_table(report);
    } else {
        std::cout << "{\"all_pass\":" << (report.all_pass ? "true" : "false") << ",\"rows\":[";
        for (size_t i = 0; i < report.rows.size(); ++i) {
            const DemoRow& r = report.rows[i];
            std::cout << (i ? "," : "") << "{\"name\":\"" << r.name << "\",\"pass\":"
                      << (r.pass ? "true" : "false") << ",\"rule\":\"" << r.rule << "\"}";
        }
        std::cout << "]}\n";
    }
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"selfadjoint-ideal semigroup classifier and bounded bilinear-equation oracle"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--tol-abs", cfg.tol.eps_abs, "absolute tolerance")->capture_default_str();
    app.add_option("--tol-rel", cfg.tol.eps_rel, "relative tolerance")->capture_default_str();
    app.add_option("--w-max", cfg.bounds.w_max, "max word length scanned by the oracle")
        ->capture_default_str();
    app.add_option("--factor-max", cfg.bounds.factor_max_len, "max factor word length")
        ->capture_default_str();
    app.add_option("--element-cap", cfg.bounds.element_cap, "semigroup table element cap")
        ->capture_default_str();
    app.add_option("--norm-cap", cfg.bounds.norm_cap, "entry-norm cap for enumeration")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();

    std::string input, goal = "both", mode = "si", only, blocks, weights, out_path, name;
    int max_len = 8, threads = 1;
    bool full = false;

    auto* classify = app.add_subcommand("classify", "classify a generator");
    classify->add_option("input", input, "matrix JSON path or gallery:<name>")->required();
    classify->add_option("--goal", goal, "si | simple | both")
        ->check(CLI::IsMember({"si", "simple", "both"}));

    auto* oracle = app.add_subcommand("oracle", "bounded brute-force scan");
    oracle->add_option("input", input, "matrix JSON path or gallery:<name>")->required();
    oracle->add_option("--mode", mode, "si | simplicity")
        ->check(CLI::IsMember({"si", "simplicity"}));
    oracle->add_flag("--full", full, "scan all words even after a failure witness");

    auto* enumerate = app.add_subcommand("enumerate", "dump the bounded semigroup table");
    enumerate->add_option("input", input, "matrix JSON path or gallery:<name>")->required();
    enumerate->add_option("--max-len", max_len, "word length bound")->capture_default_str();
    enumerate->add_option("--threads", threads, "frontier evaluation threads")
        ->capture_default_str();

    auto* svals = app.add_subcommand("svals", "print singular values");
    svals->add_option("input", input, "matrix JSON path or gallery:<name>")->required();

    auto* build = app.add_subcommand("build", "construct named matrix families");
    auto* build_jordan_cmd = build->add_subcommand("jordan", "block diagonal of Jordan blocks");
    build_jordan_cmd->add_option("--blocks", blocks, "e.g. \"0:3,1:2\" (lambda:size,...)")
        ->required();
    build_jordan_cmd->add_option("--out", out_path, "output file (default stdout)");
    auto* build_shift_cmd = build->add_subcommand("shift", "subdiagonal weighted shift");
    build_shift_cmd->add_option("--weights", weights, "e.g. \"1,0.5,1\"")->required();
    build_shift_cmd->add_option("--out", out_path, "output file (default stdout)");
    build->require_subcommand(1);

    auto* gallery_cmd = app.add_subcommand("gallery", "named examples");
    auto* gallery_list = gallery_cmd->add_subcommand("list", "list entries");
    auto* gallery_emit = gallery_cmd->add_subcommand("emit", "write one entry's matrix JSON");
    gallery_emit->add_option("name", name, "entry name")->required();
    gallery_emit->add_option("--out", out_path, "output file (default stdout)");
    gallery_cmd->require_subcommand(1);

    auto* demo = app.add_subcommand("demo", "gallery reproduction with oracle cross-checks");
    demo->add_option("--only", only, "run a single gallery entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        cfg.tol.validate();
        if (classify->parsed()) return cmd_classify(cfg, input, goal);
        if (oracle->parsed()) return cmd_oracle(cfg, input, mode, full);
        if (enumerate->parsed()) return cmd_enumerate(cfg, input, max_len, threads);
        if (svals->parsed()) return cmd_svals(input);
        if (build->parsed()) {
            emit_matrix(build_jordan_cmd->parsed() ? build_jordan(parse_jordan_spec(blocks))
                                                   : build_shift(parse_weights(weights)),
                        out_path);
            return 0;
        }
        if (gallery_cmd->parsed()) {
            if (gallery_list->parsed()) {
                for (const GalleryEntry& e : gallery())
                    std::cout << e.name << " expected_si=" << to_string(e.expected_si)
                              << " expected_simple="
                              << (e.expected_simple == Ternary::Inconclusive
                                      ? "UNSPECIFIED"
                                      : to_string(e.expected_simple))
                              << "  # " << e.provenance << "\n";
                return 0;
            }
            const auto e = gallery_find(name);
            if (!e) throw ParseError("unknown gallery entry: '" + name + "'");
            emit_matrix(e->matrix, out_path);
            return 0;
        }
        if (demo->parsed())
            return cmd_demo(cfg, only, app.count("--format") > 0 && cfg.format == "json");
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

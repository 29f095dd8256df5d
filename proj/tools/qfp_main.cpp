// qfp: command-line front end for the characteristic-p splitting toolkit.
//
// Subcommands: height, reduced, witt eval, verify, q compare. Mathematical
// negatives (not split, not reduced, infinite height) are successful
// computations and exit 0; only operational failures are nonzero.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qfp/report.hpp"

namespace {

struct CommonOpts {
    std::string ring_file;
    std::string ring_name;
    std::string emit = "text";
    std::string out_file;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qfp::error("cannot read ring file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qfp::RingDecl select_decl(const CommonOpts& opts) {
    auto decls = qfp::parse_ring_file(slurp(opts.ring_file));
    if (opts.ring_name.empty()) return decls.front();
    for (auto& d : decls)
        if (d.name == opts.ring_name) return d;
    throw qfp::error("no ring named '" + opts.ring_name + "' in " + opts.ring_file);
}

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = opts.out_file + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw qfp::error("cannot write output file: " + opts.out_file);
        out << text;
    }
    if (std::rename(tmp.c_str(), opts.out_file.c_str()) != 0)
        throw qfp::error("cannot move output into place: " + opts.out_file);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_ring) {
    if (needs_ring)
        cmd->add_option("--ring", opts.ring_file, "ring declaration file (.qfp)")
            ->required();
    if (needs_ring)
        cmd->add_option("--name", opts.ring_name, "declaration to use (default: first)");
    cmd->add_option("--emit", opts.emit, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_file, "write the report to a file (atomically)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-p splitting-height toolkit"};
    app.require_subcommand(1);

    // height
    CommonOpts height_opts;
    std::uint32_t max_n = 2, max_degree = 4;
    std::uint64_t seed = qfp::kDefaultSuiteSeed;
    std::string q_kind = "wbar";
    std::uint64_t enum_cap = qfp::kDefaultEnumCap;
    std::size_t dim_cap = qfp::kMaxAlgebraDim;
    auto* height_cmd = app.add_subcommand("height", "decide the splitting height");
    add_common(height_cmd, height_opts, true);
    height_cmd->add_option("--max-n", max_n, "largest level to try")->capture_default_str();
    height_cmd->add_option("--max-degree", max_degree, "graded degree cap")
        ->capture_default_str();
    height_cmd->add_option("--seed", seed, "seed echoed into the report")
        ->capture_default_str();
    height_cmd->add_option("--kind", q_kind, "finite-model kind")
        ->check(CLI::IsMember({"wbar", "pushout"}))
        ->capture_default_str();
    height_cmd->add_option("--cap-enum", enum_cap, "enumeration cap")->capture_default_str();
    height_cmd->add_option("--cap-dim", dim_cap, "algebra dimension cap")
        ->capture_default_str();

    // reduced
    CommonOpts reduced_opts;
    auto* reduced_cmd = app.add_subcommand("reduced", "reducedness with witness");
    add_common(reduced_cmd, reduced_opts, true);

    // witt eval
    CommonOpts witt_opts;
    std::uint32_t wp = 2, wn = 2;
    std::string expr;
    auto* witt_cmd = app.add_subcommand("witt", "Witt vector utilities");
    auto* eval_cmd = witt_cmd->add_subcommand("eval", "evaluate a Witt-vector expression");
    eval_cmd->add_option("--p", wp, "prime")->capture_default_str();
    eval_cmd->add_option("--n", wn, "truncation length")->capture_default_str();
    eval_cmd->add_option("--expr", expr, "expression, e.g. \"[1]+[1]+[1]+[1]\"")
        ->required();
    add_common(eval_cmd, witt_opts, false);

    // verify
    CommonOpts verify_opts;
    std::string filter;
    std::uint64_t verify_seed = qfp::kDefaultSuiteSeed;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--filter", filter, "run a single case id");
    verify_cmd->add_option("--seed", verify_seed, "seed for sampled cases")
        ->capture_default_str();
    add_common(verify_cmd, verify_opts, false);

    // q compare
    CommonOpts q_opts;
    std::uint32_t q_n = 2;
    auto* q_cmd = app.add_subcommand("q", "splitting-target model utilities");
    auto* compare_cmd =
        q_cmd->add_subcommand("compare", "compare the pushout and mod-p models");
    add_common(compare_cmd, q_opts, true);
    compare_cmd->add_option("--n", q_n, "level")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (height_cmd->parsed()) {
            qfp::RingDecl decl = select_decl(height_opts);
            qfp::RealizedRing ring = qfp::realize(decl, dim_cap);
            qfp::HeightReport rep;
            if (ring.finite) {
                qfp::QKind kind = q_kind == "pushout" ? qfp::QKind::Pushout
                                                      : qfp::QKind::ModpQuotient;
                rep = qfp::height_search(*ring.finite, max_n, kind, enum_cap);
            } else {
                rep = qfp::height_search(*ring.graded, max_n, max_degree);
            }
            if (height_opts.emit == "json")
                write_output(height_opts,
                             qfp::build_height_report(decl, rep, max_n, max_degree, seed)
                                     .dump(2) +
                                 "\n");
            else
                write_output(height_opts, qfp::height_report_text(rep));
        } else if (reduced_cmd->parsed()) {
            qfp::RingDecl decl = select_decl(reduced_opts);
            qfp::ReducedOutcome outcome;
            qfp::RealizedRing ring = qfp::realize(decl);
            if (ring.finite) {
                auto v = ring.finite->is_reduced();
                outcome.reduced = v.reduced;
                if (!v.reduced) outcome.witness = ring.finite->to_string(v.witness);
            } else if (ring.graded->is_hypersurface()) {
                auto v = ring.graded->is_reduced();
                outcome.reduced = v.reduced;
                if (!v.reduced)
                    outcome.witness = v.witness.to_string(ring.graded->var_names());
            } else {
                outcome.supported = false;
                outcome.note = "reducedness is only decided for hypersurface presentations";
            }
            if (reduced_opts.emit == "json")
                write_output(reduced_opts,
                             qfp::build_reduced_report(decl, outcome).dump(2) + "\n");
            else
                write_output(reduced_opts, qfp::reduced_report_text(decl, outcome));
        } else if (eval_cmd->parsed()) {
            qfp::WittEvalResult res = qfp::eval_witt_expr(wp, wn, expr);
            if (witt_opts.emit == "json")
                write_output(witt_opts, qfp::build_witt_eval_report(res, expr).dump(2) + "\n");
            else
                write_output(witt_opts, qfp::witt_eval_text(res, expr));
        } else if (verify_cmd->parsed()) {
            qfp::SuiteLedger ledger = qfp::run_suite(filter, verify_seed);
            if (verify_opts.emit == "json")
                write_output(verify_opts,
                             qfp::build_verify_report(ledger, filter).dump(2) + "\n");
            else
                write_output(verify_opts, qfp::verify_report_text(ledger));
        } else if (compare_cmd->parsed()) {
            qfp::RingDecl decl = select_decl(q_opts);
            qfp::RealizedRing ring = qfp::realize(decl);
            if (!ring.finite)
                throw qfp::error("q compare works on finite ring declarations");
            qfp::QCompareReport rep = qfp::compare_q_models(*ring.finite, q_n);
            if (q_opts.emit == "json")
                write_output(q_opts, qfp::build_compare_report(decl, rep).dump(2) + "\n");
            else
                write_output(q_opts, qfp::compare_report_text(rep));
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

// wreathfuse: exact idempotents of wreath-product group algebras by
// consecutive evaluation, with an independent recursive construction and
// batch identity verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wreathfuse/fusion.hpp"
#include "wreathfuse/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupportedGroup = 3;
constexpr int kExitPole = 4;
constexpr int kExitCap = 5;

wrf::GroupPtr resolve_group(const std::string& spec, const std::string& file) {
    if (!spec.empty() && !file.empty())
        throw wrf::ParseError("give either --group or --group-file, not both");
    if (!file.empty()) return wrf::load_group_file_path(file);
    if (!spec.empty()) return wrf::build_group(spec);
    throw wrf::ParseError("a group is required (--group or --group-file)");
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(std::stoi(tok) - 1); // 1-based on the command line
        } catch (const std::exception&) {
            throw wrf::ParseError("bad class index in --subset: " + tok);
        }
    }
    if (out.empty()) throw wrf::ParseError("--subset must list at least one class index");
    return out;
}

// When --out is relative and the default output directory is configured in
// the environment, resolve against it.
std::string resolve_out_path(const std::string& out) {
    if (out.empty() || out.front() == '/') return out;
    const char* dir = std::getenv("WREATHFUSE_OUT");
    if (!dir || !*dir) return out;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string resolved = resolve_out_path(out_path);
    std::ofstream f(resolved);
    if (!f) throw wrf::Error("cannot open output file: " + resolved);
    f << text;
    std::cerr << "wrote " << resolved << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact idempotents of wreath-product group algebras"};
    app.require_subcommand(1);

    // ---- idempotent ----
    auto* cmd_idem = app.add_subcommand("idempotent",
                                        "compute one idempotent of C[G wr S_n]");
    std::string i_group, i_group_file, i_shape, i_tableau, i_mode = "full";
    std::string i_construction = "fusion", i_format = "human", i_subset, i_out;
    cmd_idem->add_option("--group", i_group, "built-in group spec (trivial, C<k>, S<k>, D<k>, products with x)");
    cmd_idem->add_option("--group-file", i_group_file, "group file path");
    cmd_idem->add_option("--shape", i_shape, "multipartition, e.g. \"[2,1],[],[1]\"")->required();
    cmd_idem->add_option("--tableau", i_tableau,
                         "standard tableau, e.g. \"1:(1,1,1) 2:(3,1,1)\"; may be omitted "
                         "when the shape has a unique tableau");
    cmd_idem->add_option("--construction", i_construction, "fusion | jm")
        ->check(CLI::IsMember({"fusion", "jm"}));
    cmd_idem->add_option("--mode", i_mode, "full | abelian")
        ->check(CLI::IsMember({"full", "abelian"}));
    cmd_idem->add_option("--subset", i_subset, "comma-separated 1-based class indices to use");
    cmd_idem->add_option("--format", i_format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd_idem->add_option("--out", i_out, "write the output to this file");

    // ---- enumerate ----
    auto* cmd_enum = app.add_subcommand("enumerate", "list shapes or standard tableaux");
    int e_m = 0, e_n = -1;
    std::string e_shape, e_what = "shapes", e_format = "human";
    cmd_enum->add_option("--m", e_m, "number of components");
    cmd_enum->add_option("--n", e_n, "total size");
    cmd_enum->add_option("--shape", e_shape, "fixed shape (for --what tableaux)");
    cmd_enum->add_option("--what", e_what, "shapes | tableaux")
        ->check(CLI::IsMember({"shapes", "tableaux"}));
    cmd_enum->add_option("--format", e_format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite, v_group, v_group_file, v_mode = "full";
    std::string v_construction = "both", v_format = "human", v_out;
    int v_n = 2, v_trials = 20;
    std::uint64_t v_seed = 0;
    cmd_verify->add_option("--suite", v_suite, "system | relations")
        ->required()
        ->check(CLI::IsMember({"system", "relations"}));
    cmd_verify->add_option("--group", v_group, "built-in group spec");
    cmd_verify->add_option("--group-file", v_group_file, "group file path");
    cmd_verify->add_option("--n", v_n, "rank of the wreath product")->required();
    cmd_verify->add_option("--trials", v_trials, "randomized trials (relations suite)");
    cmd_verify->add_option("--seed", v_seed, "random seed (relations suite)");
    cmd_verify->add_option("--construction", v_construction, "fusion | jm | both (system suite)")
        ->check(CLI::IsMember({"fusion", "jm", "both"}));
    cmd_verify->add_option("--mode", v_mode, "full | abelian (system suite)")
        ->check(CLI::IsMember({"full", "abelian"}));
    cmd_verify->add_option("--format", v_format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd_verify->add_option("--out", v_out, "write the report to this file");

    // ---- group ----
    auto* cmd_group = app.add_subcommand("group", "validate a group and echo its canonical form");
    std::string g_group, g_group_file, g_out;
    cmd_group->add_option("--group", g_group, "built-in group spec");
    cmd_group->add_option("--group-file", g_group_file, "group file path");
    cmd_group->add_option("--out", g_out, "write the canonical form to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (cmd_idem->parsed()) {
        wrf::GroupPtr g = resolve_group(i_group, i_group_file);
        wrf::MultiPartition shape = wrf::MultiPartition::parse(i_shape);
        wrf::FusionMode mode =
            i_mode == "abelian" ? wrf::FusionMode::AbelianGenerators : wrf::FusionMode::Full;
        std::vector<int> subset;
        const std::vector<int>* subset_ptr = nullptr;
        if (!i_subset.empty()) {
            subset = parse_subset(i_subset);
            subset_ptr = &subset;
        }
        wrf::FusionConfig cfg = wrf::make_fusion_config(g, shape.size(), mode, subset_ptr);
        if (shape.m() != cfg.m())
            throw wrf::ParseError("shape must have one component per conjugacy class (" +
                                  std::to_string(cfg.m()) + ")");
        wrf::StandardMultiTableau t;
        if (i_tableau.empty()) {
            auto all = wrf::standard_tableaux(shape);
            if (all.size() != 1)
                throw wrf::ParseError("--tableau required: the shape has " +
                                      std::to_string(all.size()) + " standard tableaux");
            t = all[0];
        } else {
            t = wrf::StandardMultiTableau::parse(i_tableau, cfg.m());
            if (!(t.shape == shape))
                throw wrf::ParseError("tableau does not fill the given shape");
        }
        wrf::AlgebraElement e = i_construction == "jm" ? wrf::jm_idempotent(cfg, t)
                                                       : wrf::fusion_idempotent(cfg, t);
        wrf::Cyclotomic fg = wrf::fg_coefficient(cfg, shape);
        wrf::Rational f = wrf::hook_product(shape);
        std::ostringstream os;
        if (i_format == "structured") {
            os << "wreathfuse-idempotent v1\n";
            os << "group " << g->name << "\n";
            os << "n " << cfg.n << "\n";
            os << "shape " << shape.to_string() << "\n";
            os << "tableau " << t.to_string() << "\n";
            os << "construction " << i_construction << "\n";
            os << "mode " << i_mode << "\n";
            os << "F " << f.to_string() << "\n";
            os << "FG " << fg.to_string() << "\n";
            os << e.serialize() << "\n";
        } else {
            os << "# group " << g->name << " order " << g->order << " classes " << cfg.m()
               << "\n";
            os << "# shape " << shape.to_string() << "\n";
            os << "# tableau " << t.to_string() << "\n";
            os << "# construction " << i_construction << " mode " << i_mode << "\n";
            os << "# F " << f.to_string() << "  FG " << fg.to_string() << "  terms "
               << e.term_count() << "\n";
            os << e.pretty() << "\n";
        }
        emit(os.str(), i_out);
        return kExitOk;
    }

    if (cmd_enum->parsed()) {
        std::ostringstream os;
        if (e_what == "shapes") {
            if (e_m < 1 || e_n < 0)
                throw wrf::ParseError("enumerate --what shapes needs --m >= 1 and --n >= 0");
            auto shapes = wrf::multipartitions(e_m, e_n);
            if (e_format == "structured") os << "count " << shapes.size() << "\n";
            for (const auto& s : shapes) os << s.to_string() << "\n";
        } else {
            if (e_shape.empty()) throw wrf::ParseError("enumerate --what tableaux needs --shape");
            wrf::MultiPartition shape = wrf::MultiPartition::parse(e_shape);
            auto ts = wrf::standard_tableaux(shape);
            if (e_format == "structured") os << "count " << ts.size() << "\n";
            for (const auto& t : ts) os << t.to_string() << "\n";
        }
        emit(os.str(), "");
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        wrf::GroupPtr g = resolve_group(v_group, v_group_file);
        wrf::VerificationReport rep;
        if (v_suite == "system") {
            wrf::FusionMode mode = v_mode == "abelian" ? wrf::FusionMode::AbelianGenerators
                                                       : wrf::FusionMode::Full;
            wrf::FusionConfig cfg = wrf::make_fusion_config(g, v_n, mode);
            wrf::Construction c = v_construction == "fusion"
                                      ? wrf::Construction::Fusion
                                      : (v_construction == "jm" ? wrf::Construction::JucysMurphy
                                                                : wrf::Construction::Both);
            rep = wrf::verify_idempotent_system(cfg, c);
        } else {
            rep = wrf::verify_relations(g, v_n, v_trials, v_seed);
        }
        std::ostringstream os;
        if (v_format == "structured") wrf::render_report_structured(rep, os);
        else wrf::render_report_human(rep, os);
        emit(os.str(), v_out);
        std::cerr << "elapsed " << rep.elapsed_seconds << "s\n";
        return rep.all_pass() ? kExitOk : kExitCheckFailed;
    }

    if (cmd_group->parsed()) {
        wrf::GroupPtr g = resolve_group(g_group, g_group_file);
        std::ostringstream os;
        wrf::write_group_file(os, *g);
        emit(os.str(), g_out);
        return kExitOk;
    }

    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wrf::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const wrf::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const wrf::UnsupportedGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedGroup;
    } catch (const wrf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const wrf::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 10;
    }
}

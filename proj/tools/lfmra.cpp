#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "lfmra/io.hpp"

using namespace lfmra;

namespace {

long long enumeration_cap() {
    if (const char* env = std::getenv("LOCALFIELD_MRA_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ValidationError("LOCALFIELD_MRA_CAP must be a positive integer");
    }
    return 1000000;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return json::parse(in);
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << body;
}

void write_json(const std::string& path, const json& j) {
    write_file(path, j.dump(2) + "\n");
}

struct TreeInput {
    FieldParams field;
    RootedTree tree;
    LambdaFile lambdas;
};

TreeInput load_tree_input(const std::string& tree_path, const std::string& lambdas_path) {
    auto [f, t] = tree_from_json(load_json(tree_path));
    LambdaFile lf;
    if (!lambdas_path.empty()) lf = lambdas_from_json(f, load_json(lambdas_path));
    return {std::move(f), std::move(t), std::move(lf)};
}

int cmd_build(const std::string& tree_path, const std::string& lambdas_path,
              const std::string& out_dir) {
    TreeInput in = load_tree_input(tree_path, lambdas_path);
    const FieldParams& f = in.field;
    std::filesystem::create_directories(out_dir);

    if (in.lambdas.floating) {
        // non-certifying numeric pathway for arbitrary unimodular lambdas
        PhaseAssignment phases = in.lambdas.phases;
        for (auto [v, e] : in.lambdas.exact)
            phases[v] = static_cast<double>(e) / f.p();
        ApproxMask m = approx_mask_from_tree(f, in.tree, phases);
        auto spec = approx_spectrum_from_tree(f, in.tree, m);
        json mask_entries = json::array();
        for (int i = 0; i < m.q; ++i)
            for (int j = 0; j < m.q; ++j)
                if (std::abs(m.at(i, j)) > 0)
                    mask_entries.push_back(json{{"i", vertex_name(f, i)},
                                                {"j", vertex_name(f, j)},
                                                {"re", m.at(i, j).real()},
                                                {"im", m.at(i, j).imag()}});
        write_json(out_dir + "/mask.json",
                   json{{"field", field_to_json(f)},
                        {"floating", true},
                        {"entries", mask_entries}});
        json spec_entries = json::array();
        for (const auto& [digits, v] : spec) {
            json d = json::array();
            for (int x : digits) d.push_back(vertex_name(f, x));
            spec_entries.push_back(
                json{{"digits", d}, {"re", v.real()}, {"im", v.imag()}});
        }
        write_json(out_dir + "/spectrum.json",
                   json{{"M", in.tree.height - 2},
                        {"floating", true},
                        {"entries", spec_entries}});
        bool ok = approx_check(f, m, spec);
        std::cout << "floating-lambda build (non-certifying, tol 1e-9): "
                  << (ok ? "checks pass" : "checks FAIL") << "\n";
        return ok ? 0 : 1;
    }

    MaskTable mask = mask_from_tree(f, in.tree, in.lambdas.exact);
    SpectrumTable spec = spectrum_from_tree(f, in.tree, mask);
    StepFn phi = scaling_from_spectrum(f, spec);
    write_json(out_dir + "/mask.json", mask_to_json(f, mask));
    write_json(out_dir + "/spectrum.json", spectrum_to_json(f, spec));
    write_json(out_dir + "/phi.json", phi_to_json(f, phi));
    write_file(out_dir + "/phi.csv", phi_to_csv(f, phi));
    if (f.s() == 2) write_file(out_dir + "/grid.txt", grid_render(phi));
    if (auto ind = extract_indicator(phi))
        std::cout << "phi = indicator of " << indicator_to_string(f, *ind) << "\n";
    else
        std::cout << "phi is not a 0/1 indicator\n";
    return 0;
}

int cmd_verify(const std::string& tree_path, const std::string& lambdas_path,
               bool fast, const std::string& out_path) {
    TreeInput in = load_tree_input(tree_path, lambdas_path);
    const FieldParams& f = in.field;
    if (in.lambdas.floating) {
        PhaseAssignment phases = in.lambdas.phases;
        for (auto [v, e] : in.lambdas.exact)
            phases[v] = static_cast<double>(e) / f.p();
        ApproxMask m = approx_mask_from_tree(f, in.tree, phases);
        bool ok = approx_check(f, m, approx_spectrum_from_tree(f, in.tree, m));
        json rep{{"tree", tree_to_json(f, in.tree)},
                 {"floating", true},
                 {"tolerance", 1e-9},
                 {"pass", ok},
                 {"certified_mra", false}};
        if (out_path.empty())
            std::cout << rep.dump(2) << "\n";
        else
            write_json(out_path, rep);
        return ok ? 0 : 1;
    }
    FullReportOptions opt;
    opt.lambdas = in.lambdas.exact;
    opt.fast_oracle = fast;
    Report rep = full_report(f, in.tree, opt);
    json j = report_to_json(f, in.tree, rep);
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json(out_path, j);
    return rep.certified ? 0 : 1;
}

int cmd_sweep(int p, int s, long long sample, uint64_t seed, int workers, bool fast) {
    FieldParams f = FieldParams::make(p, s);
    std::vector<RootedTree> trees;
    if (sample > 0) {
        for (long long i = 0; i < sample; ++i)
            trees.push_back(tree_random(f, seed + static_cast<uint64_t>(i)));
    } else {
        tree_enumerate(f, enumeration_cap(),
                       [&](long long, const RootedTree& t) { trees.push_back(t); });
    }
    std::vector<char> certified(trees.size(), 0);
    std::vector<int> heights(trees.size(), 0);
    FullReportOptions opt;
    opt.fast_oracle = fast;
    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            Report r = full_report(f, trees[i], opt);
            certified[i] = r.certified ? 1 : 0;
            heights[i] = r.height;
        }
    };
    if (workers <= 1) {
        run_range(0, trees.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (trees.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            size_t lo = std::min(trees.size(), w * chunk);
            size_t hi = std::min(trees.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    long long pass = 0;
    std::map<int, long long> hist;
    for (size_t i = 0; i < trees.size(); ++i) {
        pass += certified[i];
        ++hist[heights[i]];
    }
    std::cout << trees.size() << " trees, " << pass << " certified\n";
    for (auto [h, n] : hist) std::cout << "height " << h << ": " << n << "\n";
    return pass == static_cast<long long>(trees.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal MRA construction on local fields of positive characteristic"};
    app.require_subcommand(1);

    auto* field = app.add_subcommand("field", "field utilities");
    field->require_subcommand(1);
    int p = 2, s = 1;
    auto* find = field->add_subcommand("find-irreducible",
                                       "smallest monic irreducible modulus");
    find->add_option("--p", p, "characteristic")->required();
    find->add_option("--s", s, "extension degree")->required();

    auto* tree = app.add_subcommand("tree", "tree utilities");
    tree->require_subcommand(1);
    int tp = 2, ts = 1;
    uint64_t seed = 0;
    std::string out_path, tree_path;
    auto* trandom = tree->add_subcommand("random", "seeded uniform random tree");
    trandom->add_option("--p", tp)->required();
    trandom->add_option("--s", ts)->required();
    trandom->add_option("--seed", seed, "RNG seed")->required();
    trandom->add_option("--out", out_path, "output file (default stdout)");
    auto* tenum = tree->add_subcommand("enumerate", "count/enumerate all trees");
    tenum->add_option("--p", tp)->required();
    tenum->add_option("--s", ts)->required();
    bool print_trees = false;
    tenum->add_flag("--print", print_trees, "print one tree.json per line");
    auto* tvalidate = tree->add_subcommand("validate", "validate a tree file");
    tvalidate->add_option("--tree", tree_path, "tree.json")->required();

    auto* build = app.add_subcommand("build", "construct mask/spectrum/phi artifacts");
    std::string lambdas_path, out_dir = ".";
    build->add_option("--tree", tree_path, "tree.json")->required();
    build->add_option("--lambdas", lambdas_path, "edge lambda file");
    build->add_option("--out-dir", out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "run every criterion, emit report.json");
    verify->add_option("--tree", tree_path, "tree.json")->required();
    verify->add_option("--lambdas", lambdas_path, "edge lambda file");
    verify->add_option("--out", out_path, "report file (default stdout)");
    bool fast = false;
    verify->add_flag("--fast", fast, "difference-based shift oracle");

    auto* sweep = app.add_subcommand("sweep", "verify all or sampled trees");
    long long sample = 0;
    int workers = 1;
    sweep->add_option("--p", tp)->required();
    sweep->add_option("--s", ts)->required();
    sweep->add_option("--sample", sample, "random sample size (default: exhaustive)");
    sweep->add_option("--seed", seed, "RNG seed for sampling");
    sweep->add_option("--workers", workers, "worker threads");
    sweep->add_flag("--fast", fast, "difference-based shift oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (find->parsed()) {
            FieldParams f = FieldParams::make(p, s);
            std::cout << field_to_json(f).dump(2) << "\n";
            return 0;
        }
        if (trandom->parsed()) {
            FieldParams f = FieldParams::make(tp, ts);
            json j = tree_to_json(f, tree_random(f, seed));
            if (out_path.empty())
                std::cout << j.dump(2) << "\n";
            else
                write_json(out_path, j);
            return 0;
        }
        if (tenum->parsed()) {
            FieldParams f = FieldParams::make(tp, ts);
            if (print_trees)
                tree_enumerate(f, enumeration_cap(),
                               [&](long long, const RootedTree& t) {
                                   std::cout << tree_to_json(f, t).dump() << "\n";
                               });
            std::cout << tree_count(f) << " trees\n";
            return 0;
        }
        if (tvalidate->parsed()) {
            auto [f, t] = tree_from_json(load_json(tree_path));
            std::cout << "valid tree on GF(" << f.order() << "), height "
                      << t.height << "\n";
            return 0;
        }
        if (build->parsed()) return cmd_build(tree_path, lambdas_path, out_dir);
        if (verify->parsed()) return cmd_verify(tree_path, lambdas_path, fast, out_path);
        if (sweep->parsed()) return cmd_sweep(tp, ts, sample, seed, workers, fast);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}

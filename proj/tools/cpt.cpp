// cpt: build and check realizers for containment orders of paths in a tree.
//
// Subcommands: perms, gen, realize, dim, bound. Exit codes: 0 success,
// 1 usage, 2 parse/validation, 3 size guard, 4 internal verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cpt/cli.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cpt::InvalidInputError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw cpt::InvalidInputError("cannot open " + path + " for writing");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"realizers for containment orders of paths in a tree"};
    app.require_subcommand(1);

    // perms
    int perms_n = 0;
    bool perms_weak = false;
    bool perms_strong = false;
    bool perms_verify = false;
    std::string perms_out;
    auto* perms = app.add_subcommand("perms", "write a (weakly) 3-suitable permutation family of [n]");
    perms->add_option("n", perms_n, "ground set size")->required()->check(CLI::PositiveNumber);
    auto* weak_flag = perms->add_flag("--weak", perms_weak, "weakly 3-suitable family");
    perms->add_flag("--strong", perms_strong, "3-suitable family (default)")->excludes(weak_flag);
    perms->add_flag("--verify", perms_verify, "brute-force check the family (guard n <= 64)");
    perms->add_option("-o,--out", perms_out, "output file (default stdout)");

    // gen
    std::vector<int> gen_p12_args;
    std::vector<std::int64_t> gen_random_args;
    std::string gen_tree = "tree.txt";
    std::string gen_paths = "paths.txt";
    auto* gen = app.add_subcommand("gen", "generate a tree file and a paths file");
    auto* p12_opt = gen->add_option("--p12", gen_p12_args, "complete tree instance: ARITY RADIUS")->expected(2);
    gen->add_option("--random", gen_random_args, "random instance: N P SEED")->expected(3)->excludes(p12_opt);
    gen->add_option("--tree", gen_tree, "tree output file");
    gen->add_option("--paths", gen_paths, "paths output file");

    // realize
    std::string realize_tree;
    std::string realize_paths;
    std::string realize_out;
    bool no_verify = false;
    bool dump_drawings = false;
    auto* realize = app.add_subcommand("realize", "build and verify a realizer for an instance");
    realize->add_option("treefile", realize_tree, "tree file")->required();
    realize->add_option("pathsfile", realize_paths, "paths file")->required();
    realize->add_option("-o,--out", realize_out, "realizer output file (default stdout)");
    realize->add_flag("--no-verify", no_verify, "skip verification (benchmarking only)");
    realize->add_flag("--dump-drawings", dump_drawings, "list the drawing descriptors used");

    // dim
    std::string dim_tree;
    std::string dim_paths;
    int dim_kmax = 0;
    auto* dim = app.add_subcommand("dim", "exact dimension of a small instance (guard: 12 elements)");
    dim->add_option("treefile", dim_tree, "tree file")->required();
    dim->add_option("pathsfile", dim_paths, "paths file")->required();
    dim->add_option("--kmax", dim_kmax, "largest realizer size to try (default: construction size)");

    // bound
    std::string bound_tree;
    auto* bound = app.add_subcommand("bound", "dimension bounds for a host tree");
    bound->add_option("treefile", bound_tree, "tree file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cpt::exit_usage;
    }

    try {
        if (perms->parsed()) {
            if (!perms_out.empty()) {
                auto out = open_output(perms_out);
                return cpt::cmd_perms(perms_n, perms_weak, perms_verify, out, std::cerr);
            }
            return cpt::cmd_perms(perms_n, perms_weak, perms_verify, std::cout, std::cerr);
        }
        if (gen->parsed()) {
            cpt::GeneratorSpec spec;
            if (!gen_p12_args.empty()) {
                spec.kind = cpt::GeneratorSpec::Kind::p12;
                spec.arity = gen_p12_args[0];
                spec.radius = gen_p12_args[1];
            } else if (!gen_random_args.empty()) {
                spec.kind = cpt::GeneratorSpec::Kind::random_model;
                spec.nodes = static_cast<int>(gen_random_args[0]);
                spec.paths = static_cast<int>(gen_random_args[1]);
                spec.seed = static_cast<std::uint64_t>(gen_random_args[2]);
            } else {
                std::cerr << "error: gen needs --p12 or --random\n";
                return cpt::exit_usage;
            }
            auto tree_out = open_output(gen_tree);
            auto paths_out = open_output(gen_paths);
            return cpt::cmd_gen(spec, tree_out, paths_out, std::cerr);
        }
        if (realize->parsed()) {
            auto tree_in = open_input(realize_tree);
            auto paths_in = open_input(realize_paths);
            if (!realize_out.empty()) {
                auto out = open_output(realize_out);
                return cpt::cmd_realize(tree_in, paths_in, out, !no_verify, std::cerr, nullptr, dump_drawings);
            }
            return cpt::cmd_realize(tree_in, paths_in, std::cout, !no_verify, std::cerr, nullptr, dump_drawings);
        }
        if (dim->parsed()) {
            auto tree_in = open_input(dim_tree);
            auto paths_in = open_input(dim_paths);
            return cpt::cmd_dim(tree_in, paths_in, dim_kmax, std::cout, std::cerr);
        }
        if (bound->parsed()) {
            auto tree_in = open_input(bound_tree);
            return cpt::cmd_bound(tree_in, std::cout, std::cerr);
        }
    } catch (const cpt::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cpt::exit_parse;
    } catch (const cpt::GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cpt::exit_guard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cpt::exit_usage;
    }
    return cpt::exit_usage;
}

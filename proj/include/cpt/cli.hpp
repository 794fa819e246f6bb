#ifndef CPT_CLI_HPP
#define CPT_CLI_HPP

#include <chrono>
#include <istream>
#include <ostream>
#include <string>

#include "cpt/drawings.hpp"
#include "cpt/errors.hpp"
#include "cpt/instances.hpp"
#include "cpt/io.hpp"
#include "cpt/oracle.hpp"
#include "cpt/permutations.hpp"
#include "cpt/realizer.hpp"
#include "cpt/tree.hpp"

namespace cpt {

enum ExitCode {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_guard = 3,
    exit_verify = 4,
};

/// What a realize run did: host parameters, sizes, verdict, phase timings.
struct RunReport {
    int maxdeg = 0;
    int radius = 0;
    int leaves = 0;
    int p = 0;
    int realizer_size = 0;
    int bound = 0; // size bound of the construction for this host
    bool verify_ran = false;
    bool verified = false;
    double ms_parse = 0.0;
    double ms_root = 0.0;
    double ms_build = 0.0;
    double ms_verify = 0.0;
};

namespace detail {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
        mark_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point mark_ = std::chrono::steady_clock::now();
};

} // namespace detail

const int kVerifyPermGuard = 64;

/// perms: write a weakly 3-suitable or 3-suitable family of [n]; optionally
/// brute-force check it (guarded). The family is written even when the check
/// is refused.
inline int cmd_perms(int n, bool weak, bool verify, std::ostream& out, std::ostream& diag) {
    if (n < 1) {
        diag << "error: n must be a positive integer\n";
        return exit_usage;
    }
    const PermutationFamily fam = weak ? build_weakly_3suitable(n) : build_3suitable(n);
    write_family_file(out, fam);
    diag << "family: n=" << fam.n << " size=" << fam.members.size() << " kind="
         << (weak ? "weakly-3-suitable" : "3-suitable") << '\n';
    if (!verify) return exit_ok;
    if (n > kVerifyPermGuard) {
        diag << "verify: refused (guard n <= " << kVerifyPermGuard << "); family written anyway\n";
        return exit_guard;
    }
    const bool ok = weak ? is_weakly_3suitable(fam) : is_3suitable(fam);
    diag << "verify: " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? exit_ok : exit_verify;
}

/// gen: emit tree and paths files for a generator spec.
inline int cmd_gen(const GeneratorSpec& spec, std::ostream& tree_out, std::ostream& paths_out, std::ostream& diag) {
    try {
        const CptInstance inst = generate(spec);
        // re-emit the instance's tree as an edge list
        Tree t;
        t.n = inst.tree.n;
        t.adj.assign(static_cast<std::size_t>(t.n) + 1, {});
        for (int v = 1; v <= t.n; ++v)
            if (v != inst.tree.root) {
                t.adj[static_cast<std::size_t>(v)].push_back(inst.tree.parent[static_cast<std::size_t>(v)]);
                t.adj[static_cast<std::size_t>(inst.tree.parent[static_cast<std::size_t>(v)])].push_back(v);
            }
        write_tree_file(tree_out, t);
        write_paths_file(paths_out, path_rows(inst));
        diag << "generated: n=" << inst.tree.n << " p=" << inst.p() << '\n';
        return exit_ok;
    } catch (const GuardError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_guard;
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

/// realize: center-root the host, build the drawing family's extensions plus
/// the level-wise one, verify (on by default), and write the realizer file.
/// Verification failure means a bug in the construction and exits nonzero.
inline int cmd_realize(std::istream& tree_in, std::istream& paths_in, std::ostream& out, bool verify,
                       std::ostream& diag, RunReport* report_out = nullptr, bool dump_drawings = false) {
    RunReport rep;
    detail::Stopwatch watch;
    CptInstance inst;
    try {
        const Tree t = parse_tree_file(tree_in);
        const auto rows = parse_paths_file(paths_in);
        rep.ms_parse = watch.lap();
        inst = make_instance(root_at_center(t), rows);
        rep.ms_root = watch.lap();
    } catch (const InvalidInputError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_parse;
    }
    rep.maxdeg = inst.tree.maxdeg;
    rep.radius = inst.tree.radius;
    rep.leaves = inst.tree.leafcount;
    rep.p = inst.p();
    rep.bound = realizer_size_bound(inst.tree);

    if (dump_drawings)
        for (const DrawingDescriptor& d : build_drawing_family(inst.tree).descriptors)
            diag << "drawing: " << descriptor_to_string(d) << '\n';
    const Realizer realizer = build_realizer(inst);
    rep.realizer_size = realizer.size();
    rep.ms_build = watch.lap();

    if (verify) {
        rep.verify_ran = true;
        rep.verified = verify_realizer(poset_from_paths(inst), realizer);
        rep.ms_verify = watch.lap();
    }
    write_realizer_file(out, realizer);

    diag << "host: n=" << inst.tree.n << " delta=" << rep.maxdeg << " r=" << rep.radius << " leaves=" << rep.leaves
         << " p=" << rep.p << '\n';
    diag << "realizer: size=" << rep.realizer_size << " bound=" << rep.bound
         << " verify=" << (rep.verify_ran ? (rep.verified ? "pass" : "FAIL") : "skipped") << '\n';
    diag << "time: parse=" << rep.ms_parse << "ms root=" << rep.ms_root << "ms build=" << rep.ms_build
         << "ms verify=" << rep.ms_verify << "ms\n";
    if (report_out) *report_out = rep;
    if (rep.verify_ran && !rep.verified) {
        diag << "error: realizer failed verification; this is a bug\n";
        return exit_verify;
    }
    return exit_ok;
}

/// dim: exact dimension of the instance's poset (guarded to 12 elements),
/// compared against the reporting bound and the constructed realizer size.
inline int cmd_dim(std::istream& tree_in, std::istream& paths_in, int kmax, std::ostream& out, std::ostream& diag) {
    CptInstance inst;
    try {
        const Tree t = parse_tree_file(tree_in);
        const auto rows = parse_paths_file(paths_in);
        inst = make_instance(root_at_center(t), rows);
    } catch (const InvalidInputError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_parse;
    }
    try {
        const Poset poset = poset_from_paths(inst);
        const int realizer_size = build_realizer(inst).size();
        if (kmax <= 0) kmax = realizer_size;
        const DimensionResult res = exact_dimension(poset, kmax);
        if (!res.dimension.has_value()) {
            out << "dim: exceeds kmax=" << kmax << '\n';
        } else {
            out << "dim=" << *res.dimension << " bound=" << dimension_bound(inst.tree)
                << " realizer_size=" << realizer_size << '\n';
        }
        return exit_ok;
    } catch (const GuardError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_guard;
    }
}

/// bound: host parameters and the dimension bounds they give.
inline int cmd_bound(std::istream& tree_in, std::ostream& out, std::ostream& diag) {
    try {
        const RootedTree t = root_at_center(parse_tree_file(tree_in));
        out << "n=" << t.n << " delta=" << t.maxdeg << " r=" << t.radius << " leaves=" << t.leafcount
            << " construction=" << realizer_size_bound(t) << " bound=" << dimension_bound(t) << '\n';
        return exit_ok;
    } catch (const InvalidInputError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_parse;
    }
}

} // namespace cpt

#endif // CPT_CLI_HPP

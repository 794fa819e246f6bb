#ifndef CPT_IO_HPP
#define CPT_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/permutations.hpp"
#include "cpt/poset.hpp"
#include "cpt/realizer.hpp"
#include "cpt/tree.hpp"

namespace cpt {

namespace detail {

// Line-oriented reader that keeps track of line numbers for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in, std::string source = "input") : in_(in), source_(std::move(source)) {}

    // Next non-empty line; false at end of input.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++lineno_;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    }

    std::vector<long long> fields(const std::string& line, std::size_t expected) const {
        std::istringstream is(line);
        std::vector<long long> out;
        long long v = 0;
        while (is >> v) out.push_back(v);
        std::string trailing;
        if (!(is >> trailing).fail() || out.size() != expected) fail("expected " + std::to_string(expected) + " integers");
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInputError(source_ + ":" + std::to_string(lineno_) + ": " + what);
    }

private:
    std::istream& in_;
    std::string source_;
    int lineno_ = 0;
};

inline int as_int(const LineReader& r, long long v, const char* what) {
    if (v < -2000000000LL || v > 2000000000LL) r.fail(std::string(what) + " out of range");
    return static_cast<int>(v);
}

} // namespace detail

// Tree file: line 1 "n"; lines 2..n "u v" (1-indexed edges).
inline Tree parse_tree_file(std::istream& in, const std::string& source = "tree") {
    detail::LineReader r(in, source);
    std::string line;
    if (!r.next(line)) r.fail("missing node count");
    const int n = detail::as_int(r, r.fields(line, 1)[0], "node count");
    if (n < 1) r.fail("node count must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n - 1; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(i));
        const auto f = r.fields(line, 2);
        edges.emplace_back(detail::as_int(r, f[0], "edge endpoint"), detail::as_int(r, f[1], "edge endpoint"));
    }
    if (r.next(line)) r.fail("unexpected trailing content");
    try {
        return load_tree(n, edges);
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(source + ": " + e.what());
    }
}

inline void write_tree_file(std::ostream& out, const Tree& t) {
    out << t.n << '\n';
    for (int u = 1; u <= t.n; ++u)
        for (int v : t.adj[static_cast<std::size_t>(u)])
            if (v > u) out << u << ' ' << v << '\n';
}

struct PathRow {
    int id = 0;
    int u = 0;
    int v = 0;

    bool operator==(const PathRow&) const = default;
};

// Paths file: line 1 "p"; then p lines "id u v" (u = v for one-vertex paths).
inline std::vector<PathRow> parse_paths_file(std::istream& in, const std::string& source = "paths") {
    detail::LineReader r(in, source);
    std::string line;
    if (!r.next(line)) r.fail("missing path count");
    const int p = detail::as_int(r, r.fields(line, 1)[0], "path count");
    if (p < 1) r.fail("path count must be >= 1");
    std::vector<PathRow> rows;
    rows.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(p) + " paths, got " + std::to_string(i));
        const auto f = r.fields(line, 3);
        rows.push_back({detail::as_int(r, f[0], "id"), detail::as_int(r, f[1], "endpoint"),
                        detail::as_int(r, f[2], "endpoint")});
    }
    if (r.next(line)) r.fail("unexpected trailing content");
    return rows;
}

inline void write_paths_file(std::ostream& out, const std::vector<PathRow>& rows) {
    out << rows.size() << '\n';
    for (const PathRow& row : rows) out << row.id << ' ' << row.u << ' ' << row.v << '\n';
}

inline std::vector<PathRow> path_rows(const CptInstance& inst) {
    std::vector<PathRow> rows;
    rows.reserve(inst.elements.size());
    for (const CptElement& e : inst.elements) rows.push_back({e.id, e.path.u, e.path.v});
    return rows;
}

inline CptInstance make_instance(RootedTree tree, const std::vector<PathRow>& rows) {
    CptInstance inst;
    inst.tree = std::move(tree);
    std::unordered_set<int> ids;
    inst.elements.reserve(rows.size());
    for (const PathRow& row : rows) {
        if (!ids.insert(row.id).second)
            throw InvalidInputError("paths: duplicate element id " + std::to_string(row.id));
        if (row.u < 1 || row.u > inst.tree.n || row.v < 1 || row.v > inst.tree.n)
            throw InvalidInputError("paths: endpoint out of range for element " + std::to_string(row.id));
        inst.elements.push_back({row.id, make_path(inst.tree, row.u, row.v)});
    }
    return inst;
}

// Permutation family file: line 1 "n k"; then k lines of n integers.
inline void write_family_file(std::ostream& out, const PermutationFamily& fam) {
    out << fam.n << ' ' << fam.members.size() << '\n';
    for (const Permutation& p : fam.members) {
        for (int i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.order[static_cast<std::size_t>(i)];
        out << '\n';
    }
}

inline PermutationFamily parse_family_file(std::istream& in, const std::string& source = "family") {
    detail::LineReader r(in, source);
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    const auto h = r.fields(line, 2);
    PermutationFamily fam;
    fam.n = detail::as_int(r, h[0], "n");
    const int k = detail::as_int(r, h[1], "family size");
    if (fam.n < 1 || k < 0) r.fail("bad header");
    for (int i = 0; i < k; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(k) + " permutations, got " + std::to_string(i));
        const auto f = r.fields(line, static_cast<std::size_t>(fam.n));
        Permutation p;
        p.order.reserve(f.size());
        for (long long v : f) p.order.push_back(detail::as_int(r, v, "element"));
        if (!p.valid_on(fam.n)) r.fail("not a permutation of [" + std::to_string(fam.n) + "]");
        fam.members.push_back(std::move(p));
    }
    if (r.next(line)) r.fail("unexpected trailing content");
    return fam;
}

// Realizer file: line 1 "k p"; then k lines of p element ids, lowest first.
inline void write_realizer_file(std::ostream& out, const Realizer& realizer) {
    const std::size_t p = realizer.extensions.empty() ? 0 : realizer.extensions.front().order.size();
    out << realizer.extensions.size() << ' ' << p << '\n';
    for (const LinearExtension& ext : realizer.extensions) {
        for (std::size_t i = 0; i < ext.order.size(); ++i) out << (i ? " " : "") << ext.order[i];
        out << '\n';
    }
}

} // namespace cpt

#endif // CPT_IO_HPP

#include "wreathfuse/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wrf {

// ===========================================================================
// MultiPartition
// ===========================================================================

MultiPartition::MultiPartition(std::vector<std::vector<int>> c) : comps(std::move(c)) {
    validate();
}

int MultiPartition::size() const {
    int n = 0;
    for (const auto& comp : comps)
        for (int part : comp) n += part;
    return n;
}

void MultiPartition::validate() const {
    for (const auto& comp : comps) {
        for (size_t i = 0; i < comp.size(); ++i) {
            if (comp[i] < 1) throw ValidationError("partition parts must be positive");
            if (i + 1 < comp.size() && comp[i] < comp[i + 1])
                throw ValidationError("partition parts must be weakly decreasing");
        }
    }
}

bool MultiPartition::contains(int comp, int row, int col) const {
    if (comp < 1 || comp > m() || row < 1 || col < 1) return false;
    const auto& c = comps[static_cast<size_t>(comp - 1)];
    if (row > static_cast<int>(c.size())) return false;
    return col <= c[static_cast<size_t>(row - 1)];
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    for (int k = 0; k < m(); ++k) {
        if (k) os << ",";
        os << "[";
        const auto& c = comps[static_cast<size_t>(k)];
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << "]";
    }
    return os.str();
}

MultiPartition MultiPartition::parse(const std::string& s) {
    std::vector<std::vector<int>> comps;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == s.size()) throw ParseError("empty shape string");
    while (pos < s.size()) {
        skip_ws();
        if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' in shape: " + s);
        ++pos;
        std::vector<int> comp;
        skip_ws();
        while (pos < s.size() && s[pos] != ']') {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(s.substr(pos), &used);
            } catch (const std::exception&) {
                throw ParseError("bad part in shape: " + s);
            }
            comp.push_back(v);
            pos += used;
            skip_ws();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= s.size()) throw ParseError("unterminated component in shape: " + s);
        ++pos; // ']'
        comps.push_back(std::move(comp));
        skip_ws();
        if (pos < s.size()) {
            if (s[pos] != ',') throw ParseError("expected ',' between components in shape: " + s);
            ++pos;
        }
    }
    return MultiPartition(std::move(comps));
}

MultiPartition with_node_added(const MultiPartition& shape, const MNode& node) {
    MultiPartition out = shape;
    auto& c = out.comps.at(static_cast<size_t>(node.comp - 1));
    if (node.row == static_cast<int>(c.size()) + 1) {
        if (node.col != 1) throw ValidationError("node not addable");
        c.push_back(1);
    } else if (node.row >= 1 && node.row <= static_cast<int>(c.size()) &&
               node.col == c[static_cast<size_t>(node.row - 1)] + 1) {
        c[static_cast<size_t>(node.row - 1)] += 1;
    } else {
        throw ValidationError("node not addable");
    }
    out.validate();
    return out;
}

MultiPartition with_node_removed(const MultiPartition& shape, const MNode& node) {
    MultiPartition out = shape;
    auto& c = out.comps.at(static_cast<size_t>(node.comp - 1));
    if (node.row < 1 || node.row > static_cast<int>(c.size()) ||
        node.col != c[static_cast<size_t>(node.row - 1)])
        throw ValidationError("node not removable");
    c[static_cast<size_t>(node.row - 1)] -= 1;
    if (c[static_cast<size_t>(node.row - 1)] == 0) {
        if (node.row != static_cast<int>(c.size())) throw ValidationError("node not removable");
        c.pop_back();
    }
    out.validate();
    return out;
}

BoundaryNodes boundary_nodes(const MultiPartition& shape) {
    BoundaryNodes out;
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& c = shape.comps[static_cast<size_t>(k - 1)];
        int rows = static_cast<int>(c.size());
        for (int r = 1; r <= rows; ++r) {
            int len = c[static_cast<size_t>(r - 1)];
            int below = r < rows ? c[static_cast<size_t>(r)] : 0;
            if (len > below) out.removable.push_back({k, r, len});
        }
        for (int r = 1; r <= rows + 1; ++r) {
            int len = r <= rows ? c[static_cast<size_t>(r - 1)] : 0;
            int above = r > 1 ? c[static_cast<size_t>(r - 2)] : -1; // -1: no bound
            if (r == 1 || above > len) out.addable.push_back({k, r, len + 1});
        }
    }
    return out;
}

namespace {

// partitions of n in descending lexicographic order, parts bounded by maxp
void partitions_rec(int n, int maxp, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_desc(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

void multipartitions_rec(int m, int n, std::vector<std::vector<int>>& cur,
                         std::vector<MultiPartition>& out) {
    if (m == 0) {
        if (n == 0) out.push_back(MultiPartition(cur));
        return;
    }
    for (int sz = n; sz >= 0; --sz) {
        for (auto& p : partitions_desc(sz)) {
            cur.push_back(p);
            multipartitions_rec(m - 1, n - sz, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<MultiPartition> multipartitions(int m, int n) {
    if (m < 1) throw ValidationError("multipartitions: m must be >= 1");
    if (n < 0) throw ValidationError("multipartitions: n must be >= 0");
    std::vector<MultiPartition> out;
    std::vector<std::vector<int>> cur;
    multipartitions_rec(m, n, cur, out);
    return out;
}

// ===========================================================================
// StandardMultiTableau
// ===========================================================================

void StandardMultiTableau::validate() const {
    shape.validate();
    if (static_cast<int>(nodes.size()) != shape.size())
        throw ValidationError("tableau entry count does not match shape size");
    std::map<std::tuple<int, int, int>, int> entry_at;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const MNode& nd = nodes[i];
        if (!shape.contains(nd.comp, nd.row, nd.col))
            throw ValidationError("tableau entry outside the shape");
        auto key = std::make_tuple(nd.comp, nd.row, nd.col);
        if (entry_at.count(key)) throw ValidationError("tableau entry collision");
        entry_at[key] = static_cast<int>(i) + 1;
    }
    for (const auto& [key, e] : entry_at) {
        auto [c, r, col] = key;
        if (col > 1) {
            auto it = entry_at.find(std::make_tuple(c, r, col - 1));
            if (it == entry_at.end() || it->second > e)
                throw ValidationError("tableau entries must increase along rows");
        }
        if (r > 1) {
            auto it = entry_at.find(std::make_tuple(c, r - 1, col));
            if (it == entry_at.end() || it->second > e)
                throw ValidationError("tableau entries must increase along columns");
        }
    }
}

StandardMultiTableau StandardMultiTableau::restricted(int j) const {
    if (j < 0 || j > size()) throw ValidationError("restriction index out of range");
    StandardMultiTableau out;
    out.nodes.assign(nodes.begin(), nodes.begin() + j);
    std::vector<std::vector<int>> comps(static_cast<size_t>(shape.m()));
    for (const MNode& nd : out.nodes) {
        auto& c = comps[static_cast<size_t>(nd.comp - 1)];
        if (static_cast<int>(c.size()) < nd.row) c.resize(static_cast<size_t>(nd.row), 0);
        c[static_cast<size_t>(nd.row - 1)] = std::max(c[static_cast<size_t>(nd.row - 1)], nd.col);
    }
    out.shape.comps = std::move(comps);
    out.shape.validate();
    return out;
}

StandardMultiTableau StandardMultiTableau::extended(const MNode& node) const {
    StandardMultiTableau out;
    out.shape = with_node_added(shape, node);
    out.nodes = nodes;
    out.nodes.push_back(node);
    return out;
}

std::string StandardMultiTableau::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) os << " ";
        os << (i + 1) << ":(" << nodes[i].comp << "," << nodes[i].row << ","
           << nodes[i].col << ")";
    }
    return os.str();
}

StandardMultiTableau StandardMultiTableau::parse(const std::string& s, int m) {
    std::istringstream is(s);
    std::string tok;
    std::vector<std::pair<int, MNode>> entries;
    while (is >> tok) {
        int entry, comp, row, col;
        char c1, c2, c3, c4, c5;
        std::istringstream ts(tok);
        if (!(ts >> entry >> c1 >> c2 >> comp >> c3 >> row >> c4 >> col >> c5) ||
            c1 != ':' || c2 != '(' || c3 != ',' || c4 != ',' || c5 != ')')
            throw ParseError("bad tableau token: " + tok);
        entries.push_back({entry, {comp, row, col}});
    }
    if (entries.empty()) throw ParseError("empty tableau string");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    StandardMultiTableau t;
    std::vector<std::vector<int>> comps(static_cast<size_t>(m));
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<int>(i) + 1)
            throw ParseError("tableau entries must be 1..n exactly once");
        const MNode& nd = entries[i].second;
        if (nd.comp < 1 || nd.comp > m) throw ParseError("tableau component out of range");
        t.nodes.push_back(nd);
        auto& c = comps[static_cast<size_t>(nd.comp - 1)];
        if (static_cast<int>(c.size()) < nd.row) c.resize(static_cast<size_t>(nd.row), 0);
        c[static_cast<size_t>(nd.row - 1)] = std::max(c[static_cast<size_t>(nd.row - 1)], nd.col);
    }
    t.shape.comps = std::move(comps);
    t.shape.validate();
    t.validate();
    return t;
}

namespace {
void tableaux_rec(const MultiPartition& shape,
                  std::vector<StandardMultiTableau>& out,
                  std::vector<MNode>& stack) {
    if (shape.size() == 0) {
        StandardMultiTableau t;
        t.shape = shape;
        // stack holds nodes for entries n, n-1, ..., 1 (removal order)
        t.nodes.assign(stack.rbegin(), stack.rend());
        // rebuild the full shape from the nodes
        StandardMultiTableau full = t.restricted(static_cast<int>(t.nodes.size()));
        out.push_back(std::move(full));
        return;
    }
    BoundaryNodes b = boundary_nodes(shape);
    for (const MNode& nd : b.removable) {
        stack.push_back(nd);
        MultiPartition smaller = with_node_removed(shape, nd);
        tableaux_rec(smaller, out, stack);
        stack.pop_back();
    }
}
} // namespace

std::vector<StandardMultiTableau> standard_tableaux(const MultiPartition& shape) {
    shape.validate();
    std::vector<StandardMultiTableau> out;
    std::vector<MNode> stack;
    tableaux_rec(shape, out, stack);
    for (auto& t : out) t.validate();
    return out;
}

std::vector<StandardMultiTableau> standard_tableaux_of_size(int m, int n) {
    std::vector<StandardMultiTableau> out;
    for (const auto& shape : multipartitions(m, n)) {
        auto ts = standard_tableaux(shape);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

// ===========================================================================
// Statistics and scalar products
// ===========================================================================

NodeStats node_stats(const StandardMultiTableau& t, int entry,
                     const std::vector<int>& degrees) {
    if (entry < 1 || entry > t.size()) throw ValidationError("tableau entry out of range");
    const MNode& nd = t.nodes[static_cast<size_t>(entry - 1)];
    NodeStats st;
    st.content = nd.col - nd.row;
    st.component = nd.comp;
    int d = degrees.at(static_cast<size_t>(nd.comp - 1));
    st.g_content = Rational(Int(st.content), Int(d));
    return st;
}

Rational hook_product(const MultiPartition& shape) {
    Rational f(1);
    for (const auto& comp : shape.comps) {
        int rows = static_cast<int>(comp.size());
        // conjugate partition for column heights
        std::vector<int> colh(comp.empty() ? 0 : static_cast<size_t>(comp[0]), 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < comp[static_cast<size_t>(r)]; ++c)
                colh[static_cast<size_t>(c)] += 1;
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= comp[static_cast<size_t>(r - 1)]; ++c) {
                int hook = (comp[static_cast<size_t>(r - 1)] - c) +
                           (colh[static_cast<size_t>(c - 1)] - r) + 1;
                f *= Rational(hook);
            }
    }
    return f;
}

Cyclotomic fg_product(const MultiPartition& shape, const SpectralData& sd,
                      const std::vector<int>* alphas) {
    if (shape.m() != sd.m)
        throw ValidationError("shape component count must match the class count");
    Cyclotomic f(1);
    std::vector<int> all;
    if (!alphas) {
        all.resize(static_cast<size_t>(sd.m));
        for (int a = 0; a < sd.m; ++a) all[static_cast<size_t>(a)] = a;
        alphas = &all;
    }
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& comp = shape.comps[static_cast<size_t>(k - 1)];
        int nodes = 0;
        for (int part : comp) nodes += part;
        if (nodes == 0) continue;
        Cyclotomic per_node(1);
        for (int a : *alphas) {
            const Cyclotomic& mine = sd.xi[static_cast<size_t>(k - 1)][static_cast<size_t>(a)];
            for (const auto& xi : sd.value_sets[static_cast<size_t>(a)])
                if (xi != mine) per_node *= (mine - xi);
        }
        for (int i = 0; i < nodes; ++i) f *= per_node;
    }
    return f;
}

AbelianSpectrum abelian_spectrum(const GroupTable& g, const ConjugacyData& cd,
                                 const CharacterTable& ct, const std::vector<int>& gens) {
    if (!g.is_abelian())
        throw ValidationError("abelian generator mode requires an abelian group");
    if (!generators_decompose_group(g, gens))
        throw ValidationError("generators do not decompose the group as a direct product");
    AbelianSpectrum sp;
    sp.N = static_cast<int>(gens.size());
    sp.generators = gens;
    for (int t : gens) {
        int k = g.element_order(t);
        sp.orders.push_back(k);
        std::vector<Cyclotomic> roots;
        for (int j = 0; j < k; ++j) roots.push_back(Cyclotomic::root_of_unity(k, j));
        sp.roots.push_back(std::move(roots));
    }
    sp.xi.assign(static_cast<size_t>(ct.m), std::vector<Cyclotomic>(gens.size()));
    for (int u = 0; u < ct.m; ++u)
        for (size_t a = 0; a < gens.size(); ++a)
            sp.xi[static_cast<size_t>(u)][a] = ct.chi[static_cast<size_t>(u)]
                                                    [static_cast<size_t>(cd.class_of[gens[a]])];
    return sp;
}

Cyclotomic fg_product_abelian(const MultiPartition& shape, const AbelianSpectrum& sp) {
    Cyclotomic f(1);
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& comp = shape.comps[static_cast<size_t>(k - 1)];
        int nodes = 0;
        for (int part : comp) nodes += part;
        if (nodes == 0) continue;
        Cyclotomic per_node(1);
        for (int a = 0; a < sp.N; ++a) {
            const Cyclotomic& mine = sp.xi[static_cast<size_t>(k - 1)][static_cast<size_t>(a)];
            for (const auto& xi : sp.roots[static_cast<size_t>(a)])
                if (xi != mine) per_node *= (mine - xi);
        }
        for (int i = 0; i < nodes; ++i) f *= per_node;
    }
    return f;
}

RatFun content_function(const StandardMultiTableau& t) {
    int n = t.size();
    if (n < 1) throw ValidationError("content function needs a tableau of size >= 1");
    std::vector<int> degrees(static_cast<size_t>(t.shape.m()), 1);
    NodeStats last = node_stats(t, n, degrees);
    Poly u = Poly::variable();
    Poly cN = Poly::constant(Cyclotomic(last.content));
    RatFun f(u - cN, u);
    for (int i = 1; i < n; ++i) {
        NodeStats st = node_stats(t, i, degrees);
        Poly shifted = u - Poly::constant(Cyclotomic(st.content));
        Poly sq = shifted * shifted;
        if (st.component == last.component)
            f = f * RatFun(sq, sq - Poly::constant(Cyclotomic(1)));
        // same-content factor is exactly 1 when the components differ
    }
    return f;
}

Cyclotomic position_function_eval(const StandardMultiTableau& t, const SpectralData& sd,
                                  const std::vector<Cyclotomic>& v,
                                  const std::vector<int>* alphas) {
    int n = t.size();
    if (n < 1) throw ValidationError("position function needs a tableau of size >= 1");
    if (static_cast<int>(v.size()) != sd.m)
        throw ValidationError("position function needs one value per class");
    int pN = t.nodes[static_cast<size_t>(n - 1)].comp;
    std::vector<int> all;
    if (!alphas) {
        all.resize(static_cast<size_t>(sd.m));
        for (int a = 0; a < sd.m; ++a) all[static_cast<size_t>(a)] = a;
        alphas = &all;
    }
    Cyclotomic f(1);
    for (int a : *alphas) {
        const Cyclotomic& mine = sd.xi[static_cast<size_t>(pN - 1)][static_cast<size_t>(a)];
        for (const auto& xi : sd.value_sets[static_cast<size_t>(a)]) {
            if (xi == mine) continue;
            Cyclotomic diff = v[static_cast<size_t>(a)] - xi;
            if (diff.is_zero())
                throw PoleError("position function pole at class value " + xi.to_string(),
                                xi.to_string());
            f *= diff.inverse();
        }
    }
    return f;
}

} // namespace wrf

#include "wreathfuse/groups.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace wrf {

namespace {
constexpr int kBuiltinOrderCap = 24;

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
} // namespace

// ===========================================================================
// GroupTable
// ===========================================================================

int GroupTable::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

void GroupTable::validate() const {
    if (order < 1) throw ValidationError("group order must be positive");
    if (mult.size() != static_cast<size_t>(order) * order)
        throw ValidationError("multiplication table has wrong size");
    for (int v : mult)
        if (v < 0 || v >= order) throw ValidationError("multiplication table entry out of range");
    // Latin square
    for (int a = 0; a < order; ++a) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (int b = 0; b < order; ++b) {
            if (seen_row[mul(a, b)]) throw ValidationError("multiplication table row is not a permutation");
            seen_row[mul(a, b)] = true;
            if (seen_col[mul(b, a)]) throw ValidationError("multiplication table column is not a permutation");
            seen_col[mul(b, a)] = true;
        }
    }
    // two-sided identity
    bool id_ok = true;
    for (int b = 0; b < order; ++b)
        if (mul(identity, b) != b || mul(b, identity) != b) id_ok = false;
    if (!id_ok) throw ValidationError("group has no valid identity element");
    // inverses
    if (inverse.size() != static_cast<size_t>(order))
        throw ValidationError("inverse table has wrong size");
    for (int a = 0; a < order; ++a)
        if (mul(a, inverse[a]) != identity || mul(inverse[a], a) != identity)
            throw ValidationError("inverse table is inconsistent");
    // associativity
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError("multiplication table is not associative");
}

namespace {

std::vector<int> inverses_from_table(const std::vector<int>& mult, int order, int identity) {
    std::vector<int> inv(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mult[static_cast<size_t>(a) * order + b] == identity) inv[a] = b;
    for (int a = 0; a < order; ++a)
        if (inv[a] < 0) throw ValidationError("element without inverse");
    return inv;
}

int find_identity(const std::vector<int>& mult, int order) {
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int b = 0; b < order && ok; ++b)
            if (mult[static_cast<size_t>(e) * order + b] != b ||
                mult[static_cast<size_t>(b) * order + e] != b)
                ok = false;
        if (ok) return e;
    }
    throw ValidationError("group has no valid identity element");
}

GroupPtr finish_table(GroupTable g) {
    g.identity = find_identity(g.mult, g.order);
    g.inverse = inverses_from_table(g.mult, g.order, g.identity);
    g.validate();
    return std::make_shared<const GroupTable>(std::move(g));
}

} // namespace

GroupPtr build_cyclic(int k) {
    if (k < 1) throw UnsupportedGroupError("cyclic order must be >= 1");
    if (k > kBuiltinOrderCap) throw UnsupportedGroupError("built-in groups are capped at order 24");
    GroupTable g;
    g.order = k;
    g.kind = GroupTable::Kind::Cyclic;
    g.param = k;
    g.name = (k == 1) ? "trivial" : ("C" + std::to_string(k));
    g.mult.resize(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            g.mult[static_cast<size_t>(a) * k + b] = (a + b) % k;
    return finish_table(std::move(g));
}

GroupPtr build_trivial() { return build_cyclic(1); }

namespace {
std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}
} // namespace

GroupPtr build_symmetric(int k) {
    if (k < 1 || k > 4)
        throw UnsupportedGroupError("built-in symmetric groups support k <= 4");
    auto perms = all_permutations(k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int n = static_cast<int>(perms.size());
    GroupTable g;
    g.order = n;
    g.kind = GroupTable::Kind::Symmetric;
    g.param = k;
    g.name = "S" + std::to_string(k);
    g.mult.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            g.mult[static_cast<size_t>(a) * n + b] = index[c];
        }
    return finish_table(std::move(g));
}

GroupPtr build_dihedral(int k) {
    if (k < 1) throw UnsupportedGroupError("dihedral parameter must be >= 1");
    if (2 * k > kBuiltinOrderCap) throw UnsupportedGroupError("built-in groups are capped at order 24");
    int n = 2 * k;
    GroupTable g;
    g.order = n;
    g.kind = GroupTable::Kind::Dihedral;
    g.param = k;
    g.name = "D" + std::to_string(k);
    g.mult.resize(static_cast<size_t>(n) * n);
    // elements: r^a -> a, s r^a -> k + a
    auto idx = [&](bool refl, int a) { return (refl ? k : 0) + ((a % k) + k) % k; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool rx = x >= k, ry = y >= k;
            int ax = x % k, ay = y % k;
            int z;
            if (!rx && !ry) z = idx(false, ax + ay);
            else if (!rx) z = idx(true, ay - ax);
            else if (!ry) z = idx(true, ax + ay);
            else z = idx(false, ay - ax);
            g.mult[static_cast<size_t>(x) * n + y] = z;
        }
    return finish_table(std::move(g));
}

GroupPtr build_product(const GroupPtr& a, const GroupPtr& b) {
    if (!a || !b) throw UnsupportedGroupError("product of null groups");
    long long n = static_cast<long long>(a->order) * b->order;
    if (n > kBuiltinOrderCap) throw UnsupportedGroupError("built-in groups are capped at order 24");
    GroupTable g;
    g.order = static_cast<int>(n);
    g.kind = GroupTable::Kind::Product;
    g.factor_left = a;
    g.factor_right = b;
    g.name = a->name + "x" + b->name;
    g.mult.resize(static_cast<size_t>(n) * n);
    int ob = b->order;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int xa = x / ob, xb = x % ob, ya = y / ob, yb = y % ob;
            g.mult[static_cast<size_t>(x) * g.order + y] = a->mul(xa, ya) * ob + b->mul(xb, yb);
        }
    return finish_table(std::move(g));
}

GroupPtr build_group(const std::string& spec) {
    // split on 'x' for direct products
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t x = spec.find('x', pos);
        if (x == std::string::npos) {
            parts.push_back(spec.substr(pos));
            break;
        }
        parts.push_back(spec.substr(pos, x - pos));
        pos = x + 1;
    }
    auto atom = [](const std::string& s) -> GroupPtr {
        if (s == "trivial" || s == "1") return build_trivial();
        if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S' || s[0] == 'D')) {
            int k;
            try {
                size_t used;
                k = std::stoi(s.substr(1), &used);
                if (used != s.size() - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw UnsupportedGroupError("unrecognized group spec: " + s);
            }
            if (s[0] == 'C') return build_cyclic(k);
            if (s[0] == 'S') return build_symmetric(k);
            return build_dihedral(k);
        }
        throw UnsupportedGroupError("unrecognized group spec: " + s);
    };
    GroupPtr g = atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = build_product(g, atom(parts[i]));
    return g;
}

// ===========================================================================
// Group files
// ===========================================================================

namespace {
std::vector<std::string> read_tokens_line(std::istream& in, const std::string& what) {
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) return toks;
    }
    throw ParseError("unexpected end of group file " + what);
}

std::string read_content_line(std::istream& in, const std::string& what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        // trim
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        return line.substr(b, e - b + 1);
    }
    throw ParseError("unexpected end of group file " + what);
}
} // namespace

GroupPtr load_group_file(std::istream& in, const std::string& what) {
    auto head = read_tokens_line(in, what);
    if (head.size() != 2 || head[0] != "group")
        throw ParseError("group file must start with 'group <name>'");
    std::string name = head[1];
    auto ord = read_tokens_line(in, what);
    if (ord.size() != 2 || ord[0] != "order")
        throw ParseError("expected 'order <k>' in group file");
    int order;
    try {
        order = std::stoi(ord[1]);
    } catch (const std::exception&) {
        throw ParseError("bad order in group file");
    }
    if (order < 1 || order > 512) throw ParseError("group file order out of range (1..512)");
    auto mark = read_tokens_line(in, what);
    if (mark.size() != 1 || mark[0] != "mult")
        throw ParseError("expected 'mult' section in group file");
    GroupTable g;
    g.order = order;
    g.kind = GroupTable::Kind::File;
    g.name = name;
    g.mult.reserve(static_cast<size_t>(order) * order);
    for (int r = 0; r < order; ++r) {
        auto row = read_tokens_line(in, what);
        if (static_cast<int>(row.size()) != order)
            throw ParseError("multiplication row has wrong length in group file");
        for (const std::string& t : row) {
            int v;
            try {
                v = std::stoi(t);
            } catch (const std::exception&) {
                throw ParseError("bad multiplication entry in group file: " + t);
            }
            if (v < 0 || v >= order)
                throw ParseError("multiplication entry out of range in group file");
            g.mult.push_back(v);
        }
    }
    auto tail = read_tokens_line(in, what);
    std::shared_ptr<CharacterTable> chars;
    if (tail.size() == 2 && tail[0] == "characters") {
        int m;
        try {
            m = std::stoi(tail[1]);
        } catch (const std::exception&) {
            throw ParseError("bad character count in group file");
        }
        chars = std::make_shared<CharacterTable>();
        chars->m = m;
        chars->chi.assign(m, std::vector<Cyclotomic>(m));
        long cond = 1;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                std::string sv = read_content_line(in, what);
                chars->chi[i][j] = Cyclotomic::from_string(sv);
                cond = lcm_long(cond, chars->chi[i][j].conductor());
            }
        chars->conductor = cond;
        tail = read_tokens_line(in, what);
    }
    if (tail.size() != 1 || tail[0] != "end")
        throw ParseError("expected 'end' at the close of group file");

    g.identity = find_identity(g.mult, g.order);
    g.inverse = inverses_from_table(g.mult, g.order, g.identity);
    g.validate();
    auto gp = std::make_shared<GroupTable>(std::move(g));
    if (chars) {
        ConjugacyData cd = conjugacy_classes(*gp);
        if (chars->m != cd.m())
            throw ValidationError("character table size does not match class count");
        chars->degrees.resize(chars->m);
        for (int i = 0; i < chars->m; ++i) {
            const Cyclotomic& d = chars->chi[i][0];
            if (!d.is_rational() || !d.rational_value().is_integer() ||
                d.rational_value().sign() <= 0)
                throw ValidationError("character degrees must be positive integers");
            chars->degrees[i] = static_cast<int>(std::stoll(d.rational_value().to_string()));
        }
        chars->validate(*gp, cd);
        gp->file_characters = chars;
    }
    return gp;
}

GroupPtr load_group_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    return load_group_file(in, path);
}

void write_group_file(std::ostream& out, const GroupTable& g) {
    out << "group " << (g.name.empty() ? "unnamed" : g.name) << "\n";
    out << "order " << g.order << "\n";
    ConjugacyData cd = conjugacy_classes(g);
    out << "# identity " << g.identity << "\n";
    for (int a = 0; a < cd.m(); ++a) {
        out << "# class " << (a + 1) << " size " << cd.sizes[a] << " members";
        for (int e : cd.classes[a]) out << " " << e;
        out << "\n";
    }
    out << "mult\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) out << (b ? " " : "") << g.mul(a, b);
        out << "\n";
    }
    try {
        CharacterTable ct = character_table(g, cd);
        out << "characters " << ct.m << "\n";
        for (int i = 0; i < ct.m; ++i)
            for (int j = 0; j < ct.m; ++j) out << ct.chi[i][j].to_string() << "\n";
    } catch (const UnsupportedGroupError&) {
        // no character data available; omit the section
    }
    out << "end\n";
}

// ===========================================================================
// Conjugacy classes
// ===========================================================================

ConjugacyData conjugacy_classes(const GroupTable& g) {
    ConjugacyData cd;
    cd.class_of.assign(g.order, -1);
    std::vector<bool> seen(g.order, false);
    // identity class first; remaining by smallest member (ascending scan).
    std::vector<int> starts;
    starts.push_back(g.identity);
    for (int a = 0; a < g.order; ++a)
        if (a != g.identity) starts.push_back(a);
    for (int a : starts) {
        if (seen[a]) continue;
        std::vector<int> orbit;
        for (int x = 0; x < g.order; ++x) {
            int y = g.mul(g.mul(x, a), g.inv(x));
            if (!seen[y]) {
                seen[y] = true;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        int ci = static_cast<int>(cd.classes.size());
        for (int y : orbit) cd.class_of[y] = ci;
        cd.sizes.push_back(static_cast<int>(orbit.size()));
        cd.classes.push_back(std::move(orbit));
    }
    return cd;
}

// ===========================================================================
// Character tables
// ===========================================================================

void CharacterTable::validate(const GroupTable& g, const ConjugacyData& cd) const {
    if (m != cd.m()) throw ValidationError("character table size does not match class count");
    Cyclotomic order(g.order);
    // row orthogonality
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Cyclotomic s(0);
            for (int a = 0; a < m; ++a)
                s += Cyclotomic(cd.sizes[a]) * chi[u][a] * chi[v][a].conjugate();
            if (s != (u == v ? order : Cyclotomic(0)))
                throw ValidationError("character table fails row orthogonality");
        }
    // column orthogonality
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Cyclotomic s(0);
            for (int u = 0; u < m; ++u) s += chi[u][a] * chi[u][b].conjugate();
            Cyclotomic expect = (a == b)
                ? Cyclotomic(Rational(Int(g.order), Int(cd.sizes[a])))
                : Cyclotomic(0);
            if (s != expect) throw ValidationError("character table fails column orthogonality");
        }
    for (int u = 0; u < m; ++u)
        if (degrees[u] < 1) throw ValidationError("character degree must be positive");
}

namespace {

CharacterTable chartable_cyclic(const GroupTable& g, const ConjugacyData& cd) {
    int k = g.order;
    CharacterTable ct;
    ct.m = k;
    ct.conductor = k;
    ct.chi.assign(k, std::vector<Cyclotomic>(k));
    for (int j = 0; j < k; ++j)
        for (int a = 0; a < k; ++a) {
            int rep = cd.classes[a][0]; // singleton class: the element itself
            ct.chi[j][a] = Cyclotomic::root_of_unity(k, static_cast<long>(j) * rep);
        }
    ct.degrees.assign(k, 1);
    return ct;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    int k = static_cast<int>(perm.size());
    std::vector<bool> seen(k, false);
    std::vector<int> type;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

CharacterTable chartable_symmetric(const GroupTable& g, const ConjugacyData& cd) {
    int k = g.param;
    auto perms = all_permutations(k);
    // character values keyed by cycle type
    std::map<std::vector<int>, std::vector<long long>> values;
    std::vector<int> degs;
    if (k == 1) {
        values[{1}] = {1};
        degs = {1};
    } else if (k == 2) {
        values[{1, 1}] = {1, 1};
        values[{2}] = {1, -1};
        degs = {1, 1};
    } else if (k == 3) {
        values[{1, 1, 1}] = {1, 1, 2};
        values[{2, 1}] = {1, -1, 0};
        values[{3}] = {1, 1, -1};
        degs = {1, 1, 2};
    } else if (k == 4) {
        values[{1, 1, 1, 1}] = {1, 1, 2, 3, 3};
        values[{2, 1, 1}] = {1, -1, 0, 1, -1};
        values[{2, 2}] = {1, 1, 2, -1, -1};
        values[{3, 1}] = {1, 1, -1, 0, 0};
        values[{4}] = {1, -1, 0, -1, 1};
        degs = {1, 1, 2, 3, 3};
    } else {
        throw UnsupportedGroupError("no built-in character table for S" + std::to_string(k));
    }
    CharacterTable ct;
    ct.m = cd.m();
    ct.conductor = 1;
    ct.degrees = degs;
    ct.chi.assign(ct.m, std::vector<Cyclotomic>(ct.m));
    for (int a = 0; a < ct.m; ++a) {
        auto t = cycle_type(perms[static_cast<size_t>(cd.classes[a][0])]);
        const auto& col = values.at(t);
        for (int u = 0; u < ct.m; ++u) ct.chi[u][a] = Cyclotomic(static_cast<long long>(col[u]));
    }
    return ct;
}

CharacterTable chartable_dihedral(const GroupTable& g, const ConjugacyData& cd) {
    int k = g.param;
    if (k > 6) throw UnsupportedGroupError("no built-in character table for D" + std::to_string(k));
    bool even = (k % 2 == 0);
    int two_dims = even ? (k - 2) / 2 : (k - 1) / 2;
    CharacterTable ct;
    ct.m = cd.m();
    ct.conductor = k;
    // element x: rotation r^a when x < k (a = x), reflection s r^a when x >= k
    auto value = [&](int irrep, int x) -> Cyclotomic {
        bool refl = x >= g.param;
        int a = x % g.param;
        int linear = even ? 4 : 2;
        if (irrep < linear) {
            int er = (irrep >= 2) ? -1 : 1;          // sign of chi(r)
            int es = (irrep % 2 == 1) ? -1 : 1;      // sign of chi(s)
            long long v = 1;
            if (er < 0 && (a % 2 == 1)) v = -v;
            if (refl && es < 0) v = -v;
            return Cyclotomic(v);
        }
        int l = irrep - linear + 1;
        if (refl) return Cyclotomic(0);
        return Cyclotomic::root_of_unity(k, static_cast<long>(l) * a) +
               Cyclotomic::root_of_unity(k, -static_cast<long>(l) * a);
    };
    int nirr = (even ? 4 : 2) + two_dims;
    if (nirr != ct.m) throw ValidationError("dihedral class count mismatch");
    ct.chi.assign(ct.m, std::vector<Cyclotomic>(ct.m));
    ct.degrees.assign(ct.m, 1);
    for (int u = 0; u < ct.m; ++u) {
        if (u >= (even ? 4 : 2)) ct.degrees[u] = 2;
        for (int a = 0; a < ct.m; ++a) ct.chi[u][a] = value(u, cd.classes[a][0]);
    }
    return ct;
}

CharacterTable chartable_product(const GroupTable& g, const ConjugacyData& cd) {
    const GroupTable& A = *g.factor_left;
    const GroupTable& B = *g.factor_right;
    ConjugacyData cda = conjugacy_classes(A), cdb = conjugacy_classes(B);
    CharacterTable ta = character_table(A, cda), tb = character_table(B, cdb);
    CharacterTable ct;
    ct.m = cd.m();
    ct.conductor = lcm_long(ta.conductor, tb.conductor);
    if (ta.m * tb.m != ct.m) throw ValidationError("product class count mismatch");
    ct.chi.assign(ct.m, std::vector<Cyclotomic>(ct.m));
    ct.degrees.resize(ct.m);
    for (int ua = 0; ua < ta.m; ++ua)
        for (int ub = 0; ub < tb.m; ++ub) {
            int u = ua * tb.m + ub;
            ct.degrees[u] = ta.degrees[ua] * tb.degrees[ub];
            for (int a = 0; a < ct.m; ++a) {
                int rep = cd.classes[a][0];
                int ra = rep / B.order, rb = rep % B.order;
                ct.chi[u][a] = ta.chi[ua][cda.class_of[ra]] * tb.chi[ub][cdb.class_of[rb]];
            }
        }
    return ct;
}

} // namespace

CharacterTable character_table(const GroupTable& g, const ConjugacyData& cd) {
    CharacterTable ct;
    switch (g.kind) {
        case GroupTable::Kind::Cyclic:
            ct = chartable_cyclic(g, cd);
            break;
        case GroupTable::Kind::Symmetric:
            ct = chartable_symmetric(g, cd);
            break;
        case GroupTable::Kind::Dihedral:
            ct = chartable_dihedral(g, cd);
            break;
        case GroupTable::Kind::Product:
            ct = chartable_product(g, cd);
            break;
        case GroupTable::Kind::File:
            if (!g.file_characters)
                throw UnsupportedGroupError("group file does not supply a character table");
            ct = *g.file_characters;
            break;
    }
    if (ct.degrees.empty()) {
        ct.degrees.resize(ct.m);
        for (int u = 0; u < ct.m; ++u)
            ct.degrees[u] = static_cast<int>(std::stoll(ct.chi[u][0].rational_value().to_string()));
    }
    ct.validate(g, cd);
    return ct;
}

// ===========================================================================
// Spectral data
// ===========================================================================

SpectralData spectral_data(const GroupTable& g, const ConjugacyData& cd,
                           const CharacterTable& ct) {
    (void)g;
    SpectralData sd;
    sd.m = ct.m;
    sd.degrees = ct.degrees;
    sd.conductor = ct.conductor;
    sd.xi.assign(sd.m, std::vector<Cyclotomic>(sd.m));
    for (int u = 0; u < sd.m; ++u) {
        Cyclotomic dinv = Cyclotomic(Rational(Int(1), Int(ct.degrees[u])));
        for (int a = 0; a < sd.m; ++a) sd.xi[u][a] = ct.chi[u][a] * dinv;
    }
    sd.value_sets.resize(sd.m);
    sd.char_poly.resize(sd.m);
    for (int a = 0; a < sd.m; ++a) {
        std::vector<Cyclotomic> S;
        for (int u = 0; u < sd.m; ++u) {
            bool found = false;
            for (const auto& x : S)
                if (x == sd.xi[u][a]) {
                    found = true;
                    break;
                }
            if (!found) S.push_back(sd.xi[u][a]);
        }
        // expand prod (X - xi)
        std::vector<Cyclotomic> poly{Cyclotomic(1)};
        for (const auto& x : S) {
            std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * x;
            }
            poly = std::move(next);
        }
        sd.value_sets[a] = std::move(S);
        sd.char_poly[a] = std::move(poly);
    }
    // identity class invariant: its eigenvalues are all 1
    if (!cd.classes.empty()) {
        if (sd.value_sets[0].size() != 1 || !(sd.value_sets[0][0] == Cyclotomic(1)))
            throw ValidationError("identity class must have eigenvalue set {1}");
    }
    return sd;
}

std::vector<Cyclotomic> SpectralData::factor_coeffs(int alpha, const Cyclotomic& v0) const {
    const auto& a = char_poly[static_cast<size_t>(alpha)];
    size_t k = a.size() - 1;
    // c_i(v) = a_i + a_{i+1} v + ... + a_k v^(k-i), computed top down via
    // c_k = a_k and c_i = a_i + v * c_{i+1}; returned as c_1..c_k.
    std::vector<Cyclotomic> res(k);
    Cyclotomic c = a[k];
    if (k >= 1) res[k - 1] = c;
    for (size_t i = k; i-- > 1;) {
        c = a[i] + v0 * c;
        res[i - 1] = c;
        if (i == 1) break;
    }
    return res;
}

std::vector<Poly> SpectralData::factor_coeff_polys(int alpha) const {
    const auto& a = char_poly[static_cast<size_t>(alpha)];
    size_t k = a.size() - 1;
    std::vector<Poly> res(k);
    Poly v = Poly::variable();
    Poly c = Poly::constant(a[k]);
    if (k >= 1) res[k - 1] = c;
    for (size_t i = k; i-- > 1;) {
        c = Poly::constant(a[i]) + v * c;
        res[i - 1] = c;
        if (i == 1) break;
    }
    return res;
}

// ===========================================================================
// Abelian decompositions
// ===========================================================================

namespace {
void collect_abelian_generators(const GroupPtr& g, int offset_stride,
                                std::vector<int>& elements, std::vector<int>& orders,
                                bool& ok) {
    if (!ok) return;
    switch (g->kind) {
        case GroupTable::Kind::Cyclic:
            if (g->order > 1) {
                elements.push_back(offset_stride * 1);
                orders.push_back(g->order);
            }
            break;
        case GroupTable::Kind::Product: {
            collect_abelian_generators(g->factor_left,
                                       offset_stride * g->factor_right->order, elements,
                                       orders, ok);
            collect_abelian_generators(g->factor_right, offset_stride, elements, orders, ok);
            break;
        }
        default:
            ok = false;
    }
}
} // namespace

std::optional<AbelianGenerators> canonical_abelian_generators(const GroupPtr& g) {
    bool ok = true;
    AbelianGenerators out;
    collect_abelian_generators(g, 1, out.elements, out.orders, ok);
    if (!ok) return std::nullopt;
    return out;
}

bool generators_decompose_group(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<int> orders;
    long long total = 1;
    for (int t : gens) {
        int o = g.element_order(t);
        orders.push_back(o);
        total *= o;
        if (total > g.order) return false;
    }
    if (total != g.order) return false;
    std::vector<bool> seen(g.order, false);
    std::vector<int> exps(gens.size(), 0);
    long long count = 0;
    // enumerate all exponent vectors
    while (true) {
        int x = g.identity;
        for (size_t i = 0; i < gens.size(); ++i) {
            int p = g.identity;
            for (int e = 0; e < exps[i]; ++e) p = g.mul(p, gens[i]);
            x = g.mul(x, p);
        }
        if (seen[x]) return false;
        seen[x] = true;
        ++count;
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exps[i] < orders[i]) break;
            exps[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return count == g.order;
}

} // namespace wrf

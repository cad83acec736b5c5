#include "wreathfuse/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "testkit.hpp"

using namespace wrf;

namespace {

Cyclotomic rat(long long n, long long d = 1) {
    return Cyclotomic(Rational(Int(n), Int(d)));
}

// Independent oracle: all placements of 1..n on the shape's nodes, filtered
// by the standardness conditions.
std::vector<StandardMultiTableau> brute_force_tableaux(const MultiPartition& shape) {
    std::vector<MNode> cells;
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& c = shape.comps[static_cast<size_t>(k - 1)];
        for (int r = 1; r <= static_cast<int>(c.size()); ++r)
            for (int col = 1; col <= c[static_cast<size_t>(r - 1)]; ++col)
                cells.push_back({k, r, col});
    }
    int n = static_cast<int>(cells.size());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<StandardMultiTableau> out;
    do {
        StandardMultiTableau t;
        t.shape = shape;
        t.nodes.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) t.nodes[static_cast<size_t>(perm[static_cast<size_t>(i)])] = cells[static_cast<size_t>(i)];
        try {
            t.validate();
            out.push_back(t);
        } catch (const ValidationError&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::set<std::string> as_strings(const std::vector<StandardMultiTableau>& ts) {
    std::set<std::string> s;
    for (const auto& t : ts) s.insert(t.to_string());
    return s;
}

} // namespace

int main() {
    RUN("multipartition enumeration", {
        CHECK_EQ(multipartitions(1, 3).size(), size_t(3));
        CHECK_EQ(multipartitions(3, 1).size(), size_t(3));
        auto mp22 = multipartitions(2, 2);
        CHECK_EQ(mp22.size(), size_t(5));
        CHECK_EQ(mp22[0].to_string(), "[2],[]");
        CHECK_EQ(mp22[1].to_string(), "[1,1],[]");
        CHECK_EQ(mp22[2].to_string(), "[1],[1]");
        CHECK_EQ(mp22[3].to_string(), "[],[2]");
        CHECK_EQ(mp22[4].to_string(), "[],[1,1]");
        // duplicate-free
        std::set<std::string> seen;
        for (const auto& p : multipartitions(3, 4)) CHECK(seen.insert(p.to_string()).second);
        CHECK_EQ(multipartitions(2, 0).size(), size_t(1));
    });

    RUN("shape parse/print round trip", {
        for (const char* s : {"[2,1],[],[1]", "[1]", "[],[],[]", "[4,4,2],[1],[3,1]"}) {
            MultiPartition p = MultiPartition::parse(s);
            CHECK_EQ(p.to_string(), std::string(s));
        }
        CHECK_THROWS(MultiPartition::parse(""), ParseError);
        CHECK_THROWS(MultiPartition::parse("[2,3]"), ValidationError); // increasing parts
        CHECK_THROWS(MultiPartition::parse("2,1"), ParseError);
    });

    RUN("boundary nodes", {
        MultiPartition p = MultiPartition::parse("[2],[],[1]");
        BoundaryNodes b = boundary_nodes(p);
        CHECK_EQ(b.removable.size(), size_t(2));
        CHECK(b.removable[0] == (MNode{1, 1, 2}));
        CHECK(b.removable[1] == (MNode{3, 1, 1}));
        CHECK_EQ(b.addable.size(), size_t(5));
        CHECK(b.addable[0] == (MNode{1, 1, 3}));
        CHECK(b.addable[1] == (MNode{1, 2, 1}));
        CHECK(b.addable[2] == (MNode{2, 1, 1}));
        CHECK(b.addable[3] == (MNode{3, 1, 2}));
        CHECK(b.addable[4] == (MNode{3, 2, 1}));

        MultiPartition empty3 = MultiPartition::parse("[],[],[]");
        BoundaryNodes be = boundary_nodes(empty3);
        CHECK(be.removable.empty());
        CHECK_EQ(be.addable.size(), size_t(3));
        for (int k = 1; k <= 3; ++k) CHECK(be.addable[static_cast<size_t>(k - 1)] == (MNode{k, 1, 1}));

        MultiPartition row = MultiPartition::parse("[4]");
        BoundaryNodes br = boundary_nodes(row);
        CHECK_EQ(br.removable.size(), size_t(1));
        CHECK(br.removable[0] == (MNode{1, 1, 4}));
        CHECK_EQ(br.addable.size(), size_t(2));
        CHECK(br.addable[0] == (MNode{1, 1, 5}));
        CHECK(br.addable[1] == (MNode{1, 2, 1}));

        // add/remove round trip through every boundary node
        for (const MNode& nd : b.addable) CHECK(with_node_removed(with_node_added(p, nd), nd) == p);
    });

    RUN("standard tableaux enumeration", {
        MultiPartition p = MultiPartition::parse("[2],[],[1]");
        auto ts = standard_tableaux(p);
        CHECK_EQ(ts.size(), size_t(3));
        bool found = false;
        for (const auto& t : ts)
            if (t.to_string() == "1:(1,1,1) 2:(3,1,1) 3:(1,1,2)") found = true;
        CHECK(found);

        auto col = standard_tableaux(MultiPartition::parse("[1,1,1,1]"));
        CHECK_EQ(col.size(), size_t(1));

        auto two = standard_tableaux(MultiPartition::parse("[1],[1]"));
        CHECK_EQ(two.size(), size_t(2));

        auto empty = standard_tableaux(MultiPartition::parse("[],[]"));
        CHECK_EQ(empty.size(), size_t(1));
        CHECK_EQ(empty[0].size(), 0);
    });

    RUN("enumeration matches brute force for m <= 3, n <= 4", {
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 4; ++n)
                for (const auto& shape : multipartitions(m, n)) {
                    auto fast = standard_tableaux(shape);
                    auto slow = brute_force_tableaux(shape);
                    CHECK_MSG(as_strings(fast) == as_strings(slow), shape.to_string());
                    CHECK_EQ(fast.size(), slow.size());
                }
    });

    RUN("tableau parse/print round trip", {
        auto ts = standard_tableaux(MultiPartition::parse("[2,1],[],[1]"));
        for (const auto& t : ts) {
            StandardMultiTableau back = StandardMultiTableau::parse(t.to_string(), 3);
            CHECK(back == t);
        }
        CHECK_THROWS(StandardMultiTableau::parse("1:(1,1,2)", 1), ValidationError);
        CHECK_THROWS(StandardMultiTableau::parse("1:(1,1,1) 2:(1,1,3)", 1), ValidationError);
        CHECK_THROWS(StandardMultiTableau::parse("garbage", 1), ParseError);
        // column-decreasing placement rejected
        CHECK_THROWS(StandardMultiTableau::parse("1:(1,2,1) 2:(1,1,1)", 1), ValidationError);
    });

    RUN("node stats", {
        StandardMultiTableau t = StandardMultiTableau::parse("1:(1,1,1) 2:(3,1,1) 3:(1,1,2)", 3);
        std::vector<int> degrees{1, 1, 2}; // S3 degrees
        NodeStats s1 = node_stats(t, 1, degrees);
        NodeStats s2 = node_stats(t, 2, degrees);
        NodeStats s3 = node_stats(t, 3, degrees);
        CHECK_EQ(s1.content, 0);
        CHECK_EQ(s2.content, 0);
        CHECK_EQ(s3.content, 1);
        CHECK_EQ(s1.component, 1);
        CHECK_EQ(s2.component, 3);
        CHECK_EQ(s3.component, 1);
        CHECK_EQ(s3.g_content, Rational(1));  // 1 / d_1
        CHECK_EQ(s2.g_content, Rational(0));
        // entry 1 of any standard tableau sits at content 0
        for (const auto& shape : multipartitions(2, 3))
            for (const auto& tt : standard_tableaux(shape))
                CHECK_EQ(node_stats(tt, 1, std::vector<int>{1, 1}).content, 0);
    });

    RUN("stats invariant under relabeling of larger entries", {
        // tableaux sharing a prefix agree on all node stats of the prefix
        std::vector<int> degrees{1, 1, 2};
        auto all3 = standard_tableaux_of_size(3, 3);
        for (const auto& a : all3)
            for (const auto& b : all3) {
                if (!(a.restricted(2) == b.restricted(2))) continue;
                for (int i = 1; i <= 2; ++i) {
                    NodeStats sa = node_stats(a, i, degrees);
                    NodeStats sb = node_stats(b, i, degrees);
                    CHECK_EQ(sa.content, sb.content);
                    CHECK_EQ(sa.component, sb.component);
                    CHECK_EQ(sa.g_content, sb.g_content);
                }
            }
    });

    RUN("restriction closure", {
        for (const auto& shape : multipartitions(3, 4))
            for (const auto& t : standard_tableaux(shape))
                for (int j = 0; j <= t.size(); ++j) {
                    StandardMultiTableau r = t.restricted(j);
                    r.validate();
                    CHECK_EQ(r.size(), j);
                }
    });

    RUN("hook products", {
        CHECK_EQ(hook_product(MultiPartition::parse("[2],[],[1]")), Rational(2));
        CHECK_EQ(hook_product(MultiPartition::parse("[1],[],[]")), Rational(1));
        CHECK_EQ(hook_product(MultiPartition::parse("[2,1]")), Rational(3)); // hooks 3,1,1
        CHECK_EQ(hook_product(MultiPartition::parse("[1],[],[1]")), Rational(1));
        CHECK_EQ(hook_product(MultiPartition::parse("[3,2]")), Rational(4 * 3 * 2 * 1 * 1));
    });

    RUN("fg products over S3", {
        auto s3 = build_group("S3");
        auto cd = conjugacy_classes(*s3);
        auto ct = character_table(*s3, cd);
        auto sd = spectral_data(*s3, cd, ct);
        CHECK_EQ(fg_product(MultiPartition::parse("[1],[],[]"), sd), rat(3));
        CHECK_EQ(fg_product(MultiPartition::parse("[1],[],[1]"), sd), rat(9, 2));
        CHECK_EQ(fg_product(MultiPartition::parse("[2],[],[1]"), sd), rat(27, 2));
    });

    RUN("abelian fg product matches the closed form", {
        for (const char* spec : {"C2", "C3", "C2xC2", "C4"}) {
            auto g = build_group(spec);
            auto cd = conjugacy_classes(*g);
            auto ct = character_table(*g, cd);
            auto gens = canonical_abelian_generators(g);
            CHECK(gens.has_value());
            AbelianSpectrum sp = abelian_spectrum(*g, cd, ct, gens->elements);
            for (const auto& shape : multipartitions(g->order, 2)) {
                // closed form: prod over nodes of prod_alpha k_alpha / xi_(p(node))
                Cyclotomic expect(1);
                for (int k = 1; k <= shape.m(); ++k) {
                    int nodes = 0;
                    for (int part : shape.comps[static_cast<size_t>(k - 1)]) nodes += part;
                    for (int i = 0; i < nodes; ++i)
                        for (int a = 0; a < sp.N; ++a)
                            expect *= Cyclotomic(sp.orders[static_cast<size_t>(a)]) /
                                      sp.xi[static_cast<size_t>(k - 1)][static_cast<size_t>(a)];
                }
                CHECK_EQ(fg_product_abelian(shape, sp), expect);
            }
        }
        // abelian mode rejected for non-abelian groups
        auto s3 = build_group("S3");
        auto cd = conjugacy_classes(*s3);
        auto ct = character_table(*s3, cd);
        CHECK_THROWS(abelian_spectrum(*s3, cd, ct, {1}), ValidationError);
    });

    RUN("content function", {
        // single node: (u - 0)/u reduces to 1
        StandardMultiTableau t1 = StandardMultiTableau::parse("1:(1,1,1)", 1);
        CHECK(content_function(t1) == RatFun::constant(rat(1)));
        // row of two in one component: u / (u + 1)
        StandardMultiTableau t2 = StandardMultiTableau::parse("1:(1,1,1) 2:(1,1,2)", 1);
        RatFun f = content_function(t2);
        Poly u = Poly::variable();
        CHECK_EQ(f.num(), u);
        CHECK_EQ(f.den(), u + Poly::constant(rat(1)));
        CHECK_EQ(f.eval(rat(1)), rat(1, 2)); // equals F_(2)^-1 * F_(1)
    });

    RUN("content function evaluation identity (size <= 4, m <= 3)", {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 4; ++n)
                for (const auto& t : standard_tableaux_of_size(m, n)) {
                    RatFun f = content_function(t);
                    std::vector<int> degrees(static_cast<size_t>(m), 1);
                    int cN = node_stats(t, n, degrees).content;
                    Cyclotomic got = f.eval(rat(cN));
                    Rational fl = hook_product(t.shape);
                    Rational fm = hook_product(t.restricted(n - 1).shape);
                    Cyclotomic expect = Cyclotomic(fm) / Cyclotomic(fl);
                    CHECK_MSG(got == expect, t.to_string());
                }
    });

    RUN("position function evaluation identity over S3 (size <= 3)", {
        auto s3 = build_group("S3");
        auto cd = conjugacy_classes(*s3);
        auto ct = character_table(*s3, cd);
        auto sd = spectral_data(*s3, cd, ct);
        for (int n = 1; n <= 3; ++n)
            for (const auto& t : standard_tableaux_of_size(3, n)) {
                int pN = t.nodes.back().comp;
                std::vector<Cyclotomic> v(3);
                for (int a = 0; a < 3; ++a)
                    v[static_cast<size_t>(a)] = sd.xi[static_cast<size_t>(pN - 1)][static_cast<size_t>(a)];
                Cyclotomic got = position_function_eval(t, sd, v);
                Cyclotomic expect = fg_product(t.restricted(n - 1).shape, sd) /
                                    fg_product(t.shape, sd);
                CHECK_MSG(got == expect, t.to_string());
            }
        // genuine pole: v hits an excluded eigenvalue
        StandardMultiTableau t = StandardMultiTableau::parse("1:(1,1,1)", 3);
        // -1 is an excluded eigenvalue for the transposition class (index 1)
        std::vector<Cyclotomic> v{rat(1), rat(-1), rat(1)};
        CHECK_THROWS(position_function_eval(t, sd, v), PoleError);
    });

    return testkit::summary("test_shapes");
}

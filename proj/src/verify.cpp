#include "wreathfuse/verify.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

namespace wrf {

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CheckResult check_idempotent(const AlgebraElement& e, const std::string& label) {
    CheckResult r;
    r.label = "idempotency";
    r.detail = label;
    AlgebraElement sq = e * e;
    if (sq == e) return r;
    r.pass = false;
    std::ostringstream os;
    os << "idempotency-counterexample " << label << "\n"
       << "# replay: deserialize the element and compare its square with itself\n"
       << e.serialize();
    r.counterexample = os.str();
    return r;
}

namespace {

struct Failure {
    bool failed = false;
    std::string what;
    std::string counterexample;
};

// run f over [0, count) (OpenMP when available), collecting the first
// failure per index range in deterministic index order.
template <typename F>
Failure sweep(long long count, F&& f) {
    std::vector<Failure> per(static_cast<size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < count; ++i) {
        try {
            f(static_cast<size_t>(i), per[static_cast<size_t>(i)]);
        } catch (const Error& e) {
            per[static_cast<size_t>(i)].failed = true;
            per[static_cast<size_t>(i)].what = e.what();
        }
    }
    for (auto& p : per)
        if (p.failed) return p;
    return {};
}

CheckResult make_check(const std::string& label, const std::string& detail, const Failure& f) {
    CheckResult r;
    r.label = label;
    r.detail = f.failed && !f.what.empty() ? detail + "; " + f.what : detail;
    r.pass = !f.failed;
    r.counterexample = f.counterexample;
    return r;
}

std::string tableau_tag(const StandardMultiTableau& t) {
    return "shape " + t.shape.to_string() + " tableau " + t.to_string();
}

} // namespace

VerificationReport verify_idempotent_system(const FusionConfig& cfg, Construction c) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    unsigned __int128 est = 1;
    for (int i = 0; i < cfg.n; ++i) est *= static_cast<unsigned>(cfg.group->order);
    for (int i = 2; i <= cfg.n; ++i) est *= static_cast<unsigned>(i);
    if (est > kVerifySizeCap) {
        std::ostringstream os;
        os << "configuration size |G|^n * n! = " << static_cast<unsigned long long>(est)
           << " exceeds the verification cap " << kVerifySizeCap;
        throw CapExceededError(os.str(), static_cast<unsigned long long>(est));
    }

    VerificationReport rep;
    rep.suite = "system";
    {
        std::ostringstream os;
        os << "group=" << cfg.group->name << " n=" << cfg.n << " mode="
           << (cfg.mode == FusionMode::Full ? "full" : "abelian_generators")
           << " construction="
           << (c == Construction::Fusion ? "fusion"
                                         : (c == Construction::JucysMurphy ? "jm" : "both"));
        rep.config = os.str();
    }

    cfg.algebra->ensure_dense_tables();
    auto tableaux = standard_tableaux_of_size(cfg.m(), cfg.n);
    long long count = static_cast<long long>(tableaux.size());

    std::vector<AlgebraElement> primary(tableaux.size());
    std::vector<AlgebraElement> secondary;
    bool use_fusion = c != Construction::JucysMurphy;
    {
        Failure f = sweep(count, [&](size_t i, Failure&) {
            primary[i] = use_fusion ? fusion_idempotent(cfg, tableaux[i])
                                    : jm_idempotent(cfg, tableaux[i]);
        });
        std::ostringstream os;
        os << tableaux.size() << " tableaux";
        rep.checks.push_back(make_check("construction", os.str(), f));
        if (f.failed) {
            rep.elapsed_seconds = std::chrono::duration<double>(clock::now() - t0).count();
            return rep;
        }
    }
    if (c == Construction::Both) {
        secondary.resize(tableaux.size());
        Failure f = sweep(count, [&](size_t i, Failure& out) {
            secondary[i] = jm_idempotent(cfg, tableaux[i]);
            if (!(secondary[i] == primary[i])) {
                out.failed = true;
                out.what = "constructions disagree at " + tableau_tag(tableaux[i]);
                out.counterexample = "construction-disagreement " + tableau_tag(tableaux[i]) +
                                     "\n" + primary[i].serialize() + "\n" +
                                     secondary[i].serialize();
            }
        });
        std::ostringstream os;
        os << tableaux.size() << " tableaux";
        rep.checks.push_back(make_check("construction-agreement", os.str(), f));
    }

    {
        Failure f = sweep(count, [&](size_t i, Failure& out) {
            CheckResult r = check_idempotent(primary[i], tableau_tag(tableaux[i]));
            if (!r.pass) {
                out.failed = true;
                out.what = "not idempotent at " + tableau_tag(tableaux[i]);
                out.counterexample = r.counterexample;
            }
        });
        std::ostringstream os;
        os << tableaux.size() << " tableaux";
        rep.checks.push_back(make_check("idempotency", os.str(), f));
    }

    {
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t i = 0; i < tableaux.size(); ++i)
            for (size_t j = i + 1; j < tableaux.size(); ++j) pairs.push_back({i, j});
        Failure f = sweep(static_cast<long long>(pairs.size()), [&](size_t p, Failure& out) {
            auto [i, j] = pairs[p];
            AlgebraElement prod = primary[i] * primary[j];
            if (!prod.is_zero()) {
                out.failed = true;
                out.what = "nonzero product of " + tableau_tag(tableaux[i]) + " and " +
                           tableau_tag(tableaux[j]);
                out.counterexample = "orthogonality-counterexample\n" + prod.serialize();
            }
        });
        std::ostringstream os;
        os << pairs.size() << " pairs";
        rep.checks.push_back(make_check("pairwise-orthogonality", os.str(), f));
    }

    {
        Failure f;
        AlgebraElement sum = cfg.algebra->zero();
        for (const auto& e : primary) sum += e;
        if (!(sum == cfg.algebra->one())) {
            f.failed = true;
            f.what = "idempotents do not sum to the identity";
            f.counterexample = "completeness-counterexample\n" + sum.serialize();
        }
        std::ostringstream os;
        os << tableaux.size() << " summands";
        rep.checks.push_back(make_check("completeness", os.str(), f));
    }

    {
        Failure f = sweep(count, [&](size_t i, Failure& out) {
            const AlgebraElement& e = primary[i];
            for (int k = 1; k <= cfg.n && !out.failed; ++k) {
                int pos = tableaux[i].nodes[static_cast<size_t>(k - 1)].comp;
                for (int a = 0; a < cfg.m() && !out.failed; ++a) {
                    AlgebraElement gsum = cfg.algebra->class_sum(k, a, cfg.classes);
                    const Cyclotomic& xi =
                        cfg.spectral.xi[static_cast<size_t>(pos - 1)][static_cast<size_t>(a)];
                    AlgebraElement want = e.scaled(xi);
                    if (!(gsum * e == want) || !(e * gsum == want)) {
                        out.failed = true;
                        out.what = "class-sum eigenvalue fails at " + tableau_tag(tableaux[i]);
                        out.counterexample = "eigenvalue-counterexample slot " +
                                             std::to_string(k) + " class " + std::to_string(a + 1) +
                                             "\n" + (gsum * e - want).serialize();
                    }
                }
            }
        });
        std::ostringstream os;
        os << tableaux.size() << " tableaux x " << cfg.n << " slots x " << cfg.m() << " classes";
        rep.checks.push_back(make_check("class-sum-eigenvalues", os.str(), f));
    }

    {
        Failure f = sweep(count, [&](size_t i, Failure& out) {
            const AlgebraElement& e = primary[i];
            for (int k = 1; k <= cfg.n && !out.failed; ++k) {
                AlgebraElement jm = cfg.algebra->jucys_murphy(k);
                NodeStats st = node_stats(tableaux[i], k, cfg.degrees());
                AlgebraElement want = e.scaled(Cyclotomic(st.g_content));
                if (!(jm * e == want) || !(e * jm == want)) {
                    out.failed = true;
                    out.what = "jucys-murphy eigenvalue fails at " + tableau_tag(tableaux[i]);
                    out.counterexample = "eigenvalue-counterexample slot " + std::to_string(k) +
                                         "\n" + (jm * e - want).serialize();
                }
            }
        });
        std::ostringstream os;
        os << tableaux.size() << " tableaux x " << cfg.n << " slots";
        rep.checks.push_back(make_check("jucys-murphy-eigenvalues", os.str(), f));
    }

    rep.elapsed_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return rep;
}

// ===========================================================================
// Relation suite
// ===========================================================================

namespace {

Cyclotomic random_rational_c(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-100, 100);
    std::uniform_int_distribution<long long> den(1, 100);
    return Cyclotomic(Rational(Int(num(rng)), Int(den(rng))));
}

std::vector<Cyclotomic> distinct_rationals(std::mt19937_64& rng, int count) {
    std::vector<Cyclotomic> out;
    while (static_cast<int>(out.size()) < count) {
        Cyclotomic c = random_rational_c(rng);
        bool dup = false;
        for (const auto& x : out)
            if (x == c) dup = true;
        if (!dup) out.push_back(c);
    }
    return out;
}

AlgebraElement class_factor_at(const FusionConfig& cfg, int slot, int a, const Cyclotomic& v0) {
    const AlgebraPtr& alg = cfg.algebra;
    AlgebraElement gsum = alg->class_sum(slot, a, cfg.classes);
    auto coeffs = cfg.spectral.factor_coeffs(a, v0);
    AlgebraElement acc = alg->zero(), p = alg->one();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) p = p * gsum;
        acc += p.scaled(coeffs[i]);
    }
    return acc;
}

} // namespace

VerificationReport verify_relations(const GroupPtr& g, int n, int trials, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    if (n < 2) throw ValidationError("relation suite needs rank n >= 2");
    if (trials < 1) throw ValidationError("relation suite needs trials >= 1");

    FusionConfig cfg = make_fusion_config(g, n);
    const AlgebraPtr& alg = cfg.algebra;
    alg->ensure_dense_tables();

    VerificationReport rep;
    rep.suite = "relations";
    rep.seed = seed;
    {
        std::ostringstream os;
        os << "group=" << g->name << " n=" << n << " trials=" << trials;
        rep.config = os.str();
    }

    auto add = [&](const std::string& label, const std::string& detail, bool ok,
                   const std::string& cex = "") {
        CheckResult r;
        r.label = label;
        r.detail = detail;
        r.pass = ok;
        r.counterexample = cex;
        rep.checks.push_back(std::move(r));
    };

    // defining relations of the transpositions
    {
        bool ok = true;
        for (int i = 1; i <= n - 1; ++i)
            ok = ok && alg->transposition(i) * alg->transposition(i) == alg->one();
        add("transposition-involution", std::to_string(n - 1) + " generators", ok);
        ok = true;
        for (int i = 1; i <= n - 2; ++i) {
            AlgebraElement a = alg->transposition(i), b = alg->transposition(i + 1);
            ok = ok && a * b * a == b * a * b;
        }
        add("braid-relation", std::to_string(std::max(0, n - 2)) + " adjacent pairs", ok);
        ok = true;
        int cnt = 0;
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) {
                ++cnt;
                ok = ok && alg->transposition(i) * alg->transposition(j) ==
                               alg->transposition(j) * alg->transposition(i);
            }
        add("distant-commutation", std::to_string(cnt) + " pairs", ok);
    }

    // transpositions conjugate the pair averages
    {
        bool ok = true;
        auto pk = [](int k, int x) { return x == k ? k + 1 : (x == k + 1 ? k : x); };
        for (int k = 1; k <= n - 1; ++k)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    ok = ok && alg->transposition(k) * alg->pair_average(i, j) ==
                                   alg->pair_average(pk(k, i), pk(k, j)) * alg->transposition(k);
        add("pair-average-conjugation", "all k,i,j", ok);
    }

    // derived pair-average relations
    {
        bool ok = true;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 2; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l)
                        ok = ok && alg->pair_average(i, j) * alg->pair_average(k, l) ==
                                       alg->pair_average(k, l) * alg->pair_average(i, j);
        add("pair-average-disjoint-commutation", "all index tuples", ok);
        ok = true;
        auto pk = [](int kk, int x) { return x == kk ? kk + 1 : (x == kk + 1 ? kk : x); };
        for (int i = 1; i <= n - 1; ++i)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    ok = ok && alg->pair_average(i, i + 1) * alg->pair_average(k, l) ==
                                   alg->pair_average(pk(i, k), pk(i, l)) *
                                       alg->pair_average(i, i + 1);
        add("pair-average-adjacent-exchange", "all index tuples", ok);
        ok = true;
        for (int i = 1; i <= n - 2; ++i)
            ok = ok && alg->pair_average(i, i + 1) * alg->pair_average(i + 1, i + 2) *
                               alg->pair_average(i, i + 1) ==
                           alg->pair_average(i + 1, i + 2) * alg->pair_average(i, i + 1) *
                               alg->pair_average(i + 1, i + 2);
        add("pair-average-braid", std::to_string(std::max(0, n - 2)) + " adjacent triples", ok);
    }

    // Jucys-Murphy family
    {
        std::vector<AlgebraElement> jm;
        jm.push_back(alg->zero());
        for (int k = 1; k <= n; ++k) jm.push_back(alg->jucys_murphy(k));
        bool ok = true;
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) ok = ok && jm[static_cast<size_t>(k)] * jm[static_cast<size_t>(l)] ==
                                                            jm[static_cast<size_t>(l)] * jm[static_cast<size_t>(k)];
        add("jucys-murphy-commutativity", "all pairs", ok);
        ok = true;
        for (int k = 1; k <= n; ++k) {
            for (int i = 1; i <= n - 1; ++i) {
                if (i == k - 1 || i == k) continue;
                ok = ok && alg->transposition(i) * jm[static_cast<size_t>(k)] ==
                               jm[static_cast<size_t>(k)] * alg->transposition(i);
            }
            for (int l = 1; l <= n; ++l)
                for (int ge = 0; ge < g->order; ++ge)
                    ok = ok && alg->slot_element(l, ge) * jm[static_cast<size_t>(k)] ==
                                   jm[static_cast<size_t>(k)] * alg->slot_element(l, ge);
        }
        add("jucys-murphy-locality", "transpositions and colors", ok);
        // chain identity with the top element
        ok = true;
        for (int l = 1; l <= n - 1; ++l) {
            AlgebraElement chain = alg->one();
            for (int i = l; i <= n - 1; ++i) chain = chain * alg->transposition(i);
            AlgebraElement lhs = jm[static_cast<size_t>(l)] * chain;
            AlgebraElement rhs = chain * jm[static_cast<size_t>(n)];
            for (int k = l; k <= n - 1; ++k) {
                AlgebraElement skipped = alg->one();
                for (int i = l; i <= n - 1; ++i)
                    if (i != k) skipped = skipped * alg->transposition(i);
                rhs -= skipped * alg->pair_average(k, n);
            }
            ok = ok && lhs == rhs;
        }
        add("jucys-murphy-chain-identity", "all chain starts", ok);
    }

    // characteristic relation of the class sums
    {
        bool ok = true;
        for (int j = 1; j <= n; ++j)
            for (int a = 0; a < cfg.m(); ++a) {
                AlgebraElement p = alg->one();
                AlgebraElement gsum = alg->class_sum(j, a, cfg.classes);
                for (const auto& xi : cfg.spectral.value_sets[static_cast<size_t>(a)])
                    p = p * (gsum - alg->one().scaled(xi));
                ok = ok && p.is_zero();
            }
        add("class-sum-characteristic", "all slots and classes", ok);
    }

    // seeded spectral-parameter identities
    std::mt19937_64 rng(seed);
    {
        bool ok = true;
        std::string cex;
        for (int t = 0; t < trials && ok; ++t) {
            auto cs = distinct_rationals(rng, 3);
            for (int i = 1; i <= n - 2 && ok; ++i) {
                AlgebraElement lhs = baxterized_s_at(alg, i, cs[0], cs[1]) *
                                     baxterized_s_at(alg, i + 1, cs[0], cs[2]) *
                                     baxterized_s_at(alg, i, cs[1], cs[2]);
                AlgebraElement rhs = baxterized_s_at(alg, i + 1, cs[1], cs[2]) *
                                     baxterized_s_at(alg, i, cs[0], cs[2]) *
                                     baxterized_s_at(alg, i + 1, cs[0], cs[1]);
                if (!(lhs == rhs)) {
                    ok = false;
                    cex = "yang-baxter-counterexample parameters " + cs[0].to_string() + " ; " +
                          cs[1].to_string() + " ; " + cs[2].to_string() + "\n" +
                          (lhs - rhs).serialize();
                }
            }
        }
        add("yang-baxter", std::to_string(trials) + " parameter tuples", ok, cex);
    }
    {
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            auto cs = distinct_rationals(rng, 2);
            for (int i = 1; i <= n - 1 && ok; ++i) {
                AlgebraElement e = alg->pair_average(i, i + 1);
                Cyclotomic d = cs[0] - cs[1];
                ok = baxterized_s_at(alg, i, cs[0], cs[1]) * baxterized_s_at(alg, i, cs[1], cs[0]) ==
                     alg->one() - (e * e).scaled((d * d).inverse());
            }
        }
        add("baxterized-inversion", std::to_string(trials) + " parameter pairs", ok);
        // once more with the active variable kept symbolic
        RatFun u = RatFun::variable();
        Cyclotomic cp = random_rational_c(rng);
        RatAlgebraElement a = baxterized_s(alg, 1, u, cp);
        RatFun inv_diff = RatFun::constant(Cyclotomic(1)) / (RatFun::constant(cp) - u);
        RatAlgebraElement b = RatAlgebraElement(alg->transposition(1)) +
                              RatAlgebraElement(alg->pair_average(1, 2)).scaled(inv_diff);
        RatFun corr = RatFun::constant(Cyclotomic(1)) /
                      ((u - RatFun::constant(cp)) * (u - RatFun::constant(cp)));
        RatAlgebraElement expect =
            RatAlgebraElement(alg->one()) +
            RatAlgebraElement(-(alg->pair_average(1, 2) * alg->pair_average(1, 2))).scaled(corr);
        add("baxterized-inversion-symbolic", "active variable", a * b == expect);
    }
    if (n >= 4) {
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            auto cs = distinct_rationals(rng, 4);
            for (int i = 1; i <= n - 1 && ok; ++i)
                for (int j = i + 2; j <= n - 1 && ok; ++j)
                    ok = baxterized_s_at(alg, i, cs[0], cs[1]) *
                             baxterized_s_at(alg, j, cs[2], cs[3]) ==
                         baxterized_s_at(alg, j, cs[2], cs[3]) *
                             baxterized_s_at(alg, i, cs[0], cs[1]);
        }
        add("baxterized-distant-commutation", std::to_string(trials) + " parameter tuples", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            auto cs = distinct_rationals(rng, 2);
            for (int i = 1; i <= n - 1 && ok; ++i)
                for (int a = 0; a < cfg.m() && ok; ++a) {
                    AlgebraElement gc = class_factor_at(cfg, i, a, cs[0]);
                    AlgebraElement gcp = class_factor_at(cfg, i, a, cs[1]);
                    AlgebraElement s = alg->transposition(i);
                    AlgebraElement sb = baxterized_s_at(alg, i, cs[0], cs[1]);
                    ok = sb * gc * s * gcp == gcp * s * gc * sb;
                }
        }
        add("reflection-identity", std::to_string(trials) + " parameter pairs", ok);
    }

    rep.elapsed_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return rep;
}

// ===========================================================================
// Rendering
// ===========================================================================

void render_report_human(const VerificationReport& r, std::ostream& os) {
    os << "suite " << r.suite << "\n";
    os << "config " << r.config;
    if (r.suite == "relations") os << " seed=" << r.seed;
    os << "\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.label;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        if (!c.pass && !c.counterexample.empty())
            os << "--- counterexample ---\n" << c.counterexample << "\n----------------------\n";
    }
    os << "result " << (r.all_pass() ? "PASS" : "FAIL") << " (" << r.checks.size()
       << " checks)\n";
}

void render_report_structured(const VerificationReport& r, std::ostream& os) {
    os << "wreathfuse-report v1\n";
    os << "suite " << r.suite << "\n";
    os << "config " << r.config << "\n";
    os << "seed " << r.seed << "\n";
    os << "checks " << r.checks.size() << "\n";
    for (const auto& c : r.checks) {
        os << "check " << c.label << " " << (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) os << " # " << c.detail;
        os << "\n";
        if (!c.pass && !c.counterexample.empty()) {
            os << "counterexample-begin\n" << c.counterexample << "\ncounterexample-end\n";
        }
    }
    os << "result " << (r.all_pass() ? "pass" : "fail") << "\n";
}

} // namespace wrf

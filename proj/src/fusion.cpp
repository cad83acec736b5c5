#include "wreathfuse/fusion.hpp"

#include <sstream>

namespace wrf {

FusionConfig make_fusion_config(GroupPtr group, int n, FusionMode mode,
                                const std::vector<int>* subset,
                                const std::vector<int>* abelian_gens) {
    FusionConfig cfg;
    cfg.group = std::move(group);
    cfg.n = n;
    cfg.classes = conjugacy_classes(*cfg.group);
    cfg.chars = character_table(*cfg.group, cfg.classes);
    cfg.spectral = spectral_data(*cfg.group, cfg.classes, cfg.chars);
    cfg.algebra = Algebra::make(cfg.group, n);
    cfg.mode = mode;
    if (subset) {
        cfg.class_subset = *subset;
        for (int a : cfg.class_subset)
            if (a < 0 || a >= cfg.spectral.m)
                throw ValidationError("class subset index out of range");
        // the chosen subset must still separate the irreducibles
        for (int u = 0; u < cfg.spectral.m; ++u)
            for (int v = u + 1; v < cfg.spectral.m; ++v) {
                bool distinct = false;
                for (int a : cfg.class_subset)
                    if (cfg.spectral.xi[static_cast<size_t>(u)][static_cast<size_t>(a)] !=
                        cfg.spectral.xi[static_cast<size_t>(v)][static_cast<size_t>(a)]) {
                        distinct = true;
                        break;
                    }
                if (!distinct)
                    throw ValidationError(
                        "class subset does not distinguish all irreducible representations");
            }
    } else {
        cfg.class_subset.resize(static_cast<size_t>(cfg.spectral.m));
        for (int a = 0; a < cfg.spectral.m; ++a) cfg.class_subset[static_cast<size_t>(a)] = a;
    }
    if (mode == FusionMode::AbelianGenerators) {
        std::vector<int> gens;
        if (abelian_gens) {
            gens = *abelian_gens;
        } else {
            auto canonical = canonical_abelian_generators(cfg.group);
            if (!canonical)
                throw ValidationError(
                    "abelian generator mode needs a built-in abelian decomposition "
                    "or explicit generators");
            gens = canonical->elements;
        }
        cfg.abelian = abelian_spectrum(*cfg.group, cfg.classes, cfg.chars, gens);
    }
    return cfg;
}

RatAlgebraElement baxterized_s(const AlgebraPtr& alg, int i, const RatFun& c,
                               const Cyclotomic& cprime) {
    RatFun diff = c - RatFun::constant(cprime);
    if (diff.is_zero())
        throw PoleError("baxterized transposition with equal spectral parameters",
                        cprime.to_string());
    RatAlgebraElement s(alg->transposition(i));
    RatAlgebraElement e(alg->pair_average(i, i + 1));
    return s + e.scaled(RatFun::constant(Cyclotomic(1)) / diff);
}

AlgebraElement baxterized_s_at(const AlgebraPtr& alg, int i, const Cyclotomic& c,
                               const Cyclotomic& cprime) {
    Cyclotomic diff = c - cprime;
    if (diff.is_zero())
        throw PoleError("baxterized transposition with equal spectral parameters",
                        cprime.to_string());
    return alg->transposition(i) + alg->pair_average(i, i + 1).scaled(diff.inverse());
}

namespace {

// powers of a fixed element combined with scalar coefficients:
// coeffs[0] + coeffs[1] x + ... (coeffs indexed from the constant term)
AlgebraElement polynomial_in(const AlgebraElement& x, const std::vector<Cyclotomic>& coeffs) {
    const AlgebraPtr& alg = x.context();
    AlgebraElement acc = alg->zero();
    AlgebraElement p = alg->one();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) p = p * x;
        acc += p.scaled(coeffs[i]);
    }
    return acc;
}

} // namespace

AlgebraElement spectral_factor(const FusionConfig& cfg, int slot, int position) {
    const AlgebraPtr& alg = cfg.algebra;
    AlgebraElement f = alg->one();
    if (cfg.mode == FusionMode::AbelianGenerators) {
        const AbelianSpectrum& sp = *cfg.abelian;
        for (int a = 0; a < sp.N; ++a) {
            int k = sp.orders[static_cast<size_t>(a)];
            const Cyclotomic& xi =
                sp.xi[static_cast<size_t>(position - 1)][static_cast<size_t>(a)];
            // xi^(k-1) + xi^(k-2) t + ... + t^(k-1)
            std::vector<Cyclotomic> coeffs(static_cast<size_t>(k));
            Cyclotomic p(1);
            for (int j = k - 1; j >= 0; --j) {
                coeffs[static_cast<size_t>(j)] = p;
                p *= xi;
            }
            f = f * polynomial_in(alg->slot_element(slot, sp.generators[static_cast<size_t>(a)]),
                                  coeffs);
        }
        return f;
    }
    for (int a : cfg.class_subset) {
        if (cfg.spectral.value_sets[static_cast<size_t>(a)].size() <= 1)
            continue; // constant factor 1 (the identity class in particular)
        const Cyclotomic& xi =
            cfg.spectral.xi[static_cast<size_t>(position - 1)][static_cast<size_t>(a)];
        std::vector<Cyclotomic> coeffs = cfg.spectral.factor_coeffs(a, xi);
        f = f * polynomial_in(alg->class_sum(slot, a, cfg.classes), coeffs);
    }
    return f;
}

AlgebraElement gamma_eval(const FusionConfig& cfg, const StandardMultiTableau& t) {
    if (t.size() > cfg.n) throw ValidationError("tableau larger than the algebra rank");
    AlgebraElement f = cfg.algebra->one();
    for (int i = 1; i <= t.size(); ++i)
        f = f * spectral_factor(cfg, i, t.nodes[static_cast<size_t>(i - 1)].comp);
    return f;
}

Cyclotomic fg_coefficient(const FusionConfig& cfg, const MultiPartition& shape) {
    if (cfg.mode == FusionMode::AbelianGenerators)
        return fg_product_abelian(shape, *cfg.abelian);
    return fg_product(shape, cfg.spectral, &cfg.class_subset);
}

AlgebraElement fusion_idempotent(const FusionConfig& cfg, const StandardMultiTableau& t) {
    t.validate();
    if (t.size() != cfg.n)
        throw ValidationError("fusion idempotent needs a tableau of the full rank");
    if (t.shape.m() != cfg.m())
        throw ValidationError("tableau component count must match the class count");
    const AlgebraPtr& alg = cfg.algebra;
    int n = cfg.n;
    if (n == 0) return alg->one();

    std::vector<Cyclotomic> g_content(static_cast<size_t>(n));
    std::vector<int> position(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        NodeStats st = node_stats(t, i, cfg.degrees());
        g_content[static_cast<size_t>(i - 1)] = Cyclotomic(st.g_content);
        position[static_cast<size_t>(i - 1)] = st.component;
    }

    AlgebraElement acc = spectral_factor(cfg, 1, position[0]);
    RatFun u = RatFun::variable();
    for (int k = 2; k <= n; ++k) {
        // chain factor s_{k-1}(u, cG_{k-1}) ... s_1(u, cG_1) * s_1 ... s_{k-1}
        RatAlgebraElement step = baxterized_s(alg, k - 1, u, g_content[static_cast<size_t>(k - 2)]);
        for (int j = k - 2; j >= 1; --j)
            step = step * baxterized_s(alg, j, u, g_content[static_cast<size_t>(j - 1)]);
        AlgebraElement word = alg->one();
        for (int j = 1; j <= k - 1; ++j) word = word * alg->transposition(j);
        step = step * RatAlgebraElement(word * spectral_factor(cfg, k, position[static_cast<size_t>(k - 1)]));
        // multiply into the accumulator and evaluate the active variable
        step = step * RatAlgebraElement(acc);
        acc = step.evaluated(g_content[static_cast<size_t>(k - 1)], k);
    }

    Cyclotomic norm = fg_coefficient(cfg, t.shape) * Cyclotomic(hook_product(t.shape));
    return acc.scaled(norm.inverse());
}

AlgebraElement jm_idempotent(const FusionConfig& cfg, const StandardMultiTableau& t) {
    t.validate();
    if (t.size() != cfg.n)
        throw ValidationError("idempotent needs a tableau of the full rank");
    if (t.shape.m() != cfg.m())
        throw ValidationError("tableau component count must match the class count");
    const AlgebraPtr& alg = cfg.algebra;
    const SpectralData& sd = cfg.spectral;
    AlgebraElement e = alg->one();
    MultiPartition mu(std::vector<std::vector<int>>(static_cast<size_t>(t.shape.m())));
    for (int j = 1; j <= cfg.n; ++j) {
        const MNode& node = t.nodes[static_cast<size_t>(j - 1)];
        int pj = node.comp;
        Rational cgj(Int(node.col - node.row),
                     Int(cfg.spectral.degrees[static_cast<size_t>(pj - 1)]));
        BoundaryNodes b = boundary_nodes(mu);
        AlgebraElement jm = alg->jucys_murphy(j);
        for (const MNode& kappa : b.addable) {
            Rational cgk(Int(kappa.col - kappa.row),
                         Int(sd.degrees[static_cast<size_t>(kappa.comp - 1)]));
            if (cgk == cgj) continue;
            Cyclotomic denom = Cyclotomic(cgj) - Cyclotomic(cgk);
            e = e * (jm - alg->one().scaled(Cyclotomic(cgk))).scaled(denom.inverse());
        }
        for (int a : cfg.class_subset) {
            const Cyclotomic& mine = sd.xi[static_cast<size_t>(pj - 1)][static_cast<size_t>(a)];
            AlgebraElement gsum = alg->class_sum(j, a, cfg.classes);
            for (const MNode& kappa : b.addable) {
                const Cyclotomic& theirs =
                    sd.xi[static_cast<size_t>(kappa.comp - 1)][static_cast<size_t>(a)];
                if (theirs == mine) continue;
                Cyclotomic denom = mine - theirs;
                e = e * (gsum - alg->one().scaled(theirs)).scaled(denom.inverse());
            }
        }
        mu = with_node_added(mu, node);
    }
    return e;
}

} // namespace wrf

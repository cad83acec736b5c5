#include "wreathfuse/algebra.hpp"

#include "wreathfuse/algebra_kernels.hpp"
#include "testkit.hpp"

using namespace wrf;

namespace {

Cyclotomic rat(long long n, long long d = 1) {
    return Cyclotomic(Rational(Int(n), Int(d)));
}

AlgebraElement random_element(std::mt19937_64& rng, const AlgebraPtr& alg, int nterms,
                              long conductor = 1) {
    std::uniform_int_distribution<std::uint64_t> code(0, alg->order() - 1);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 12);
    AlgebraElement::Terms t;
    for (int i = 0; i < nterms; ++i) {
        std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(conductor)));
        for (auto& c : coeffs) c = Rational(Int(num(rng)), Int(den(rng)));
        t[code(rng)] = Cyclotomic::from_coeffs(conductor, std::move(coeffs));
    }
    return AlgebraElement(alg, std::move(t));
}

// product s_l s_{l+1} ... s_{n-1} with s_k omitted when skip == k
AlgebraElement s_chain(const AlgebraPtr& alg, int l, int skip = 0) {
    AlgebraElement r = alg->one();
    for (int i = l; i <= alg->n() - 1; ++i) {
        if (i == skip) continue;
        r = r * alg->transposition(i);
    }
    return r;
}

} // namespace

int main() {
    RUN("wreath element multiplication", {
        auto s3 = build_group("S3");
        auto alg = Algebra::make(s3, 3);
        // colorless case is the symmetric group
        AlgebraElement s1 = alg->transposition(1), s2 = alg->transposition(2);
        CHECK_EQ(s1 * s1, alg->one());
        CHECK_EQ(s2 * s2, alg->one());
        CHECK_EQ(s1 * s2 * s1, s2 * s1 * s2);
        // componentwise color product
        for (int g = 0; g < 6; ++g)
            for (int h = 0; h < 6; ++h)
                CHECK_EQ(alg->slot_element(2, g) * alg->slot_element(2, h),
                         alg->slot_element(2, s3->mul(g, h)));
        // colors in distinct slots commute
        CHECK_EQ(alg->slot_element(1, 3) * alg->slot_element(2, 4),
                 alg->slot_element(2, 4) * alg->slot_element(1, 3));
        // x * x^-1 = identity on random wreath elements
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<std::uint64_t> code(0, alg->order() - 1);
        for (int t = 0; t < 20; ++t) {
            WreathElement x = alg->decode(code(rng));
            CHECK(alg->we_mul(x, alg->we_inv(x)) == alg->identity_element());
        }
        // encode/decode round trip over the whole index space of a small algebra
        auto small = Algebra::make(build_group("C2"), 2);
        for (std::uint64_t c = 0; c < small->order(); ++c)
            CHECK_EQ(small->encode(small->decode(c)), c);
        // size mismatch
        auto alg2 = Algebra::make(s3, 2);
        CHECK_THROWS(alg->we_mul(alg->identity_element(), alg2->identity_element()),
                     ValidationError);
        CHECK_THROWS(alg->one() + alg2->one(), ValidationError);
    });

    RUN("ring operations", {
        auto c2 = build_group("C2");
        auto alg = Algebra::make(c2, 2);
        // basis products are group products
        std::uniform_int_distribution<std::uint64_t> code(0, alg->order() - 1);
        std::mt19937_64 rng(2);
        for (int t = 0; t < 16; ++t) {
            WreathElement x = alg->decode(code(rng)), y = alg->decode(code(rng));
            CHECK_EQ(alg->basis(x) * alg->basis(y), alg->basis(alg->we_mul(x, y)));
        }
        // randomized distributivity
        for (int t = 0; t < 10; ++t) {
            AlgebraElement a = random_element(rng, alg, 4);
            AlgebraElement b = random_element(rng, alg, 4);
            AlgebraElement c = random_element(rng, alg, 4);
            CHECK_EQ(a * (b + c), a * b + a * c);
            CHECK_EQ((a + b) * c, a * c + b * c);
        }
        CHECK(alg->zero().is_zero());
        CHECK_EQ(alg->one().scaled(rat(0)), alg->zero());
    });

    RUN("distinguished elements", {
        auto c2 = build_group("C2");
        auto alg = Algebra::make(c2, 3);
        CHECK_EQ(alg->pair_average(2, 2), alg->one());
        // e_{1,2} over C2: (1/2)(1 + t1 t2)
        AlgebraElement t1t2 = alg->slot_element(1, 1) * alg->slot_element(2, 1);
        AlgebraElement expect = (alg->one() + t1t2).scaled(rat(1, 2));
        CHECK_EQ(alg->pair_average(1, 2), expect);
        CHECK_EQ(alg->pair_average(1, 2), alg->pair_average(2, 1));
        CHECK_THROWS(alg->transposition(3), ValidationError);
        CHECK_THROWS(alg->slot_element(4, 0), ValidationError);
        CHECK_THROWS(alg->pair_average(0, 1), ValidationError);
    });

    RUN("transpositions conjugate pair averages", {
        for (const char* spec : {"C2", "S3"}) {
            auto g = build_group(spec);
            auto alg = Algebra::make(g, 3);
            auto pk = [&](int k, int i) { // transposition pi_k applied to slot i
                if (i == k) return k + 1;
                if (i == k + 1) return k;
                return i;
            };
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        CHECK_EQ(alg->transposition(k) * alg->pair_average(i, j),
                                 alg->pair_average(pk(k, i), pk(k, j)) * alg->transposition(k));
        }
    });

    RUN("pair average relations", {
        for (const char* spec : {"C2", "C3", "S3"}) {
            auto g = build_group(spec);
            for (int n : {3, 4}) {
                auto alg = Algebra::make(g, n);
                // disjoint pairs commute
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = j + 2; k <= n; ++k)
                            for (int l = k + 1; l <= n; ++l)
                                CHECK_EQ(alg->pair_average(i, j) * alg->pair_average(k, l),
                                         alg->pair_average(k, l) * alg->pair_average(i, j));
                // adjacent average exchanges indices
                auto pk = [&](int kk, int x) {
                    if (x == kk) return kk + 1;
                    if (x == kk + 1) return kk;
                    return x;
                };
                for (int i = 1; i <= n - 1; ++i)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l)
                            CHECK_EQ(alg->pair_average(i, i + 1) * alg->pair_average(k, l),
                                     alg->pair_average(pk(i, k), pk(i, l)) *
                                         alg->pair_average(i, i + 1));
                // braid-type relation
                for (int i = 1; i <= n - 2; ++i)
                    CHECK_EQ(alg->pair_average(i, i + 1) * alg->pair_average(i + 1, i + 2) *
                                 alg->pair_average(i, i + 1),
                             alg->pair_average(i + 1, i + 2) * alg->pair_average(i, i + 1) *
                                 alg->pair_average(i + 1, i + 2));
            }
        }
    });

    RUN("jucys-murphy elements", {
        auto c2 = build_group("C2");
        auto alg = Algebra::make(c2, 3);
        CHECK(alg->jucys_murphy(1).is_zero());
        CHECK_EQ(alg->jucys_murphy(2), alg->pair_average(1, 2) * alg->transposition(1));
        CHECK_EQ(alg->jucys_murphy(2) * alg->jucys_murphy(3),
                 alg->jucys_murphy(3) * alg->jucys_murphy(2));
        CHECK_THROWS(alg->jucys_murphy(4), ValidationError);
        // commutation with transpositions away from the index, and with all colors
        auto s3 = build_group("S3");
        auto a3 = Algebra::make(s3, 3);
        for (int k = 1; k <= 3; ++k) {
            AlgebraElement jm = a3->jucys_murphy(k);
            for (int i = 1; i <= 2; ++i) {
                if (i == k - 1 || i == k) continue;
                CHECK_EQ(a3->transposition(i) * jm, jm * a3->transposition(i));
            }
            for (int l = 1; l <= 3; ++l)
                for (int g = 0; g < 6; ++g)
                    CHECK_EQ(a3->slot_element(l, g) * jm, jm * a3->slot_element(l, g));
        }
    });

    RUN("jucys-murphy chain identity", {
        for (const char* spec : {"C2", "S3"}) {
            auto g = build_group(spec);
            for (int n : {3, 4}) {
                auto alg = Algebra::make(g, n);
                for (int l = 1; l <= n - 1; ++l) {
                    AlgebraElement lhs = alg->jucys_murphy(l) * s_chain(alg, l);
                    AlgebraElement rhs = s_chain(alg, l) * alg->jucys_murphy(n);
                    for (int k = l; k <= n - 1; ++k)
                        rhs -= s_chain(alg, l, k) * alg->pair_average(k, n);
                    CHECK_MSG(lhs == rhs, spec << " n=" << n << " l=" << l);
                }
            }
        }
    });

    RUN("class sums satisfy their characteristic relation", {
        for (const char* spec : {"C2", "C3", "C4", "C2xC2", "S3", "D4"}) {
            auto g = build_group(spec);
            auto cd = conjugacy_classes(*g);
            auto ct = character_table(*g, cd);
            auto sd = spectral_data(*g, cd, ct);
            auto alg = Algebra::make(g, 2);
            for (int j = 1; j <= 2; ++j)
                for (int a = 0; a < cd.m(); ++a) {
                    AlgebraElement p = alg->one();
                    AlgebraElement gsum = alg->class_sum(j, a, cd);
                    for (const auto& xi : sd.value_sets[static_cast<size_t>(a)])
                        p = p * (gsum - alg->one().scaled(xi));
                    CHECK_MSG(p.is_zero(), spec << " slot " << j << " class " << a);
                }
        }
    });

    RUN("kernel equivalence: reference vs dense-cleared", {
        std::mt19937_64 rng(77);
        for (const char* spec : {"C2", "C3", "S3"}) {
            auto g = build_group(spec);
            long cond = (std::string(spec) == "C3") ? 3 : 1;
            for (int n : {1, 2, 3}) {
                auto alg = Algebra::make(g, n);
                if (!alg->dense_supported()) continue;
                for (int t = 0; t < 4; ++t) {
                    AlgebraElement a = random_element(rng, alg, 12, cond);
                    AlgebraElement b = random_element(rng, alg, 12, cond);
                    auto ref = kernels::mul_reference(*alg, a.terms(), b.terms());
                    auto fast = kernels::mul_dense_cleared(*alg, a.terms(), b.terms());
                    CHECK_EQ(AlgebraElement(alg, std::move(ref)),
                             AlgebraElement(alg, std::move(fast)));
                }
            }
        }
        // huge coefficients exercise the arbitrary-precision path
        auto alg = Algebra::make(build_group("C2"), 2);
        Int big = pow_int(Int(7), 40);
        AlgebraElement::Terms t1, t2;
        t1[0] = Cyclotomic(Rational(big, Int(3)));
        t1[3] = Cyclotomic(Rational(Int(1), big));
        t2[1] = Cyclotomic(Rational(big * big, Int(5)));
        t2[2] = Cyclotomic(Rational(Int(2), big));
        AlgebraElement x(alg, std::move(t1)), y(alg, std::move(t2));
        auto ref = kernels::mul_reference(*alg, x.terms(), y.terms());
        auto fast = kernels::mul_dense_cleared(*alg, x.terms(), y.terms());
        CHECK_EQ(AlgebraElement(alg, std::move(ref)), AlgebraElement(alg, std::move(fast)));
    });

    RUN("element serialization", {
        std::mt19937_64 rng(5);
        auto alg = Algebra::make(build_group("C3"), 2);
        for (int t = 0; t < 6; ++t) {
            AlgebraElement a = random_element(rng, alg, 5, 3);
            AlgebraElement back = AlgebraElement::deserialize(alg, a.serialize());
            CHECK_EQ(back, a);
            // deterministic: serialize twice, byte-identical
            CHECK_EQ(a.serialize(), a.serialize());
        }
        CHECK_EQ(alg->one().pretty(), std::string("1"));
        auto wrong = Algebra::make(build_group("C3"), 3);
        CHECK_THROWS(AlgebraElement::deserialize(wrong, alg->one().serialize()),
                     ValidationError);
        CHECK_THROWS(AlgebraElement::deserialize(alg, "garbage"), ParseError);
    });

    RUN("rational-coefficient elements", {
        auto s3 = build_group("S3");
        auto alg = Algebra::make(s3, 2);
        RatFun u = RatFun::variable();
        // (s_1 + e_{1,2}/u) * (s_1 - e_{1,2}/u) has only rational-function coefficients
        RatAlgebraElement s1(alg->transposition(1));
        RatAlgebraElement e12(alg->pair_average(1, 2));
        RatAlgebraElement a = s1 + e12.scaled(RatFun(Poly::constant(Cyclotomic(1)), Poly::variable()));
        AlgebraElement at2 = a.evaluated(rat(2));
        CHECK_EQ(at2, alg->transposition(1) + alg->pair_average(1, 2).scaled(rat(1, 2)));
        // evaluating at the pole of a surviving coefficient names the step
        bool caught = false;
        try {
            a.evaluated(rat(0), 7);
        } catch (const PoleError& e) {
            caught = true;
            CHECK_EQ(e.step, 7);
        }
        CHECK(caught);
        // a cancelling combination evaluates fine at the former pole
        RatAlgebraElement b = a + e12.scaled(RatFun(-Poly::constant(Cyclotomic(1)), Poly::variable()));
        CHECK_EQ(b.evaluated(rat(0)), alg->transposition(1));
    });

    return testkit::summary("test_algebra");
}

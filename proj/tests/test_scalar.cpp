#include "wreathfuse/scalar.hpp"

#include "testkit.hpp"

using namespace wrf;

namespace {

Cyclotomic rat(long long n, long long d = 1) {
    return Cyclotomic(Rational(Int(n), Int(d)));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, long N) {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 9);
    std::vector<Rational> c(static_cast<size_t>(euler_phi(N)));
    for (auto& x : c) x = Rational(Int(num(rng)), Int(den(rng)));
    return Cyclotomic::from_coeffs(N, std::move(c));
}

Poly random_poly(std::mt19937_64& rng, long N, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    int d = deg(rng);
    std::vector<Cyclotomic> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_cyclotomic(rng, N));
    return Poly(std::move(c));
}

} // namespace

int main() {
    RUN("int arithmetic and promotion", {
        Int a = 123456789, b = -987654321;
        CHECK_EQ((a * b).to_string(), "-121932631112635269");
        // force a spill past 64 bits and back
        Int big = pow_int(Int(10), 25);
        CHECK(!big.fits_small());
        CHECK_EQ(big.to_string(), "10000000000000000000000000");
        Int back = divexact(big, pow_int(Int(10), 20));
        CHECK(back.fits_small());
        CHECK_EQ(back, Int(100000));
        CHECK_EQ(gcd(Int(24), Int(-36)), Int(12));
        CHECK_EQ(lcm(Int(4), Int(6)), Int(12));
        CHECK_EQ(Int::from_string("-42").to_string(), "-42");
        CHECK_THROWS(Int::from_string("4x2"), ParseError);
        // 100!/98! = 9900 exercises big intermediate values
        Int fact100 = 1, fact98 = 1;
        for (int i = 2; i <= 100; ++i) fact100 *= Int(i);
        for (int i = 2; i <= 98; ++i) fact98 *= Int(i);
        CHECK_EQ(divexact(fact100, fact98), Int(9900));
        Rational r(fact100, fact98);
        CHECK_EQ(r, Rational(9900));
    });

    RUN("rational canonical form", {
        Rational r(Int(6), Int(-8));
        CHECK_EQ(r.num(), Int(-3));
        CHECK_EQ(r.den(), Int(4));
        CHECK_EQ(Rational(Int(0), Int(7)).den(), Int(1));
        CHECK_THROWS(Rational(Int(1), Int(0)), DivideByZeroError);
        CHECK_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
        CHECK_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
        CHECK_EQ(Rational(1, 2).inverse(), Rational(2));
        CHECK_THROWS(Rational(0).inverse(), DivideByZeroError);
        CHECK_EQ(Rational::from_string("-3/2").to_string(), "-3/2");
        CHECK_EQ(Rational::from_string("7").to_string(), "7");
    });

    RUN("make_scalar constructors", {
        CHECK_EQ(make_ratio(1, 2), rat(1, 2));
        CHECK_THROWS(make_ratio(1, 0), DivideByZeroError);
        CHECK_EQ(make_root_of_unity(4, 2), rat(-1)); // zeta_4^2 = -1
        CHECK_EQ(make_root_of_unity(1, 0), rat(1));
        CHECK_THROWS(make_root_of_unity(0, 1), ValidationError);
        CHECK_EQ(make_integer(Int(-5)), rat(-5));
    });

    RUN("cyclotomic arithmetic", {
        Cyclotomic z3 = make_root_of_unity(3, 1);
        CHECK((rat(1) + z3 + z3 * z3).is_zero()); // 1 + z + z^2 = 0 at N=3
        // zeta_6^2 = zeta_6 - 1:  x^2 mod (x^2 - x + 1)
        Cyclotomic z6 = make_root_of_unity(6, 1);
        CHECK_EQ(z6 * z6, z6 - rat(1));
        CHECK_EQ(rat(1, 2).inverse(), rat(2));
        CHECK_EQ(z3.inverse(), make_root_of_unity(3, 2));
        CHECK_THROWS(rat(0).inverse(), DivideByZeroError);
        // cross-conductor equality: zeta_6 equals 1 + zeta_3
        CHECK_EQ(z6, rat(1) + z3);
        CHECK(z6.promoted(12) == z6);
        CHECK_EQ((z3 * z3 * z3), rat(1));
    });

    RUN("conjugation", {
        Cyclotomic z3 = make_root_of_unity(3, 1);
        CHECK_EQ(z3.conjugate(), make_root_of_unity(3, 2));
        CHECK_EQ(rat(1, 2).conjugate(), rat(1, 2));
        Cyclotomic z8 = make_root_of_unity(8, 1);
        Cyclotomic real = z8 + z8.inverse();
        CHECK_EQ(real.conjugate(), real);
        std::mt19937_64 rng(7);
        for (long N : {1L, 3L, 4L, 6L, 12L}) {
            for (int t = 0; t < 8; ++t) {
                Cyclotomic a = random_cyclotomic(rng, N);
                CHECK_EQ(a.conjugate().conjugate(), a);
            }
        }
    });

    RUN("field axioms at conductors 1,3,4,6,12", {
        std::mt19937_64 rng(42);
        for (long N : {1L, 3L, 4L, 6L, 12L}) {
            for (int t = 0; t < 10; ++t) {
                Cyclotomic a = random_cyclotomic(rng, N);
                Cyclotomic b = random_cyclotomic(rng, N);
                Cyclotomic c = random_cyclotomic(rng, N);
                CHECK_EQ((a + b) + c, a + (b + c));
                CHECK_EQ((a * b) * c, a * (b * c));
                CHECK_EQ(a * (b + c), a * b + a * c);
                CHECK_EQ(a + b, b + a);
                CHECK_EQ(a * b, b * a);
                CHECK_EQ(a - a, rat(0));
                if (!a.is_zero()) CHECK_EQ(a * a.inverse(), rat(1));
            }
        }
    });

    RUN("promotion round trip", {
        std::mt19937_64 rng(11);
        for (auto [n, m] : std::vector<std::pair<long, long>>{{1, 4}, {3, 6}, {3, 12}, {4, 12}, {6, 12}}) {
            for (int t = 0; t < 6; ++t) {
                Cyclotomic a = random_cyclotomic(rng, n);
                Cyclotomic up = a.promoted(m);
                auto back = up.demoted(n);
                CHECK(back.has_value());
                CHECK_EQ(*back, a);
            }
        }
        // zeta_4 does not live in Q(zeta_2) or Q
        Cyclotomic z4 = make_root_of_unity(4, 1);
        CHECK(!z4.demoted(1).has_value());
        CHECK(!z4.demoted(2).has_value());
    });

    RUN("canonical-form idempotence", {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 10; ++t) {
            Cyclotomic a = random_cyclotomic(rng, 12);
            // re-running construction on the exposed pieces is a no-op
            CHECK_EQ(Cyclotomic::from_coeffs(a.conductor(), a.coeffs()), a);
            Poly p = random_poly(rng, 3, 4);
            CHECK_EQ(Poly(p.coeffs()), p);
            Poly q = random_poly(rng, 3, 3);
            if (q.is_zero()) continue;
            RatFun f(p, q);
            CHECK_EQ(ratfun_reduce(f), f);
        }
    });

    RUN("scalar serialization round trip", {
        std::mt19937_64 rng(5);
        for (long N : {1L, 3L, 4L, 12L}) {
            for (int t = 0; t < 10; ++t) {
                Cyclotomic a = random_cyclotomic(rng, N);
                CHECK_EQ(Cyclotomic::from_string(a.to_string()), a);
            }
        }
        CHECK_EQ(Cyclotomic::from_string("1/2"), rat(1, 2));
        CHECK_EQ(Cyclotomic::from_string("-3"), rat(-3));
        Cyclotomic z12 = make_root_of_unity(12, 7);
        CHECK_EQ(Cyclotomic::from_string(z12.to_string()), z12);
        CHECK_THROWS(Cyclotomic::from_string("1 + junk"), ParseError);
    });

    RUN("poly arithmetic and gcd property", {
        Poly x = Poly::variable();
        Poly p = x * x - Poly::constant(rat(1)); // u^2 - 1
        auto [q, r] = Poly::divrem(p, x - Poly::constant(rat(1)));
        CHECK(r.is_zero());
        CHECK_EQ(q, x + Poly::constant(rat(1)));
        CHECK_EQ(p.eval(rat(3)), rat(8));

        std::mt19937_64 rng(9);
        for (int t = 0; t < 12; ++t) {
            Poly a = random_poly(rng, 3, 4);
            Poly b = random_poly(rng, 3, 4);
            if (a.is_zero() || b.is_zero()) continue;
            Poly g = poly_gcd(a, b);
            CHECK(Poly::divrem(a, g).second.is_zero());
            CHECK(Poly::divrem(b, g).second.is_zero());
            Poly ca = Poly::divrem(a, g).first;
            Poly cb = Poly::divrem(b, g).first;
            CHECK_EQ(poly_gcd(ca, cb).degree(), 0);
            // common factor really shows up
            Poly f = x - Poly::constant(rat(2));
            CHECK(Poly::divrem(poly_gcd(a * f, b * f), f).second.is_zero());
        }
    });

    RUN("rational function reduce/eval", {
        Poly x = Poly::variable();
        Poly one = Poly::constant(rat(1));
        RatFun f(x * x - one, x - one); // (u^2-1)/(u-1) -> u+1
        CHECK_EQ(f.num(), x + one);
        CHECK_EQ(f.den(), one);
        CHECK_EQ(f.eval(rat(1)), rat(2));

        RatFun pole(one, x - one);
        bool caught = false;
        try {
            pole.eval(rat(1));
        } catch (const PoleError& e) {
            caught = true;
            CHECK_EQ(e.at, std::string("1"));
        }
        CHECK(caught);
        CHECK_EQ(pole.eval(rat(3)), rat(1, 2));

        // denominator normalized monic
        RatFun g(one, Poly::constant(rat(2)) * x);
        CHECK_EQ(g.den(), x);
        CHECK_EQ(g.num(), Poly::constant(rat(1, 2)));

        RatFun h = RatFun::variable() * RatFun::variable() - RatFun::constant(rat(4));
        CHECK_EQ((h / (RatFun::variable() - RatFun::constant(rat(2)))).eval(rat(2)), rat(4));
    });

    RUN("cyclotomic polynomial table", {
        auto& p1 = cyclotomic_polynomial(1); // x - 1
        CHECK_EQ(p1.size(), size_t(2));
        CHECK_EQ(p1[0], Int(-1));
        auto& p6 = cyclotomic_polynomial(6); // x^2 - x + 1
        CHECK_EQ(p6.size(), size_t(3));
        CHECK_EQ(p6[0], Int(1));
        CHECK_EQ(p6[1], Int(-1));
        CHECK_EQ(p6[2], Int(1));
        auto& p12 = cyclotomic_polynomial(12); // x^4 - x^2 + 1
        CHECK_EQ(p12.size(), size_t(5));
        CHECK_EQ(p12[2], Int(-1));
        CHECK_EQ(euler_phi(12), 4L);
    });

    return testkit::summary("test_scalar");
}

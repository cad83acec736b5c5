#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wreathfuse/errors.hpp"

namespace wrf {

// ---------------------------------------------------------------------------
// Int: arbitrary-precision integer with an int64 fast path.
//
// Values that fit in a signed 64-bit word are kept inline; anything larger
// spills into a heap mpz. All arithmetic is overflow-checked on the fast
// path and results are demoted back to the inline form whenever they fit,
// so the representation is canonical: big_ is engaged iff the value does
// not fit in int64.
// ---------------------------------------------------------------------------
class Int {
public:
    Int() noexcept = default;
    Int(long long v) noexcept : v_(v) {}
    Int(int v) noexcept : v_(v) {}
    explicit Int(const mpz_class& z);

    Int(const Int& o);
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o);
    Int& operator=(Int&&) noexcept = default;

    bool fits_small() const { return !big_; }
    long long small_value() const { return v_; } // valid only when fits_small()
    mpz_class to_mpz() const;

    static Int from_string(const std::string& s);
    std::string to_string() const;

    bool is_zero() const { return !big_ && v_ == 0; }
    bool is_one() const { return !big_ && v_ == 1; }
    int sign() const;

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    friend Int operator-(const Int& a);
    Int& operator+=(const Int& o) { *this = *this + o; return *this; }
    Int& operator-=(const Int& o) { *this = *this - o; return *this; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }
    static int cmp(const Int& a, const Int& b);

    friend Int abs(const Int& a);
    friend Int gcd(const Int& a, const Int& b);      // result >= 0
    friend Int lcm(const Int& a, const Int& b);      // result >= 0
    friend Int divexact(const Int& a, const Int& b); // b must divide a
    friend Int pow_int(const Int& base, unsigned e);

    /// Accumulate a*b into this (hot path of the convolution kernels).
    void add_mul(const Int& a, const Int& b);

private:
    long long v_ = 0;
    std::unique_ptr<mpz_class> big_;

    static Int make_big(mpz_class z);
    void demote();
};

// ---------------------------------------------------------------------------
// Rational: canonical p/q with gcd(|p|, q) = 1 and q >= 1. Zero is 0/1.
// ---------------------------------------------------------------------------
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(Int num, Int den); // throws DivideByZeroError on den == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const; // throws DivideByZeroError on zero

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const; // "p" when q = 1, else "p/q"
    static Rational from_string(const std::string& s);

private:
    Int num_, den_;
    void normalize();
};

// ---------------------------------------------------------------------------
// Cyclotomic: element of Q(zeta_N) represented in the power basis
// 1, z, ..., z^(phi(N)-1) of Q[x]/(Phi_N(x)), z = zeta_N.
//
// Mixed-conductor operands are promoted to the lcm conductor. Equality is
// mathematical: values at different conductors compare equal iff they agree
// after promotion.
// ---------------------------------------------------------------------------
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    Cyclotomic(const Rational& r) : n_(1), c_{r} {}
    Cyclotomic(long long v) : n_(1), c_{Rational(v)} {}
    Cyclotomic(int v) : n_(1), c_{Rational(v)} {}

    /// zeta_N^k, reduced mod Phi_N. Throws ValidationError when N < 1.
    static Cyclotomic root_of_unity(long N, long k);
    /// From a coefficient vector of length <= phi(N) (padded with zeros).
    static Cyclotomic from_coeffs(long N, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;           // lies in the subfield Q
    Rational rational_value() const;    // throws ValidationError when not rational

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    Cyclotomic inverse() const; // throws DivideByZeroError on zero
    Cyclotomic conjugate() const; // zeta_N -> zeta_N^(-1)

    /// Rewrite at conductor M (N | M).
    Cyclotomic promoted(long M) const;
    /// Try to recognize the value inside Q(zeta_M) for M | N.
    std::optional<Cyclotomic> demoted(long M) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// "p/q" at conductor 1, else "c0 + c1*z + ...; N=<conductor>".
    std::string to_string() const;
    static Cyclotomic from_string(const std::string& s);

private:
    long n_;
    std::vector<Rational> c_; // length phi(n_)
    friend struct CycloBasis;
};

long euler_phi(long n);
/// Coefficients (ascending) of the N-th cyclotomic polynomial, as integers.
const std::vector<Int>& cyclotomic_polynomial(long N);

// make_scalar constructors (distinct entry points for the CLI/tests).
Cyclotomic make_integer(const Int& v);
Cyclotomic make_ratio(const Int& num, const Int& den);   // den != 0
Cyclotomic make_root_of_unity(long N, long k);           // N >= 1

// ---------------------------------------------------------------------------
// Poly: dense univariate polynomial over Cyclotomic, ascending coefficients,
// trailing zeros stripped (zero polynomial = empty vector).
// ---------------------------------------------------------------------------
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Cyclotomic> coeffs);
    static Poly constant(const Cyclotomic& c);
    static Poly variable(); // x

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Cyclotomic>& coeffs() const { return c_; }
    Cyclotomic coeff(int i) const;
    const Cyclotomic& leading() const; // throws ValidationError on zero poly

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    Poly scaled(const Cyclotomic& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    Poly monic() const; // leading coefficient scaled to 1

    Cyclotomic eval(const Cyclotomic& x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const; // for diagnostics

private:
    std::vector<Cyclotomic> c_;
    void strip();
};

/// Monic gcd by the Euclidean remainder sequence; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// ---------------------------------------------------------------------------
// RatFun: num/den with gcd(num, den) = 1, den monic and nonzero. The
// canonical form makes equality decidable and evaluation at removable
// singularities well-defined (they are cancelled by construction).
// ---------------------------------------------------------------------------
class RatFun {
public:
    RatFun() : num_(), den_(Poly::constant(Cyclotomic(1))) {}
    RatFun(Poly num, Poly den); // reduces; throws DivideByZeroError when den = 0
    static RatFun constant(const Cyclotomic& c);
    static RatFun variable(); // u

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Cyclotomic constant_value() const; // throws ValidationError when non-constant

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a);
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun scaled(const Cyclotomic& c) const; // cheap: scales the numerator

    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Substitute u = u0. Throws PoleError (carrying u0) at a genuine pole.
    Cyclotomic eval(const Cyclotomic& u0) const;

    std::string to_string() const;

private:
    Poly num_, den_;
    void reduce();
};

/// Canonical (gcd-cancelled, monic-denominator) form. RatFun values are kept
/// canonical continuously; this re-runs the normalization explicitly.
RatFun ratfun_reduce(const RatFun& f);
Cyclotomic ratfun_eval(const RatFun& f, const Cyclotomic& u0);

} // namespace wrf

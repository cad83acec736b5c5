#include "wreathfuse/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wrf {

// ===========================================================================
// Int
// ===========================================================================

Int::Int(const mpz_class& z) {
    if (z.fits_slong_p()) {
        v_ = z.get_si();
    } else {
        big_ = std::make_unique<mpz_class>(z);
    }
}

Int::Int(const Int& o) : v_(o.v_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
}

Int& Int::operator=(const Int& o) {
    if (this != &o) {
        v_ = o.v_;
        big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
}

mpz_class Int::to_mpz() const {
    if (big_) return *big_;
    return mpz_class(static_cast<long>(v_));
}

Int Int::make_big(mpz_class z) {
    Int r;
    if (z.fits_slong_p()) {
        r.v_ = z.get_si();
    } else {
        r.big_ = std::make_unique<mpz_class>(std::move(z));
    }
    return r;
}

void Int::demote() {
    if (big_ && big_->fits_slong_p()) {
        v_ = big_->get_si();
        big_.reset();
    }
}

int Int::sign() const {
    if (big_) return sgn(*big_);
    return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0);
}

Int operator+(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make_big(a.to_mpz() + b.to_mpz());
}

Int operator-(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make_big(a.to_mpz() - b.to_mpz());
}

Int operator*(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make_big(a.to_mpz() * b.to_mpz());
}

Int operator-(const Int& a) {
    if (!a.big_ && a.v_ != std::numeric_limits<long long>::min()) return Int(-a.v_);
    return Int::make_big(-a.to_mpz());
}

void Int::add_mul(const Int& a, const Int& b) {
    if (!big_ && !a.big_ && !b.big_) {
        __int128 t = static_cast<__int128>(a.v_) * b.v_ + v_;
        if (t >= static_cast<__int128>(std::numeric_limits<long long>::min()) &&
            t <= static_cast<__int128>(std::numeric_limits<long long>::max())) {
            v_ = static_cast<long long>(t);
            return;
        }
    }
    *this = *this + a * b;
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.v_ == b.v_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false; // canonical
    return *a.big_ == *b.big_;
}

int Int::cmp(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.v_ < b.v_ ? -1 : (a.v_ > b.v_ ? 1 : 0);
    mpz_class za = a.to_mpz(), zb = b.to_mpz();
    int c = ::cmp(za, zb);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

namespace {
unsigned long long uabs_ll(long long v) {
    return v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                 : static_cast<unsigned long long>(v);
}
Int from_u64(unsigned long long v) {
    if (v <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
        return Int(static_cast<long long>(v));
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Int(z);
}
} // namespace

Int gcd(const Int& a, const Int& b) {
    if (a.fits_small() && b.fits_small())
        return from_u64(std::gcd(uabs_ll(a.small_value()), uabs_ll(b.small_value())));
    mpz_class g, za = a.to_mpz(), zb = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return Int(g);
}

Int lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    return abs(divexact(a, gcd(a, b)) * b);
}

Int divexact(const Int& a, const Int& b) {
    if (b.is_zero()) throw DivideByZeroError("divexact by zero");
    if (a.fits_small() && b.fits_small()) {
        long long x = a.small_value(), y = b.small_value();
        if (!(x == std::numeric_limits<long long>::min() && y == -1)) return Int(x / y);
    }
    mpz_class q, za = a.to_mpz(), zb = b.to_mpz();
    mpz_divexact(q.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return Int(q);
}

Int pow_int(const Int& base, unsigned e) {
    Int r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

Int Int::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer literal: " + s);
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("bad integer literal: " + s);
    return Int(mpz_class(s, 10));
}

std::string Int::to_string() const {
    if (!big_) return std::to_string(v_);
    return big_->get_str();
}

// ===========================================================================
// Rational
// ===========================================================================

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivideByZeroError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    Int g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivideByZeroError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivideByZeroError("inverse of zero");
    return Rational(den_, num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int::from_string(s));
    Int n = Int::from_string(s.substr(0, slash));
    Int d = Int::from_string(s.substr(slash + 1));
    if (d.is_zero()) throw ParseError("zero denominator in rational: " + s);
    return Rational(std::move(n), std::move(d));
}

// ===========================================================================
// Cyclotomic basis data per conductor
// ===========================================================================

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using RVec = std::vector<Rational>;

void rv_strip(RVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RVec rv_mul(const RVec& a, const RVec& b) {
    if (a.empty() || b.empty()) return {};
    RVec c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    rv_strip(c);
    return c;
}

std::pair<RVec, RVec> rv_divrem(RVec a, const RVec& b) {
    if (b.empty()) throw DivideByZeroError("polynomial division by zero");
    rv_strip(a);
    RVec q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational());
    Rational lead_inv = b.back().inverse();
    for (size_t k = a.size(); k-- >= b.size();) {
        Rational f = a[k] * lead_inv;
        q[k - (b.size() - 1)] = f;
        if (!f.is_zero())
            for (size_t j = 0; j < b.size(); ++j)
                a[k - (b.size() - 1) + j] -= f * b[j];
        if (k == 0) break;
    }
    rv_strip(a);
    rv_strip(q);
    return {q, a};
}

struct CycloBasis {
    long N = 1;
    long phi = 1;
    std::vector<Int> cyclo;              // Phi_N, ascending, integral, monic
    std::vector<RVec> rows;              // x^k mod Phi_N for k = 0..maxk
};

using BasisRegistry = std::map<long, std::unique_ptr<CycloBasis>>;

BasisRegistry& basis_registry() {
    static BasisRegistry reg;
    return reg;
}
std::mutex& basis_mutex() {
    static std::mutex m;
    return m;
}

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d. Proper-divisor bases are
// guaranteed present in the registry by the ascending build order below.
RVec compute_cyclo_poly(long N, const BasisRegistry& reg) {
    if (N == 1) return {Rational(-1), Rational(1)};
    RVec num(static_cast<size_t>(N) + 1);
    num[0] = Rational(-1);
    num[static_cast<size_t>(N)] = Rational(1);
    RVec den{Rational(1)};
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        const CycloBasis& bd = *reg.at(d);
        RVec phi_d(bd.cyclo.size());
        for (size_t i = 0; i < bd.cyclo.size(); ++i) phi_d[i] = Rational(bd.cyclo[i]);
        den = rv_mul(den, phi_d);
    }
    auto [q, r] = rv_divrem(num, den);
    if (!r.empty()) throw Error("internal: cyclotomic polynomial division not exact");
    return q;
}

std::unique_ptr<CycloBasis> build_basis(long N, const BasisRegistry& reg) {
    auto b = std::make_unique<CycloBasis>();
    b->N = N;
    b->phi = euler_phi(N);
    RVec phi_poly = compute_cyclo_poly(N, reg);
    if (static_cast<long>(phi_poly.size()) != b->phi + 1)
        throw Error("internal: cyclotomic degree mismatch");
    b->cyclo.reserve(phi_poly.size());
    for (const auto& c : phi_poly) {
        if (!c.is_integer()) throw Error("internal: non-integral cyclotomic coefficient");
        b->cyclo.push_back(c.num());
    }
    long maxk = std::max(2 * b->phi - 2, N - 1);
    b->rows.resize(static_cast<size_t>(maxk) + 1);
    for (long k = 0; k <= maxk; ++k) {
        RVec row(static_cast<size_t>(b->phi));
        if (k < b->phi) {
            row[static_cast<size_t>(k)] = Rational(1);
        } else {
            const RVec& prev = b->rows[static_cast<size_t>(k - 1)];
            Rational top = prev[static_cast<size_t>(b->phi - 1)];
            for (long j = b->phi - 1; j >= 1; --j)
                row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
            row[0] = Rational(0);
            if (!top.is_zero())
                for (long j = 0; j < b->phi; ++j)
                    row[static_cast<size_t>(j)] -= top * Rational(b->cyclo[static_cast<size_t>(j)]);
        }
        b->rows[static_cast<size_t>(k)] = std::move(row);
    }
    return b;
}

const CycloBasis& basis_for(long N) {
    if (N < 1) throw ValidationError("conductor must be >= 1");
    std::lock_guard<std::mutex> lock(basis_mutex());
    BasisRegistry& reg = basis_registry();
    auto it = reg.find(N);
    if (it != reg.end()) return *it->second;
    for (long d = 1; d <= N; ++d)
        if (N % d == 0 && !reg.count(d)) reg[d] = build_basis(d, reg);
    return *reg.at(N);
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long N) {
    return basis_for(N).cyclo;
}

// ===========================================================================
// Cyclotomic
// ===========================================================================

Cyclotomic Cyclotomic::root_of_unity(long N, long k) {
    if (N < 1) throw ValidationError("root_of_unity: order must be >= 1");
    const CycloBasis& b = basis_for(N);
    k %= N;
    if (k < 0) k += N;
    Cyclotomic z;
    z.n_ = N;
    z.c_ = b.rows[static_cast<size_t>(k)];
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(long N, std::vector<Rational> coeffs) {
    const CycloBasis& b = basis_for(N);
    if (static_cast<long>(coeffs.size()) > b.phi)
        throw ValidationError("cyclotomic coefficient vector too long");
    coeffs.resize(static_cast<size_t>(b.phi));
    Cyclotomic z;
    z.n_ = N;
    z.c_ = std::move(coeffs);
    return z;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw ValidationError("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
} // namespace

Cyclotomic Cyclotomic::promoted(long M) const {
    if (M == n_) return *this;
    if (M % n_ != 0) throw ValidationError("promotion target must be a conductor multiple");
    const CycloBasis& bm = basis_for(M);
    long s = M / n_;
    std::vector<Rational> out(static_cast<size_t>(bm.phi));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const RVec& row = bm.rows[k * static_cast<size_t>(s)];
        for (size_t j = 0; j < out.size(); ++j)
            if (!row[j].is_zero()) out[j] += c_[k] * row[j];
    }
    Cyclotomic z;
    z.n_ = M;
    z.c_ = std::move(out);
    return z;
}

std::optional<Cyclotomic> Cyclotomic::demoted(long M) const {
    if (M == n_) return *this;
    if (M < 1 || n_ % M != 0) return std::nullopt;
    const CycloBasis& bm = basis_for(M);
    const CycloBasis& bn = basis_for(n_);
    long s = n_ / M;
    // Solve: sum_j x_j * promote(zeta_M^j) = this, over the conductor-n_ basis.
    size_t rows = static_cast<size_t>(bn.phi), cols = static_cast<size_t>(bm.phi);
    std::vector<RVec> aug(rows, RVec(cols + 1));
    for (size_t j = 0; j < cols; ++j) {
        const RVec& img = bn.rows[j * static_cast<size_t>(s)];
        for (size_t i = 0; i < rows; ++i) aug[i][j] = img[i];
    }
    for (size_t i = 0; i < rows; ++i) aug[i][cols] = c_[i];
    // Gaussian elimination.
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && aug[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[rank]);
        Rational inv = aug[rank][col].inverse();
        for (size_t j = col; j <= cols; ++j) aug[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= cols; ++j) aug[i][j] -= f * aug[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (!aug[i][cols].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols);
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][cols];
    Cyclotomic z;
    z.n_ = M;
    z.c_ = std::move(x);
    return z;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long M = lcm_long(a.n_, b.n_);
    Cyclotomic x = a.promoted(M), y = b.promoted(M);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    long M = lcm_long(a.n_, b.n_);
    Cyclotomic x = a.promoted(M), y = b.promoted(M);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& r : x.c_) r = -r;
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long M = lcm_long(a.n_, b.n_);
    Cyclotomic x = a.promoted(M), y = b.promoted(M);
    const CycloBasis& bs = basis_for(M);
    size_t phi = static_cast<size_t>(bs.phi);
    std::vector<Rational> conv(2 * phi - 1);
    for (size_t i = 0; i < phi; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (y.c_[j].is_zero()) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::vector<Rational> out(phi);
    for (size_t k = 0; k < phi; ++k) out[k] = conv[k];
    for (size_t k = phi; k < conv.size(); ++k) {
        if (conv[k].is_zero()) continue;
        const RVec& row = bs.rows[k];
        for (size_t j = 0; j < phi; ++j)
            if (!row[j].is_zero()) out[j] += conv[k] * row[j];
    }
    Cyclotomic z;
    z.n_ = M;
    z.c_ = std::move(out);
    return z;
}

namespace {
// Extended gcd over Q[x] on raw coefficient vectors; returns (g, s, t) with
// s*a + t*b = g, g monic (or zero).
struct XgcdResult {
    RVec g, s, t;
};
XgcdResult rv_xgcd(RVec a, RVec b) {
    RVec s0{Rational(1)}, s1, t0, t1{Rational(1)};
    rv_strip(a);
    rv_strip(b);
    while (!b.empty()) {
        auto [q, r] = rv_divrem(a, b);
        RVec s2 = s0, t2 = t0;
        RVec qs = rv_mul(q, s1), qt = rv_mul(q, t1);
        s2.resize(std::max(s2.size(), qs.size()));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        t2.resize(std::max(t2.size(), qt.size()));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        rv_strip(s2);
        rv_strip(t2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.empty()) {
        Rational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
        for (auto& c : s0) c *= inv;
        for (auto& c : t0) c *= inv;
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}
} // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivideByZeroError("inverse of zero cyclotomic");
    const CycloBasis& b = basis_for(n_);
    RVec elem = c_;
    rv_strip(elem);
    RVec mod(b.cyclo.size());
    for (size_t i = 0; i < b.cyclo.size(); ++i) mod[i] = Rational(b.cyclo[i]);
    XgcdResult x = rv_xgcd(elem, mod);
    if (x.g.size() != 1)
        throw Error("internal: cyclotomic inverse gcd is not constant");
    // g = 1 after monic normalization, so s * elem = 1 mod Phi_N.
    auto [q, r] = rv_divrem(x.s, mod);
    (void)q;
    r.resize(static_cast<size_t>(b.phi));
    Cyclotomic z;
    z.n_ = n_;
    z.c_ = std::move(r);
    return z;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
}

Cyclotomic Cyclotomic::conjugate() const {
    const CycloBasis& b = basis_for(n_);
    std::vector<Rational> out(static_cast<size_t>(b.phi));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        size_t kk = (k == 0) ? 0 : static_cast<size_t>(n_) - k;
        const RVec& row = b.rows[kk];
        for (size_t j = 0; j < out.size(); ++j)
            if (!row[j].is_zero()) out[j] += c_[k] * row[j];
    }
    Cyclotomic z;
    z.n_ = n_;
    z.c_ = std::move(out);
    return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long M = lcm_long(a.n_, b.n_);
    return a.promoted(M).c_ == b.promoted(M).c_;
}

std::string Cyclotomic::to_string() const {
    if (n_ == 1) return c_[0].to_string();
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << c_[i].to_string();
        if (i == 1) os << "*z";
        else if (i > 1) os << "*z^" << i;
    }
    os << "; N=" << n_;
    return os.str();
}

Cyclotomic Cyclotomic::from_string(const std::string& s) {
    auto npos = s.rfind("; N=");
    if (npos == std::string::npos) return Cyclotomic(Rational::from_string(s));
    long N;
    try {
        N = std::stol(s.substr(npos + 4));
    } catch (const std::exception&) {
        throw ParseError("bad conductor in scalar: " + s);
    }
    if (N < 1) throw ParseError("bad conductor in scalar: " + s);
    std::string head = s.substr(0, npos);
    std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(N)));
    size_t pos = 0;
    size_t idx = 0;
    while (pos < head.size()) {
        size_t next = head.find(" + ", pos);
        std::string term = head.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? head.size() : next + 3;
        size_t star = term.find("*z");
        size_t power = 0;
        std::string ratpart;
        if (star == std::string::npos) {
            power = 0;
            ratpart = term;
        } else {
            ratpart = term.substr(0, star);
            std::string zpart = term.substr(star + 2);
            if (zpart.empty()) power = 1;
            else if (zpart[0] == '^') {
                try {
                    power = static_cast<size_t>(std::stoul(zpart.substr(1)));
                } catch (const std::exception&) {
                    throw ParseError("bad power in scalar: " + s);
                }
            } else {
                throw ParseError("bad term in scalar: " + s);
            }
        }
        if (power >= coeffs.size()) throw ParseError("power exceeds basis in scalar: " + s);
        coeffs[power] = Rational::from_string(ratpart);
        ++idx;
    }
    (void)idx;
    return Cyclotomic::from_coeffs(N, std::move(coeffs));
}

Cyclotomic make_integer(const Int& v) { return Cyclotomic(Rational(v)); }

Cyclotomic make_ratio(const Int& num, const Int& den) {
    if (den.is_zero()) throw DivideByZeroError("make_ratio: zero denominator");
    return Cyclotomic(Rational(num, den));
}

Cyclotomic make_root_of_unity(long N, long k) {
    return Cyclotomic::root_of_unity(N, k);
}

// ===========================================================================
// Poly
// ===========================================================================

Poly::Poly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { strip(); }

Poly Poly::constant(const Cyclotomic& c) {
    Poly p;
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {Cyclotomic(0), Cyclotomic(1)};
    return p;
}

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclotomic Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Cyclotomic(0);
    return c_[static_cast<size_t>(i)];
}

const Cyclotomic& Poly::leading() const {
    if (c_.empty()) throw ValidationError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.strip();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.strip();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Cyclotomic(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.strip();
    return r;
}

Poly Poly::scaled(const Cyclotomic& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivideByZeroError("polynomial division by zero");
    Poly rem = a, quot;
    if (a.degree() < b.degree()) return {quot, rem};
    quot.c_.assign(static_cast<size_t>(a.degree() - b.degree() + 1), Cyclotomic(0));
    Cyclotomic lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Cyclotomic f = rem.leading() * lead_inv;
        quot.c_[static_cast<size_t>(shift)] = f;
        for (size_t j = 0; j < b.c_.size(); ++j)
            rem.c_[static_cast<size_t>(shift) + j] -= f * b.c_[j];
        rem.strip();
    }
    quot.strip();
    return {quot, rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Cyclotomic Poly::eval(const Cyclotomic& x) const {
    Cyclotomic acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
        if (i == 0) break;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << c_[i].to_string() << ")";
        if (i == 1) os << "*u";
        else if (i > 1) os << "*u^" << i;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = Poly::divrem(x, y);
        (void)q;
        x = y;
        y = r.is_zero() ? r : r.monic(); // monic remainders bound coefficient growth
    }
    return x.is_zero() ? x : x.monic();
}

// ===========================================================================
// RatFun
// ===========================================================================

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivideByZeroError("rational function with zero denominator");
    reduce();
}

RatFun RatFun::constant(const Cyclotomic& c) {
    return RatFun(Poly::constant(c), Poly::constant(Cyclotomic(1)));
}

RatFun RatFun::variable() {
    return RatFun(Poly::variable(), Poly::constant(Cyclotomic(1)));
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Cyclotomic(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divrem(num_, g).first;
        den_ = Poly::divrem(den_, g).first;
    }
    Cyclotomic inv = den_.leading().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

Cyclotomic RatFun::constant_value() const {
    if (!is_constant()) throw ValidationError("rational function is not constant: " + to_string());
    return num_.coeff(0);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivideByZeroError("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}
RatFun operator-(const RatFun& a) {
    RatFun r = a;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::scaled(const Cyclotomic& c) const {
    if (c.is_zero()) return RatFun();
    RatFun r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

Cyclotomic RatFun::eval(const Cyclotomic& u0) const {
    Cyclotomic d = den_.eval(u0);
    if (d.is_zero())
        throw PoleError("evaluation at a genuine pole u=" + u0.to_string(), u0.to_string());
    return num_.eval(u0) / d;
}

std::string RatFun::to_string() const {
    if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun ratfun_reduce(const RatFun& f) {
    return RatFun(f.num(), f.den());
}

Cyclotomic ratfun_eval(const RatFun& f, const Cyclotomic& u0) {
    return f.eval(u0);
}

} // namespace wrf

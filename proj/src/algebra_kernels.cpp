#include "wreathfuse/algebra_kernels.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wrf::kernels {

namespace {
constexpr std::size_t kDensePairThreshold = 4096;

long lcm_long(long a, long b) {
    return a / std::gcd(a, b) * b;
}

// x^k mod Phi_N for k = phi..2*phi-2, as integer rows (Phi_N is monic).
std::vector<std::vector<Int>> reduction_rows(long N, long phi) {
    const std::vector<Int>& cyclo = cyclotomic_polynomial(N);
    std::vector<std::vector<Int>> rows;
    if (phi < 2) return rows;
    std::vector<Int> row(static_cast<size_t>(phi));
    // x^phi = -(lower part of Phi_N)
    for (long j = 0; j < phi; ++j) row[static_cast<size_t>(j)] = -cyclo[static_cast<size_t>(j)];
    rows.push_back(row);
    for (long k = phi + 1; k <= 2 * phi - 2; ++k) {
        std::vector<Int> next(static_cast<size_t>(phi));
        Int top = row[static_cast<size_t>(phi - 1)];
        for (long j = phi - 1; j >= 1; --j) next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)];
        next[0] = Int(0);
        if (!top.is_zero())
            for (long j = 0; j < phi; ++j)
                next[static_cast<size_t>(j)] -= top * cyclo[static_cast<size_t>(j)];
        rows.push_back(next);
        row = std::move(next);
    }
    return rows;
}

struct ClearedSide {
    std::vector<std::uint64_t> codes;
    std::vector<Int> coeffs; // codes.size() * phi, row-major
    Int denom = 1;
};

ClearedSide clear_denominators(const Terms& t, long N, long phi) {
    ClearedSide side;
    side.codes.reserve(t.size());
    for (const auto& [code, c] : t) side.codes.push_back(code);
    std::sort(side.codes.begin(), side.codes.end());
    std::vector<std::vector<Rational>> promoted;
    promoted.reserve(side.codes.size());
    for (std::uint64_t code : side.codes) {
        promoted.push_back(t.at(code).promoted(N).coeffs());
        for (const Rational& r : promoted.back()) side.denom = lcm(side.denom, r.den());
    }
    side.coeffs.resize(side.codes.size() * static_cast<size_t>(phi));
    for (size_t i = 0; i < promoted.size(); ++i)
        for (long j = 0; j < phi; ++j) {
            const Rational& r = promoted[i][static_cast<size_t>(j)];
            side.coeffs[i * static_cast<size_t>(phi) + static_cast<size_t>(j)] =
                r.num() * divexact(side.denom, r.den());
        }
    return side;
}

} // namespace

Terms mul_reference(const Algebra& ctx, const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [xa, ca] : a)
        for (const auto& [xb, cb] : b) {
            std::uint64_t z = ctx.mul_codes(xa, xb);
            Cyclotomic prod = ca * cb;
            auto it = out.find(z);
            if (it == out.end()) out.emplace(z, std::move(prod));
            else it->second += prod;
        }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

Terms mul_dense_cleared(const Algebra& ctx, const Terms& a, const Terms& b) {
    if (!ctx.dense_supported())
        throw ValidationError("dense kernel requires a small algebra");
    ctx.ensure_dense_tables();
    Terms out;
    if (a.empty() || b.empty()) return out;

    long N = 1;
    for (const auto& [code, c] : a) N = lcm_long(N, c.conductor());
    for (const auto& [code, c] : b) N = lcm_long(N, c.conductor());
    long phi = euler_phi(N);
    auto rows = reduction_rows(N, phi);

    std::size_t h = static_cast<std::size_t>(ctx.order());
    ClearedSide sa = clear_denominators(a, N, phi);
    ClearedSide sb = clear_denominators(b, N, phi);

    // B as a dense array over the encoded index space.
    std::vector<Int> bd(h * static_cast<size_t>(phi));
    std::vector<std::uint8_t> bnz(h, 0);
    for (size_t i = 0; i < sb.codes.size(); ++i) {
        size_t z = static_cast<size_t>(sb.codes[i]);
        bnz[z] = 1;
        for (long j = 0; j < phi; ++j)
            bd[z * static_cast<size_t>(phi) + static_cast<size_t>(j)] =
                sb.coeffs[i * static_cast<size_t>(phi) + static_cast<size_t>(j)];
    }

    std::vector<std::uint32_t> ainv(sa.codes.size());
    for (size_t i = 0; i < sa.codes.size(); ++i)
        ainv[i] = static_cast<std::uint32_t>(ctx.inv_code(sa.codes[i]));

    const std::vector<std::uint32_t>& table = ctx.mult_table();
    Int scale = sa.denom * sb.denom;

    std::vector<Cyclotomic> result(h);
    std::vector<std::uint8_t> used(h, 0);

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<Int> conv(static_cast<size_t>(2 * phi - 1));
        std::vector<Rational> coords(static_cast<size_t>(phi));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long zz = 0; zz < static_cast<long long>(h); ++zz) {
            size_t z = static_cast<size_t>(zz);
            for (auto& v : conv) v = Int(0);
            bool any = false;
            for (size_t i = 0; i < ainv.size(); ++i) {
                std::uint32_t y = table[static_cast<size_t>(ainv[i]) * h + z];
                if (!bnz[y]) continue;
                any = true;
                const Int* ac = &sa.coeffs[i * static_cast<size_t>(phi)];
                const Int* bc = &bd[static_cast<size_t>(y) * static_cast<size_t>(phi)];
                if (phi == 1) {
                    conv[0].add_mul(ac[0], bc[0]);
                } else {
                    for (long p = 0; p < phi; ++p) {
                        if (ac[p].is_zero()) continue;
                        for (long q = 0; q < phi; ++q) {
                            if (bc[q].is_zero()) continue;
                            conv[static_cast<size_t>(p + q)].add_mul(ac[static_cast<size_t>(p)],
                                                                     bc[static_cast<size_t>(q)]);
                        }
                    }
                }
            }
            if (!any) continue;
            // fold powers >= phi back into the basis
            for (long j = 0; j < phi; ++j) coords[static_cast<size_t>(j)] = Rational(0);
            bool nonzero = false;
            for (long j = 0; j < phi; ++j) {
                Int acc = conv[static_cast<size_t>(j)];
                for (long k = phi; k <= 2 * phi - 2; ++k) {
                    const Int& ck = conv[static_cast<size_t>(k)];
                    if (ck.is_zero()) continue;
                    acc += ck * rows[static_cast<size_t>(k - phi)][static_cast<size_t>(j)];
                }
                if (!acc.is_zero()) {
                    coords[static_cast<size_t>(j)] = Rational(acc, scale);
                    nonzero = true;
                }
            }
            if (!nonzero) continue;
            result[z] = Cyclotomic::from_coeffs(N, coords);
            used[z] = 1;
        }
    }

    for (size_t z = 0; z < h; ++z)
        if (used[z]) out.emplace(static_cast<std::uint64_t>(z), std::move(result[z]));
    return out;
}

Terms mul_auto(const Algebra& ctx, const Terms& a, const Terms& b) {
    if (a.empty() || b.empty()) return {};
    if (ctx.dense_supported() && a.size() * b.size() >= kDensePairThreshold) {
        return mul_dense_cleared(ctx, a, b);
    }
    return mul_reference(ctx, a, b);
}

} // namespace wrf::kernels

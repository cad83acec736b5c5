#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathfuse/groups.hpp"
#include "wreathfuse/scalar.hpp"

namespace wrf {

// ---------------------------------------------------------------------------
// WreathElement: a group element (a, sigma) of G wr S_n. colors[i] is the
// G-element in slot i; perm[i] is the image of slot i (0-based throughout
// the internal representation; the public slot indices of the distinguished
// elements are 1-based as usual).
// ---------------------------------------------------------------------------
struct WreathElement {
    std::vector<int> colors;
    std::vector<int> perm;
    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.colors == b.colors && a.perm == b.perm;
    }
};

class AlgebraElement;

// ---------------------------------------------------------------------------
// Algebra: shared context for C[G wr S_n]. Owns the canonical element
// encoding (mixed-radix colors, then permutation rank) and, for small
// groups, lazily built dense multiplication/inverse tables used by the
// convolution kernels.
// ---------------------------------------------------------------------------
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static std::shared_ptr<const Algebra> make(GroupPtr group, int n);

    const GroupTable& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    int n() const { return n_; }
    std::uint64_t order() const { return order_; } // |G|^n * n!

    WreathElement identity_element() const;
    WreathElement we_mul(const WreathElement& x, const WreathElement& y) const;
    WreathElement we_inv(const WreathElement& x) const;

    std::uint64_t encode(const WreathElement& x) const;
    WreathElement decode(std::uint64_t code) const;
    /// Product of two encoded elements (dense table lookup when available).
    std::uint64_t mul_codes(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t inv_code(std::uint64_t x) const;

    bool compatible(const Algebra& other) const;

    // distinguished elements (1-based indices)
    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis(const WreathElement& x) const;
    AlgebraElement transposition(int i) const;                       // s_i
    AlgebraElement slot_element(int j, int g) const;                 // g at slot j
    AlgebraElement class_sum(int j, int alpha, const ConjugacyData& cd) const;
    AlgebraElement pair_average(int i, int j) const;                 // e_{i,j}, e_{i,i} = 1
    AlgebraElement jucys_murphy(int k) const;

    // dense kernel support
    bool dense_supported() const { return order_ <= kDenseCap; }
    void ensure_dense_tables() const; // no-op when unsupported
    bool dense_ready() const;
    const std::vector<std::uint32_t>& mult_table() const;  // order x order
    const std::vector<std::uint32_t>& inverse_table() const;

    static constexpr std::uint64_t kDenseCap = 2048;

private:
    Algebra(GroupPtr group, int n);
    GroupPtr group_;
    int n_;
    std::uint64_t order_ = 1;
    std::uint64_t color_states_ = 1; // |G|^n
    std::vector<std::uint64_t> factorial_;
    mutable std::mutex dense_mutex_;
    mutable std::atomic<bool> dense_built_{false};
    mutable std::vector<std::uint32_t> mult_table_;
    mutable std::vector<std::uint32_t> inverse_table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// ---------------------------------------------------------------------------
// AlgebraElement: sparse element, encoded basis index -> nonzero coefficient.
// ---------------------------------------------------------------------------
class AlgebraElement {
public:
    using Terms = std::unordered_map<std::uint64_t, Cyclotomic>;

    AlgebraElement() = default; // context-free placeholder for containers
    AlgebraElement(AlgebraPtr ctx, Terms terms);

    const AlgebraPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Cyclotomic coeff(std::uint64_t code) const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a);
    AlgebraElement scaled(const Cyclotomic& c) const;
    AlgebraElement& operator+=(const AlgebraElement& o) { *this = *this + o; return *this; }
    AlgebraElement& operator-=(const AlgebraElement& o) { *this = *this - o; return *this; }
    AlgebraElement& operator*=(const AlgebraElement& o) { *this = *this * o; return *this; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Coefficient-perturbation helper (adds delta at the given basis code).
    AlgebraElement with_term_added(std::uint64_t code, const Cyclotomic& delta) const;

    /// Deterministic text form: sorted (code, scalar) pairs.
    std::string serialize() const;
    static AlgebraElement deserialize(const AlgebraPtr& ctx, const std::string& text);

    /// Human-readable sum, one term per line; the unit element prints as "1".
    std::string pretty() const;

    /// Image under the chain embedding into a higher-rank algebra over the
    /// same group (new slots colored by the identity, permutation fixed).
    AlgebraElement embedded(const AlgebraPtr& bigger) const;

private:
    AlgebraPtr ctx_;
    Terms terms_;
    void strip_zeros();
    friend class RatAlgebraElement;
};

// ---------------------------------------------------------------------------
// RatAlgebraElement: sparse element whose coefficients are rational
// functions in the single active evaluation variable.
// ---------------------------------------------------------------------------
class RatAlgebraElement {
public:
    using Terms = std::unordered_map<std::uint64_t, RatFun>;

    RatAlgebraElement() = default;
    explicit RatAlgebraElement(const AlgebraElement& constant);
    RatAlgebraElement(AlgebraPtr ctx, Terms terms);

    const AlgebraPtr& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend RatAlgebraElement operator+(const RatAlgebraElement& a, const RatAlgebraElement& b);
    friend RatAlgebraElement operator*(const RatAlgebraElement& a, const RatAlgebraElement& b);
    RatAlgebraElement scaled(const RatFun& f) const;

    friend bool operator==(const RatAlgebraElement& a, const RatAlgebraElement& b);
    friend bool operator!=(const RatAlgebraElement& a, const RatAlgebraElement& b) {
        return !(a == b);
    }

    /// Substitute the active variable. Throws PoleError naming `step` when a
    /// coefficient has a genuine pole at u0.
    AlgebraElement evaluated(const Cyclotomic& u0, int step = -1) const;

private:
    AlgebraPtr ctx_;
    Terms terms_;
    void strip_zeros();
};

} // namespace wrf

#include "wreathfuse/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "wreathfuse/algebra_kernels.hpp"

namespace wrf {

// ===========================================================================
// Algebra context
// ===========================================================================

Algebra::Algebra(GroupPtr group, int n) : group_(std::move(group)), n_(n) {
    if (n_ < 0) throw ValidationError("algebra rank must be >= 0");
    factorial_.resize(static_cast<size_t>(n_) + 1);
    factorial_[0] = 1;
    unsigned __int128 total = 1;
    for (int i = 1; i <= n_; ++i) {
        total *= static_cast<unsigned>(i);
        if (total > (static_cast<unsigned __int128>(1) << 62))
            throw ValidationError("algebra too large to encode");
        factorial_[static_cast<size_t>(i)] = static_cast<std::uint64_t>(total);
    }
    unsigned __int128 colors = 1;
    for (int i = 0; i < n_; ++i) {
        colors *= static_cast<unsigned>(group_->order);
        if (colors > (static_cast<unsigned __int128>(1) << 62))
            throw ValidationError("algebra too large to encode");
    }
    color_states_ = static_cast<std::uint64_t>(colors);
    unsigned __int128 ord = colors * factorial_[static_cast<size_t>(n_)];
    if (ord > (static_cast<unsigned __int128>(1) << 62))
        throw ValidationError("algebra too large to encode");
    order_ = static_cast<std::uint64_t>(ord);
}

std::shared_ptr<const Algebra> Algebra::make(GroupPtr group, int n) {
    if (!group) throw ValidationError("algebra needs a group");
    return std::shared_ptr<const Algebra>(new Algebra(std::move(group), n));
}

bool Algebra::compatible(const Algebra& other) const {
    if (this == &other) return true;
    return n_ == other.n_ &&
           (group_ == other.group_ || group_->mult == other.group_->mult);
}

WreathElement Algebra::identity_element() const {
    WreathElement x;
    x.colors.assign(static_cast<size_t>(n_), group_->identity);
    x.perm.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) x.perm[static_cast<size_t>(i)] = i;
    return x;
}

WreathElement Algebra::we_mul(const WreathElement& x, const WreathElement& y) const {
    if (static_cast<int>(x.colors.size()) != n_ || static_cast<int>(y.colors.size()) != n_)
        throw ValidationError("wreath element size mismatch");
    WreathElement z;
    z.colors.resize(static_cast<size_t>(n_));
    z.perm.resize(static_cast<size_t>(n_));
    // (a, s)(b, t) = (a * s(b), s t) with s(b)_i = b_{s^-1(i)}
    std::vector<int> sinv(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) sinv[static_cast<size_t>(x.perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n_; ++i) {
        int moved = y.colors[static_cast<size_t>(sinv[static_cast<size_t>(i)])];
        z.colors[static_cast<size_t>(i)] = group_->mul(x.colors[static_cast<size_t>(i)], moved);
        z.perm[static_cast<size_t>(i)] = x.perm[static_cast<size_t>(y.perm[static_cast<size_t>(i)])];
    }
    return z;
}

WreathElement Algebra::we_inv(const WreathElement& x) const {
    WreathElement z;
    z.colors.resize(static_cast<size_t>(n_));
    z.perm.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) z.perm[static_cast<size_t>(x.perm[static_cast<size_t>(i)])] = i;
    for (int j = 0; j < n_; ++j)
        z.colors[static_cast<size_t>(j)] =
            group_->inv(x.colors[static_cast<size_t>(x.perm[static_cast<size_t>(j)])]);
    return z;
}

std::uint64_t Algebra::encode(const WreathElement& x) const {
    std::uint64_t colors = 0;
    std::uint64_t base = 1;
    for (int i = 0; i < n_; ++i) {
        colors += static_cast<std::uint64_t>(x.colors[static_cast<size_t>(i)]) * base;
        base *= static_cast<std::uint64_t>(group_->order);
    }
    // Lehmer rank of the permutation
    std::uint64_t rank = 0;
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (x.perm[static_cast<size_t>(j)] < x.perm[static_cast<size_t>(i)]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial_[static_cast<size_t>(n_ - 1 - i)];
    }
    return rank * color_states_ + colors;
}

WreathElement Algebra::decode(std::uint64_t code) const {
    WreathElement x;
    x.colors.resize(static_cast<size_t>(n_));
    x.perm.resize(static_cast<size_t>(n_));
    std::uint64_t colors = code % color_states_;
    std::uint64_t rank = code / color_states_;
    for (int i = 0; i < n_; ++i) {
        x.colors[static_cast<size_t>(i)] = static_cast<int>(colors % static_cast<std::uint64_t>(group_->order));
        colors /= static_cast<std::uint64_t>(group_->order);
    }
    std::vector<int> pool(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < n_; ++i) {
        std::uint64_t f = factorial_[static_cast<size_t>(n_ - 1 - i)];
        int d = static_cast<int>(rank / f);
        rank %= f;
        x.perm[static_cast<size_t>(i)] = pool[static_cast<size_t>(d)];
        pool.erase(pool.begin() + d);
    }
    return x;
}

std::uint64_t Algebra::mul_codes(std::uint64_t x, std::uint64_t y) const {
    if (dense_built_.load(std::memory_order_acquire))
        return mult_table_[static_cast<size_t>(x) * order_ + y];
    return encode(we_mul(decode(x), decode(y)));
}

std::uint64_t Algebra::inv_code(std::uint64_t x) const {
    if (dense_built_.load(std::memory_order_acquire)) return inverse_table_[static_cast<size_t>(x)];
    return encode(we_inv(decode(x)));
}

void Algebra::ensure_dense_tables() const {
    if (!dense_supported() || dense_built_.load(std::memory_order_acquire)) return;
    std::lock_guard<std::mutex> lock(dense_mutex_);
    if (dense_built_.load(std::memory_order_relaxed)) return;
    size_t h = static_cast<size_t>(order_);
    std::vector<WreathElement> elems(h);
    for (size_t i = 0; i < h; ++i) elems[i] = decode(static_cast<std::uint64_t>(i));
    mult_table_.assign(h * h, 0);
    for (size_t a = 0; a < h; ++a)
        for (size_t b = 0; b < h; ++b)
            mult_table_[a * h + b] = static_cast<std::uint32_t>(encode(we_mul(elems[a], elems[b])));
    inverse_table_.assign(h, 0);
    for (size_t a = 0; a < h; ++a)
        inverse_table_[a] = static_cast<std::uint32_t>(encode(we_inv(elems[a])));
    dense_built_.store(true, std::memory_order_release);
}

bool Algebra::dense_ready() const { return dense_built_.load(std::memory_order_acquire); }

const std::vector<std::uint32_t>& Algebra::mult_table() const {
    if (!dense_ready()) throw ValidationError("dense tables not built");
    return mult_table_;
}

const std::vector<std::uint32_t>& Algebra::inverse_table() const {
    if (!dense_ready()) throw ValidationError("dense tables not built");
    return inverse_table_;
}

// ===========================================================================
// Distinguished elements
// ===========================================================================

AlgebraElement Algebra::zero() const {
    return AlgebraElement(shared_from_this(), {});
}

AlgebraElement Algebra::one() const {
    return basis(identity_element());
}

AlgebraElement Algebra::basis(const WreathElement& x) const {
    AlgebraElement::Terms t;
    t.emplace(encode(x), Cyclotomic(1));
    return AlgebraElement(shared_from_this(), std::move(t));
}

AlgebraElement Algebra::transposition(int i) const {
    if (i < 1 || i >= n_) throw ValidationError("transposition index out of range");
    WreathElement x = identity_element();
    std::swap(x.perm[static_cast<size_t>(i - 1)], x.perm[static_cast<size_t>(i)]);
    return basis(x);
}

AlgebraElement Algebra::slot_element(int j, int g) const {
    if (j < 1 || j > n_) throw ValidationError("slot index out of range");
    if (g < 0 || g >= group_->order) throw ValidationError("group element out of range");
    WreathElement x = identity_element();
    x.colors[static_cast<size_t>(j - 1)] = g;
    return basis(x);
}

AlgebraElement Algebra::class_sum(int j, int alpha, const ConjugacyData& cd) const {
    if (alpha < 0 || alpha >= cd.m()) throw ValidationError("class index out of range");
    AlgebraElement::Terms t;
    Cyclotomic w(Rational(Int(1), Int(cd.sizes[static_cast<size_t>(alpha)])));
    for (int g : cd.classes[static_cast<size_t>(alpha)]) {
        WreathElement x = identity_element();
        x.colors[static_cast<size_t>(j - 1)] = g;
        t.emplace(encode(x), w);
    }
    return AlgebraElement(shared_from_this(), std::move(t));
}

AlgebraElement Algebra::pair_average(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw ValidationError("pair index out of range");
    if (i == j) return one();
    AlgebraElement::Terms t;
    Cyclotomic w(Rational(Int(1), Int(group_->order)));
    for (int g = 0; g < group_->order; ++g) {
        WreathElement x = identity_element();
        x.colors[static_cast<size_t>(i - 1)] = g;
        x.colors[static_cast<size_t>(j - 1)] = group_->inv(g);
        t.emplace(encode(x), w);
    }
    return AlgebraElement(shared_from_this(), std::move(t));
}

AlgebraElement Algebra::jucys_murphy(int k) const {
    if (k < 1 || k > n_) throw ValidationError("jucys-murphy index out of range");
    AlgebraElement jm = zero();
    for (int i = 1; i < k; ++i) {
        AlgebraElement s = transposition(i);
        jm = s * jm * s + pair_average(i, i + 1) * s;
    }
    return jm;
}

// ===========================================================================
// AlgebraElement
// ===========================================================================

AlgebraElement::AlgebraElement(AlgebraPtr ctx, Terms terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    strip_zeros();
}

void AlgebraElement::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

Cyclotomic AlgebraElement::coeff(std::uint64_t code) const {
    auto it = terms_.find(code);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

namespace {
void require_ctx(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a || !b) throw ValidationError("algebra element without context");
    if (!a->compatible(*b)) throw ValidationError("algebra context mismatch");
}
} // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    AlgebraElement::Terms t = a.terms_;
    for (const auto& [code, c] : b.terms_) {
        auto it = t.find(code);
        if (it == t.end()) t.emplace(code, c);
        else it->second += c;
    }
    return AlgebraElement(a.ctx_, std::move(t));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    AlgebraElement::Terms t = a.terms_;
    for (const auto& [code, c] : b.terms_) {
        auto it = t.find(code);
        if (it == t.end()) t.emplace(code, -c);
        else it->second -= c;
    }
    return AlgebraElement(a.ctx_, std::move(t));
}

AlgebraElement operator-(const AlgebraElement& a) {
    if (!a.ctx_) throw ValidationError("algebra element without context");
    AlgebraElement::Terms t = a.terms_;
    for (auto& [code, c] : t) c = -c;
    return AlgebraElement(a.ctx_, std::move(t));
}

AlgebraElement AlgebraElement::scaled(const Cyclotomic& c) const {
    if (!ctx_) throw ValidationError("algebra element without context");
    if (c.is_zero()) return AlgebraElement(ctx_, {});
    Terms t = terms_;
    for (auto& [code, x] : t) x *= c;
    return AlgebraElement(ctx_, std::move(t));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    return AlgebraElement(a.ctx_, kernels::mul_auto(*a.ctx_, a.terms_, b.terms_));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [code, c] : a.terms_) {
        auto it = b.terms_.find(code);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::with_term_added(std::uint64_t code, const Cyclotomic& delta) const {
    if (!ctx_) throw ValidationError("algebra element without context");
    Terms t = terms_;
    auto it = t.find(code);
    if (it == t.end()) t.emplace(code, delta);
    else it->second += delta;
    return AlgebraElement(ctx_, std::move(t));
}

std::string AlgebraElement::serialize() const {
    if (!ctx_) throw ValidationError("algebra element without context");
    std::vector<std::uint64_t> codes;
    codes.reserve(terms_.size());
    for (const auto& [code, c] : terms_) codes.push_back(code);
    std::sort(codes.begin(), codes.end());
    std::ostringstream os;
    os << "element n=" << ctx_->n() << " group-order=" << ctx_->group().order
       << " terms=" << codes.size() << "\n";
    for (std::uint64_t code : codes) os << code << " " << terms_.at(code).to_string() << "\n";
    os << "end";
    return os.str();
}

AlgebraElement AlgebraElement::deserialize(const AlgebraPtr& ctx, const std::string& text) {
    if (!ctx) throw ValidationError("deserialize needs a context");
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty element text");
    int n = -1, go = -1;
    size_t terms_count = 0;
    {
        std::istringstream hs(line);
        std::string tag, kv;
        hs >> tag;
        if (tag != "element") throw ParseError("element text must start with 'element'");
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("bad element header: " + line);
            std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
            try {
                if (key == "n") n = std::stoi(value);
                else if (key == "group-order") go = std::stoi(value);
                else if (key == "terms") terms_count = static_cast<size_t>(std::stoull(value));
                else throw ParseError("unknown element header key: " + key);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad element header: " + line);
            }
        }
    }
    if (n != ctx->n() || go != ctx->group().order)
        throw ValidationError("element text does not match the algebra context");
    Terms t;
    for (size_t i = 0; i < terms_count; ++i) {
        if (!std::getline(is, line)) throw ParseError("element text truncated");
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw ParseError("bad element term: " + line);
        std::uint64_t code;
        try {
            code = std::stoull(line.substr(0, sp));
        } catch (const std::exception&) {
            throw ParseError("bad element code: " + line);
        }
        if (code >= ctx->order()) throw ParseError("element code out of range: " + line);
        t[code] = Cyclotomic::from_string(line.substr(sp + 1));
    }
    if (!std::getline(is, line) || line != "end") throw ParseError("element text missing 'end'");
    return AlgebraElement(ctx, std::move(t));
}

std::string AlgebraElement::pretty() const {
    if (!ctx_) throw ValidationError("algebra element without context");
    if (terms_.empty()) return "0";
    std::vector<std::uint64_t> codes;
    for (const auto& [code, c] : terms_) codes.push_back(code);
    std::sort(codes.begin(), codes.end());
    std::uint64_t id_code = ctx_->encode(ctx_->identity_element());
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t code : codes) {
        if (!first) os << "\n";
        first = false;
        const Cyclotomic& c = terms_.at(code);
        std::string cs = c.to_string();
        if (code == id_code) {
            os << cs;
            continue;
        }
        WreathElement x = ctx_->decode(code);
        std::ostringstream bs;
        bs << "[";
        for (size_t i = 0; i < x.colors.size(); ++i) bs << (i ? "," : "") << x.colors[i];
        bs << "|";
        for (size_t i = 0; i < x.perm.size(); ++i) bs << (i ? " " : "") << x.perm[i];
        bs << "]";
        if (c.is_one()) os << bs.str();
        else if (cs.find(' ') != std::string::npos) os << "(" << cs << ") * " << bs.str();
        else os << cs << " * " << bs.str();
    }
    return os.str();
}

AlgebraElement AlgebraElement::embedded(const AlgebraPtr& bigger) const {
    if (!ctx_ || !bigger) throw ValidationError("algebra element without context");
    if (bigger->n() < ctx_->n() || !(bigger->group_ptr() == ctx_->group_ptr() ||
                                     bigger->group().mult == ctx_->group().mult))
        throw ValidationError("embedding target must extend the source algebra");
    Terms t;
    for (const auto& [code, c] : terms_) {
        WreathElement x = ctx_->decode(code);
        WreathElement y = bigger->identity_element();
        for (int i = 0; i < ctx_->n(); ++i) {
            y.colors[static_cast<size_t>(i)] = x.colors[static_cast<size_t>(i)];
            y.perm[static_cast<size_t>(i)] = x.perm[static_cast<size_t>(i)];
        }
        t.emplace(bigger->encode(y), c);
    }
    return AlgebraElement(bigger, std::move(t));
}

// ===========================================================================
// RatAlgebraElement
// ===========================================================================

RatAlgebraElement::RatAlgebraElement(const AlgebraElement& constant)
    : ctx_(constant.context()) {
    for (const auto& [code, c] : constant.terms()) terms_.emplace(code, RatFun::constant(c));
}

RatAlgebraElement::RatAlgebraElement(AlgebraPtr ctx, Terms terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    strip_zeros();
}

void RatAlgebraElement::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

RatAlgebraElement operator+(const RatAlgebraElement& a, const RatAlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    RatAlgebraElement::Terms t = a.terms_;
    for (const auto& [code, f] : b.terms_) {
        auto it = t.find(code);
        if (it == t.end()) t.emplace(code, f);
        else it->second += f;
    }
    return RatAlgebraElement(a.ctx_, std::move(t));
}

RatAlgebraElement operator*(const RatAlgebraElement& a, const RatAlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    a.ctx_->ensure_dense_tables();
    RatAlgebraElement::Terms t;
    for (const auto& [xa, fa] : a.terms_) {
        for (const auto& [xb, fb] : b.terms_) {
            std::uint64_t z = a.ctx_->mul_codes(xa, xb);
            RatFun prod = fa * fb;
            auto it = t.find(z);
            if (it == t.end()) t.emplace(z, std::move(prod));
            else it->second += prod;
        }
    }
    return RatAlgebraElement(a.ctx_, std::move(t));
}

RatAlgebraElement RatAlgebraElement::scaled(const RatFun& f) const {
    if (!ctx_) throw ValidationError("algebra element without context");
    Terms t;
    if (!f.is_zero())
        for (const auto& [code, g] : terms_) t.emplace(code, g * f);
    return RatAlgebraElement(ctx_, std::move(t));
}

bool operator==(const RatAlgebraElement& a, const RatAlgebraElement& b) {
    require_ctx(a.ctx_, b.ctx_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [code, f] : a.terms_) {
        auto it = b.terms_.find(code);
        if (it == b.terms_.end() || !(it->second == f)) return false;
    }
    return true;
}

AlgebraElement RatAlgebraElement::evaluated(const Cyclotomic& u0, int step) const {
    if (!ctx_) throw ValidationError("algebra element without context");
    AlgebraElement::Terms t;
    for (const auto& [code, f] : terms_) {
        Cyclotomic v;
        try {
            v = f.eval(u0);
        } catch (const PoleError&) {
            std::ostringstream os;
            os << "genuine pole while evaluating the active variable at " << u0.to_string();
            if (step >= 0) os << " (evaluation step " << step << ")";
            throw PoleError(os.str(), u0.to_string(), step);
        }
        if (!v.is_zero()) t.emplace(code, std::move(v));
    }
    return AlgebraElement(ctx_, std::move(t));
}

} // namespace wrf

#pragma once

// Core finite-ring abstraction: a unital associative ring on a canonical
// element indexing 0..order-1, plus the two table-level constructors
// (Z_n and explicit operation tables) and the axiom validator.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finring {

/// Index of a ring element, always relative to one ring.
using Elem = std::uint32_t;

/// Largest ring order any constructor will produce by default.
inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

/// Largest order for which the cubic axiom loops run by default.
inline constexpr Elem kDefaultValidationCap = 512;

class RingError : public std::runtime_error {
public:
    explicit RingError(const std::string& msg) : std::runtime_error(msg) {}
};

class AxiomViolation : public RingError {
public:
    AxiomViolation(std::string axiom, std::vector<Elem> witness)
        : RingError("ring axiom violated: " + axiom),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}
    const std::string& axiom() const noexcept { return axiom_; }
    const std::vector<Elem>& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<Elem> witness_;
};

class CapExceeded : public RingError {
public:
    explicit CapExceeded(const std::string& msg) : RingError(msg) {}
};

class OrderOverflow : public RingError {
public:
    explicit OrderOverflow(const std::string& msg) : RingError(msg) {}
};

class NotAnIdeal : public RingError {
public:
    NotAnIdeal(const std::string& msg, Elem x, Elem r)
        : RingError(msg), pair_{x, r} {}
    std::pair<Elem, Elem> pair() const noexcept { return pair_; }

private:
    std::pair<Elem, Elem> pair_;
};

class NotIdempotent : public RingError {
public:
    explicit NotIdempotent(Elem e)
        : RingError("element " + std::to_string(e) + " is not idempotent"), element_(e) {}
    Elem element() const noexcept { return element_; }

private:
    Elem element_;
};

/// Raised when an internally guaranteed property fails; always a bug.
class InternalInvariant : public RingError {
public:
    explicit InternalInvariant(const std::string& msg)
        : RingError("internal invariant violated: " + msg) {}
};

/// Thread-safe per-ring memo for computed element subsets (raw bit vectors).
class SubsetCache {
public:
    std::shared_ptr<const std::vector<std::uint64_t>> lookup(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = sets_.find(key);
        return it == sets_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const std::vector<std::uint64_t>> store(const std::string& key,
                                                            std::vector<std::uint64_t> bits) const {
        auto owned = std::make_shared<const std::vector<std::uint64_t>>(std::move(bits));
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = sets_.emplace(key, owned);
        (void)inserted;  // first writer wins; identical content either way
        return it->second;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const std::vector<std::uint64_t>>> sets_;
};

/// Implementation interface behind FiniteRing. Immutable after construction.
class RingImpl {
public:
    RingImpl(std::uint64_t order, Elem zero, Elem one, std::string tag)
        : order_(static_cast<Elem>(order)), zero_(zero), one_(one), tag_(std::move(tag)) {
        if (order == 0) throw RingError("ring order must be at least 1");
        if (order > kDefaultOrderCap)
            throw OrderOverflow("ring order " + std::to_string(order) + " exceeds the order cap");
    }
    virtual ~RingImpl() = default;

    Elem order() const noexcept { return order_; }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }
    const std::string& structure() const noexcept { return tag_; }

    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;

    /// Structured rings may answer unit queries without a pair scan.
    virtual bool has_unit_hint() const noexcept { return false; }
    virtual bool unit_hint(Elem) const { return false; }

    /// Human-readable construction summary, e.g. "upper_triangular(2, zmod(3))".
    virtual std::string describe() const { return tag_ + "(" + std::to_string(order_) + ")"; }

private:
    Elem order_;
    Elem zero_;
    Elem one_;
    std::string tag_;
};

/// Value handle for a finite unital ring. Copies share the implementation
/// and the subset cache; all operations are pure.
class FiniteRing {
public:
    explicit FiniteRing(std::shared_ptr<const RingImpl> impl)
        : impl_(std::move(impl)), cache_(std::make_shared<SubsetCache>()) {
        if (!impl_) throw RingError("null ring implementation");
    }

    Elem order() const noexcept { return impl_->order(); }
    Elem zero() const noexcept { return impl_->zero(); }
    Elem one() const noexcept { return impl_->one(); }
    const std::string& structure() const noexcept { return impl_->structure(); }
    std::string describe() const { return impl_->describe(); }

    Elem add(Elem a, Elem b) const { return impl_->add(a, b); }
    Elem neg(Elem a) const { return impl_->neg(a); }
    Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }
    Elem sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }

    bool has_unit_hint() const noexcept { return impl_->has_unit_hint(); }
    bool unit_hint(Elem a) const { return impl_->unit_hint(a); }

    /// x^e with pow(x, 0) = 1.
    Elem pow(Elem x, std::uint64_t e) const {
        Elem acc = one();
        Elem base = x;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return acc;
    }

    /// The image of the integer k under the unique map Z -> R.
    Elem from_int(long long k) const {
        Elem acc = zero();
        const Elem step = (k >= 0) ? one() : neg(one());
        for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) acc = add(acc, step);
        return acc;
    }

    bool same_ring(const FiniteRing& other) const noexcept { return impl_ == other.impl_; }

    const RingImpl& impl() const noexcept { return *impl_; }
    std::shared_ptr<const RingImpl> impl_ptr() const noexcept { return impl_; }
    SubsetCache& cache() const noexcept { return *cache_; }

private:
    std::shared_ptr<const RingImpl> impl_;
    std::shared_ptr<SubsetCache> cache_;
};

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                                std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && acc > cap / base) return std::nullopt;
        acc *= base;
        if (acc > cap) return std::nullopt;
    }
    return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Z_n
// ---------------------------------------------------------------------------

class ZmodImpl final : public RingImpl {
public:
    explicit ZmodImpl(std::uint64_t n) : RingImpl(n, 0, n == 1 ? 0 : 1, "zmod"), n_(n) {}

    Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % n_); }
    Elem neg(Elem a) const override { return static_cast<Elem>((n_ - a) % n_); }
    Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % n_); }

    bool has_unit_hint() const noexcept override { return true; }
    bool unit_hint(Elem a) const override { return std::gcd<std::uint64_t>(a, n_) == 1; }

    std::string describe() const override { return "zmod(" + std::to_string(n_) + ")"; }

private:
    std::uint64_t n_;
};

/// Z_n with index = residue. n = 1 yields the zero ring.
inline FiniteRing make_zmod(std::uint64_t n) {
    if (n == 0) throw RingError("make_zmod: n must be at least 1");
    return FiniteRing(std::make_shared<ZmodImpl>(n));
}

// ---------------------------------------------------------------------------
// Explicit table rings
// ---------------------------------------------------------------------------

class TableRingImpl final : public RingImpl {
public:
    TableRingImpl(std::uint64_t order, std::vector<std::vector<Elem>> add_table,
                  std::vector<std::vector<Elem>> mul_table, std::vector<Elem> neg_table,
                  Elem zero, Elem one)
        : RingImpl(order, zero, one, "table"),
          add_(std::move(add_table)),
          mul_(std::move(mul_table)),
          neg_(std::move(neg_table)) {}

    Elem add(Elem a, Elem b) const override { return add_[a][b]; }
    Elem neg(Elem a) const override { return neg_[a]; }
    Elem mul(Elem a, Elem b) const override { return mul_[a][b]; }

private:
    std::vector<std::vector<Elem>> add_;
    std::vector<std::vector<Elem>> mul_;
    std::vector<Elem> neg_;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::vector<Elem> witness;  // first counterexample, empty when passed
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

enum class ValidationMode {
    Full,     ///< exhaustive triple loops; requires order <= cap
    Sampled,  ///< linear laws in full, associativity/distributivity on seeded samples
};

struct ValidationOptions {
    ValidationMode mode = ValidationMode::Full;
    Elem cap = kDefaultValidationCap;
    std::uint32_t samples = 512;
    std::uint64_t seed = 1;
};

namespace detail {

inline bool brute_force_unit(const FiniteRing& R, Elem u) {
    const Elem n = R.order();
    const Elem one = R.one();
    for (Elem v = 0; v < n; ++v)
        if (R.mul(u, v) == one && R.mul(v, u) == one) return true;
    return false;
}

}  // namespace detail

/// Checks every ring axiom, recording the first counterexample per axiom.
/// Full mode runs the O(order^3) loops and refuses orders above opts.cap;
/// sampled mode checks the unary/binary laws exhaustively and the cubic
/// laws plus the unit hint on seeded random triples.
inline ValidationReport validate_ring(const FiniteRing& R, ValidationOptions opts = {}) {
    const Elem n = R.order();
    if (opts.mode == ValidationMode::Full && n > opts.cap)
        throw CapExceeded("validate_ring: order " + std::to_string(n) +
                          " exceeds validation cap " + std::to_string(opts.cap));

    ValidationReport report;
    auto check = [&](const std::string& name) -> AxiomCheck& {
        report.checks.push_back(AxiomCheck{name, true, {}});
        return report.checks.back();
    };

    {
        auto& c = check("identity-distinct");
        if (n > 1 && R.one() == R.zero()) {
            c.passed = false;
            c.witness = {R.one()};
        }
    }
    {
        auto& c = check("zero-identity");
        for (Elem a = 0; a < n && c.passed; ++a)
            if (R.add(a, R.zero()) != a || R.add(R.zero(), a) != a) {
                c.passed = false;
                c.witness = {a};
            }
    }
    {
        auto& c = check("additive-inverse");
        for (Elem a = 0; a < n && c.passed; ++a)
            if (R.add(a, R.neg(a)) != R.zero()) {
                c.passed = false;
                c.witness = {a};
            }
    }
    {
        auto& c = check("one-identity");
        for (Elem a = 0; a < n && c.passed; ++a)
            if (R.mul(a, R.one()) != a || R.mul(R.one(), a) != a) {
                c.passed = false;
                c.witness = {a};
            }
    }
    {
        auto& c = check("abelian-add");
        for (Elem a = 0; a < n && c.passed; ++a)
            for (Elem b = a; b < n; ++b)
                if (R.add(a, b) != R.add(b, a)) {
                    c.passed = false;
                    c.witness = {a, b};
                    break;
                }
    }

    auto check_triples = [&](const std::string& name, auto law) {
        auto& c = check(name);
        if (opts.mode == ValidationMode::Full) {
            for (Elem a = 0; a < n && c.passed; ++a)
                for (Elem b = 0; b < n && c.passed; ++b)
                    for (Elem cc = 0; cc < n; ++cc)
                        if (!law(a, b, cc)) {
                            c.passed = false;
                            c.witness = {a, b, cc};
                            break;
                        }
        } else {
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<Elem> dist(0, n - 1);
            for (std::uint32_t i = 0; i < opts.samples && c.passed; ++i) {
                Elem a = dist(rng), b = dist(rng), cc = dist(rng);
                if (!law(a, b, cc)) {
                    c.passed = false;
                    c.witness = {a, b, cc};
                }
            }
        }
    };

    check_triples("associative-add",
                  [&](Elem a, Elem b, Elem c) { return R.add(R.add(a, b), c) == R.add(a, R.add(b, c)); });
    check_triples("associative-mul",
                  [&](Elem a, Elem b, Elem c) { return R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)); });
    check_triples("left-distributive",
                  [&](Elem a, Elem b, Elem c) { return R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)); });
    check_triples("right-distributive",
                  [&](Elem a, Elem b, Elem c) { return R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)); });

    if (R.has_unit_hint()) {
        auto& c = check("unit-hint-agrees");
        if (opts.mode == ValidationMode::Full) {
            for (Elem a = 0; a < n && c.passed; ++a)
                if (R.unit_hint(a) != detail::brute_force_unit(R, a)) {
                    c.passed = false;
                    c.witness = {a};
                }
        } else {
            std::mt19937_64 rng(opts.seed + 1);
            std::uniform_int_distribution<Elem> dist(0, n - 1);
            for (std::uint32_t i = 0; i < opts.samples && c.passed; ++i) {
                Elem a = dist(rng);
                if (R.unit_hint(a) != detail::brute_force_unit(R, a)) {
                    c.passed = false;
                    c.witness = {a};
                }
            }
        }
    }

    return report;
}

/// Builds a ring from explicit operation tables and validates it,
/// throwing AxiomViolation on the first failed axiom.
inline FiniteRing make_table_ring(std::uint64_t order, std::vector<std::vector<Elem>> add_table,
                                  std::vector<std::vector<Elem>> mul_table,
                                  std::vector<Elem> neg_table, Elem zero, Elem one,
                                  ValidationOptions opts = {}) {
    auto shape_ok = [&](const std::vector<std::vector<Elem>>& t) {
        if (t.size() != order) return false;
        for (const auto& row : t) {
            if (row.size() != order) return false;
            for (Elem v : row)
                if (v >= order) return false;
        }
        return true;
    };
    if (!shape_ok(add_table) || !shape_ok(mul_table) || neg_table.size() != order ||
        zero >= order || one >= order)
        throw RingError("make_table_ring: tables must be total on 0..order-1");
    for (Elem v : neg_table)
        if (v >= order) throw RingError("make_table_ring: tables must be total on 0..order-1");

    FiniteRing R(std::make_shared<TableRingImpl>(order, std::move(add_table), std::move(mul_table),
                                                 std::move(neg_table), zero, one));
    if (order > opts.cap) opts.mode = ValidationMode::Sampled;
    ValidationReport report = validate_ring(R, opts);
    if (const AxiomCheck* bad = report.first_failure())
        throw AxiomViolation(bad->axiom, bad->witness);
    return R;
}

/// The field with four elements {0, 1, w, w+1}, w^2 = w + 1, characteristic 2.
/// Indices: 0 -> 0, 1 -> 1, 2 -> w, 3 -> w+1. Addition is bitwise xor.
inline FiniteRing make_gf4() {
    std::vector<std::vector<Elem>> add(4, std::vector<Elem>(4));
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) add[a][b] = a ^ b;
    // Multiplication from w^2 = w + 1.
    std::vector<std::vector<Elem>> mul = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    std::vector<Elem> neg = {0, 1, 2, 3};  // characteristic 2
    return make_table_ring(4, std::move(add), std::move(mul), std::move(neg), 0, 1);
}

}  // namespace finring

#pragma once

// Structural subsets of a finite ring: units, Jacobson radical, the delta
// subring, nilpotents, n-potents, center, generated ideals and the images
// of the maps l_a - r_b. Results are cached per ring per label.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// A set of element indices of one ring, stored bit-per-element.
class ElementSubset {
public:
    ElementSubset(FiniteRing ring, std::string label)
        : ring_(std::move(ring)), label_(std::move(label)), bits_(words(ring_.order()), 0) {}

    ElementSubset(FiniteRing ring, std::string label, std::vector<std::uint64_t> bits)
        : ring_(std::move(ring)), label_(std::move(label)), bits_(std::move(bits)) {
        bits_.resize(words(ring_.order()), 0);
    }

    const FiniteRing& ring() const noexcept { return ring_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

    bool contains(Elem x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
    void insert(Elem x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }

    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t w : bits_) total += static_cast<std::size_t>(__builtin_popcountll(w));
        return total;
    }

    bool empty() const { return count() == 0; }

    /// Sorted list of member indices; the serialization order.
    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(count());
        for (Elem x = 0; x < ring_.order(); ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    ElementSubset unite(const ElementSubset& other) const {
        require_same(other);
        ElementSubset out(ring_, "custom", bits_);
        for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
        return out;
    }

    ElementSubset intersect(const ElementSubset& other) const {
        require_same(other);
        ElementSubset out(ring_, "custom", bits_);
        for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
        return out;
    }

    ElementSubset complement() const {
        ElementSubset out(ring_, "custom");
        for (Elem x = 0; x < ring_.order(); ++x)
            if (!contains(x)) out.insert(x);
        return out;
    }

    /// {a + b : a in this, b in other}.
    ElementSubset sum_set(const ElementSubset& other) const {
        require_same(other);
        ElementSubset out(ring_, "custom");
        for (Elem a : elements())
            for (Elem b : other.elements()) out.insert(ring_.add(a, b));
        return out;
    }

    bool is_subset_of(const ElementSubset& other) const {
        require_same(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~other.bits_[i]) return false;
        return true;
    }

    friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
        a.require_same(b);
        return a.bits_ == b.bits_;
    }

private:
    static std::size_t words(Elem order) { return (static_cast<std::size_t>(order) + 63) / 64; }

    void require_same(const ElementSubset& other) const {
        if (!ring_.same_ring(other.ring_))
            throw RingError("set operation on subsets of different rings");
    }

    FiniteRing ring_;
    std::string label_;
    std::vector<std::uint64_t> bits_;
};

namespace detail {

template <typename Fn>
ElementSubset cached_subset(const FiniteRing& R, const std::string& key, Fn&& compute) {
    if (auto hit = R.cache().lookup(key)) return ElementSubset(R, key, *hit);
    ElementSubset fresh = compute();
    R.cache().store(key, fresh.bits());
    return fresh;
}

}  // namespace detail

/// True when x has a two-sided inverse; uses the ring's structural shortcut
/// when available, otherwise a pair scan.
inline bool is_unit(const FiniteRing& R, Elem x) {
    if (R.has_unit_hint()) return R.unit_hint(x);
    return detail::brute_force_unit(R, x);
}

/// U(R).
inline ElementSubset units(const FiniteRing& R) {
    return detail::cached_subset(R, "units", [&] {
        ElementSubset out(R, "units");
        for (Elem x = 0; x < R.order(); ++x)
            if (is_unit(R, x)) out.insert(x);
        return out;
    });
}

/// J(R) = {x : 1 - rx is a unit for every r}. The result is re-checked to
/// be a two-sided ideal; failure would mean a broken ring and raises
/// InternalInvariant.
inline ElementSubset jacobson_radical(const FiniteRing& R) {
    return detail::cached_subset(R, "jacobson", [&] {
        const Elem n = R.order();
        const Elem one = R.one();
        ElementSubset U = units(R);
        ElementSubset out(R, "jacobson");
        for (Elem x = 0; x < n; ++x) {
            bool quasi = true;
            for (Elem r = 0; r < n; ++r) {
                if (!U.contains(R.sub(one, R.mul(r, x)))) {
                    quasi = false;
                    break;
                }
            }
            if (quasi) out.insert(x);
        }
        // sanity: J(R) must be a two-sided ideal
        auto members = out.elements();
        for (Elem x : members) {
            if (!out.contains(R.neg(x)))
                throw InternalInvariant("jacobson radical not closed under negation");
            for (Elem y : members)
                if (!out.contains(R.add(x, y)))
                    throw InternalInvariant("jacobson radical not additively closed");
            for (Elem r = 0; r < n; ++r)
                if (!out.contains(R.mul(r, x)) || !out.contains(R.mul(x, r)))
                    throw InternalInvariant("jacobson radical not absorbing");
        }
        return out;
    });
}

/// Delta(R) = {x : x + u is a unit for every unit u}.
inline ElementSubset delta(const FiniteRing& R) {
    return detail::cached_subset(R, "delta", [&] {
        ElementSubset U = units(R);
        ElementSubset out(R, "delta");
        auto unit_elems = U.elements();
        for (Elem x = 0; x < R.order(); ++x) {
            bool ok = true;
            for (Elem u : unit_elems) {
                if (!U.contains(R.add(x, u))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(x);
        }
        return out;
    });
}

/// {x : 1 - xu is a unit for every unit u}; agrees with delta(R) on every
/// ring (checked by the property suite).
inline ElementSubset delta_alt1(const FiniteRing& R) {
    return detail::cached_subset(R, "delta_alt1", [&] {
        ElementSubset U = units(R);
        ElementSubset out(R, "delta_alt1");
        auto unit_elems = U.elements();
        const Elem one = R.one();
        for (Elem x = 0; x < R.order(); ++x) {
            bool ok = true;
            for (Elem u : unit_elems) {
                if (!U.contains(R.sub(one, R.mul(x, u)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(x);
        }
        return out;
    });
}

/// {x : 1 - ux is a unit for every unit u}.
inline ElementSubset delta_alt2(const FiniteRing& R) {
    return detail::cached_subset(R, "delta_alt2", [&] {
        ElementSubset U = units(R);
        ElementSubset out(R, "delta_alt2");
        auto unit_elems = U.elements();
        const Elem one = R.one();
        for (Elem x = 0; x < R.order(); ++x) {
            bool ok = true;
            for (Elem u : unit_elems) {
                if (!U.contains(R.sub(one, R.mul(u, x)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.insert(x);
        }
        return out;
    });
}

/// Nil(R). In a finite ring of order N the power sequence of x cycles within
/// N steps, so x is nilpotent iff x^(2^ceil(log2 N)) = 0, which repeated
/// squaring reaches in O(log N) multiplications.
inline ElementSubset nilpotents(const FiniteRing& R) {
    return detail::cached_subset(R, "nilpotents", [&] {
        const Elem n = R.order();
        unsigned steps = 0;
        while ((std::uint64_t{1} << steps) < n) ++steps;
        ElementSubset out(R, "nilpotents");
        for (Elem x = 0; x < n; ++x) {
            Elem y = x;
            for (unsigned i = 0; i < steps && y != R.zero(); ++i) y = R.mul(y, y);
            if (y == R.zero()) out.insert(x);
        }
        return out;
    });
}

/// {x : x^n = x}; n = 2 gives Id(R), n = 3 the tripotents.
inline ElementSubset potents(const FiniteRing& R, unsigned n) {
    if (n < 2) throw RingError("potents: exponent must be at least 2");
    return detail::cached_subset(R, "potents:" + std::to_string(n), [&] {
        ElementSubset out(R, "potents:" + std::to_string(n));
        for (Elem x = 0; x < R.order(); ++x)
            if (R.pow(x, n) == x) out.insert(x);
        return out;
    });
}

inline ElementSubset idempotents(const FiniteRing& R) { return potents(R, 2); }
inline ElementSubset tripotents(const FiniteRing& R) { return potents(R, 3); }

/// Z(R).
inline ElementSubset center(const FiniteRing& R) {
    return detail::cached_subset(R, "center", [&] {
        const Elem n = R.order();
        ElementSubset out(R, "center");
        for (Elem z = 0; z < n; ++z) {
            bool central = true;
            for (Elem r = 0; r < n; ++r) {
                if (R.mul(z, r) != R.mul(r, z)) {
                    central = false;
                    break;
                }
            }
            if (central) out.insert(z);
        }
        return out;
    });
}

/// Smallest two-sided ideal containing the generators, by closure iteration
/// under addition, negation and left/right multiplication.
inline ElementSubset ideal_generated_by(const FiniteRing& R, const std::vector<Elem>& generators) {
    const Elem n = R.order();
    ElementSubset out(R, "ideal");
    out.insert(R.zero());
    std::vector<Elem> worklist = {R.zero()};
    auto push = [&](Elem x) {
        if (!out.contains(x)) {
            out.insert(x);
            worklist.push_back(x);
        }
    };
    for (Elem g : generators) push(g);
    std::vector<Elem> members = {R.zero()};
    while (!worklist.empty()) {
        Elem x = worklist.back();
        worklist.pop_back();
        push(R.neg(x));
        for (Elem r = 0; r < n; ++r) {
            push(R.mul(r, x));
            push(R.mul(x, r));
        }
        for (std::size_t i = 0; i < members.size(); ++i) push(R.add(x, members[i]));
        members.push_back(x);
    }
    return out;
}

inline ElementSubset ideal_generated_by(const FiniteRing& R, const ElementSubset& S) {
    return ideal_generated_by(R, S.elements());
}

/// True when S is a two-sided ideal of R.
inline bool is_two_sided_ideal(const FiniteRing& R, const ElementSubset& S, Elem* bad_x = nullptr,
                               Elem* bad_r = nullptr) {
    auto fail = [&](Elem x, Elem r) {
        if (bad_x) *bad_x = x;
        if (bad_r) *bad_r = r;
        return false;
    };
    if (!S.contains(R.zero())) return fail(R.zero(), R.zero());
    auto members = S.elements();
    for (Elem x : members) {
        if (!S.contains(R.neg(x))) return fail(x, x);
        for (Elem y : members)
            if (!S.contains(R.add(x, y))) return fail(x, y);
        for (Elem r = 0; r < R.order(); ++r)
            if (!S.contains(R.mul(r, x)) || !S.contains(R.mul(x, r))) return fail(x, r);
    }
    return true;
}

/// Image of the abelian-group endomorphism x |-> ax - xb.
inline ElementSubset lr_image(const FiniteRing& R, Elem a, Elem b) {
    ElementSubset out(R, "image");
    for (Elem x = 0; x < R.order(); ++x) out.insert(R.sub(R.mul(a, x), R.mul(x, b)));
    return out;
}

/// Whether l_a - r_b is surjective.
inline bool lr_surjective(const FiniteRing& R, Elem a, Elem b) {
    return lr_image(R, a, b).count() == R.order();
}

}  // namespace finring

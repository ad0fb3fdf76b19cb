#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/checked.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"

namespace nilmult {

/// b_1..b_k where b_i counts the basic commutators of weight c+1 on i
/// letters; b_1 is always 0. These are the multiplicity ingredients of the
/// structure formula below.
inline std::vector<long long> b_sequence(long long c, long long k) {
    if (c < 1) throw std::invalid_argument("b_sequence: class must be >= 1");
    if (k < 0) throw std::invalid_argument("b_sequence: length must be >= 0");
    std::vector<long long> b;
    b.reserve(static_cast<std::size_t>(k));
    for (long long i = 1; i <= k; ++i) b.push_back(witt(c + 1, i));
    return b;
}

/// Direct sum of concrete cyclic groups as (order, multiplicity) pairs in
/// the structure formula's own shape: one pair per invariant-factor index,
/// order preserved, with order-1 and multiplicity-0 entries dropped. Two
/// lists with different shapes can still be the same group — compare with
/// isomorphic(), which works on primary decompositions.
class MultiplierStructure {
public:
    struct Factor {
        long long order;
        long long multiplicity;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    MultiplierStructure() = default;

    explicit MultiplierStructure(std::vector<Factor> raw) {
        for (const Factor& f : raw) {
            if (f.order < 1 || f.multiplicity < 0)
                throw std::invalid_argument("MultiplierStructure: bad factor");
            if (f.order == 1 || f.multiplicity == 0) continue;
            factors_.push_back(f);
        }
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }

    long long rank() const {
        long long r = 0;
        for (const Factor& f : factors_) r = checked::add(r, f.multiplicity);
        return r;
    }

    FactoredOrder order() const {
        FactoredOrder total;
        for (const Factor& f : factors_)
            for (const auto& [p, e] : factorize(f.order))
                total[p] = checked::add(total[p], checked::mul(e, f.multiplicity));
        return total;
    }

    friend bool operator==(const MultiplierStructure&, const MultiplierStructure&) = default;

private:
    std::vector<Factor> factors_;
};

/// Multiset of primary cyclic factors: prime -> (valuation -> multiplicity).
/// Two structures describe isomorphic groups iff these maps are equal, even
/// when their surface factor lists differ (e.g. Z_6 versus Z_2 + Z_3).
using PrimaryMultiset = std::map<long long, std::map<long long, long long>>;

inline PrimaryMultiset primary_multiset(const MultiplierStructure& m) {
    PrimaryMultiset result;
    for (const auto& f : m.factors())
        for (const auto& [p, e] : factorize(f.order))
            result[p][e] = checked::add(result[p][e], f.multiplicity);
    return result;
}

inline bool isomorphic(const MultiplierStructure& a, const MultiplierStructure& b) {
    return primary_multiset(a) == primary_multiset(b);
}

/// Symbolic analogue for p-groups: factors are (exponent, multiplicity)
/// meaning (Z_{p^exponent})^(multiplicity), prime left symbolic.
class PMultiplierStructure {
public:
    struct Factor {
        long long exponent;
        long long multiplicity;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    PMultiplierStructure() = default;

    explicit PMultiplierStructure(std::vector<Factor> raw) {
        for (const Factor& f : raw) {
            if (f.exponent < 0 || f.multiplicity < 0)
                throw std::invalid_argument("PMultiplierStructure: bad factor");
            if (f.exponent == 0 || f.multiplicity == 0) continue;
            factors_.push_back(f);
        }
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }

    long long rank() const {
        long long r = 0;
        for (const Factor& f : factors_) r = checked::add(r, f.multiplicity);
        return r;
    }

    /// The e in |structure| = p^e.
    long long order_exponent() const {
        long long e = 0;
        for (const Factor& f : factors_)
            e = checked::add(e, checked::mul(f.exponent, f.multiplicity));
        return e;
    }

    friend bool operator==(const PMultiplierStructure&, const PMultiplierStructure&) = default;

private:
    std::vector<Factor> factors_;
};

/// Structure formula: for G = Z_{n_1} + ... + Z_{n_k} (divisibility chain),
/// the class-c multiplier is Z_{n_2}^(b_2) + Z_{n_3}^(b_3-b_2) + ... +
/// Z_{n_k}^(b_k-b_{k-1}); trivial when k <= 1 (cyclic and trivial groups).
inline MultiplierStructure nilpotent_multiplier(const InvariantFactorForm& g, long long c) {
    if (c < 1) throw std::invalid_argument("nilpotent_multiplier: class must be >= 1");
    const auto& n = g.factors();
    const long long k = static_cast<long long>(n.size());
    if (k <= 1) return MultiplierStructure();
    const std::vector<long long> b = b_sequence(c, k);
    std::vector<MultiplierStructure::Factor> raw;
    for (long long i = 2; i <= k; ++i)
        raw.push_back({n[static_cast<std::size_t>(i - 1)],
                       checked::sub(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i - 2)])});
    return MultiplierStructure(std::move(raw));
}

/// Same formula on a symbolic p-group: n_i = p^{alpha_i}.
inline PMultiplierStructure nilpotent_multiplier(const PGroupPartition& g, long long c) {
    if (c < 1) throw std::invalid_argument("nilpotent_multiplier: class must be >= 1");
    const auto& alpha = g.parts();
    const long long k = static_cast<long long>(alpha.size());
    if (k <= 1) return PMultiplierStructure();
    const std::vector<long long> b = b_sequence(c, k);
    std::vector<PMultiplierStructure::Factor> raw;
    for (long long i = 2; i <= k; ++i)
        raw.push_back({alpha[static_cast<std::size_t>(i - 1)],
                       checked::sub(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i - 2)])});
    return PMultiplierStructure(std::move(raw));
}

/// Exponent of the multiplier order for a p-group of type alpha:
/// alpha_2*b_2 + alpha_3*(b_3-b_2) + ... + alpha_k*(b_k-b_{k-1}); 0 for
/// k <= 1. Computed directly so it stays cheap inside exhaustive scans.
inline long long multiplier_order_exponent(const PGroupPartition& g, long long c) {
    if (c < 1) throw std::invalid_argument("multiplier_order_exponent: class must be >= 1");
    const auto& alpha = g.parts();
    const long long k = static_cast<long long>(alpha.size());
    if (k <= 1) return 0;
    long long total = 0;
    long long previous_b = 0;
    for (long long i = 2; i <= k; ++i) {
        const long long b_i = witt(c + 1, i);
        total = checked::add(total,
                             checked::mul(alpha[static_cast<std::size_t>(i - 1)],
                                          checked::sub(b_i, previous_b)));
        previous_b = b_i;
    }
    return total;
}

/// Order of the class-c multiplier in factored form, prime -> exponent.
inline FactoredOrder multiplier_order(const InvariantFactorForm& g, long long c) {
    return nilpotent_multiplier(g, c).order();
}

/// "Z_8 + Z_2^(2)" for concrete structures, "trivial" when empty.
inline std::string render_structure(const MultiplierStructure& m) {
    if (m.trivial()) return "trivial";
    std::string text;
    for (const auto& f : m.factors()) {
        if (!text.empty()) text += " + ";
        text += "Z_" + std::to_string(f.order);
        if (f.multiplicity > 1) text += "^(" + std::to_string(f.multiplicity) + ")";
    }
    return text;
}

/// "Z_{p^3}^(2) + Z_p" for symbolic structures, "trivial" when empty.
inline std::string render_structure(const PMultiplierStructure& m) {
    if (m.trivial()) return "trivial";
    std::string text;
    for (const auto& f : m.factors()) {
        if (!text.empty()) text += " + ";
        text += (f.exponent == 1) ? "Z_p" : "Z_{p^" + std::to_string(f.exponent) + "}";
        if (f.multiplicity > 1) text += "^(" + std::to_string(f.multiplicity) + ")";
    }
    return text;
}

/// "2^3 · 3" style rendering of a factored order; "1" when empty.
inline std::string render_order(const FactoredOrder& order) {
    if (order.empty()) return "1";
    std::string text;
    for (const auto& [p, e] : order) {
        if (!text.empty()) text += " · ";
        text += std::to_string(p);
        if (e > 1) text += "^" + std::to_string(e);
    }
    return text;
}

/// "p^8" style rendering of a symbolic p-power order; "1" when e = 0.
inline std::string render_p_power(long long e) {
    if (e == 0) return "1";
    if (e == 1) return "p";
    return "p^" + std::to_string(e);
}

} // namespace nilmult

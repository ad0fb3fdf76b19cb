#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilmult/checked.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

/// Prime factorization of a positive integer, kept as prime -> exponent so
/// that huge orders (p raised to a Witt number) never have to be expanded.
using FactoredOrder = std::map<long long, long long>;

/// Trial-division factorization. Exact and total for any n >= 1.
inline FactoredOrder factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    FactoredOrder factors;
    for (long long p = 2; p <= n / p; ++p) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

/// A finite abelian group given as a direct sum of cyclic groups of the
/// listed orders, in no particular order. Empty list = trivial group.
class CyclicDecomposition {
public:
    CyclicDecomposition() = default;

    explicit CyclicDecomposition(std::vector<long long> orders) : orders_(std::move(orders)) {
        for (long long n : orders_)
            if (n < 2)
                throw std::invalid_argument("CyclicDecomposition: every order must be >= 2, got " +
                                            std::to_string(n));
    }

    const std::vector<long long>& orders() const { return orders_; }

    friend bool operator==(const CyclicDecomposition&, const CyclicDecomposition&) = default;

private:
    std::vector<long long> orders_;
};

/// The canonical divisibility-chain form n_1, ..., n_k with n_{i+1} | n_i;
/// two finite abelian groups are isomorphic iff these chains coincide.
class InvariantFactorForm {
public:
    InvariantFactorForm() = default;

    explicit InvariantFactorForm(std::vector<long long> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2)
                throw std::invalid_argument("InvariantFactorForm: every factor must be >= 2");
            if (i + 1 < factors_.size() && factors_[i] % factors_[i + 1] != 0)
                throw std::invalid_argument(
                    "InvariantFactorForm: " + std::to_string(factors_[i + 1]) +
                    " does not divide " + std::to_string(factors_[i]));
        }
    }

    const std::vector<long long>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }

    friend bool operator==(const InvariantFactorForm&, const InvariantFactorForm&) = default;

private:
    std::vector<long long> factors_;
};

/// An abelian p-group of order p^n as the partition of n given by the
/// exponents of its cyclic factors. The prime stays symbolic: none of the
/// arithmetic downstream depends on its value.
class PGroupPartition {
public:
    PGroupPartition() = default;

    explicit PGroupPartition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("PGroupPartition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("PGroupPartition: parts must be weakly decreasing");
        }
    }

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    friend auto operator<=>(const PGroupPartition&, const PGroupPartition&) = default;

private:
    std::vector<long long> parts_;
};

/// Sum of the parts: the n in |G| = p^n.
inline long long order_exponent(const PGroupPartition& g) {
    long long n = 0;
    for (long long part : g.parts()) n = checked::add(n, part);
    return n;
}

/// Per-prime structure of a group: prime -> partition of cyclic-factor
/// valuations at that prime.
using PrimaryDecomposition = std::map<long long, PGroupPartition>;

namespace detail {

/// Valuations of every order at every prime, each prime's list sorted
/// decreasing. Shared by primary decomposition and canonicalization.
inline std::map<long long, std::vector<long long>> valuation_table(const std::vector<long long>& orders) {
    std::map<long long, std::vector<long long>> table;
    for (long long n : orders)
        for (const auto& [p, e] : factorize(n)) table[p].push_back(e);
    for (auto& [p, exponents] : table)
        std::sort(exponents.begin(), exponents.end(), std::greater<>());
    return table;
}

} // namespace detail

inline PrimaryDecomposition primary_decompose(const CyclicDecomposition& g) {
    PrimaryDecomposition result;
    for (auto& [p, exponents] : detail::valuation_table(g.orders()))
        result.emplace(p, PGroupPartition(std::move(exponents)));
    return result;
}

inline PrimaryDecomposition primary_decompose(const InvariantFactorForm& g) {
    PrimaryDecomposition result;
    for (auto& [p, exponents] : detail::valuation_table(g.factors()))
        result.emplace(p, PGroupPartition(std::move(exponents)));
    return result;
}

/// Rebuilds the divisibility chain from per-prime data: the j-th invariant
/// factor multiplies together the j-th largest prime power of every prime.
inline InvariantFactorForm recompose(const PrimaryDecomposition& parts) {
    std::size_t chain_length = 0;
    for (const auto& [p, partition] : parts)
        chain_length = std::max(chain_length, partition.size());

    std::vector<long long> factors(chain_length, 1);
    for (const auto& [p, partition] : parts)
        for (std::size_t j = 0; j < partition.size(); ++j)
            factors[j] = checked::mul(factors[j], checked::pow(p, partition.parts()[j]));
    return InvariantFactorForm(std::move(factors));
}

/// Unique invariant-factor form of the group described by an arbitrary
/// cyclic decomposition.
inline InvariantFactorForm canonicalize(const CyclicDecomposition& g) {
    return recompose(primary_decompose(g));
}

inline FactoredOrder group_order(const InvariantFactorForm& g) {
    FactoredOrder order;
    for (const auto& [p, partition] : primary_decompose(g)) order[p] = order_exponent(partition);
    return order;
}

/// Streams the partitions of n in reverse-lexicographic order, (n) first and
/// (1^n) last; yields exactly the partition function p(n) many values.
class PartitionGenerator {
public:
    explicit PartitionGenerator(long long n) {
        if (n < 0) throw std::invalid_argument("PartitionGenerator: n must be >= 0");
        if (n > 0) current_.assign(1, n);
    }

    /// False once the stream is exhausted; `out` is untouched in that case.
    bool next(PGroupPartition& out) {
        if (done_) return false;
        out = PGroupPartition(current_);
        advance();
        return true;
    }

private:
    void advance() {
        // Reverse-lex successor: decrement the last part that exceeds 1 and
        // greedily refill the freed weight with parts no larger than it.
        std::size_t i = current_.size();
        while (i > 0 && current_[i - 1] == 1) --i;
        if (i == 0) {
            done_ = true;
            return;
        }
        long long freed = static_cast<long long>(current_.size() - i);
        const long long cap = current_[i - 1] - 1;
        freed += current_[i - 1];
        current_.resize(i - 1);
        while (freed > 0) {
            const long long part = std::min(cap, freed);
            current_.push_back(part);
            freed -= part;
        }
    }

    std::vector<long long> current_;
    bool done_ = false;
};

template <typename Fn>
inline void for_each_partition(long long n, Fn&& fn) {
    PartitionGenerator stream(n);
    PGroupPartition partition;
    while (stream.next(partition)) fn(partition);
}

inline std::vector<PGroupPartition> all_partitions(long long n) {
    std::vector<PGroupPartition> result;
    for_each_partition(n, [&](const PGroupPartition& p) { result.push_back(p); });
    return result;
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            pieces.push_back(text.substr(start));
            return pieces;
        }
        pieces.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

inline std::string_view strip_spaces(std::string_view piece) {
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    return piece;
}

inline long long parse_integer(std::string_view piece, const char* what) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || end != piece.data() + piece.size())
        throw std::invalid_argument(std::string(what) + ": '" + std::string(piece) +
                                    "' is not an integer");
    return value;
}

} // namespace detail

/// Parses the CLI group syntax "4,2,2" (comma-separated cyclic orders).
inline CyclicDecomposition parse_cyclic_decomposition(std::string_view text) {
    std::vector<long long> orders;
    for (std::string_view piece : detail::split_commas(text)) {
        piece = detail::strip_spaces(piece);
        orders.push_back(detail::parse_integer(piece, "group"));
    }
    return CyclicDecomposition(std::move(orders));
}

/// Parses the CLI partition syntax: either bare exponents "3,1,1" or the
/// symbolic form "p^3,p,p" (a lone "p" means exponent 1).
inline PGroupPartition parse_partition(std::string_view text) {
    std::vector<long long> parts;
    const bool symbolic = text.find('p') != std::string_view::npos;
    for (std::string_view piece : detail::split_commas(text)) {
        piece = detail::strip_spaces(piece);
        if (symbolic) {
            if (piece == "p") {
                parts.push_back(1);
                continue;
            }
            if (piece.size() < 3 || piece[0] != 'p' || piece[1] != '^')
                throw std::invalid_argument("partition: expected 'p' or 'p^e', got '" +
                                            std::string(piece) + "'");
            parts.push_back(detail::parse_integer(piece.substr(2), "partition"));
        } else {
            parts.push_back(detail::parse_integer(piece, "partition"));
        }
    }
    return PGroupPartition(std::move(parts));
}

} // namespace nilmult

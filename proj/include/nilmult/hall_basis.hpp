#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilmult/checked.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

/// A generator symbol x_i with i >= 1.
struct Letter {
    int index;

    explicit Letter(int i) : index(i) {
        if (i < 1) throw std::invalid_argument("Letter: index must be >= 1");
    }

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A bracket word over letters: either a single letter or [left, right].
///
/// Values are immutable handles onto shared tree nodes, so copies are cheap
/// and a bracket can reference its operands without duplicating them. The
/// weight (number of letter occurrences) is cached at construction.
class BasicCommutator {
public:
    explicit BasicCommutator(Letter l)
        : node_(std::make_shared<const Node>(Node{nullptr, nullptr, l.index, 1})) {}

    static BasicCommutator bracket(const BasicCommutator& left, const BasicCommutator& right) {
        return BasicCommutator(std::make_shared<const Node>(
            Node{left.node_, right.node_, 0, left.weight() + right.weight()}));
    }

    bool is_letter() const { return node_->left == nullptr; }

    int letter_index() const {
        if (!is_letter()) throw std::logic_error("letter_index on a bracket");
        return node_->letter;
    }

    BasicCommutator left() const {
        if (is_letter()) throw std::logic_error("left() on a letter");
        return BasicCommutator(node_->left);
    }

    BasicCommutator right() const {
        if (is_letter()) throw std::logic_error("right() on a letter");
        return BasicCommutator(node_->right);
    }

    int weight() const { return node_->weight; }

    /// Total order: by weight first; within a weight, letters by index,
    /// letters before brackets, brackets lexicographically by (left, right).
    friend std::strong_ordering operator<=>(const BasicCommutator& a, const BasicCommutator& b) {
        if (a.node_ == b.node_) return std::strong_ordering::equal;
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (a.is_letter() && b.is_letter()) return a.letter_index() <=> b.letter_index();
        if (a.is_letter() != b.is_letter())
            return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
    }

    friend bool operator==(const BasicCommutator& a, const BasicCommutator& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    struct Node {
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int letter; // meaningful only for leaves
        int weight;
    };

    explicit BasicCommutator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Moebius function: 1 at 1, 0 when a squared prime divides m, otherwise
/// (-1)^s for s distinct prime factors. Rejects m < 1.
inline int mobius(long long m) {
    if (m < 1) throw std::invalid_argument("mobius: argument must be >= 1");
    int distinct = 0;
    for (long long p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        ++distinct;
    }
    if (m > 1) ++distinct;
    return (distinct % 2 == 0) ? 1 : -1;
}

/// Number of basic commutators of the given weight on `letters` generators:
/// (1/weight) * sum over divisors m of weight of mobius(m) * letters^(weight/m).
///
/// All arithmetic is checked; the divisor sum must come out exactly divisible
/// by the weight, which is re-verified on every call.
inline long long witt(long long weight, long long letters) {
    if (weight < 1) throw std::invalid_argument("witt: weight must be >= 1");
    if (letters < 0) throw std::invalid_argument("witt: letters must be >= 0");
    long long sum = 0;
    auto accumulate = [&](long long divisor) {
        const int mu = mobius(divisor);
        if (mu == 0) return;
        const long long term = checked::pow(letters, weight / divisor);
        sum = (mu > 0) ? checked::add(sum, term) : checked::sub(sum, term);
    };
    for (long long d = 1; d <= weight / d; ++d) {
        if (weight % d != 0) continue;
        accumulate(d);
        if (d != weight / d) accumulate(weight / d);
    }
    if (sum % weight != 0)
        throw InternalError("witt: divisor sum " + std::to_string(sum) +
                            " not divisible by weight " + std::to_string(weight));
    return sum / weight;
}

/// Canonical bracket notation, e.g. "[[x2,x1],x1]".
inline std::string render_commutator(const BasicCommutator& c) {
    if (c.is_letter()) return "x" + std::to_string(c.letter_index());
    return "[" + render_commutator(c.left()) + "," + render_commutator(c.right()) + "]";
}

namespace detail {

inline BasicCommutator parse_commutator_at(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) throw std::invalid_argument("parse_commutator: unexpected end of input");
    if (text[pos] == 'x') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("parse_commutator: missing letter index");
        long long index = 0;
        for (std::size_t i = start; i < pos; ++i) {
            index = index * 10 + (text[i] - '0');
            if (index > 1'000'000'000) throw std::invalid_argument("parse_commutator: letter index too large");
        }
        return BasicCommutator(Letter(static_cast<int>(index)));
    }
    if (text[pos] == '[') {
        ++pos;
        BasicCommutator left = parse_commutator_at(text, pos);
        if (pos >= text.size() || text[pos] != ',')
            throw std::invalid_argument("parse_commutator: expected ','");
        ++pos;
        BasicCommutator right = parse_commutator_at(text, pos);
        if (pos >= text.size() || text[pos] != ']')
            throw std::invalid_argument("parse_commutator: expected ']'");
        ++pos;
        return BasicCommutator::bracket(left, right);
    }
    throw std::invalid_argument("parse_commutator: expected 'x' or '['");
}

} // namespace detail

/// Inverse of render_commutator. Rejects anything but the canonical notation.
inline BasicCommutator parse_commutator(std::string_view text) {
    std::size_t pos = 0;
    BasicCommutator c = detail::parse_commutator_at(text, pos);
    if (pos != text.size()) throw std::invalid_argument("parse_commutator: trailing input");
    return c;
}

namespace detail {

inline long long leaf_count(const BasicCommutator& c) {
    return c.is_letter() ? 1 : leaf_count(c.left()) + leaf_count(c.right());
}

} // namespace detail

/// Re-validates a tree against the basic-commutator rules, independently of
/// how it was produced: cached weights must equal actual letter counts, every
/// bracket must have left > right, and a bracket whose left operand is itself
/// a bracket [s,t] must have right >= t.
inline bool is_basic_commutator(const BasicCommutator& c) {
    if (c.weight() != detail::leaf_count(c)) return false;
    if (c.is_letter()) return true;
    const BasicCommutator left = c.left();
    const BasicCommutator right = c.right();
    if (!is_basic_commutator(left) || !is_basic_commutator(right)) return false;
    if (!(left > right)) return false;
    if (!left.is_letter() && right < left.right()) return false;
    return true;
}

inline constexpr long long kDefaultElementCap = 10'000'000;

/// All basic commutators on a fixed alphabet up to a weight bound, stratified
/// by weight and sorted within each stratum.
struct HallBasis {
    int letters = 0;
    std::vector<std::vector<BasicCommutator>> per_weight; // per_weight[k-1] holds weight k

    long long size() const {
        long long n = 0;
        for (const auto& layer : per_weight) n += static_cast<long long>(layer.size());
        return n;
    }

    const std::vector<BasicCommutator>& weight_layer(int weight) const {
        if (weight < 1 || static_cast<std::size_t>(weight) > per_weight.size())
            throw std::out_of_range("HallBasis: no such weight layer");
        return per_weight[static_cast<std::size_t>(weight) - 1];
    }
};

/// Generates the basis layer by layer. Weight-k candidates are brackets
/// [a, b] with weight(a) + weight(b) = k drawn from previous layers, kept iff
/// a > b and, when a = [s, t], b >= t. Throws SizeLimitError once the total
/// element count would exceed `element_cap`.
inline HallBasis generate_hall_basis(int letters, int max_weight,
                                     long long element_cap = kDefaultElementCap) {
    if (letters < 1) throw std::invalid_argument("generate_hall_basis: letters must be >= 1");
    if (max_weight < 1) throw std::invalid_argument("generate_hall_basis: max_weight must be >= 1");

    HallBasis basis;
    basis.letters = letters;
    basis.per_weight.resize(static_cast<std::size_t>(max_weight));

    long long total = 0;
    auto count_one = [&] {
        if (++total > element_cap)
            throw SizeLimitError("generate_hall_basis: basis exceeds cap of " +
                                 std::to_string(element_cap) + " elements");
    };

    auto& weight_one = basis.per_weight[0];
    weight_one.reserve(static_cast<std::size_t>(letters));
    for (int i = 1; i <= letters; ++i) {
        count_one();
        weight_one.emplace_back(Letter(i));
    }

    for (int k = 2; k <= max_weight; ++k) {
        std::vector<BasicCommutator> layer;
        // Splits with left weight a > right weight b pass the ordering rule
        // outright; the a == b split needs the within-layer comparison.
        for (int a = k - 1; 2 * a >= k; --a) {
            const int b = k - a;
            const auto& lefts = basis.per_weight[static_cast<std::size_t>(a) - 1];
            const auto& rights = basis.per_weight[static_cast<std::size_t>(b) - 1];
            for (std::size_t i = 0; i < lefts.size(); ++i) {
                const BasicCommutator& big = lefts[i];
                // When the left operand is a bracket [s, t], only right
                // operands >= t are admissible.
                const std::size_t j_end = (a == b) ? i : rights.size();
                for (std::size_t j = 0; j < j_end; ++j) {
                    const BasicCommutator& small = rights[j];
                    if (!big.is_letter() && small < big.right()) continue;
                    count_one();
                    layer.push_back(BasicCommutator::bracket(big, small));
                }
            }
        }
        std::sort(layer.begin(), layer.end());
        basis.per_weight[static_cast<std::size_t>(k) - 1] = std::move(layer);
    }
    return basis;
}

} // namespace nilmult

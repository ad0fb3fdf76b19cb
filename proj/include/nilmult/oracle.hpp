#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/multiplier.hpp"

namespace nilmult {

/// A word over the alphabet {1..d}, candidate Lyndon word.
using LyndonWord = std::vector<int>;

/// Strict-rotation minimality: w is Lyndon iff it is lexicographically
/// smaller than every one of its proper rotations. Quadratic on purpose —
/// this is the independent validator, kept free of generator cleverness.
inline bool is_lyndon_word(const LyndonWord& w) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    for (std::size_t shift = 1; shift < n; ++shift) {
        // Compare w against its rotation by `shift`, symbol by symbol.
        for (std::size_t i = 0; i < n; ++i) {
            const int lhs = w[i];
            const int rhs = w[(i + shift) % n];
            if (lhs < rhs) break;
            if (lhs > rhs) return false;
            if (i + 1 == n) return false; // equal to a proper rotation: periodic
        }
    }
    return true;
}

/// Visits every Lyndon word of length exactly n over {1..d} in lexicographic
/// order (successor generation: periodic extension, then increment the last
/// non-maximal symbol). Every visited word is re-checked with the rotation
/// validator; a failure there is a defect, not an input problem.
template <typename Fn>
inline long long for_each_lyndon_word(int n, int d, Fn&& fn,
                                      long long element_cap = kDefaultElementCap) {
    if (n < 1) throw std::invalid_argument("lyndon: length must be >= 1");
    if (d < 1) throw std::invalid_argument("lyndon: alphabet size must be >= 1");
    long long emitted = 0;
    std::vector<int> w{1};
    w.reserve(static_cast<std::size_t>(n));
    while (!w.empty()) {
        if (w.size() == static_cast<std::size_t>(n)) {
            if (!is_lyndon_word(w))
                throw InternalError("lyndon generator produced a non-Lyndon word");
            if (++emitted > element_cap)
                throw SizeLimitError("lyndon enumeration exceeds cap of " +
                                     std::to_string(element_cap) + " words");
            const LyndonWord& emitted_word = w;
            fn(emitted_word);
        }
        // Extend periodically to full length, then bump the tail.
        const std::size_t period = w.size();
        while (w.size() < static_cast<std::size_t>(n)) w.push_back(w[w.size() - period]);
        while (!w.empty() && w.back() == d) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return emitted;
}

/// All Lyndon words of length n over {1..d}, lexicographic.
inline std::vector<LyndonWord> lyndon_words(int n, int d,
                                            long long element_cap = kDefaultElementCap) {
    std::vector<LyndonWord> words;
    for_each_lyndon_word(n, d, [&](const LyndonWord& w) { words.push_back(w); }, element_cap);
    return words;
}

/// Number of Lyndon words of length n over {1..d}; agreement with witt(n, d)
/// is exactly what the verification suites test.
inline long long lyndon_count(int n, int d, long long element_cap = kDefaultElementCap) {
    return for_each_lyndon_word(n, d, [](const LyndonWord&) {}, element_cap);
}

/// Tensor product of cyclic groups: Z_m (x) Z_n = Z_gcd(m,n).
inline long long tensor_cyclic(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("tensor_cyclic: orders must be >= 1");
    return std::gcd(m, n);
}

namespace detail {

/// Peels the leading cyclic factor A off G = A x B and applies
/// M(A x B) = M(A) + M(B) + (A (x) B): M(A) is trivial for cyclic A, the
/// tensor distributes over B's factors, and the recursion handles M(B).
inline void schur_collect(const std::vector<long long>& orders, std::size_t first,
                          std::vector<MultiplierStructure::Factor>& raw) {
    if (orders.size() - first <= 1) return; // cyclic or trivial: M = 1
    for (std::size_t j = first + 1; j < orders.size(); ++j)
        raw.push_back({tensor_cyclic(orders[first], orders[j]), 1});
    schur_collect(orders, first + 1, raw);
}

} // namespace detail

/// Multiplier of an arbitrary finite abelian group by the direct-product
/// recursion alone — no structure formula involved, so it serves as an
/// independent cross-check for the class-1 case. The collected multiset of
/// cyclic factors is presented sorted by decreasing order with equal orders
/// merged.
inline MultiplierStructure schur_oracle(const CyclicDecomposition& g) {
    std::vector<MultiplierStructure::Factor> raw;
    detail::schur_collect(g.orders(), 0, raw);
    std::sort(raw.begin(), raw.end(),
              [](const MultiplierStructure::Factor& a, const MultiplierStructure::Factor& b) {
                  return a.order > b.order;
              });
    std::vector<MultiplierStructure::Factor> merged;
    for (const auto& f : raw) {
        if (f.order == 1) continue;
        if (!merged.empty() && merged.back().order == f.order)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(f);
    }
    return MultiplierStructure(std::move(merged));
}

} // namespace nilmult

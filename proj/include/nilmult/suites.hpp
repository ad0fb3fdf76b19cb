#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/classify.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/oracle.hpp"

namespace nilmult {

// Default scan ranges. Each suite completes in well under a minute on
// commodity hardware at these settings.
inline constexpr long long kWittMaxWeight = 12;
inline constexpr long long kWittMaxLetters = 4;
inline constexpr long long kWittTwoLetterMaxWeight = 20;
inline constexpr long long kSchurMaxOrder = 4096;
inline constexpr long long kBoundMaxN = 25;
inline constexpr long long kBoundMaxC = 4;
inline constexpr long long kClassificationMaxN = 25;
inline constexpr long long kClassificationMaxC = 4;
inline constexpr long long kGrowthMaxI = 12;
inline constexpr long long kInequalityMaxC = 4;
inline constexpr long long kProductBoundMaxN = 40;
inline constexpr long long kSandwichMaxN = 25;

// The product-bound right-hand side grows factorially in j. Once it passes
// this threshold the inequality holds by many orders of magnitude (lhs stays
// below 2n), so the scan stops extending j there instead of overflowing;
// every recorded value stays exact and no violation can be skipped.
inline constexpr long long kProductBoundSaturation = 1'000'000'000'000'000LL;

/// Witt formula vs. Lyndon enumeration on the rectangle
/// weight <= max_weight, letters <= max_letters, plus a deeper sweep on the
/// two-letter alphabet up to two_letter_max_weight. Every pair is listed.
inline VerificationReport witt_suite(long long max_weight = kWittMaxWeight,
                                     long long max_letters = kWittMaxLetters,
                                     long long two_letter_max_weight = kWittTwoLetterMaxWeight) {
    if (max_weight < 1 || max_letters < 1)
        throw std::invalid_argument("witt suite: ranges must be >= 1");
    VerificationReport report;
    report.suite = "witt";
    report.ranges = {{"max_weight", max_weight},
                     {"max_letters", max_letters},
                     {"two_letter_max_weight", two_letter_max_weight}};

    auto compare = [&](long long n, long long d) {
        CountComparison record;
        record.weight = n;
        record.letters = d;
        record.formula = witt(n, d);
        record.enumerated = lyndon_count(static_cast<int>(n), static_cast<int>(d));
        record.status = (record.formula == record.enumerated) ? CaseStatus::confirmed
                                                              : CaseStatus::counterexample;
        report.cases.push_back(record);
    };

    for (long long d = 1; d <= max_letters; ++d)
        for (long long n = 1; n <= max_weight; ++n) compare(n, d);
    for (long long n = max_weight + 1; n <= two_letter_max_weight; ++n) compare(n, 2);

    report.summary = summarize(report.cases, static_cast<long long>(report.cases.size()));
    return report;
}

/// Structure formula at class 1 vs. the direct-product oracle over every
/// abelian group of order <= max_order built from the primes 2, 3, 5. Only
/// mismatches are listed; the summary's `checked` holds the group count.
inline VerificationReport schur_suite(long long max_order = kSchurMaxOrder) {
    if (max_order < 1) throw std::invalid_argument("schur suite: max_order must be >= 1");
    VerificationReport report;
    report.suite = "schur";
    report.ranges = {{"max_order", max_order}};

    long long checked = 0;
    const std::vector<long long> primes{2, 3, 5};

    // One exponent vector (e2, e3, e5) fixes the order; every combination of
    // per-prime partitions is a distinct group of that order.
    std::vector<std::vector<PGroupPartition>> partition_choices(primes.size());
    auto scan_groups = [&](auto&& self, std::size_t prime_index, long long remaining) -> void {
        if (prime_index == primes.size()) {
            std::vector<long long> orders;
            for (std::size_t i = 0; i < primes.size(); ++i)
                for (long long part : partition_choices[i].back().parts())
                    orders.push_back(checked::pow(primes[i], part));
            const CyclicDecomposition group{orders};
            ++checked;
            const MultiplierStructure formula = nilpotent_multiplier(canonicalize(group), 1);
            const MultiplierStructure oracle = schur_oracle(group);
            if (!isomorphic(formula, oracle)) {
                SchurComparison record;
                record.orders = orders;
                record.formula = render_structure(formula);
                record.oracle = render_structure(oracle);
                record.status = CaseStatus::counterexample;
                report.cases.push_back(std::move(record));
            }
            return;
        }
        const long long p = primes[prime_index];
        long long power = 1;
        for (long long e = 0;; ++e) {
            if (e > 0) {
                if (power > remaining / p) break;
                power *= p;
            }
            for_each_partition(e, [&](const PGroupPartition& partition) {
                partition_choices[prime_index].push_back(partition);
                self(self, prime_index + 1, remaining / power);
                partition_choices[prime_index].pop_back();
            });
        }
    };
    scan_groups(scan_groups, 0, max_order);

    report.summary = summarize(report.cases, checked);
    return report;
}

/// Exponent bound and unique maximality of the elementary abelian group,
/// one case per (n, c) with n <= max_n, c <= max_c. Every case is listed.
inline VerificationReport bound_suite(long long max_n = kBoundMaxN, long long max_c = kBoundMaxC) {
    if (max_n < 1 || max_c < 1) throw std::invalid_argument("bound suite: ranges must be >= 1");
    VerificationReport report;
    report.suite = "bound";
    report.ranges = {{"max_n", max_n}, {"max_c", max_c}};
    for (long long n = 1; n <= max_n; ++n)
        for (long long c = 1; c <= max_c; ++c) report.cases.push_back(bound_case(n, c));
    report.summary = summarize(report.cases, static_cast<long long>(report.cases.size()));
    return report;
}

/// Exhaustive classification scan over n <= max_n, c <= max_c, all t.
/// Every (n, c, t) case is listed, confirmed or not.
inline VerificationReport classification_suite(long long max_n = kClassificationMaxN,
                                               long long max_c = kClassificationMaxC) {
    if (max_n < 1 || max_c < 1)
        throw std::invalid_argument("classification suite: ranges must be >= 1");
    VerificationReport report;
    report.suite = "classification";
    report.ranges = {{"max_n", max_n}, {"max_c", max_c}};
    for (long long n = 1; n <= max_n; ++n)
        for (long long c = 1; c <= max_c; ++c)
            for (ClassificationCase& record : classification_cases(n, c))
                report.cases.push_back(std::move(record));
    report.summary = summarize(report.cases, static_cast<long long>(report.cases.size()));
    return report;
}

/// Inequality explorer. Growth findings (i*b_i < b_{i+1}) are listed in
/// full since violations are the headline result; the product-bound and
/// sandwich families list violations only, with totals in the ranges keys
/// growth_checked / product_bound_checked / sandwich_checked.
inline VerificationReport inequalities_suite(long long max_i = kGrowthMaxI,
                                             long long max_c = kInequalityMaxC,
                                             long long max_n = kProductBoundMaxN,
                                             long long sandwich_max_n = kSandwichMaxN) {
    if (max_i < 1 || max_c < 1 || max_n < 3 || sandwich_max_n < 2)
        throw std::invalid_argument("inequalities suite: ranges too small");
    VerificationReport report;
    report.suite = "inequalities";

    long long growth_checked = 0;
    for (long long c = 1; c <= max_c; ++c)
        for (long long i = 1; i <= max_i; ++i) {
            report.cases.push_back(growth_check(i, c));
            ++growth_checked;
        }

    long long product_checked = 0;
    for (long long n = 3; n <= max_n; ++n)
        for (long long t = 0; t + 2 < n; ++t) {
            long long product = 2;
            for (long long j = 1; j < n - t - 1; ++j) {
                // Track the rhs incrementally; every factor is >= 2, so once
                // it saturates all deeper j hold trivially and are skipped.
                const long long factor = n - t - j;
                if (product > kProductBoundSaturation / factor) break;
                product *= factor;
                InequalityFinding f = product_bound_check(n, t, j);
                ++product_checked;
                if (!f.holds) report.cases.push_back(std::move(f));
            }
        }

    long long sandwich_checked = 0;
    for (long long c = 1; c <= max_c; ++c)
        for (long long n = 2; n <= sandwich_max_n; ++n)
            for_each_partition(n, [&](const PGroupPartition& partition) {
                if (partition.size() < 2) return;
                auto [lower, upper] = sandwich_check(partition, c);
                sandwich_checked += 2;
                if (!lower.holds) report.cases.push_back(std::move(lower));
                if (!upper.holds) report.cases.push_back(std::move(upper));
            });

    report.ranges = {{"max_i", max_i},
                     {"max_c", max_c},
                     {"max_n", max_n},
                     {"sandwich_max_n", sandwich_max_n},
                     {"growth_checked", growth_checked},
                     {"product_bound_checked", product_checked},
                     {"sandwich_checked", sandwich_checked}};
    report.summary =
        summarize(report.cases, growth_checked + product_checked + sandwich_checked);
    return report;
}

} // namespace nilmult

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/checked.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/multiplier.hpp"

namespace nilmult {

enum class CaseStatus { confirmed, counterexample };

inline const char* to_string(CaseStatus s) {
    return s == CaseStatus::confirmed ? "confirmed" : "counterexample";
}

/// Largest possible multiplier-order exponent across all p-groups of order
/// p^n at class c; attained by the elementary abelian group.
inline long long max_exponent(long long n, long long c) {
    if (c < 1) throw std::invalid_argument("max_exponent: class must be >= 1");
    if (n < 0) throw std::invalid_argument("max_exponent: order exponent must be >= 0");
    return witt(c + 1, n);
}

/// One (n, c, t) classification record: which p-groups of order p^n have
/// multiplier order exactly p^{witt(c+1, n-t)}? The claim under test says
/// only (t+1, 1^{n-t-1}); `solutions` is the exhaustively computed truth.
struct ClassificationCase {
    long long n = 0;
    long long c = 0;
    long long t = 0;
    long long target_exponent = 0;
    PGroupPartition expected;
    std::vector<PGroupPartition> solutions;
    CaseStatus status = CaseStatus::confirmed;

    friend bool operator==(const ClassificationCase&, const ClassificationCase&) = default;
};

/// One recorded inequality evaluation. `name` identifies the family:
///   "growth"          i*b_i < b_{i+1}            (strict; fails for some i)
///   "product-bound"   t+j+2 <= 2*prod(n-t-s)     (fails inside its domain)
///   "sandwich-lower"  alpha_k*b_k <= exponent
///   "sandwich-upper"  exponent <= alpha_2*b_k
struct InequalityFinding {
    std::string name;
    std::map<std::string, long long> parameters;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;

    friend bool operator==(const InequalityFinding&, const InequalityFinding&) = default;
};

/// Witt-formula count against the enumeration oracle for one (weight,
/// letters) pair.
struct CountComparison {
    long long weight = 0;
    long long letters = 0;
    long long formula = 0;
    long long enumerated = 0;
    CaseStatus status = CaseStatus::confirmed;

    friend bool operator==(const CountComparison&, const CountComparison&) = default;
};

/// Structure formula against the direct-product oracle for one group.
struct SchurComparison {
    std::vector<long long> orders;
    std::string formula;
    std::string oracle;
    CaseStatus status = CaseStatus::confirmed;

    friend bool operator==(const SchurComparison&, const SchurComparison&) = default;
};

/// Exponent-bound scan over all partitions of n at class c: every exponent
/// must stay <= bound, and the maximum must be attained only at (1^n).
struct BoundCase {
    long long n = 0;
    long long c = 0;
    long long bound = 0;
    long long max_found = 0;
    std::vector<PGroupPartition> maximizers;
    bool within_bound = false;
    CaseStatus status = CaseStatus::confirmed;

    friend bool operator==(const BoundCase&, const BoundCase&) = default;
};

using ReportCase =
    std::variant<CountComparison, SchurComparison, BoundCase, ClassificationCase, InequalityFinding>;

/// Totals for a verification run. `checked` counts every check performed;
/// `confirmed` and `counterexamples` count the listed cases. Suites list
/// every failing check, so counterexamples always reflects the full scan;
/// high-volume suites omit passing records from the list (see each suite).
struct Summary {
    long long checked = 0;
    long long confirmed = 0;
    long long counterexamples = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, long long> ranges;
    std::vector<ReportCase> cases;
    Summary summary;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline bool case_confirmed(const ReportCase& c) {
    return std::visit(
        [](const auto& record) {
            using T = std::decay_t<decltype(record)>;
            if constexpr (std::is_same_v<T, InequalityFinding>)
                return record.holds;
            else
                return record.status == CaseStatus::confirmed;
        },
        c);
}

/// Fills in the listed-case counts; `checked` is supplied by the caller
/// since it may exceed the number of listed cases.
inline Summary summarize(const std::vector<ReportCase>& cases, long long checked) {
    Summary s;
    s.checked = checked;
    for (const ReportCase& c : cases)
        (case_confirmed(c) ? s.confirmed : s.counterexamples) += 1;
    return s;
}

/// All partitions of n whose class-c multiplier-order exponent equals e,
/// in partition-stream (reverse-lexicographic) order.
inline std::vector<PGroupPartition> exponent_solutions(long long n, long long c, long long e) {
    std::vector<PGroupPartition> found;
    for_each_partition(n, [&](const PGroupPartition& partition) {
        if (multiplier_order_exponent(partition, c) == e) found.push_back(partition);
    });
    return found;
}

/// The partition (t+1, 1^{n-t-1}) the classification claim singles out.
inline PGroupPartition near_cyclic_partition(long long n, long long t) {
    std::vector<long long> parts;
    parts.push_back(t + 1);
    for (long long i = 0; i < n - t - 1; ++i) parts.push_back(1);
    return PGroupPartition(std::move(parts));
}

inline ClassificationCase classification_case(long long n, long long c, long long t) {
    if (n < 1) throw std::invalid_argument("classification: order exponent must be >= 1");
    if (c < 1) throw std::invalid_argument("classification: class must be >= 1");
    if (t < 0 || t > n - 1)
        throw std::invalid_argument("classification: t must satisfy 0 <= t <= n-1");

    ClassificationCase result;
    result.n = n;
    result.c = c;
    result.t = t;
    result.target_exponent = witt(c + 1, n - t);
    result.expected = near_cyclic_partition(n, t);
    result.solutions = exponent_solutions(n, c, result.target_exponent);

    // The forward direction is an arithmetic identity (the exponent formula
    // telescopes to witt(c+1, n-t) on the expected partition); if it ever
    // fails the arithmetic underneath is broken.
    if (std::find(result.solutions.begin(), result.solutions.end(), result.expected) ==
        result.solutions.end())
        throw InternalError("classification: expected partition missing from solution set");

    result.status = (result.solutions.size() == 1) ? CaseStatus::confirmed
                                                   : CaseStatus::counterexample;
    return result;
}

/// Classification cases for every admissible t at fixed (n, c). The scan
/// computes each partition's exponent once and buckets by value.
inline std::vector<ClassificationCase> classification_cases(long long n, long long c) {
    if (n < 1) throw std::invalid_argument("classification: order exponent must be >= 1");
    if (c < 1) throw std::invalid_argument("classification: class must be >= 1");

    std::map<long long, std::vector<PGroupPartition>> by_exponent;
    for_each_partition(n, [&](const PGroupPartition& partition) {
        by_exponent[multiplier_order_exponent(partition, c)].push_back(partition);
    });

    std::vector<ClassificationCase> cases;
    for (long long t = 0; t <= n - 1; ++t) {
        ClassificationCase result;
        result.n = n;
        result.c = c;
        result.t = t;
        result.target_exponent = witt(c + 1, n - t);
        result.expected = near_cyclic_partition(n, t);
        if (auto it = by_exponent.find(result.target_exponent); it != by_exponent.end())
            result.solutions = it->second;
        if (std::find(result.solutions.begin(), result.solutions.end(), result.expected) ==
            result.solutions.end())
            throw InternalError("classification: expected partition missing from solution set");
        result.status = (result.solutions.size() == 1) ? CaseStatus::confirmed
                                                       : CaseStatus::counterexample;
        cases.push_back(std::move(result));
    }
    return cases;
}

inline VerificationReport classification_report(long long n, long long c) {
    VerificationReport report;
    report.suite = "classification";
    report.ranges = {{"n", n}, {"c", c}};
    for (ClassificationCase& record : classification_cases(n, c))
        report.cases.push_back(std::move(record));
    report.summary = summarize(report.cases, static_cast<long long>(report.cases.size()));
    return report;
}

inline BoundCase bound_case(long long n, long long c) {
    if (n < 0) throw std::invalid_argument("bound: order exponent must be >= 0");
    BoundCase result;
    result.n = n;
    result.c = c;
    result.bound = max_exponent(n, c);
    result.max_found = -1;
    result.within_bound = true;
    for_each_partition(n, [&](const PGroupPartition& partition) {
        const long long e = multiplier_order_exponent(partition, c);
        if (e > result.bound) result.within_bound = false;
        if (e > result.max_found) {
            result.max_found = e;
            result.maximizers.clear();
        }
        if (e == result.max_found) result.maximizers.push_back(partition);
    });

    std::vector<long long> ones(static_cast<std::size_t>(n), 1);
    const bool unique_elementary = result.maximizers.size() == 1 &&
                                   result.maximizers.front() == PGroupPartition(ones) &&
                                   result.max_found == result.bound;
    result.status = (result.within_bound && unique_elementary) ? CaseStatus::confirmed
                                                               : CaseStatus::counterexample;
    return result;
}

inline VerificationReport bound_check(long long n, long long c) {
    VerificationReport report;
    report.suite = "bound";
    report.ranges = {{"n", n}, {"c", c}};
    report.cases.push_back(bound_case(n, c));
    report.summary = summarize(report.cases, 1);
    return report;
}

/// i*b_i < b_{i+1}, where b_i = witt(c+1, i). Recorded, never assumed: the
/// strict form fails already at i = 3, c = 1 (9 vs 6).
inline InequalityFinding growth_check(long long i, long long c) {
    if (i < 1) throw std::invalid_argument("growth: index must be >= 1");
    if (c < 1) throw std::invalid_argument("growth: class must be >= 1");
    InequalityFinding f;
    f.name = "growth";
    f.parameters = {{"i", i}, {"c", c}};
    f.lhs = checked::mul(i, witt(c + 1, i));
    f.rhs = witt(c + 1, i + 1);
    f.holds = f.lhs < f.rhs;
    return f;
}

/// t+j+2 <= 2*(n-t-1)*(n-t-2)*...*(n-t-j) on its stated domain
/// 0 <= t <= n-1, 1 <= j < n-t-1. Recorded, never assumed.
inline InequalityFinding product_bound_check(long long n, long long t, long long j) {
    if (n < 3) throw std::invalid_argument("product-bound: n must be >= 3");
    if (t < 0 || t > n - 1)
        throw std::invalid_argument("product-bound: t must satisfy 0 <= t <= n-1");
    if (j < 1 || j >= n - t - 1)
        throw std::invalid_argument("product-bound: j must satisfy 1 <= j < n-t-1");
    InequalityFinding f;
    f.name = "product-bound";
    f.parameters = {{"n", n}, {"t", t}, {"j", j}};
    f.lhs = checked::add(checked::add(t, j), 2);
    long long product = 2;
    for (long long s = 1; s <= j; ++s) product = checked::mul(product, n - t - s);
    f.rhs = product;
    f.holds = f.lhs <= f.rhs;
    return f;
}

/// Both halves of alpha_k*b_k <= exponent <= alpha_2*b_k for a partition
/// with k >= 2 parts. Unlike the growth claim this is an identity-backed
/// bound and is expected to hold everywhere.
inline std::pair<InequalityFinding, InequalityFinding> sandwich_check(const PGroupPartition& g,
                                                                      long long c) {
    const auto& alpha = g.parts();
    const long long k = static_cast<long long>(alpha.size());
    if (k < 2) throw std::invalid_argument("sandwich: partition needs at least two parts");
    if (c < 1) throw std::invalid_argument("sandwich: class must be >= 1");

    const long long b_k = witt(c + 1, k);
    const long long exponent = multiplier_order_exponent(g, c);
    const std::map<std::string, long long> parameters = {
        {"n", order_exponent(g)}, {"k", k},   {"c", c},
        {"alpha_2", alpha[1]},    {"alpha_k", alpha.back()}, {"b_k", b_k}};

    InequalityFinding lower;
    lower.name = "sandwich-lower";
    lower.parameters = parameters;
    lower.lhs = checked::mul(alpha.back(), b_k);
    lower.rhs = exponent;
    lower.holds = lower.lhs <= lower.rhs;

    InequalityFinding upper;
    upper.name = "sandwich-upper";
    upper.parameters = parameters;
    upper.lhs = exponent;
    upper.rhs = checked::mul(alpha[1], b_k);
    upper.holds = upper.lhs <= upper.rhs;

    return {lower, upper};
}

} // namespace nilmult

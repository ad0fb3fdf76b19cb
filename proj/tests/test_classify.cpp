#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nilmult/classify.hpp"
#include "nilmult/suites.hpp"

namespace {

using nilmult::BoundCase;
using nilmult::CaseStatus;
using nilmult::ClassificationCase;
using nilmult::classification_case;
using nilmult::classification_cases;
using nilmult::classification_report;
using nilmult::CountComparison;
using nilmult::exponent_solutions;
using nilmult::growth_check;
using nilmult::InequalityFinding;
using nilmult::max_exponent;
using nilmult::near_cyclic_partition;
using nilmult::PGroupPartition;
using nilmult::product_bound_check;
using nilmult::ReportCase;
using nilmult::sandwich_check;
using nilmult::Summary;
using nilmult::VerificationReport;
using nilmult::witt;

PGroupPartition part(std::vector<long long> parts) { return PGroupPartition(std::move(parts)); }

TEST(MaxExponent, ClassOneIsTriangular) {
    for (long long n = 0; n <= 50; ++n)
        EXPECT_EQ(max_exponent(n, 1), n * (n - 1) / 2) << "n=" << n;
}

TEST(MaxExponent, KnownValuesAndValidation) {
    EXPECT_EQ(max_exponent(1, 3), 0);
    EXPECT_EQ(max_exponent(0, 2), 0);
    EXPECT_EQ(max_exponent(3, 2), 8);
    EXPECT_EQ(max_exponent(4, 2), 20);
    EXPECT_THROW(max_exponent(3, 0), std::invalid_argument);
    EXPECT_THROW(max_exponent(-1, 1), std::invalid_argument);
}

TEST(NearCyclic, BuildsExpectedPartition) {
    EXPECT_EQ(near_cyclic_partition(6, 3), part({4, 1, 1}));
    EXPECT_EQ(near_cyclic_partition(6, 5), part({6}));
    EXPECT_EQ(near_cyclic_partition(6, 0), part({1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(near_cyclic_partition(1, 0), part({1}));
}

TEST(ExponentSolutions, SmallSearches) {
    EXPECT_EQ(exponent_solutions(4, 1, 3), (std::vector<PGroupPartition>{part({2, 1, 1})}));
    EXPECT_EQ(exponent_solutions(4, 1, 2), (std::vector<PGroupPartition>{part({2, 2})}));
    EXPECT_EQ(exponent_solutions(5, 2, 0), (std::vector<PGroupPartition>{part({5})}));
    EXPECT_TRUE(exponent_solutions(4, 1, 100).empty());

    // The two ties that break uniqueness at n = 6, class 1. The stream is
    // reverse-lexicographic, which fixes the order below.
    EXPECT_EQ(exponent_solutions(6, 1, 3),
              (std::vector<PGroupPartition>{part({4, 1, 1}), part({3, 3})}));
    EXPECT_EQ(exponent_solutions(6, 1, 6),
              (std::vector<PGroupPartition>{part({3, 1, 1, 1}), part({2, 2, 2})}));
}

TEST(Classification, ConfirmedFamily) {
    for (long long t = 0; t <= 3; ++t) {
        const ClassificationCase record = classification_case(4, 1, t);
        EXPECT_EQ(record.status, CaseStatus::confirmed) << "t=" << t;
        EXPECT_EQ(record.solutions, (std::vector<PGroupPartition>{record.expected}));
        EXPECT_EQ(record.target_exponent, witt(2, 4 - t));
    }
    for (long long t = 0; t <= 4; ++t)
        EXPECT_EQ(classification_case(5, 1, t).status, CaseStatus::confirmed) << "t=" << t;
}

TEST(Classification, CounterexamplesAtSixClassOne) {
    const ClassificationCase at2 = classification_case(6, 1, 2);
    EXPECT_EQ(at2.status, CaseStatus::counterexample);
    EXPECT_EQ(at2.target_exponent, 6);
    EXPECT_EQ(at2.expected, part({3, 1, 1, 1}));
    EXPECT_EQ(at2.solutions,
              (std::vector<PGroupPartition>{part({3, 1, 1, 1}), part({2, 2, 2})}));

    const ClassificationCase at3 = classification_case(6, 1, 3);
    EXPECT_EQ(at3.status, CaseStatus::counterexample);
    EXPECT_EQ(at3.target_exponent, 3);
    EXPECT_EQ(at3.expected, part({4, 1, 1}));
    EXPECT_EQ(at3.solutions, (std::vector<PGroupPartition>{part({4, 1, 1}), part({3, 3})}));

    for (long long t : {0LL, 1LL, 4LL, 5LL})
        EXPECT_EQ(classification_case(6, 1, t).status, CaseStatus::confirmed) << "t=" << t;
}

TEST(Classification, LastAdmissibleTIsCyclic) {
    for (long long n = 1; n <= 8; ++n) {
        const ClassificationCase record = classification_case(n, 2, n - 1);
        EXPECT_EQ(record.target_exponent, 0);
        EXPECT_EQ(record.solutions, (std::vector<PGroupPartition>{part({n})}));
        EXPECT_EQ(record.status, CaseStatus::confirmed);
    }
}

TEST(Classification, ScanMatchesSingleCases) {
    for (long long c = 1; c <= 2; ++c) {
        const auto scanned = classification_cases(7, c);
        ASSERT_EQ(scanned.size(), 7u);
        for (long long t = 0; t <= 6; ++t)
            EXPECT_EQ(scanned[static_cast<std::size_t>(t)], classification_case(7, c, t))
                << "c=" << c << " t=" << t;
    }
}

TEST(Classification, ReportShape) {
    const VerificationReport report = classification_report(6, 1);
    EXPECT_EQ(report.suite, "classification");
    EXPECT_EQ(report.ranges.at("n"), 6);
    EXPECT_EQ(report.ranges.at("c"), 1);
    ASSERT_EQ(report.cases.size(), 6u);
    EXPECT_EQ(report.summary, (Summary{6, 4, 2}));
}

TEST(Classification, RejectsBadArguments) {
    EXPECT_THROW(classification_case(0, 1, 0), std::invalid_argument);
    EXPECT_THROW(classification_case(4, 0, 1), std::invalid_argument);
    EXPECT_THROW(classification_case(4, 1, -1), std::invalid_argument);
    EXPECT_THROW(classification_case(4, 1, 4), std::invalid_argument);
    EXPECT_THROW(classification_cases(0, 1), std::invalid_argument);
}

TEST(Bound, ElementaryAbelianIsUniqueMaximizer) {
    const BoundCase record = nilmult::bound_case(4, 1);
    EXPECT_EQ(record.bound, 6);
    EXPECT_EQ(record.max_found, 6);
    EXPECT_EQ(record.maximizers, (std::vector<PGroupPartition>{part({1, 1, 1, 1})}));
    EXPECT_TRUE(record.within_bound);
    EXPECT_EQ(record.status, CaseStatus::confirmed);

    const BoundCase higher = nilmult::bound_case(6, 2);
    EXPECT_EQ(higher.bound, 70);
    EXPECT_EQ(higher.max_found, 70);
    EXPECT_EQ(higher.status, CaseStatus::confirmed);
}

TEST(Bound, DegenerateSizes) {
    const BoundCase empty = nilmult::bound_case(0, 3);
    EXPECT_EQ(empty.bound, 0);
    EXPECT_EQ(empty.max_found, 0);
    EXPECT_EQ(empty.status, CaseStatus::confirmed);

    const BoundCase single = nilmult::bound_case(1, 1);
    EXPECT_EQ(single.bound, 0);
    EXPECT_EQ(single.maximizers, (std::vector<PGroupPartition>{part({1})}));
    EXPECT_EQ(single.status, CaseStatus::confirmed);
}

TEST(Bound, ReportShape) {
    const VerificationReport report = nilmult::bound_check(5, 1);
    EXPECT_EQ(report.suite, "bound");
    ASSERT_EQ(report.cases.size(), 1u);
    EXPECT_EQ(report.summary, (Summary{1, 1, 0}));
}

TEST(Growth, HoldsOnlyForSmallIndices) {
    const InequalityFinding small = growth_check(2, 1);
    EXPECT_EQ(small.lhs, 2);
    EXPECT_EQ(small.rhs, 3);
    EXPECT_TRUE(small.holds);
    EXPECT_EQ(small.name, "growth");
    EXPECT_EQ(small.parameters.at("i"), 2);
    EXPECT_EQ(small.parameters.at("c"), 1);

    for (long long c = 1; c <= 4; ++c) EXPECT_TRUE(growth_check(1, c).holds) << "c=" << c;

    const InequalityFinding first_failure = growth_check(3, 1);
    EXPECT_EQ(first_failure.lhs, 9);
    EXPECT_EQ(first_failure.rhs, 6);
    EXPECT_FALSE(first_failure.holds);

    const InequalityFinding class_two = growth_check(3, 2);
    EXPECT_EQ(class_two.lhs, 24);
    EXPECT_EQ(class_two.rhs, 20);
    EXPECT_FALSE(class_two.holds);

    EXPECT_THROW(growth_check(0, 1), std::invalid_argument);
    EXPECT_THROW(growth_check(2, 0), std::invalid_argument);
}

TEST(ProductBound, ValuesAndDomain) {
    const InequalityFinding holds = product_bound_check(3, 0, 1);
    EXPECT_EQ(holds.lhs, 3);
    EXPECT_EQ(holds.rhs, 4);
    EXPECT_TRUE(holds.holds);
    EXPECT_EQ(holds.name, "product-bound");

    const InequalityFinding fails = product_bound_check(9, 6, 1);
    EXPECT_EQ(fails.lhs, 9);
    EXPECT_EQ(fails.rhs, 4);
    EXPECT_FALSE(fails.holds);

    EXPECT_TRUE(product_bound_check(10, 0, 1).holds);
    EXPECT_EQ(product_bound_check(10, 0, 8).rhs, 725760);

    EXPECT_THROW(product_bound_check(2, 0, 1), std::invalid_argument);
    EXPECT_THROW(product_bound_check(5, 5, 1), std::invalid_argument);
    EXPECT_THROW(product_bound_check(5, -1, 1), std::invalid_argument);
    EXPECT_THROW(product_bound_check(5, 2, 0), std::invalid_argument);
    EXPECT_THROW(product_bound_check(5, 2, 2), std::invalid_argument);
}

TEST(Sandwich, TightCases) {
    const auto [lower22, upper22] = sandwich_check(part({2, 2}), 1);
    EXPECT_EQ(lower22.name, "sandwich-lower");
    EXPECT_EQ(upper22.name, "sandwich-upper");
    EXPECT_EQ(lower22.lhs, 2);
    EXPECT_EQ(lower22.rhs, 2);
    EXPECT_EQ(upper22.lhs, 2);
    EXPECT_EQ(upper22.rhs, 2);
    EXPECT_TRUE(lower22.holds);
    EXPECT_TRUE(upper22.holds);

    const auto [lower311, upper311] = sandwich_check(part({3, 1, 1}), 1);
    EXPECT_EQ(lower311.lhs, 3);   // alpha_k * b_k
    EXPECT_EQ(lower311.rhs, 3);   // the exponent itself
    EXPECT_EQ(upper311.rhs, 3);   // alpha_2 * b_k
    EXPECT_TRUE(lower311.holds);
    EXPECT_TRUE(upper311.holds);
    EXPECT_EQ(lower311.parameters.at("n"), 5);
    EXPECT_EQ(lower311.parameters.at("k"), 3);
    EXPECT_EQ(lower311.parameters.at("alpha_2"), 1);
    EXPECT_EQ(lower311.parameters.at("alpha_k"), 1);
    EXPECT_EQ(lower311.parameters.at("b_k"), 3);
}

TEST(Sandwich, TwoPartPartitionsAreAlwaysTight) {
    for (long long a = 1; a <= 5; ++a)
        for (long long b = 1; b <= a; ++b)
            for (long long c = 1; c <= 3; ++c) {
                const auto [lower, upper] = sandwich_check(part({a, b}), c);
                // At k = 2 the exponent is exactly alpha_2 * b_2.
                EXPECT_EQ(upper.lhs, witt(c + 1, 2) * b);
                EXPECT_TRUE(lower.holds);
                EXPECT_TRUE(upper.holds);
            }
}

TEST(Sandwich, HoldsAcrossSmallScan) {
    for (long long n = 2; n <= 15; ++n)
        nilmult::for_each_partition(n, [&](const PGroupPartition& partition) {
            if (partition.size() < 2) return;
            for (long long c = 1; c <= 3; ++c) {
                const auto [lower, upper] = sandwich_check(partition, c);
                EXPECT_TRUE(lower.holds) << "n=" << n << " c=" << c;
                EXPECT_TRUE(upper.holds) << "n=" << n << " c=" << c;
            }
        });
}

TEST(Sandwich, RejectsBadArguments) {
    EXPECT_THROW(sandwich_check(part({4}), 1), std::invalid_argument);
    EXPECT_THROW(sandwich_check(part({}), 1), std::invalid_argument);
    EXPECT_THROW(sandwich_check(part({2, 1}), 0), std::invalid_argument);
}

TEST(Summaries, CountListedAndChecked) {
    CountComparison good;
    good.status = CaseStatus::confirmed;
    InequalityFinding bad;
    bad.holds = false;
    ClassificationCase tie;
    tie.status = CaseStatus::counterexample;

    const std::vector<ReportCase> cases{good, bad, tie};
    EXPECT_TRUE(nilmult::case_confirmed(cases[0]));
    EXPECT_FALSE(nilmult::case_confirmed(cases[1]));
    EXPECT_FALSE(nilmult::case_confirmed(cases[2]));
    EXPECT_EQ(nilmult::summarize(cases, 10), (Summary{10, 1, 2}));
    EXPECT_EQ(nilmult::summarize({}, 0), (Summary{0, 0, 0}));
}

TEST(Suites, WittListsEveryPair) {
    const VerificationReport report = nilmult::witt_suite(6, 3, 8);
    EXPECT_EQ(report.suite, "witt");
    EXPECT_EQ(report.cases.size(), 20u);  // 3*6 grid plus weights 7..8 at d=2
    EXPECT_EQ(report.summary, (Summary{20, 20, 0}));
    EXPECT_EQ(report.ranges.at("max_weight"), 6);
    for (const ReportCase& c : report.cases) {
        const auto& record = std::get<CountComparison>(c);
        EXPECT_EQ(record.formula, record.enumerated);
    }
}

TEST(Suites, SchurScanIsCleanAndCountsGroups) {
    const VerificationReport tiny = nilmult::schur_suite(1);
    EXPECT_EQ(tiny.summary, (Summary{1, 0, 0}));  // only the trivial group
    EXPECT_TRUE(tiny.cases.empty());

    // Abelian groups of order <= 12 over the primes {2, 3, 5}, counted by
    // hand: orders 1,2,3,4,5,6,8,9,10,12 contribute 1+1+1+2+1+1+3+2+1+2.
    const VerificationReport small = nilmult::schur_suite(12);
    EXPECT_EQ(small.summary, (Summary{15, 0, 0}));
    EXPECT_TRUE(small.cases.empty());

    EXPECT_THROW(nilmult::schur_suite(0), std::invalid_argument);
}

TEST(Suites, BoundGridIsClean) {
    const VerificationReport report = nilmult::bound_suite(8, 3);
    EXPECT_EQ(report.cases.size(), 24u);
    EXPECT_EQ(report.summary, (Summary{24, 24, 0}));
}

TEST(Suites, ClassificationScanFindsTheKnownTies) {
    const VerificationReport report = nilmult::classification_suite(6, 1);
    EXPECT_EQ(report.cases.size(), 21u);  // sum of n over n <= 6, one c
    EXPECT_EQ(report.summary, (Summary{21, 19, 2}));

    std::vector<ClassificationCase> ties;
    for (const ReportCase& c : report.cases) {
        const auto& record = std::get<ClassificationCase>(c);
        if (record.status == CaseStatus::counterexample) ties.push_back(record);
    }
    ASSERT_EQ(ties.size(), 2u);
    EXPECT_EQ(ties[0].t, 2);
    EXPECT_EQ(ties[1].t, 3);
    EXPECT_EQ(ties[1].solutions,
              (std::vector<PGroupPartition>{part({4, 1, 1}), part({3, 3})}));
}

TEST(Suites, InequalitiesListsGrowthFullyAndViolationsOtherwise) {
    const VerificationReport report = nilmult::inequalities_suite(4, 2, 10, 8);
    EXPECT_EQ(report.ranges.at("growth_checked"), 8);
    EXPECT_GT(report.ranges.at("product_bound_checked"), 0);
    EXPECT_GT(report.ranges.at("sandwich_checked"), 0);
    EXPECT_EQ(report.summary.checked,
              report.ranges.at("growth_checked") + report.ranges.at("product_bound_checked") +
                  report.ranges.at("sandwich_checked"));

    long long growth_listed = 0;
    bool found_first_failure = false;
    for (const ReportCase& c : report.cases) {
        const auto& finding = std::get<InequalityFinding>(c);
        EXPECT_NE(finding.name, "sandwich-lower") << "sandwich violations should not exist";
        EXPECT_NE(finding.name, "sandwich-upper") << "sandwich violations should not exist";
        if (finding.name == "growth") {
            ++growth_listed;
            if (finding.parameters.at("i") == 3 && finding.parameters.at("c") == 1) {
                found_first_failure = true;
                EXPECT_FALSE(finding.holds);
            }
        } else {
            EXPECT_FALSE(finding.holds) << "non-growth findings are listed only on failure";
        }
    }
    EXPECT_EQ(growth_listed, 8);
    EXPECT_TRUE(found_first_failure);
}

} // namespace

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilmult/abelian.hpp"
#include "nilmult/classify.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/json_io.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/oracle.hpp"
#include "nilmult/suites.hpp"

namespace nilmult {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;          // success
inline constexpr int kExitUsage = 1;       // bad flags or unparseable input
inline constexpr int kExitCapacity = 2;    // overflow or element-cap exceeded
inline constexpr int kExitExpectation = 3; // --expect clean violated

/// Everything a command run produced, in a shape that serializes losslessly:
/// the `inputs` echo holds the effective parameter values after defaults.
struct CommandResult {
    std::string command;
    json inputs;
    json result;
    std::string status; // "ok" or "counterexamples-found"

    friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

inline void to_json(json& j, const CommandResult& r) {
    j = json{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result},
             {"status", r.status}};
}

inline void from_json(const json& j, CommandResult& r) {
    j.at("command").get_to(r.command);
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    j.at("status").get_to(r.status);
}

inline std::string render_partition(const PGroupPartition& p) {
    std::string text = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) text += ",";
        text += std::to_string(p.parts()[i]);
    }
    return text + ")";
}

inline std::string render_partition_set(const std::vector<PGroupPartition>& set) {
    std::string text = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) text += ", ";
        text += render_partition(set[i]);
    }
    return text + "}";
}

inline std::string render_order_list(const std::vector<long long>& orders) {
    std::string text = "[";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i > 0) text += ",";
        text += std::to_string(orders[i]);
    }
    return text + "]";
}

/// One-line human rendering of any report case.
inline std::string render_case_line(const ReportCase& c) {
    return std::visit(
        [](const auto& record) -> std::string {
            using T = std::decay_t<decltype(record)>;
            if constexpr (std::is_same_v<T, CountComparison>) {
                return "weight=" + std::to_string(record.weight) +
                       " letters=" + std::to_string(record.letters) +
                       ": formula=" + std::to_string(record.formula) +
                       " enumerated=" + std::to_string(record.enumerated) + " [" +
                       to_string(record.status) + "]";
            } else if constexpr (std::is_same_v<T, SchurComparison>) {
                return "group=" + render_order_list(record.orders) +
                       ": formula=" + record.formula + " oracle=" + record.oracle + " [" +
                       to_string(record.status) + "]";
            } else if constexpr (std::is_same_v<T, BoundCase>) {
                return "n=" + std::to_string(record.n) + " c=" + std::to_string(record.c) +
                       ": bound=" + std::to_string(record.bound) +
                       " max_found=" + std::to_string(record.max_found) +
                       " maximizers=" + render_partition_set(record.maximizers) + " [" +
                       to_string(record.status) + "]";
            } else if constexpr (std::is_same_v<T, ClassificationCase>) {
                return "n=" + std::to_string(record.n) + " c=" + std::to_string(record.c) +
                       " t=" + std::to_string(record.t) +
                       ": target_exponent=" + std::to_string(record.target_exponent) +
                       " expected=" + render_partition(record.expected) +
                       " solutions=" + render_partition_set(record.solutions) + " [" +
                       to_string(record.status) + "]";
            } else {
                static_assert(std::is_same_v<T, InequalityFinding>);
                std::string line = record.name;
                for (const auto& [key, value] : record.parameters)
                    line += " " + key + "=" + std::to_string(value);
                line += ": lhs=" + std::to_string(record.lhs) +
                        " rhs=" + std::to_string(record.rhs) + " [" +
                        (record.holds ? "holds" : "fails") + "]";
                return line;
            }
        },
        c);
}

inline void print_report(std::ostream& out, const VerificationReport& report) {
    out << "suite: " << report.suite << "\n";
    out << "ranges:";
    for (const auto& [key, value] : report.ranges) out << " " << key << "=" << value;
    out << "\n";
    for (const ReportCase& c : report.cases) out << "  " << render_case_line(c) << "\n";
    out << "summary: checked=" << report.summary.checked
        << " confirmed=" << report.summary.confirmed
        << " counterexamples=" << report.summary.counterexamples << "\n";
}

namespace detail {

inline void emit(std::ostream& out, const CommandResult& result, const std::string& format,
                 const std::function<void()>& print_text) {
    if (format == "json")
        out << json(result).dump(2) << "\n";
    else
        print_text();
}

inline std::string report_status(const VerificationReport& report) {
    return report.summary.counterexamples > 0 ? "counterexamples-found" : "ok";
}

} // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. All output
/// goes to the supplied streams; the return value is the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation of nilpotent multipliers of finite abelian groups"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    // witt: evaluate the counting formula.
    long long witt_weight = 0;
    long long witt_letters = 0;
    CLI::App* witt_cmd =
        app.add_subcommand("witt", "Count basic commutators of weight n on d letters");
    witt_cmd->add_option("-n,--weight", witt_weight, "Commutator weight (>= 1)")->required();
    witt_cmd->add_option("-d,--letters", witt_letters, "Alphabet size (>= 0)")->required();
    add_format(witt_cmd);

    // hall: generate the basis itself.
    long long hall_letters = 0;
    long long hall_weight = 0;
    long long hall_cap = kDefaultElementCap;
    CLI::App* hall_cmd =
        app.add_subcommand("hall", "Generate basic commutators up to a weight bound");
    hall_cmd->add_option("-d,--letters", hall_letters, "Alphabet size (>= 1)")->required();
    hall_cmd->add_option("-w,--max-weight", hall_weight, "Largest weight to generate")->required();
    hall_cmd->add_option("--cap", hall_cap, "Element cap for the whole basis")
        ->capture_default_str();
    add_format(hall_cmd);

    // multiplier: the structure formula.
    std::string multiplier_group;
    std::string multiplier_partition;
    long long multiplier_class = 1;
    CLI::App* multiplier_cmd = app.add_subcommand(
        "multiplier", "Multiplier structure of a finite abelian group at a given class");
    CLI::Option* group_opt = multiplier_cmd->add_option(
        "-G,--group", multiplier_group, "Concrete group as cyclic orders, e.g. 8,2,2");
    CLI::Option* partition_opt = multiplier_cmd->add_option(
        "--partition", multiplier_partition, "Symbolic p-group as a partition, e.g. 3,1,1 or p^3,p,p");
    group_opt->excludes(partition_opt);
    partition_opt->excludes(group_opt);
    multiplier_cmd->add_option("-c,--class", multiplier_class, "Nilpotency class (>= 1)")
        ->capture_default_str();
    add_format(multiplier_cmd);

    // classify: solution sets of |multiplier| = p^{witt(c+1, n-t)}.
    long long classify_n = 0;
    long long classify_c = 1;
    long long classify_t = 0;
    bool classify_all_t = false;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Which p-groups of order p^n attain the near-cyclic multiplier order");
    classify_cmd->add_option("-n,--order-exponent", classify_n, "Order exponent n (>= 1)")
        ->required();
    classify_cmd->add_option("-c,--class", classify_c, "Nilpotency class (>= 1)")
        ->capture_default_str();
    CLI::Option* t_opt = classify_cmd->add_option("-t", classify_t, "Single t, 0 <= t <= n-1");
    CLI::Option* all_t_opt = classify_cmd->add_flag("--all-t", classify_all_t, "Scan every t");
    t_opt->excludes(all_t_opt);
    all_t_opt->excludes(t_opt);
    add_format(classify_cmd);

    // verify: the exhaustive suites.
    std::string suite;
    long long opt_max_n = -1;
    long long opt_max_d = -1;
    long long opt_max_n2 = -1;
    long long opt_max_c = -1;
    long long opt_max_i = -1;
    long long opt_max_order = -1;
    long long opt_sandwich_max_n = -1;
    std::string expect;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run a verification suite and report counterexamples");
    verify_cmd
        ->add_option("--suite", suite,
                     "One of: witt, schur, bound, classification, inequalities")
        ->required();
    verify_cmd->add_option("--max-n", opt_max_n,
                           "Main range: weight (witt) or order exponent (other suites)");
    verify_cmd->add_option("--max-d", opt_max_d, "Alphabet range for the witt suite");
    verify_cmd->add_option("--max-n2", opt_max_n2,
                           "Deeper two-letter weight sweep for the witt suite");
    verify_cmd->add_option("--max-c", opt_max_c, "Nilpotency-class range");
    verify_cmd->add_option("--max-i", opt_max_i, "Index range for the growth inequality");
    verify_cmd->add_option("--max-order", opt_max_order, "Group-order cap for the schur suite");
    verify_cmd->add_option("--sandwich-max-n", opt_sandwich_max_n,
                           "Order-exponent range for the sandwich scan");
    verify_cmd->add_option("--expect", expect, "With 'clean', exit 3 if anything fails")
        ->check(CLI::IsMember({"clean"}));
    add_format(verify_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*witt_cmd) {
            const long long value = witt(witt_weight, witt_letters);
            CommandResult result;
            result.command = "witt";
            result.inputs = json{{"weight", witt_weight}, {"letters", witt_letters}};
            result.result = value;
            result.status = "ok";
            detail::emit(out, result, format, [&] { out << value << "\n"; });
            return kExitOk;
        }

        if (*hall_cmd) {
            if (hall_letters > std::numeric_limits<int>::max() ||
                hall_weight > std::numeric_limits<int>::max())
                throw std::invalid_argument("hall: ranges out of supported bounds");
            const HallBasis basis = generate_hall_basis(static_cast<int>(hall_letters),
                                                        static_cast<int>(hall_weight), hall_cap);
            json counts = json::array();
            json per_weight = json::array();
            for (const auto& layer : basis.per_weight) {
                counts.push_back(layer.size());
                json rendered = json::array();
                for (const BasicCommutator& c : layer) rendered.push_back(render_commutator(c));
                per_weight.push_back(std::move(rendered));
            }
            CommandResult result;
            result.command = "hall";
            result.inputs = json{{"letters", hall_letters},
                                 {"max_weight", hall_weight},
                                 {"cap", hall_cap}};
            result.result = json{{"counts", counts}, {"per_weight", per_weight},
                                 {"total", basis.size()}};
            result.status = "ok";
            detail::emit(out, result, format, [&] {
                for (std::size_t k = 0; k < basis.per_weight.size(); ++k) {
                    const auto& layer = basis.per_weight[k];
                    out << "weight " << (k + 1) << " (" << layer.size() << "):";
                    for (const BasicCommutator& c : layer) out << " " << render_commutator(c);
                    out << "\n";
                }
                out << "total " << basis.size() << "\n";
            });
            return kExitOk;
        }

        if (*multiplier_cmd) {
            if (group_opt->count() == 0 && partition_opt->count() == 0)
                throw std::invalid_argument("multiplier: pass one of --group or --partition");
            CommandResult result;
            result.command = "multiplier";
            if (group_opt->count() > 0) {
                const CyclicDecomposition group = parse_cyclic_decomposition(multiplier_group);
                const InvariantFactorForm canonical = canonicalize(group);
                const MultiplierStructure structure =
                    nilpotent_multiplier(canonical, multiplier_class);
                const FactoredOrder order = structure.order();
                result.inputs = json{{"group", group.orders()}, {"class", multiplier_class}};
                result.result = json{{"invariant_factors", canonical.factors()},
                                     {"structure", structure},
                                     {"order", factored_order_to_json(order)},
                                     {"rank", structure.rank()},
                                     {"trivial", structure.trivial()}};
                result.status = "ok";
                detail::emit(out, result, format, [&] {
                    out << render_structure(structure) << "\n";
                    out << "order " << render_order(order) << "\n";
                });
            } else {
                const PGroupPartition partition = parse_partition(multiplier_partition);
                const PMultiplierStructure structure =
                    nilpotent_multiplier(partition, multiplier_class);
                const long long exponent = structure.order_exponent();
                result.inputs =
                    json{{"partition", partition.parts()}, {"class", multiplier_class}};
                json order = json::object();
                if (exponent > 0) order["p"] = exponent;
                result.result = json{{"structure", structure},
                                     {"order", order},
                                     {"order_exponent", exponent},
                                     {"rank", structure.rank()},
                                     {"trivial", structure.trivial()}};
                result.status = "ok";
                detail::emit(out, result, format, [&] {
                    out << render_structure(structure) << "\n";
                    out << "order " << render_p_power(exponent) << "\n";
                });
            }
            return kExitOk;
        }

        if (*classify_cmd) {
            VerificationReport report;
            if (classify_all_t) {
                report = classification_report(classify_n, classify_c);
            } else {
                if (t_opt->count() == 0)
                    throw std::invalid_argument("classify: pass -t or --all-t");
                report.suite = "classification";
                report.ranges = {{"n", classify_n}, {"c", classify_c}, {"t", classify_t}};
                report.cases.push_back(classification_case(classify_n, classify_c, classify_t));
                report.summary = summarize(report.cases, 1);
            }
            CommandResult result;
            result.command = "classify";
            result.inputs = json{{"n", classify_n}, {"c", classify_c}};
            if (classify_all_t)
                result.inputs["all_t"] = true;
            else
                result.inputs["t"] = classify_t;
            result.result = report;
            result.status = detail::report_status(report);
            detail::emit(out, result, format, [&] { print_report(out, report); });
            return kExitOk;
        }

        if (*verify_cmd) {
            // Each suite fills unset range flags with its documented default.
            const auto value_or = [](long long flag, long long fallback) {
                return flag >= 0 ? flag : fallback;
            };
            VerificationReport report;
            CommandResult result;
            result.command = "verify";
            if (suite == "witt") {
                const long long max_weight = value_or(opt_max_n, kWittMaxWeight);
                const long long max_letters = value_or(opt_max_d, kWittMaxLetters);
                const long long two_letter = value_or(opt_max_n2, kWittTwoLetterMaxWeight);
                report = witt_suite(max_weight, max_letters, two_letter);
                result.inputs = json{{"suite", "witt"},
                                     {"max_weight", max_weight},
                                     {"max_letters", max_letters},
                                     {"two_letter_max_weight", two_letter}};
            } else if (suite == "schur") {
                const long long max_order = value_or(opt_max_order, kSchurMaxOrder);
                report = schur_suite(max_order);
                result.inputs = json{{"suite", "schur"}, {"max_order", max_order}};
            } else if (suite == "bound") {
                const long long max_n = value_or(opt_max_n, kBoundMaxN);
                const long long max_c = value_or(opt_max_c, kBoundMaxC);
                report = bound_suite(max_n, max_c);
                result.inputs = json{{"suite", "bound"}, {"max_n", max_n}, {"max_c", max_c}};
            } else if (suite == "classification" || suite == "thm34") {
                const long long max_n = value_or(opt_max_n, kClassificationMaxN);
                const long long max_c = value_or(opt_max_c, kClassificationMaxC);
                report = classification_suite(max_n, max_c);
                result.inputs = json{{"suite", "classification"},
                                     {"max_n", max_n},
                                     {"max_c", max_c}};
            } else if (suite == "inequalities") {
                const long long max_i = value_or(opt_max_i, kGrowthMaxI);
                const long long max_c = value_or(opt_max_c, kInequalityMaxC);
                const long long max_n = value_or(opt_max_n, kProductBoundMaxN);
                const long long sandwich_max_n =
                    value_or(opt_sandwich_max_n, kSandwichMaxN);
                report = inequalities_suite(max_i, max_c, max_n, sandwich_max_n);
                result.inputs = json{{"suite", "inequalities"},
                                     {"max_i", max_i},
                                     {"max_c", max_c},
                                     {"max_n", max_n},
                                     {"sandwich_max_n", sandwich_max_n}};
            } else {
                throw std::invalid_argument("verify: unknown suite '" + suite + "'");
            }
            if (!expect.empty()) result.inputs["expect"] = expect;
            result.result = report;
            result.status = detail::report_status(report);
            detail::emit(out, result, format, [&] { print_report(out, report); });
            if (expect == "clean" && report.summary.counterexamples > 0) return kExitExpectation;
            return kExitOk;
        }
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace nilmult

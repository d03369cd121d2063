#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with captured streams.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "canon.hpp"
#include "chars.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "roots.hpp"

namespace borelsc::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, invalid_input = 2 };

namespace detail {

inline int fail(std::ostream& err, const std::string& code, const std::string& message,
                std::optional<std::size_t> position = std::nullopt) {
    Json j{{"error", code}, {"message", message}};
    if (position) j["position"] = *position;
    err << j.dump() << "\n";
    return invalid_input;
}

inline GroupKind parse_group(const std::string& g) { return (g == "g" || g == "G") ? GroupKind::G : GroupKind::U; }

inline std::uint64_t count_label_sizes_G(const ContractedAlgebra& alg, const std::vector<SuperclassLabelG>& labels,
                                         std::uint64_t budget) {
    OrbitPartition p = orbit_partition(alg, GroupKind::G, superclass_neighbours(alg, GroupKind::G), budget);
    std::uint64_t total = 0;
    for (const auto& b : labels) total += p.size[p.block_of[alg.index_G(representative_G(alg, b))]];
    return total;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supercharacter theories of the Borel contraction of GL(n, q) and its unipotent radical"};
    app.require_subcommand(1);

    std::string group = "u", format = "json", out_file, element_text, element_file, gamma_text;
    int n = 0;
    std::uint32_t q = 0;
    bool skip_oracle = false;
    std::uint64_t budget = ContractedAlgebra::default_budget;

    auto add_common = [&](CLI::App* sub, bool with_group) {
        if (with_group)
            sub->add_option("--group", group, "u for U^a, g for G^a")
                ->check(CLI::IsMember({"u", "g", "U", "G"}))
                ->required();
        sub->add_option("--n", n, "board size")->required();
        sub->add_option("--q", q, "odd prime field size")->required();
    };

    auto* table = app.add_subcommand("table", "supercharacter table");
    add_common(table, true);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", out_file, "write to this file instead of stdout");
    table->add_option("--budget", budget, "enumeration limit");

    auto* verify = app.add_subcommand("verify", "check the supercharacter axioms by brute force");
    add_common(verify, true);
    verify->add_flag("--skip-oracle", skip_oracle, "use closed formulas instead of induced characters");
    verify->add_option("--budget", budget, "enumeration limit");

    auto* label = app.add_subcommand("label", "canonical superclass label of an element");
    add_common(label, true);
    auto* elem_opt = label->add_option("--element", element_text, "element text, e.g. \"E 1 2 = 1; F 2 1 = 2\"");
    auto* file_opt = label->add_option("--file", element_file, "file holding the element text");
    elem_opt->excludes(file_opt);

    auto* sets = app.add_subcommand("sets", "shadow sets S(gamma) and S*(gamma)");
    sets->add_option("--n", n, "board size")->required();
    sets->add_option("--gamma", gamma_text, "root as i,j")->required();

    auto* count = app.add_subcommand("count", "label counts, group orders and class-size totals");
    add_common(count, false);
    count->add_option("--budget", budget, "enumeration limit for G^a class sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        return detail::fail(err, "usage", e.what());
    }

    try {
        if (*sets) {
            if (n < 1) throw DomainError("board size must be at least 1");
            Root g = parse_root(gamma_text);
            if (!valid_root(g, n)) throw DomainError("gamma is not a root of the n x n board");
            Json j{{"n", n}, {"gamma", {g.i, g.j}}, {"S", to_json(s_set(g, n))}, {"S_star", to_json(s_star_set(g, n))}};
            out << j.dump(2) << "\n";
            return ok;
        }

        ContractedAlgebra alg(n, q);
        const GroupKind kind = detail::parse_group(group);

        if (*count) {
            auto ulabels = labels_U(n, q);
            mpz_class total_u = 0;
            for (const auto& l : ulabels) total_u += superclass_size_U(alg, alg.build_X(l.D, l.phi));
            auto gclasses = labels_G_classes(alg.field(), n);
            auto gchars = labels_G_chars(alg.field(), n);
            Json j{{"n", n},
                   {"q", q},
                   {"order_U", alg.order_U()},
                   {"order_G", alg.order_G()},
                   {"superclasses_U", ulabels.size()},
                   {"supercharacters_U", ulabels.size()},
                   {"superclasses_G", gclasses.size()},
                   {"supercharacters_G", gchars.size()},
                   {"class_size_total_U", to_json(total_u)}};
            if (alg.order_G() <= budget)
                j["class_size_total_G"] = detail::count_label_sizes_G(alg, gclasses, budget);
            else
                j["class_size_total_G"] = nullptr;
            out << j.dump(2) << "\n";
            return ok;
        }

        if (*table) {
            CharacterTable t = kind == GroupKind::U ? table_U(n, q, budget) : table_G(n, q, budget);
            std::string text = format == "csv" ? to_csv(t) : to_json(t).dump() + "\n";
            if (out_file.empty()) {
                out << text;
            } else {
                std::ofstream f(out_file);
                if (!(f << text)) return detail::fail(err, "io", "cannot write " + out_file);
            }
            return ok;
        }

        if (*label) {
            if (!*elem_opt && !*file_opt) return detail::fail(err, "usage", "label needs --element or --file");
            std::string text = element_text;
            if (!element_file.empty()) {
                std::ifstream f(element_file);
                if (!f) return detail::fail(err, "io", "cannot read " + element_file);
                text.assign(std::istreambuf_iterator<char>(f), {});
                while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
            }
            AlgebraElement x = alg.parse(text);
            Json j = kind == GroupKind::U ? to_json(label_U(alg, x)) : to_json(label_G(alg, x));
            out << j.dump() << "\n";
            return ok;
        }

        if (*verify) {
            AxiomReport r = verify_axioms(alg, kind, !skip_oracle, budget);
            out << to_json(r).dump(2) << "\n";
            return r.all_pass() ? ok : verification_failed;
        }
    } catch (const ParseError& e) {
        return detail::fail(err, "parse", e.what(), e.position);
    } catch (const BudgetError& e) {
        return detail::fail(err, "budget", e.what());
    } catch (const DomainError& e) {
        return detail::fail(err, "domain", e.what());
    } catch (const std::invalid_argument& e) {
        return detail::fail(err, "invalid", e.what());
    }
    return detail::fail(err, "usage", "no subcommand");
}

}  // namespace borelsc::cli

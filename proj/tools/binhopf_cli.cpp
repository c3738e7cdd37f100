// Command-line front end for the binary-forest Hopf algebra engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "binhopf.hpp"
#include "binhopf/json_io.hpp"
#include "binhopf/verify.hpp"

namespace {

using namespace binhopf;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

struct Options {
    bool json = false;
    std::string first;
    std::string second;
    std::size_t edge = 0;
    bool edge_given = false;
    std::size_t degree = 6;
    std::size_t max_leaves = 6;
    std::uint64_t seed = 1;
    std::string suite = "all";
    std::string suite_positional;
    std::string kind;
    std::size_t count = 0;
};

json envelope(const std::string& command)
{
    return {{"schema", json_schema}, {"command", command}};
}

void emit(const Options& o, const std::string& command, const std::string& text, json payload)
{
    if (o.json) {
        json doc = envelope(command);
        doc["result"] = std::move(payload);
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
}

void emit_lincomb(const Options& o, const std::string& command, const LinComb& a)
{
    emit(o, command, to_string(a), to_json(a));
}

void emit_tensor(const Options& o, const std::string& command, const Tensor2& t)
{
    emit(o, command, to_string(t), to_json(t));
}

int run_verify(const Options& o)
{
    const std::string suite = o.suite_positional.empty() ? o.suite : o.suite_positional;
    verify::Bounds bounds{o.max_leaves, o.degree, o.seed};
    std::vector<std::pair<std::string, verify::CheckResult>> results;
    std::vector<DualityReport> reports;
    auto add = [&](const std::string& name, std::vector<verify::CheckResult> rs) {
        for (auto& r : rs)
            results.emplace_back(name, std::move(r));
    };
    if (suite == "hopf" || suite == "all")
        add("hopf", verify::hopf_suite(bounds));
    if (suite == "prelie" || suite == "all")
        add("prelie", verify::prelie_suite(bounds));
    if (suite == "duality" || suite == "all")
        add("duality", verify::duality_suite(bounds, &reports));
    if (suite == "exp" || suite == "all")
        add("exp", verify::exp_suite(bounds));

    std::size_t passed = 0;
    for (const auto& [name, r] : results)
        passed += r.pass ? 1 : 0;
    const std::size_t failed = results.size() - passed;

    if (o.json) {
        std::size_t reports_passed = 0;
        for (const auto& r : reports) {
            reports_passed += r.pass ? 1 : 0;
            json line = to_json(r);
            line["schema"] = json_schema;
            std::cout << line.dump() << '\n';
        }
        for (const auto& [name, r] : results) {
            json line = {{"schema", json_schema}, {"suite", name},      {"check", r.name},
                         {"pass", r.pass},        {"checked", r.checked}};
            if (!r.pass)
                line["witness"] = r.witness;
            std::cout << line.dump() << '\n';
        }
        json summary = {{"checks", results.size()}, {"passed", passed}, {"failed", failed}};
        if (!reports.empty())
            summary["reports"] = {{"total", reports.size()},
                                  {"passed", reports_passed},
                                  {"failed", reports.size() - reports_passed}};
        std::cout << json{{"schema", json_schema}, {"summary", summary}}.dump() << '\n';
    } else {
        for (const auto& [name, r] : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << "[" << name << "] " << r.name << " (checked " << r.checked
                      << ")";
            if (!r.pass)
                std::cout << ": " << r.witness;
            std::cout << '\n';
        }
        if (suite == "duality" || suite == "all") {
            const auto w = verify::worked_example();
            std::cout << "worked example: n=" << w.n_count << " m=" << w.m_count << " lhs=" << w.lhs
                      << " rhs=" << w.rhs << '\n';
        }
        std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the Hopf algebra of nonplanar binary forests"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit one JSON document per line (schema binhopf/1)");

    std::function<int()> action;
    auto command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    auto* canon = command("canon", "Print the canonical form of a tree");
    canon->add_option("tree", o.first, "Tree, e.g. \"(c (b a))\"")->required();
    canon->callback([&] {
        action = [&] {
            const Tree t = parse_tree(o.first);
            emit(o, "canon", to_string(t), to_string(t));
            return exit_ok;
        };
    });

    auto* sym = command("sym", "Print the symmetry coefficient s_F");
    sym->add_option("forest", o.first, "Forest, e.g. \"*, *, (* *)\"")->required();
    sym->callback([&] {
        action = [&] {
            const Integer s = parse_forest(o.first).aut_order();
            emit(o, "sym", s.str(), s.str());
            return exit_ok;
        };
    });

    auto* cop = command("coproduct", "Coproduct by binary-admissible cuts");
    cop->add_option("forest", o.first, "Forest")->required();
    cop->callback([&] {
        action = [&] {
            emit_tensor(o, "coproduct", coproduct(parse_forest(o.first)));
            return exit_ok;
        };
    });

    auto* anti = command("antipode", "Antipode of a forest");
    anti->add_option("forest", o.first, "Forest")->required();
    anti->callback([&] {
        action = [&] {
            emit_lincomb(o, "antipode", antipode(parse_forest(o.first)));
            return exit_ok;
        };
    });

    auto* ins = command("insert", "Insert S at one edge of T (all edges when --edge is absent)");
    ins->add_option("tree", o.first, "Base tree")->required();
    ins->add_option("inserted", o.second, "Inserted tree")->required();
    auto* edge_opt = ins->add_option("--edge", o.edge, "Preorder edge index, 0 = ghost root edge");
    ins->callback([&, edge_opt] {
        o.edge_given = edge_opt->count() > 0;
        action = [&] {
            const Tree t = parse_tree(o.first);
            const Tree s = parse_tree(o.second);
            if (o.edge_given) {
                const Tree r = insert_at_edge(t, o.edge, s);
                emit(o, "insert", to_string(r), to_string(r));
                return exit_ok;
            }
            std::string text;
            json list = json::array();
            for (std::size_t e = 0; e < edge_slots(t); ++e) {
                const Tree r = insert_at_edge(t, e, s);
                text += (e ? "\n" : "") + std::to_string(e) + ": " + to_string(r);
                list.push_back({{"edge", e}, {"tree", to_string(r)}});
            }
            emit(o, "insert", text, list);
            return exit_ok;
        };
    });

    auto* pl = command("prelie", "Pre-Lie product T <| S");
    pl->add_option("tree", o.first, "Base tree")->required();
    pl->add_option("inserted", o.second, "Inserted tree")->required();
    pl->callback([&] {
        action = [&] {
            emit_lincomb(o, "prelie", prelie(parse_tree(o.first), parse_tree(o.second)));
            return exit_ok;
        };
    });

    auto* st = command("star", "Star product F * G");
    st->add_option("left", o.first, "Forest F")->required();
    st->add_option("right", o.second, "Forest G")->required();
    st->callback([&] {
        action = [&] {
            emit_lincomb(o, "star", star_monomials(parse_forest(o.first), parse_forest(o.second)));
            return exit_ok;
        };
    });

    auto* sh = command("shuffle", "Shuffle coproduct");
    sh->add_option("forest", o.first, "Forest")->required();
    sh->callback([&] {
        action = [&] {
            emit_tensor(o, "shuffle", shuffle_coproduct(parse_forest(o.first)));
            return exit_ok;
        };
    });

    auto* pr = command("pair", "Pairing <F, G>");
    pr->add_option("left", o.first, "Forest F")->required();
    pr->add_option("right", o.second, "Forest G")->required();
    pr->callback([&] {
        action = [&] {
            const Rational v = pair(parse_forest(o.first), parse_forest(o.second));
            emit(o, "pair", to_string(v), to_string(v));
            return exit_ok;
        };
    });

    auto* gr = command("grow", "Growth operator");
    gr->add_option("forest", o.first, "Forest")->required();
    gr->callback([&] {
        action = [&] {
            emit_lincomb(o, "grow", growth(basis(parse_forest(o.first))));
            return exit_ok;
        };
    });

    auto* pn = command("prune", "Pruning operator");
    pn->add_option("forest", o.first, "Forest")->required();
    pn->callback([&] {
        action = [&] {
            emit_lincomb(o, "prune", pruning(basis(parse_forest(o.first))));
            return exit_ok;
        };
    });

    auto* ex = command("exp", "Pre-Lie exponential W(*) truncated at --degree");
    ex->add_option("--degree", o.degree, "Highest degree kept")->required()->check(CLI::PositiveNumber);
    ex->callback([&] {
        action = [&] {
            emit_lincomb(o, "exp", prelie_exponential(o.degree));
            return exit_ok;
        };
    });

    auto* en = command("enumerate", "List unlabelled trees or forests with n leaves");
    en->add_option("kind", o.kind, "trees or forests")->required()->check(CLI::IsMember({"trees", "forests"}));
    en->add_option("n", o.count, "Number of leaves")->required();
    en->callback([&] {
        action = [&] {
            std::vector<std::string> items;
            if (o.kind == "trees") {
                if (o.count == 0)
                    throw BadIndex("trees need at least one leaf");
                for (const Tree& t : enumerate_trees(o.count))
                    items.push_back(to_string(t));
            } else {
                for (const Forest& f : enumerate_forests(o.count))
                    items.push_back(to_string(f));
            }
            std::string text;
            for (const auto& s : items)
                text += s + "\n";
            text += "count: " + std::to_string(items.size());
            emit(o, "enumerate", text, {{"count", items.size()}, {"items", items}});
            return exit_ok;
        };
    });

    auto* ver = command("verify", "Run a property suite: all, hopf, prelie, duality or exp");
    const std::vector<std::string> suites{"all", "hopf", "prelie", "duality", "exp"};
    ver->add_option("suite_name", o.suite_positional, "Suite name (same as --suite)")->check(CLI::IsMember(suites));
    ver->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
    ver->add_option("--max-leaves", o.max_leaves, "Largest leaf count swept")->capture_default_str();
    ver->add_option("--degree", o.degree, "Exponential truncation degree")->capture_default_str();
    ver->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
    ver->callback([&] { action = [&] { return run_verify(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return action();
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_limit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

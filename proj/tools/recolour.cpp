// Command-line front door: graph/colouring generators, the exhaustive
// explorer, certified constructions, and reproduction checks for the
// published values.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recolour/colouring.hpp"
#include "recolour/explorer.hpp"
#include "recolour/families.hpp"
#include "recolour/graph.hpp"
#include "recolour/io.hpp"
#include "recolour/kpq.hpp"
#include "recolour/renaming.hpp"

namespace {

using namespace recolour;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct PaletteChoice {
    int k = 0;
    std::string lists_path;

    Palette resolve() const {
        if ((k > 0) == !lists_path.empty())
            throw CLI::ValidationError("palette", "give exactly one of --k or --lists");
        if (k > 0)
            return Palette::uniform(k);
        return Palette::lists(read_file(lists_path, [](std::istream& in) { return read_lists(in); }));
    }
};

void add_palette_options(CLI::App* cmd, PaletteChoice& choice) {
    cmd->add_option("--k", choice.k, "uniform palette with colours 1..k");
    cmd->add_option("--lists", choice.lists_path, "per-vertex colour lists file");
}

ExplorerOptions make_options(std::uint64_t budget, int workers) {
    ExplorerOptions opt;
    if (budget > 0) {
        opt.state_budget = budget;
        opt.search_budget = budget;
    }
    opt.workers = workers;
    return opt;
}

Graph load_graph(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_graph(in); });
}

Colouring load_colouring(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_colouring(in); });
}

std::string diameter_text(const std::optional<std::uint64_t>& d) {
    return d ? std::to_string(*d) : std::string("inf");
}

int run_gen(const std::string& family, const std::vector<int>& params, const std::string& out) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError("gen", family + " expects " + std::to_string(count) + " parameter(s)");
    };
    auto write_graph_file = [&](const Graph& g) {
        write_file(out + ".graph", g, [](std::ostream& o, const Graph& x) { write_graph(o, x); });
        std::cout << "wrote " << out << ".graph\n";
    };
    auto write_lists_file = [&](const ListAssignment& l) {
        write_file(out + ".lists", l, [](std::ostream& o, const ListAssignment& x) { write_lists(o, x); });
        std::cout << "wrote " << out << ".lists\n";
    };
    auto write_colouring_file = [&](const std::string& suffix, const Colouring& c) {
        write_file(out + suffix, c, [](std::ostream& o, const Colouring& x) { write_colouring(o, x); });
        std::cout << "wrote " << out << suffix << "\n";
    };

    if (family == "complete-bipartite") {
        need(2);
        write_graph_file(complete_bipartite(params[0], params[1]));
    } else if (family == "kmm-minus-matching") {
        need(1);
        write_graph_file(complete_bipartite_minus_matching(params[0]));
    } else if (family == "path") {
        need(1);
        write_graph_file(path(params[0]));
    } else if (family == "layered") {
        need(0);
        write_graph_file(layered_example());
    } else if (family == "forcing-gadget") {
        need(2);
        auto inst = forcing_gadget(params[0], params[1]);
        write_graph_file(inst.graph);
        write_lists_file(inst.lists);
    } else if (family == "path-plus-chain") {
        need(1);
        auto inst = path_plus_chain(params[0]);
        write_graph_file(inst.graph);
        write_lists_file(inst.lists);
    } else if (family == "k18-list") {
        need(0);
        auto inst = k18_list_instance();
        write_graph_file(inst.graph);
        write_lists_file(inst.lists);
        write_colouring_file(".alpha", inst.alpha);
        write_colouring_file(".beta", inst.beta);
    } else if (family == "frozen-list") {
        need(1);
        auto inst = frozen_list_instance(params[0]);
        write_graph_file(inst.graph);
        write_lists_file(inst.lists);
        write_colouring_file(".phi", inst.phi);
    } else {
        throw CLI::ValidationError("gen", "unknown family '" + family + "'");
    }
    return exit_ok;
}

// ---- paper-check items ------------------------------------------------

int check_example_4_2(bool json_out, const ExplorerOptions& opt) {
    const Graph g = layered_example();
    auto m3 = metrics(g, Palette::uniform(3), true, opt);
    auto m4 = metrics(g, Palette::uniform(4), true, opt);
    if (m3.status != SearchStatus::done || m4.status != SearchStatus::done)
        return exit_budget;
    const bool pass = m3.diameter == 15 && m4.diameter == 17 && m3.radius == 15 && m4.radius == 14;
    if (json_out) {
        json j{{"diam3", *m3.diameter}, {"diam4", *m4.diameter}, {"rad3", *m3.radius},
               {"rad4", *m4.radius},    {"pass", pass}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "diam3=" << diameter_text(m3.diameter) << " diam4=" << diameter_text(m4.diameter)
                  << " rad3=" << diameter_text(m3.radius) << " rad4=" << diameter_text(m4.radius) << "\n"
                  << (pass ? "PASS" : "FAIL") << " example-4.2\n";
    }
    return pass ? exit_ok : exit_fail;
}

int check_example_4_1(bool full, const ExplorerOptions& opt) {
    bool pass = true;
    std::vector<int> ms{3, 4};
    if (full)
        ms.push_back(5);
    for (int m : ms)
        for (int k = 2; k <= 5; ++k) {
            auto rep = components(complete_bipartite_minus_matching(m), Palette::uniform(k), opt);
            if (rep.status != SearchStatus::done)
                return exit_budget;
            const bool connected = rep.component_count == 1;
            const bool expected = k >= 3 && k != m;
            if (connected != expected)
                pass = false;
            std::cout << "m=" << m << " k=" << k << " components=" << rep.component_count
                      << " connected=" << (connected ? "yes" : "no") << " expected="
                      << (expected ? "yes" : "no") << "\n";
        }
    std::cout << (pass ? "PASS" : "FAIL") << " example-4.1\n";
    return pass ? exit_ok : exit_fail;
}

int check_prop_1_2(const ExplorerOptions& opt) {
    bool pass = true;
    for (int p = 1; p <= 6; ++p)
        for (int q = p; p + q <= 7; ++q) {
            auto rep = metrics(complete_bipartite(p, q), Palette::uniform(3), true, opt);
            if (rep.status != SearchStatus::done)
                return exit_budget;
            const std::uint64_t expected = static_cast<std::uint64_t>(3 * (p + q) / 2);
            if (rep.diameter != expected)
                pass = false;
            std::cout << "p=" << p << " q=" << q << " diam=" << diameter_text(rep.diameter)
                      << " formula=" << expected << "\n";
        }
    std::cout << (pass ? "PASS" : "FAIL") << " prop-1.2\n";
    return pass ? exit_ok : exit_fail;
}

int check_prop_4_3c() {
    bool pass = true;
    for (int m : {4, 5}) {
        auto inst = frozen_list_instance(m);
        const Palette pal = Palette::lists(inst.lists);
        const bool frozen = is_frozen(inst.graph, inst.phi, pal);
        const bool isolated = neighbours(inst.graph, pal, inst.phi).empty();
        if (!frozen || !isolated)
            pass = false;
        std::cout << "m=" << m << " frozen=" << (frozen ? "yes" : "no")
                  << " isolated=" << (isolated ? "yes" : "no") << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " prop-4.3c\n";
    return pass ? exit_ok : exit_fail;
}

// Exactly one small-side assignment extends to a proper L-colouring: the
// all-first transversal. Verified by enumerating all s^t assignments.
bool gadget_forces(int t, int s, std::vector<Colour>& forced) {
    auto gadget = forcing_gadget(t, s);
    std::vector<std::vector<Colour>> good;
    std::vector<Colour> pick(static_cast<std::size_t>(t));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == t) {
            for (std::size_t w = static_cast<std::size_t>(t); w < gadget.lists.size(); ++w) {
                bool available = false;
                for (Colour c : gadget.lists[w])
                    if (std::find(pick.begin(), pick.end(), c) == pick.end()) {
                        available = true;
                        break;
                    }
                if (!available)
                    return;
            }
            good.push_back(pick);
            return;
        }
        for (Colour c : gadget.lists[static_cast<std::size_t>(i)]) {
            pick[static_cast<std::size_t>(i)] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::vector<Colour> all_first;
    for (int i = 0; i < t; ++i)
        all_first.push_back(i * s + 1);
    forced = all_first;
    return good.size() == 1 && good.front() == all_first;
}

int check_gadget_forcing(bool full) {
    bool pass = true;
    std::vector<std::pair<int, int>> cases{{2, 2}, {3, 2}};
    if (full)
        cases.emplace_back(4, 4);
    for (auto [t, s] : cases) {
        std::vector<Colour> forced;
        const bool ok = gadget_forces(t, s, forced);
        if (!ok)
            pass = false;
        std::cout << "t=" << t << " s=" << s << " unique_extension=" << (ok ? "yes" : "no") << " forced=";
        for (std::size_t i = 0; i < forced.size(); ++i)
            std::cout << (i ? "," : "") << forced[i];
        std::cout << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " gadget-forcing\n";
    return pass ? exit_ok : exit_fail;
}

int check_k18_formula(const std::string& witness_path) {
    auto inst = k18_list_instance();
    const long long upper = upper_bound_formula(KpqInstance(18, 18, 4));
    const int lower = inst.graph.vertex_count() + matching_number(inst.graph);
    bool pass = upper == 54 && lower == 54;
    std::cout << "upper_bound(k=4,p=18,q=18)=" << upper << " n+matching=" << lower << "\n";
    if (!witness_path.empty()) {
        auto steps = read_file(witness_path, [](std::istream& in) { return read_sequence_steps(in); });
        auto report = verify_sequence(inst.graph, Palette::lists(inst.lists), RecolouringSequence{inst.alpha, steps},
                                      inst.beta);
        const bool long_enough = report.valid && report.length >= 55;
        std::cout << "witness valid=" << (report.valid ? "yes" : "no") << " length=" << report.length << "\n";
        pass = pass && long_enough;
    }
    std::cout << (pass ? "PASS" : "FAIL") << " k18-formula\n";
    return pass ? exit_ok : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recolouring reconfiguration toolkit"};
    app.require_subcommand(1);

    std::uint64_t budget = 0;
    int workers = 0;
    bool json_out = false;
    app.add_option("--budget", budget, "node budget for explorer searches")->capture_default_str();
    app.add_option("--workers", workers, "worker threads for the metrics sweep (0 = auto)");
    app.add_flag("--json", json_out, "machine-readable output");

    // gen
    auto* gen = app.add_subcommand("gen", "write graph/list/colouring files for a named family");
    std::string family, out_prefix;
    std::vector<int> params;
    gen->add_option("family", family,
                    "complete-bipartite | kmm-minus-matching | path | layered | forcing-gadget | "
                    "path-plus-chain | k18-list | frozen-list")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--out", out_prefix, "output file prefix")->required();

    // explorer commands
    std::string graph_path, a_path, b_path, colouring_path, seq_path, target_path, out_path;
    PaletteChoice palette;
    bool symmetry = false;

    auto* metrics_cmd = app.add_subcommand("metrics", "exact diameter/radius of the reconfiguration graph");
    metrics_cmd->add_option("--graph", graph_path, "graph file")->required();
    add_palette_options(metrics_cmd, palette);
    metrics_cmd->add_flag("--symmetry", symmetry, "restrict BFS sources to colour-canonical states");

    auto* distance_cmd = app.add_subcommand("distance", "shortest recolouring distance between two colourings");
    distance_cmd->add_option("--graph", graph_path, "graph file")->required();
    distance_cmd->add_option("--a", a_path, "start colouring file")->required();
    distance_cmd->add_option("--b", b_path, "target colouring file")->required();
    distance_cmd->add_option("--out", out_path, "write the witness sequence here");
    add_palette_options(distance_cmd, palette);

    auto* components_cmd = app.add_subcommand("components", "connected components of the reconfiguration graph");
    components_cmd->add_option("--graph", graph_path, "graph file")->required();
    add_palette_options(components_cmd, palette);

    auto* frozen_cmd = app.add_subcommand("frozen", "is the colouring frozen?");
    frozen_cmd->add_option("--graph", graph_path, "graph file")->required();
    frozen_cmd->add_option("--colouring", colouring_path, "colouring file")->required();
    add_palette_options(frozen_cmd, palette);

    auto* ham_cmd = app.add_subcommand("ham", "Hamiltonian-cycle search over the reconfiguration graph");
    ham_cmd->add_option("--graph", graph_path, "graph file")->required();
    add_palette_options(ham_cmd, palette);

    auto* verify_cmd = app.add_subcommand("verify", "replay and check a recolouring sequence");
    verify_cmd->add_option("--graph", graph_path, "graph file")->required();
    verify_cmd->add_option("--start", a_path, "start colouring file")->required();
    verify_cmd->add_option("--sequence", seq_path, "sequence file")->required();
    verify_cmd->add_option("--target", target_path, "target colouring file")->required();
    add_palette_options(verify_cmd, palette);

    auto* renaming_cmd = app.add_subcommand("renaming", "optimal same-partition renaming sequence");
    int ell = 0;
    renaming_cmd->add_option("--graph", graph_path, "graph file")->required();
    renaming_cmd->add_option("--a", a_path, "start colouring file")->required();
    renaming_cmd->add_option("--b", b_path, "target colouring file")->required();
    renaming_cmd->add_option("--ell", ell, "number of colours allowed during the walk")->required();
    renaming_cmd->add_option("--out", out_path, "write the sequence here");

    // kpq commands
    int kk = 0, pp = 0, qq = 0, qmax = 0;
    auto* formula_cmd = app.add_subcommand("kpq-formula", "three-regime diameter interval for K_{p,q}");
    formula_cmd->add_option("--k", kk, "colours")->required();
    formula_cmd->add_option("--p", pp, "small part")->required();
    formula_cmd->add_option("--q", qq, "large part")->required();

    auto* extremal_cmd = app.add_subcommand("kpq-extremal", "write the far-apart colouring pair");
    extremal_cmd->add_option("--k", kk, "colours")->required();
    extremal_cmd->add_option("--p", pp, "small part")->required();
    extremal_cmd->add_option("--q", qq, "large part")->required();
    extremal_cmd->add_option("--out", out_prefix, "output file prefix")->required();

    auto* recolour_cmd = app.add_subcommand("kpq-recolour", "certified recolouring sequence between two colourings");
    recolour_cmd->add_option("--k", kk, "colours")->required();
    recolour_cmd->add_option("--p", pp, "small part")->required();
    recolour_cmd->add_option("--q", qq, "large part")->required();
    recolour_cmd->add_option("--a", a_path, "start colouring file")->required();
    recolour_cmd->add_option("--b", b_path, "target colouring file")->required();
    recolour_cmd->add_option("--out", out_path, "write the sequence here");

    auto* regimes_cmd = app.add_subcommand("kpq-regimes", "tab-separated regime-bound plot data");
    regimes_cmd->add_option("--k", kk, "colours")->required();
    regimes_cmd->add_option("--p", pp, "small part")->required();
    regimes_cmd->add_option("--qmax", qmax, "largest q")->required();

    auto* check_cmd = app.add_subcommand("paper-check", "reproduce a published value and report PASS/FAIL");
    std::string item, witness_path;
    bool full = false;
    check_cmd->add_option("item", item,
                          "example-4.1 | example-4.2 | prop-1.2 | prop-4.3c | gadget-forcing | k18-formula")
        ->required();
    check_cmd->add_flag("--full", full, "include the long-running rows");
    check_cmd->add_option("--witness", witness_path, "sequence file for the k18 lower-bound witness");

    // Let --budget/--workers/--json appear after the subcommand too.
    for (CLI::App* sub : {gen, metrics_cmd, distance_cmd, components_cmd, frozen_cmd, ham_cmd, verify_cmd,
                          renaming_cmd, formula_cmd, extremal_cmd, recolour_cmd, regimes_cmd, check_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const ExplorerOptions opt = make_options(budget, workers);

        if (gen->parsed())
            return run_gen(family, params, out_prefix);

        if (metrics_cmd->parsed()) {
            auto rep = metrics(load_graph(graph_path), palette.resolve(), symmetry, opt);
            if (rep.status == SearchStatus::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return exit_budget;
            }
            if (json_out) {
                json j{{"nodes", rep.node_count},
                       {"components", rep.component_count},
                       {"connected", rep.connected},
                       {"diameter", rep.diameter ? json(*rep.diameter) : json(nullptr)},
                       {"radius", rep.radius ? json(*rep.radius) : json(nullptr)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "nodes=" << rep.node_count << " components=" << rep.component_count
                          << " connected=" << (rep.connected ? "yes" : "no")
                          << " diameter=" << diameter_text(rep.diameter) << " radius=" << diameter_text(rep.radius)
                          << "\n";
            }
            return exit_ok;
        }

        if (distance_cmd->parsed()) {
            auto res = distance(load_graph(graph_path), palette.resolve(), load_colouring(a_path),
                                load_colouring(b_path), opt);
            if (res.status == DistanceResult::Status::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return exit_budget;
            }
            if (res.status == DistanceResult::Status::unreachable) {
                std::cout << "unreachable\n";
                return exit_ok;
            }
            std::cout << "distance=" << res.distance << "\n";
            if (!out_path.empty() && res.witness) {
                write_file(out_path, res.witness->steps,
                           [](std::ostream& o, const std::vector<Step>& s) { write_sequence_steps(o, s); });
                std::cout << "wrote " << out_path << "\n";
            }
            return exit_ok;
        }

        if (components_cmd->parsed()) {
            auto rep = components(load_graph(graph_path), palette.resolve(), opt);
            if (rep.status == SearchStatus::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return exit_budget;
            }
            if (json_out) {
                json j{{"nodes", rep.node_count}, {"components", rep.component_count}, {"sizes", rep.sizes}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "nodes=" << rep.node_count << " components=" << rep.component_count << " sizes=";
                for (std::size_t i = 0; i < rep.sizes.size(); ++i)
                    std::cout << (i ? "," : "") << rep.sizes[i];
                std::cout << "\n";
            }
            return exit_ok;
        }

        if (frozen_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            const Palette pal = palette.resolve();
            const bool frozen = is_frozen(g, load_colouring(colouring_path), pal);
            std::cout << "frozen=" << (frozen ? "yes" : "no") << "\n";
            return exit_ok;
        }

        if (ham_cmd->parsed()) {
            auto res = hamiltonian_cycle(load_graph(graph_path), palette.resolve(), opt);
            switch (res.status) {
            case HamiltonianResult::Status::found:
                std::cout << "found cycle_length=" << res.cycle.size() << "\n";
                return exit_ok;
            case HamiltonianResult::Status::none:
                std::cout << "none\n";
                return exit_ok;
            default:
                std::cerr << "budget exhausted\n";
                return exit_budget;
            }
        }

        if (verify_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            RecolouringSequence seq{load_colouring(a_path),
                                    read_file(seq_path, [](std::istream& in) { return read_sequence_steps(in); })};
            auto rep = verify_sequence(g, palette.resolve(), seq, load_colouring(target_path));
            std::cout << "valid=" << (rep.valid ? "yes" : "no") << " length=" << rep.length;
            if (rep.failure_step)
                std::cout << " failure_step=" << *rep.failure_step;
            if (!rep.start_ok)
                std::cout << " start_ok=no";
            std::cout << "\n";
            return rep.valid ? exit_ok : exit_fail;
        }

        if (renaming_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            auto seq = optimal_renaming(g, load_colouring(a_path), load_colouring(b_path), ell);
            std::cout << "length=" << seq.steps.size() << "\n";
            if (!out_path.empty()) {
                write_file(out_path, seq.steps,
                           [](std::ostream& o, const std::vector<Step>& s) { write_sequence_steps(o, s); });
                std::cout << "wrote " << out_path << "\n";
            } else {
                write_sequence_steps(std::cout, seq.steps);
            }
            return exit_ok;
        }

        if (formula_cmd->parsed()) {
            auto interval = diameter_interval(KpqInstance(pp, qq, kk));
            if (json_out) {
                json j{{"regime", regime_name(interval.regime)},
                       {"lower", interval.lower},
                       {"upper", interval.upper},
                       {"g_slack", interval.g_slack},
                       {"exact", interval.exact}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "regime=" << regime_name(interval.regime) << " lower=" << interval.lower
                          << " upper=" << interval.upper << " g_slack=" << interval.g_slack
                          << " exact=" << (interval.exact ? "yes" : "no") << "\n";
            }
            return exit_ok;
        }

        if (extremal_cmd->parsed()) {
            auto pair = extremal_pair(KpqInstance(pp, qq, kk));
            write_file(out_prefix + ".alpha", pair.alpha,
                       [](std::ostream& o, const Colouring& c) { write_colouring(o, c); });
            write_file(out_prefix + ".beta", pair.beta,
                       [](std::ostream& o, const Colouring& c) { write_colouring(o, c); });
            std::cout << "a=" << pair.spec.a << " b=" << pair.spec.b << "\n";
            std::cout << "wrote " << out_prefix << ".alpha\n";
            std::cout << "wrote " << out_prefix << ".beta\n";
            return exit_ok;
        }

        if (recolour_cmd->parsed()) {
            KpqInstance inst(pp, qq, kk);
            auto seq = recolour_kpq(inst, load_colouring(a_path), load_colouring(b_path));
            std::cout << "length=" << seq.steps.size() << " bound=" << upper_bound_formula(inst) << "\n";
            if (!out_path.empty()) {
                write_file(out_path, seq.steps,
                           [](std::ostream& o, const std::vector<Step>& s) { write_sequence_steps(o, s); });
                std::cout << "wrote " << out_path << "\n";
            } else {
                write_sequence_steps(std::cout, seq.steps);
            }
            return exit_ok;
        }

        if (regimes_cmd->parsed()) {
            std::cout << "q\thigh\tmiddle\tlow\tactive\n";
            for (const auto& row : regime_table(kk, pp, qmax))
                std::cout << row.q << "\t" << row.bound_high.to_string() << "\t" << row.bound_middle.to_string()
                          << "\t" << row.bound_low.to_string() << "\t" << row.active.to_string() << "\n";
            return exit_ok;
        }

        if (check_cmd->parsed()) {
            if (item == "example-4.2")
                return check_example_4_2(json_out, opt);
            if (item == "example-4.1")
                return check_example_4_1(full, opt);
            if (item == "prop-1.2")
                return check_prop_1_2(opt);
            if (item == "prop-4.3c")
                return check_prop_4_3c();
            if (item == "gadget-forcing")
                return check_gadget_forcing(full);
            if (item == "k18-formula")
                return check_k18_formula(witness_path);
            std::cerr << "unknown paper-check item '" << item << "'\n";
            return exit_usage;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}

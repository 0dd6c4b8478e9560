#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "imprim/clustering.hpp"
#include "imprim/constructions.hpp"
#include "imprim/group.hpp"
#include "imprim/hierarchy.hpp"
#include "imprim/itype.hpp"
#include "imprim/partition.hpp"
#include "imprim/perm.hpp"
#include "imprim/report.hpp"

namespace {

using namespace imprim;

struct Options {
    bool json = false;
    std::uint64_t nodes = Budget{}.nodes;
    std::uint64_t elements = Budget{}.elements;
    unsigned threads = 1;    // accepted for interface stability; the
                             // analyses currently run on one thread
    std::uint64_t seed = 0;  // accepted for interface stability

    Budget budget() const {
        Budget b;
        b.nodes = nodes;
        b.elements = elements;
        return b;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json new_report(const std::string& subject, const std::string& input) {
    json rep;
    rep["subject"] = subject;
    rep["input"] = input;
    rep["verdicts"] = json::object();
    rep["notes"] = json::array();
    rep["timing_ms"] = 0;
    return rep;
}

void set_verdict(json& rep, const std::string& name, json value, bool exhaustive,
                 json witness = json()) {
    json v;
    v["value"] = std::move(value);
    v["exhaustive"] = exhaustive;
    if (!witness.is_null()) v["witness"] = std::move(witness);
    rep["verdicts"][name] = std::move(v);
}

void note(json& rep, const std::string& text) { rep["notes"].push_back(text); }

// Prints the JSON form when requested; exit code 2 when any verdict is
// non-exhaustive (an inconclusive, budget-cut answer), else 0.
int finish(json& rep, const Options& opt, const Timer& timer) {
    rep["timing_ms"] = timer.ms();
    int code = 0;
    for (const auto& [name, v] : rep["verdicts"].items())
        if (!v.at("exhaustive").get<bool>()) code = 2;
    if (opt.json) std::cout << rep.dump(2) << "\n";
    return code;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string pair_list(const ITypeSet& s) {
    if (s.empty()) return "(empty)";
    std::string out;
    for (const auto& pr : s.pairs()) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(pr.k) + "," + std::to_string(pr.m) + ")";
    }
    return out;
}

json clusters_json(const Clustering& c) {
    json out = json::array();
    for (const auto& cl : c.clusters) out.push_back(cl.parts());
    return out;
}

std::string perm_list(const std::vector<Perm>& s) {
    std::string out;
    for (const auto& g : s) {
        if (!out.empty()) out += ", ";
        out += g.str();
    }
    return out;
}

// ---------------------------------------------------------------- partition

// Shared by `partition` and `perm`: i-type, verdict, shortcut notes.
int analyze_partition(json& rep, const Partition& p, std::optional<int> special_m,
                      const Options& opt, const Timer& timer) {
    const bool human = !opt.json;
    if (human) std::cout << "n = " << p.n() << "\n";

    if (special_m) {
        const auto m = static_cast<std::uint64_t>(*special_m);
        NodeCounter nodes(opt.budget().nodes, "m-partition search");
        auto plain = is_m_partition(p, m, &nodes);
        auto special = is_special_m_partition(p, m, &nodes);
        set_verdict(rep, "m_partition", static_cast<bool>(plain), true,
                    plain ? json{{"m", m}, {"clusters", clusters_json(*plain)}}
                          : json());
        set_verdict(rep, "special_m_partition", static_cast<bool>(special), true,
                    special ? json{{"m", m}, {"clusters", clusters_json(*special)}}
                            : json());
        if (human) {
            std::cout << m << "-partition: " << yesno(static_cast<bool>(plain));
            if (plain) std::cout << ", clustering " << plain->str();
            std::cout << "\n";
            std::cout << "special " << m << "-partition: "
                      << yesno(static_cast<bool>(special));
            if (special) std::cout << ", clustering " << special->str();
            std::cout << "\n";
        }
    }

    ITypeSet its;
    try {
        its = i_type_set(p, opt.budget());
    } catch (const inconclusive_error& e) {
        set_verdict(rep, "imprimitive", nullptr, false);
        note(rep, std::string("inconclusive: ") + e.what());
        if (human) std::cout << "verdict: inconclusive (" << e.what() << ")\n";
        finish(rep, opt, timer);
        return 2;
    }

    const auto gcd_pairs = gcd_shortcut_pairs(p);
    if (!gcd_pairs.empty()) {
        std::string text = "gcd shortcut fired:";
        for (const auto& pr : gcd_pairs)
            text += " (" + std::to_string(pr.k) + "," + std::to_string(pr.m) + ")";
        note(rep, text);
    }
    for (auto d : proper_divisors(p.n()))
        if (d > 1 && its.contains(p.n() / d, d))
            if (auto g = greedy_uniform_clustering(p, d))
                note(rep, "greedy split into clusters of sum " + std::to_string(d) +
                              ": " + g->str());

    set_verdict(rep, "imprimitive", !its.empty(), true, itype_set_to_json(its));
    if (human) {
        std::cout << "verdict: " << (its.empty() ? "primitive" : "imprimitive")
                  << "\n";
        std::cout << "i-type: " << pair_list(its) << "\n";
        for (const auto& [pr, w] : its.entries) {
            std::cout << "  (" << pr.k << "," << pr.m
                      << "): clustering " << w.clustering.str() << ", k_i (";
            for (std::size_t i = 0; i < w.k_i.size(); ++i)
                std::cout << (i ? "," : "") << w.k_i[i];
            std::cout << ")\n";
        }
        for (const auto& n : rep["notes"]) std::cout << n.get<std::string>() << "\n";
    }
    return finish(rep, opt, timer);
}

int cmd_partition(const std::string& text, std::optional<int> special_m,
                  const Options& opt) {
    Timer timer;
    json rep = new_report("partition", text);
    const Partition p = Partition::parse(text);
    if (!opt.json) std::cout << "partition " << p.str() << "\n";
    return analyze_partition(rep, p, special_m, opt, timer);
}

int cmd_perm(const std::string& text, int degree, std::optional<int> special_m,
             const Options& opt) {
    Timer timer;
    json rep = new_report("permutation", text);
    const Perm g = Perm::parse(text, degree);
    const Partition type = g.cycle_type();
    rep["degree"] = g.degree();
    rep["cycle_type"] = type.parts();
    if (!opt.json)
        std::cout << "permutation " << g.str() << " on " << g.degree()
                  << " points\ncycle type " << type.str() << "\n";
    return analyze_partition(rep, type, special_m, opt, timer);
}

// -------------------------------------------------------------------- group

PermutationGroup load_group(const std::string& ref) {
    const std::string prefix = "catalog:";
    if (ref.rfind(prefix, 0) == 0) return catalog(ref.substr(prefix.size()));
    return read_group_file(ref);
}

json blocks_json(const BlockSystem& bs) {
    json out = json::array();
    for (const auto& b : bs.blocks) {
        json cell = json::array();
        for (int x : b) cell.push_back(x + 1);  // 1-based like all text I/O
        out.push_back(std::move(cell));
    }
    return out;
}

std::string blocks_str(const BlockSystem& bs) {
    std::string out;
    for (const auto& b : bs.blocks) {
        out += out.empty() ? "{" : " {";
        for (std::size_t i = 0; i < b.size(); ++i)
            out += (i ? "," : "") + std::to_string(b[i] + 1);
        out += "}";
    }
    return out;
}

int cmd_group(const std::string& ref, const std::string& action, int k,
              const std::string& compare, const Options& opt) {
    Timer timer;
    json rep = new_report("group", ref);
    const PermutationGroup g = load_group(ref);
    rep["degree"] = g.degree();
    const bool human = !opt.json;
    if (human)
        std::cout << "group " << ref << ": degree " << g.degree() << ", order "
                  << g.order() << "\n";

    if (action == "order") {
        set_verdict(rep, "order", g.order(), true);
        set_verdict(rep, "transitive", g.is_transitive(), true);
        if (human) std::cout << "transitive: " << yesno(g.is_transitive()) << "\n";
        return finish(rep, opt, timer);
    }

    if (action == "primitive") {
        const bool transitive = g.is_transitive();
        set_verdict(rep, "transitive", transitive, true);
        const bool primitive = transitive && is_primitive_group(g);
        json witness;
        if (transitive && !primitive) {
            auto systems = minimal_block_systems(g);
            if (!systems.empty()) witness = blocks_json(systems.front());
        }
        set_verdict(rep, "primitive", primitive, true, std::move(witness));
        if (human) {
            std::cout << "transitive: " << yesno(transitive) << "\n";
            std::cout << "primitive: " << yesno(primitive) << "\n";
            if (transitive && !primitive) {
                auto systems = minimal_block_systems(g);
                if (!systems.empty())
                    std::cout << "block system: " << blocks_str(systems.front())
                              << "\n";
            }
        }
        return finish(rep, opt, timer);
    }

    if (action == "np1") {
        try {
            const auto classes = g.conjugacy_classes(opt.budget());
            const ConjugacyClass* bad = nullptr;
            for (const auto& c : classes)
                if (!is_imprimitive_cycle_type(c.type, opt.budget())) {
                    bad = &c;
                    break;
                }
            json witness{{"class_reps", classes.size()}};
            if (bad) {
                witness["primitive_class_rep"] = bad->rep.str();
                witness["primitive_class_type"] = bad->type.parts();
            }
            set_verdict(rep, "np1", bad == nullptr, true, std::move(witness));
            if (human) {
                if (!bad)
                    std::cout << "NP1: yes (no primitive elements among "
                              << classes.size() << " class reps)\n";
                else
                    std::cout << "NP1: no (" << bad->rep.str()
                              << " has primitive cycle type " << bad->type.str()
                              << ")\n";
            }
        } catch (const inconclusive_error& e) {
            set_verdict(rep, "np1", nullptr, false);
            note(rep, std::string("inconclusive: ") + e.what());
            if (human) std::cout << "NP1: inconclusive (" << e.what() << ")\n";
        }
        return finish(rep, opt, timer);
    }

    if (action == "spectrum") {
        const auto spec = g.spectrum(opt.budget());
        json value = json::array();
        for (const auto& t : spec) value.push_back(t.parts());
        set_verdict(rep, "spectrum", value, true);
        if (human) {
            std::cout << "spectrum (" << spec.size() << " cycle types):\n";
            for (const auto& t : spec) std::cout << "  " << t.str() << "\n";
        }
        if (!compare.empty()) {
            const PermutationGroup other = load_group(compare);
            const bool equal = other.spectrum(opt.budget()) == spec;
            set_verdict(rep, "spectra_equal", equal, true,
                        json{{"other", compare}});
            if (human)
                std::cout << (equal ? "spectra equal" : "spectra differ") << "\n";
        }
        return finish(rep, opt, timer);
    }

    if (action == "hierarchy") {
        if (k < 1) throw std::invalid_argument("hierarchy needs a positive k");
        const auto report = classify_hierarchy(g, k, opt.budget());
        for (int i = 1; i <= k; ++i) {
            const auto& ep = report.ep[i - 1];
            const auto& ap = report.ap[i - 1];
            json epw, apw;
            if (!ep.witness.empty()) epw = perm_list(ep.witness);
            if (!ap.witness.empty()) apw = perm_list(ap.witness);
            set_verdict(rep, "ep" + std::to_string(i), ep.holds, ep.exhaustive,
                        std::move(epw));
            set_verdict(rep, "np" + std::to_string(i), !ep.holds, ep.exhaustive);
            set_verdict(rep, "ap" + std::to_string(i), ap.holds, ap.exhaustive,
                        std::move(apw));
            if (human) {
                std::cout << "k=" << i << ": EP " << yesno(ep.holds)
                          << (ep.exhaustive ? "" : " (budget-truncated)");
                if (!ep.witness.empty())
                    std::cout << " via {" << perm_list(ep.witness) << "}";
                std::cout << "; NP " << yesno(!ep.holds) << "; AP "
                          << yesno(ap.holds)
                          << (ap.exhaustive ? "" : " (budget-truncated)");
                if (!ap.witness.empty())
                    std::cout << " refuted by {" << perm_list(ap.witness) << "}";
                std::cout << "\n";
            }
        }
        bool ep_all_exhaustive = true, ap_all_exhaustive = true;
        for (const auto& d : report.ep) ep_all_exhaustive &= d.exhaustive;
        for (const auto& d : report.ap) ap_all_exhaustive &= d.exhaustive;
        set_verdict(rep, "nep", report.nep ? json(*report.nep) : json(),
                    report.nep.has_value() || ep_all_exhaustive);
        set_verdict(rep, "nap", report.nap ? json(*report.nap) : json(),
                    report.nap.has_value() || ap_all_exhaustive);
        if (human) {
            std::cout << "NEP = " << (report.nep ? std::to_string(*report.nep)
                                                 : "> " + std::to_string(k))
                      << "\n";
            std::cout << "NAP = " << (report.nap ? std::to_string(*report.nap)
                                                 : "> " + std::to_string(k))
                      << "\n";
        }
        return finish(rep, opt, timer);
    }

    throw std::invalid_argument("unknown group action '" + action + "'");
}

// -------------------------------------------------------------------- repro

json repro_deg16(const Options& opt) {
    json out;
    out["id"] = "deg16-itypes";
    std::vector<ITypeSet> sets;
    for (const char* text : {"8,8", "3,3,3,3,3,1"}) {
        const Partition p = Partition::parse(text);
        sets.push_back(i_type_set(p, opt.budget()));
        out["types"][text] = itype_set_to_json(sets.back());
    }
    out["disjoint_certificate"] = disjoint_itype_certificate(sets);
    return out;
}

json repro_pgl211(const Options& opt) {
    json out;
    out["id"] = "pgl211-types";
    const Partition t1 = Partition::parse("6,12,12,12,12,12");
    const Partition t2 = Partition::parse("1,5,10,10,10,10,10,10");
    bool all = true;
    json entries = json::array();
    auto add = [&](const std::string& label, const Partition& p) {
        const bool imprim = is_imprimitive_cycle_type(p, opt.budget());
        all = all && imprim;
        entries.push_back(
            {{"label", label}, {"type", p.parts()}, {"imprimitive", imprim}});
    };
    add("type1", t1);
    add("type2", t2);
    add("type1_cubed", partition_power(t1, 3));
    add("type2_fifth", partition_power(t2, 5));
    out["entries"] = std::move(entries);
    out["all_imprimitive"] = all;
    return out;
}

json repro_lopes(const Options& opt) {
    json out;
    out["id"] = "lopes-examples";
    json entries = json::array();
    auto add = [&](const std::string& text, std::optional<std::uint64_t> m) {
        const Partition p = Partition::parse(text);
        json entry;
        entry["partition"] = p.parts();
        const auto its = i_type_set(p, opt.budget());
        entry["imprimitive"] = !its.empty();
        entry["itype"] = itype_set_to_json(its);
        if (m) {
            NodeCounter nodes(opt.budget().nodes, "m-partition search");
            if (auto c = is_m_partition(p, *m, &nodes))
                entry["m_partition"] = {{"m", *m}, {"clusters", clusters_json(*c)}};
            if (auto c = is_special_m_partition(p, *m, &nodes))
                entry["special_m_partition"] =
                    {{"m", *m}, {"clusters", clusters_json(*c)}};
        }
        entries.push_back(std::move(entry));
    };
    add("2,3,5", 5);
    add("2,3,10", 5);
    add("1,2,5,7,17,19,23,111", 37);
    add("7,4", std::nullopt);
    add("6", std::nullopt);
    add("7", std::nullopt);
    add("1,1,8", std::nullopt);
    add("1,1,7", std::nullopt);
    out["entries"] = std::move(entries);
    return out;
}

int cmd_repro(const std::string& id, std::string check_path, bool emit,
              const Options& opt) {
    json computed;
    if (id == "deg16-itypes") computed = repro_deg16(opt);
    else if (id == "pgl211-types") computed = repro_pgl211(opt);
    else if (id == "lopes-examples") computed = repro_lopes(opt);
    else throw std::invalid_argument("unknown reproduction id '" + id + "'");

    if (emit) {
        std::cout << computed.dump(2) << "\n";
        return 0;
    }
    if (check_path.empty()) check_path = "data/golden/" + id + ".json";
    std::ifstream in(check_path);
    if (!in)
        throw std::invalid_argument("cannot open golden file '" + check_path + "'");
    // order-insensitive comparison of the two documents
    const nlohmann::json golden = nlohmann::json::parse(in);
    const nlohmann::json mine = nlohmann::json::parse(computed.dump());
    if (mine == golden) {
        std::cout << "PASS " << id << "\n";
        return 0;
    }
    std::cout << "FAIL " << id << "\n";
    std::cout << "diff (computed -> golden):\n"
              << nlohmann::json::diff(mine, golden).dump(2) << "\n";
    return 1;
}

// ---------------------------------------------------------------- construct

std::vector<FpMatrix> parse_matrices(int p, int k, const std::string& spec,
                                     bool* translations) {
    std::vector<FpMatrix> out;
    *translations = false;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok == "trans") {
            *translations = true;
            continue;
        }
        std::vector<int> entries;
        std::stringstream es(tok);
        std::string cell;
        while (std::getline(es, cell, ','))
            entries.push_back(std::stoi(cell));
        if (entries.size() != static_cast<std::size_t>(k) * k)
            throw std::invalid_argument("matrix needs " + std::to_string(k * k) +
                                        " entries, got '" + tok + "'");
        out.emplace_back(p, k, std::move(entries));
    }
    return out;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& args,
                  const std::string& out_path) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("construct " + kind + " takes " +
                                        std::to_string(n) + " argument(s)");
    };
    PermutationGroup g(1, {});
    if (kind == "wreath-imp") {
        need(2);
        g = wreath_imprimitive(load_group(args[0]), load_group(args[1]));
    } else if (kind == "wreath-prod") {
        need(2);
        g = wreath_product_action(load_group(args[0]), load_group(args[1]));
    } else if (kind == "onsets") {
        need(2);
        g = action_on_k_subsets(load_group(args[0]), std::stoi(args[1]));
    } else if (kind == "affine") {
        need(3);
        const int p = std::stoi(args[0]);
        const int k = std::stoi(args[1]);
        bool translations = false;
        const auto mats = parse_matrices(p, k, args[2], &translations);
        g = affine_group(p, k, mats, translations);
    } else if (kind == "diag") {
        need(1);
        g = diagonal_square(load_group(args[0]));
    } else if (kind == "catalog") {
        need(1);
        g = catalog(args[0]);
    } else {
        throw std::invalid_argument("unknown construction '" + kind + "'");
    }
    if (out_path.empty()) {
        write_group(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot write '" + out_path + "'");
        write_group(out, g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-type imprimitivity and permutation group analysis"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a machine-readable report");
    app.add_option("--budget-nodes", opt.nodes, "search node budget")
        ->envname("IMPRIM_BUDGET_NODES");
    app.add_option("--budget-elements", opt.elements, "element enumeration budget");
    app.add_option("--threads", opt.threads, "worker threads (reserved)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized helpers (reserved)");

    int exit_code = 0;

    auto* part = app.add_subcommand("partition", "analyze a cycle type");
    part->fallthrough();
    std::string part_text;
    int special_m = 0;
    part->add_option("text", part_text, "comma-separated parts")->required();
    auto* sm = part->add_option("--special-m", special_m,
                                "also test the (special) m-partition property");
    part->callback([&] {
        exit_code = cmd_partition(
            part_text,
            sm->count() ? std::optional<int>(special_m) : std::nullopt, opt);
    });

    auto* perm = app.add_subcommand("perm", "analyze a permutation");
    perm->fallthrough();
    std::string perm_text;
    int perm_degree = -1;
    perm->add_option("text", perm_text, "cycle notation")->required();
    perm->add_option("-n,--degree", perm_degree, "degree (pads fixed points)");
    auto* psm = perm->add_option("--special-m", special_m,
                                 "also test the (special) m-partition property");
    perm->callback([&] {
        exit_code = cmd_perm(
            perm_text, perm_degree,
            psm->count() ? std::optional<int>(special_m) : std::nullopt, opt);
    });

    auto* grp = app.add_subcommand("group", "analyze a permutation group");
    grp->fallthrough();
    std::string grp_ref, grp_action, grp_compare;
    int grp_k = 0;
    grp->add_option("input", grp_ref, "group file or catalog:NAME")->required();
    grp->add_option("action", grp_action, "order|primitive|np1|spectrum|hierarchy")
        ->required()
        ->check(CLI::IsMember(
            {"order", "primitive", "np1", "spectrum", "hierarchy"}));
    grp->add_option("k", grp_k, "subset size bound (hierarchy only)");
    grp->add_option("--compare", grp_compare, "second group (spectrum only)");
    grp->callback([&] {
        exit_code = cmd_group(grp_ref, grp_action, grp_k, grp_compare, opt);
    });

    auto* rep = app.add_subcommand("repro", "re-run a pinned worked example");
    rep->fallthrough();
    std::string rep_id, rep_check;
    bool rep_emit = false;
    rep->add_option("id", rep_id, "deg16-itypes|pgl211-types|lopes-examples")
        ->required();
    rep->add_option("--check", rep_check, "golden file to diff against");
    rep->add_flag("--emit", rep_emit, "print the computed document instead");
    rep->callback([&] { exit_code = cmd_repro(rep_id, rep_check, rep_emit, opt); });

    auto* con = app.add_subcommand("construct", "emit a constructed group file");
    con->fallthrough();
    std::string con_kind, con_out;
    std::vector<std::string> con_args;
    con->add_option("kind", con_kind,
                    "wreath-imp|wreath-prod|onsets|affine|diag|catalog")
        ->required();
    con->add_option("args", con_args, "construction arguments");
    con->add_option("-o,--output", con_out, "write to file instead of stdout");
    con->callback([&] { exit_code = cmd_construct(con_kind, con_args, con_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const inconclusive_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

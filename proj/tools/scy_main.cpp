#include "scy/acceptance.hpp"
#include "scy/calculators.hpp"
#include "scy/config.hpp"
#include "scy/divisor.hpp"
#include "scy/fixed.hpp"
#include "scy/local.hpp"
#include "scy/picard.hpp"
#include "scy/symplectic.hpp"
#include "scy/theta.hpp"
#include "scy/variety.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

using nlohmann::json;
using namespace scy;

namespace {

Config g_config;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json point_json(const Point& p)
{
    json a = json::array();
    for (auto& c : p) a.push_back(c.pretty());
    return a;
}

int groups_indices()
{
    IndexReport r = gamma_prime_indices();
    print({{"Gamma20[2]n", r.gamma20_2n},
           {"HatGamma20[2]n", r.hat_n},
           {"Gamma20[2]", r.gamma20_2},
           {"HatGamma20[2]", r.hat},
           {"transversal_size", gamma_prime_cosets().reps.size()}});
    return 0;
}

int groups_predicates(int pairs, uint64_t seed)
{
    json out = json::array();
    bool all = true;
    for (GroupName g : all_group_names()) {
        PredicateCheck c = predicate_closure_check(g, pairs, seed);
        all = all && c.closed;
        out.push_back({{"group", group_name_str(g)}, {"pairs", c.pairs}, {"closed", c.closed}});
    }
    print(out);
    return all ? 0 : 1;
}

SpElement parse_matrix(const std::vector<long long>& v, bool fricke)
{
    if (v.size() != 16) throw std::invalid_argument("--matrix needs 16 integers");
    std::array<long long, 16> a;
    std::copy(v.begin(), v.end(), a.begin());
    return SpElement::from_ints(a, fricke);
}

int groups_phi(const std::vector<long long>& m, bool fricke)
{
    SpElement e = parse_matrix(m, fricke);
    json memberships = json::object();
    for (GroupName g : all_group_names()) memberships[group_name_str(g)] = member(e, g);
    json out{{"matrix", e.str()}, {"fricke", bool(e.fricke)}, {"member", memberships}};
    if (!member(e, GroupName::HatGamma20_2)) {
        out["error"] = "element is not in HatGamma20[2]";
        print(out);
        return 1;
    }
    MonoTransform t = phi(e);
    out["phi"] = t.str();
    out["projective_index"] = projective_group().index_of(t);
    out["chi_n"] = chi_n(e);
    print(out);
    return 0;
}

int theta_verify(int samples, uint64_t seed)
{
    json out;
    out["samples"] = samples;
    out["seed"] = seed;
    out["relation_residual"] = verify_relations(samples, seed);
    json dup = json::object();
    for (auto& c : all_characteristics())
        if (is_even(c)) {
            std::string name = std::to_string(c[0]) + std::to_string(c[1]) + std::to_string(c[2]) + std::to_string(c[3]);
            dup[name] = duplication_check(c[0] + 2 * c[1], c[2] + 2 * c[3], samples, seed);
        }
    out["duplication_residuals"] = dup;
    json gens = json::array();
    const auto& tg = table_generators();
    for (size_t i = 0; i < tg.size(); ++i) {
        std::function<SiegelPoint(const SiegelPoint&)> g;
        if (tg[i].fricke) g = [](const SiegelPoint& z) { return fricke(z); };
        else {
            IntMat4 m = *tg[i].lift;
            g = [m](const SiegelPoint& z) { return act(m, z); };
        }
        DerivedTransform d = derive_transformation(g, samples, seed + i);
        gens.push_back({{"generator", i + 1},
                        {"transform", d.transform.str()},
                        {"matches_table", d.transform == group_generators()[i].normalized()},
                        {"snap_distance", d.snap_distance},
                        {"revalidation", d.revalidation}});
    }
    out["generators"] = gens;
    print(out);
    return 0;
}

int variety_nodes()
{
    json out = json::array();
    const auto& ns = nodes().nodes;
    for (size_t i = 0; i < ns.size(); ++i) out.push_back({{"index", i}, {"coordinates", point_json(ns[i])}});
    print(out);
    return 0;
}

int variety_stabilizer(int node, const std::string& group)
{
    const auto& ns = nodes().nodes;
    if (node < 0 || node >= int(ns.size())) throw std::out_of_range("node index must be in 0.." + std::to_string(ns.size() - 1));
    const auto& G = projective_group();
    const auto& act = node_action(G);
    std::vector<int> sub = parse_group_spec(group);
    json elems = json::array();
    for (int g : sub)
        if (act[g][node] == node) elems.push_back(G[g].str());
    print({{"node", node},
           {"coordinates", point_json(ns[node])},
           {"group", group},
           {"group_order", sub.size()},
           {"stabilizer_order", elems.size()},
           {"stabilizer", elems}});
    return 0;
}

int local_classify_all()
{
    const auto& lg = local_groups();
    auto all = classify_all_subgroups();
    json subs = json::array();
    std::map<int, int> per_type;
    for (auto& r : all) {
        for (int t : r.types) per_type[t]++;
        json e = json::array();
        for (int x : r.elements) e.push_back(lg.H[x].str());
        subs.push_back({{"id", r.id},
                        {"order", r.elements.size()},
                        {"types", r.types},
                        {"type4_within_H", r.type4_in_h},
                        {"central_witness", r.central_witness},
                        {"conjugator", r.conjugator},
                        {"elements", e}});
    }
    json counts = json::object();
    for (auto& [t, n] : per_type) counts[std::to_string(t)] = n;
    print({{"H_order", lg.H.order()}, {"subgroups", all.size()}, {"type_counts", counts}, {"census", subs}});
    return 0;
}

const PicardData& picard(bool force = false)
{
    static PicardData pd;
    static bool ready = false;
    if (!ready || force) {
        if (force) std::filesystem::remove(g_config.picard_cache);
        bool loaded = false;
        pd = picard_load_or_build(g_config.picard_cache, g_config.picard_seed, &loaded);
        std::cerr << (loaded ? "loaded " : "built and cached ") << g_config.picard_cache << "\n";
        ready = true;
    }
    return pd;
}

int picard_build(bool force)
{
    const PicardData& pd = picard(force);
    print({{"cache", g_config.picard_cache},
           {"version", kPicardCacheVersion},
           {"seed", pd.seed},
           {"prime", pd.prime},
           {"components", pd.components.size()},
           {"rank", pd.rank}});
    return 0;
}

int picard_invariants(const std::string& spec)
{
    const PicardData& pd = picard();
    std::vector<int> sub = parse_group_spec(spec);
    print({{"group", spec}, {"group_order", sub.size()}, {"invariant_dimension", invariant_dimension_of_group(pd, sub)}});
    return 0;
}

json fixed_json(const FixedLocusReport& f)
{
    json comps = json::array();
    for (auto& c : f.components) {
        json lin = json::array();
        for (auto& l : c.linear) lin.push_back(l.pretty());
        comps.push_back({{"kind", c.kind},
                         {"eigenspace", c.part > 0 ? "+" : "-"},
                         {"degree", c.cls.degree},
                         {"genus", c.cls.genus},
                         {"node", c.node},
                         {"linear_forms", lin}});
    }
    return {{"element", f.element},
            {"eigenspace_dims", {f.dim_plus, f.dim_minus}},
            {"dimension", f.dimension},
            {"census", fixed_census(f)},
            {"components", comps}};
}

int fixed_locus_cmd(int i)
{
    FixedLocusReport f = fixed_locus(involution_transform(i), g_config.hilbert_cap);
    const PublishedRow& row = published_rows()[i - 1];
    json out = fixed_json(f);
    bool match = fixed_census(f) == row.fixed && f.dimension == row.dimension;
    out["involution"] = i;
    out["table"] = {{"fixed", row.fixed}, {"dimension", row.dimension}, {"match", match}};
    if (i == 3) {
        Sigma3Reconciliation r = reconcile_sigma3();
        out["table"]["ideals_reconciled"] = {{"published_are_curves", r.published_are_curves},
                                             {"direct_match", r.direct_match},
                                             {"conjugator", r.conjugator},
                                             {"conjugate_fixes_published", r.conjugate_fixes_published}};
    }
    print(out);
    return match ? 0 : 1;
}

int report_cmd(int involution, bool all, const std::string& format)
{
    const PicardData& pd = picard();
    std::vector<QuotientReport> reps;
    if (all) {
        reps.push_back(trivial_report(pd));
        for (int i = 1; i <= 10; ++i) reps.push_back(involution_report(i, pd, g_config.hilbert_cap));
    } else {
        reps.push_back(involution_report(involution, pd, g_config.hilbert_cap));
    }
    if (format == "json") {
        json out = json::array();
        for (auto& r : reps) out.push_back(report_to_json(r));
        print(all ? out : out[0]);
    } else {
        for (auto& r : reps) std::cout << report_to_text(r);
    }
    return 0;
}

int verify_paper(const std::vector<int>& only, bool verbose)
{
    AcceptanceOptions opt;
    opt.config = g_config;
    opt.only = only;
    bool ok = true;
    run_acceptance(opt, [&](const CriterionResult& r) {
        ok = ok && r.passed;
        std::cout << format_result_line(r) << "\n";
        for (auto& c : r.checks)
            if (verbose || c.rfind("FAIL", 0) == 0) std::cout << "      " << c << "\n";
        std::cout.flush();
    });
    std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Calculators for a Calabi-Yau complete intersection of quadrics and its quotients"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file");

    auto* groups = app.add_subcommand("groups", "symplectic groups modulo 8")->require_subcommand(1);
    auto* g_idx = groups->add_subcommand("indices", "coset indices over Gamma'");
    int pairs = 1000;
    uint64_t pred_seed = 1;
    auto* g_pred = groups->add_subcommand("verify-predicates", "closure of every membership predicate");
    g_pred->add_option("--pairs", pairs, "random member pairs per group");
    g_pred->add_option("--seed", pred_seed);
    std::vector<long long> matrix;
    bool with_fricke = false;
    auto* g_phi = groups->add_subcommand("phi", "transformation attached to a group element");
    g_phi->add_option("--matrix", matrix, "16 integers, row-major, read mod 8")->required()->expected(16);
    g_phi->add_flag("--fricke", with_fricke, "right-multiply by the Fricke involution");

    auto* theta = app.add_subcommand("theta", "numerical theta constants")->require_subcommand(1);
    int samples = -1;
    uint64_t seed = 0;
    bool seed_given = false;
    auto* t_verify = theta->add_subcommand("verify", "relations, duplication and generator recovery");
    t_verify->add_option("--samples", samples);
    auto* seed_opt = t_verify->add_option("--seed", seed);

    auto* variety = app.add_subcommand("variety", "the singular variety")->require_subcommand(1);
    auto* v_nodes = variety->add_subcommand("nodes", "exact node catalog");
    int node = 0;
    std::string group_name;
    auto* v_stab = variety->add_subcommand("stabilizer", "stabilizer of a node in a group");
    v_stab->add_option("--node", node)->required();
    v_stab->add_option("--group", group_name, "group name, sigma<i>, J or trivial")->required();

    auto* local = app.add_subcommand("local", "local model at a node")->require_subcommand(1);
    auto* l_all = local->add_subcommand("classify-all", "typed census of all subgroups of H");

    auto* pic = app.add_subcommand("picard", "divisor classes")->require_subcommand(1);
    bool force = false;
    auto* p_build = pic->add_subcommand("build", "compute or load the cached intersection data");
    p_build->add_flag("--force", force, "ignore an existing cache");
    std::string spec;
    auto* p_inv = pic->add_subcommand("invariants", "dimension of the invariant Picard lattice");
    p_inv->add_option("--group", spec, "group name, sigma<i>, J or trivial")->required();

    int involution = 0;
    auto* fixed = app.add_subcommand("fixed-locus", "fixed locus of a table involution");
    fixed->add_option("--involution", involution)->required()->check(CLI::Range(1, 10));

    bool all = false;
    std::string format = "text";
    auto* report = app.add_subcommand("report", "quotient invariants");
    auto* r_inv = report->add_option("--involution", involution)->check(CLI::Range(1, 10));
    auto* r_all = report->add_flag("--all", all, "trivial group and all ten involutions");
    r_inv->excludes(r_all);
    report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::vector<int> only;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify-paper", "acceptance suite with a pass/fail table");
    verify->add_option("--only", only, "criterion numbers")->check(CLI::Range(1, 10));
    verify->add_flag("-v,--verbose", verbose, "print every check");

    CLI11_PARSE(app, argc, argv);
    try {
        if (!config_path.empty()) g_config = Config::load(config_path);
        if (*g_idx) return groups_indices();
        if (*g_pred) return groups_predicates(pairs, pred_seed);
        if (*g_phi) return groups_phi(matrix, with_fricke);
        if (*t_verify) {
            seed_given = seed_opt->count() > 0;
            return theta_verify(samples > 0 ? samples : g_config.theta_samples, seed_given ? seed : g_config.theta_seed);
        }
        if (*v_nodes) return variety_nodes();
        if (*v_stab) return variety_stabilizer(node, group_name);
        if (*l_all) return local_classify_all();
        if (*p_build) return picard_build(force);
        if (*p_inv) return picard_invariants(spec);
        if (*fixed) return fixed_locus_cmd(involution);
        if (*report) {
            if (!all && involution == 0) throw CLI::RequiredError("--involution or --all");
            return report_cmd(involution, all, format);
        }
        if (*verify) return verify_paper(only, verbose);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

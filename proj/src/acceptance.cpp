#include "scy/acceptance.hpp"

#include "scy/calculators.hpp"
#include "scy/divisor.hpp"
#include "scy/fixed.hpp"
#include "scy/local.hpp"
#include "scy/picard.hpp"
#include "scy/symplectic.hpp"
#include "scy/theta.hpp"
#include "scy/variety.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace scy {

namespace {

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}
    void check(bool ok, const std::string& what)
    {
        r_.checks.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        r_.passed = r_.passed && ok;
    }
    template <class A, class B> void equal(const A& got, const B& want, const std::string& what)
    {
        std::ostringstream os;
        os << what << ": " << got;
        if (!(got == want)) os << " (expected " << want << ")";
        check(got == want, os.str());
    }
    void below(double got, double tol, const std::string& what)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %.3g < %.0e", what.c_str(), got, tol);
        check(got < tol, buf);
    }

private:
    CriterionResult& r_;
};

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Tolerances and budgets pinned here.
constexpr double kThetaTol = 1e-9;
constexpr int kMinThetaSamples = 20;

void criterion_groups(Recorder& rec)
{
    rec.equal(linear_group().order(), size_t(98304), "linear closure of the four generators");
    rec.equal(projective_group().order(), size_t(24576), "projective closure");
    const auto& lg = local_groups();
    rec.equal(lg.G.order(), size_t(256), "|<m1..m6>|");
    rec.equal(lg.H.order(), size_t(128), "|H|");
    rec.equal(lg.H0.size(), size_t(64), "|H0| (determinant one = untwisted)");
    rec.equal(lg.H.center().size(), size_t(2), "|Z(H)|");
}

void criterion_indices(Recorder& rec)
{
    IndexReport r = gamma_prime_indices();
    rec.equal(r.gamma20_2n, 6144L, "[Gamma20[2]n : Gamma']");
    rec.equal(r.hat_n, 12288L, "[HatGamma20[2]n : Gamma']");
    rec.equal(r.gamma20_2, 12288L, "[Gamma20[2] : Gamma']");
    rec.equal(r.hat, 24576L, "[HatGamma20[2] : Gamma']");
    rec.check(r.hat == 2 * r.hat_n && r.gamma20_2 == 2 * r.gamma20_2n, "chi_n kernel has index 2");
}

void criterion_theta(Recorder& rec, const Config& cfg)
{
    int samples = std::max(cfg.theta_samples, kMinThetaSamples);
    rec.below(verify_relations(samples, cfg.theta_seed), kThetaTol,
              "quadric relations at " + std::to_string(samples) + " random points");
    const auto& gens = table_generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        std::function<SiegelPoint(const SiegelPoint&)> g;
        if (gens[i].fricke) g = [](const SiegelPoint& z) { return fricke(z); };
        else {
            IntMat4 m = *gens[i].lift;
            g = [m](const SiegelPoint& z) { return act(m, z); };
        }
        DerivedTransform d = derive_transformation(g, samples, cfg.theta_seed + i);
        bool same = d.transform == group_generators()[i].normalized();
        rec.check(same && d.revalidation < kThetaTol,
                  "generator " + std::to_string(i + 1) + " recovered exactly as " + d.transform.str());
    }
    int even = 0;
    double worst = 0;
    for (auto& c : all_characteristics()) {
        if (!is_even(c)) continue;
        ++even;
        worst = std::max(worst, duplication_check(c[0] + 2 * c[1], c[2] + 2 * c[3], samples, cfg.theta_seed));
    }
    rec.equal(even, 10, "even characteristics");
    rec.below(worst, kThetaTol, "duplication identities, worst residual over all even characteristics");
}

void criterion_nodes(Recorder& rec)
{
    const auto& ns = nodes().nodes;
    rec.equal(ns.size(), size_t(96), "singular points");
    bool ranks = true;
    for (auto& p : ns) ranks = ranks && jacobian_rank(p) == 3 && tangent_cone_rank(p) == 4;
    rec.check(ranks, "every node has Jacobian rank 3 and a rank-4 tangent cone");
    HilbertData h = singular_scheme(PrimeField::primary());
    rec.check(h.dim == 0 && h.degree == 96, "singular scheme is zero-dimensional of degree " + std::to_string(h.degree));
    rec.equal(count_singular_points_mod(17), 96, "singular F_17 points");
    auto perm_orbit = [&] {
        std::set<int> o{0};
        std::vector<int> stack{0};
        std::vector<std::vector<int>> gp;
        for (auto& g : group_generators()) gp.push_back(node_permutation(g));
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto& p : gp)
                if (o.insert(p[x]).second) stack.push_back(p[x]);
        }
        return o.size();
    }();
    rec.equal(perm_orbit, size_t(96), "orbit of a node under the group");
    StabilizerReport s = stabilizer_report();
    rec.equal(s.stabilizer_order, size_t(256), "stabilizer of P");
    rec.equal(s.normal_part_order, size_t(128), "stabilizer of P inside the chi_n-kernel image");
    rec.equal(s.generated_order, size_t(256), "subgroup generated by phi(M1..M6)");
    rec.check(std::all_of(s.correspondence.begin(), s.correspondence.end(), [](bool b) { return b; }),
              "chart image of phi(Mi) equals mi for i = 1..6");
    rec.check(s.local_map_injective, "chart map is a bijection from the stabilizer onto G");
    rec.check(s.normal_part_onto_h, "chart map restricts to a bijection onto H");
}

void criterion_census(Recorder& rec)
{
    size_t n = 0;
    bool gap = false;
    try {
        n = classify_all_subgroups().size();
    } catch (const std::exception& e) {
        gap = true;
        rec.check(false, e.what());
    }
    if (!gap) rec.check(n > 0, "all " + std::to_string(n) + " subgroups of H typed, no classification gaps");
    auto cls = involution_classes(projective_group());
    rec.equal(cls.size(), size_t(18), "conjugacy classes of order-2 subgroups");
    std::set<int> img(normal_image().begin(), normal_image().end());
    int inside = 0;
    for (auto& c : cls)
        inside += std::all_of(c.begin(), c.end(), [&](int x) { return img.count(x) > 0; });
    rec.equal(inside, 10, "classes inside the chi_n-kernel image");
}

void criterion_divisors(Recorder& rec)
{
    rec.equal(second_order_orbit().size(), size_t(60), "second-order orbit");
    const DivisorData& d = divisor_data();
    rec.equal(d.comps.size(), size_t(132), "components");
    int y_unsplit = 0, theta_split = 0, lin_unsplit = 0, lin_split = 0;
    for (size_t f = 0; f < d.forms.size(); ++f) {
        size_t k = d.comps_of_form[f].size();
        switch (d.forms[f].kind) {
        case DivisorForm::Coordinate: y_unsplit += k == 1; break;
        case DivisorForm::Theta: theta_split += k == 2; break;
        case DivisorForm::Linear: (k == 1 ? lin_unsplit : lin_split) += k <= 2; break;
        }
    }
    rec.check(y_unsplit == 4 && theta_split == 6, "pattern 4 + 2*6 (coordinate and theta forms)");
    rec.check(lin_unsplit == 4 && lin_split == 56, "pattern 4 + 2*56 (linear forms)");
    for (size_t g = 0; g < group_generators().size(); ++g) {
        auto p = component_action(group_generators()[g]);
        std::set<int> img(p.begin(), p.end());
        int missing = int(std::count(p.begin(), p.end(), -1));
        bool bij = missing == 0 && img.size() == p.size();
        rec.check(bij, "generator " + std::to_string(g + 1) + " permutes the components bijectively" +
                           (bij ? "" : " (" + std::to_string(missing) + " images outside the set)"));
    }
    std::vector<MonoTransform> level2;
    for (auto& e : full_generators())
        if (!e.fricke) level2.push_back(phi(e));
    rec.equal(join(form_orbit_sizes(level2, split_linear_forms())), std::string("24,32"),
              "Gamma20[2]-orbits on the split linear forms");
}

void criterion_picard(Recorder& rec, const PicardData& pd)
{
    rec.equal(pd.rank, 32, "intersection matrix rank");
    std::vector<int> dims;
    for (int i = 1; i <= 10; ++i) dims.push_back(invariant_dimension_of(pd, involution_index(i)));
    rec.equal(join(dims), std::string("16,24,16,16,16,20,20,16,16,18"), "invariant dimensions");
}

void criterion_fixed(Recorder& rec, const Config& cfg)
{
    const auto& rows = published_rows();
    for (int i = 1; i <= 10; ++i) {
        FixedLocusReport f = fixed_locus(involution_transform(i), cfg.hilbert_cap);
        std::string census = fixed_census(f);
        bool cls = true;
        for (auto& c : f.components) {
            if (c.kind == "elliptic") cls = cls && c.cls.degree == 4 && c.cls.genus == 1;
            else if (c.kind == "conic") cls = cls && c.cls.degree == 2 && c.cls.genus == 0;
            else if (c.kind == "line") cls = cls && c.cls.degree == 1 && c.cls.genus == 0;
            else if (c.kind == "node") cls = cls && c.node >= 0;
            else cls = false;
        }
        rec.check(census == rows[i - 1].fixed && f.dimension == rows[i - 1].dimension && cls,
                  "sigma" + std::to_string(i) + ": " + census + ", dimension " + std::to_string(f.dimension));
    }
    Sigma3Reconciliation r = reconcile_sigma3();
    rec.check(r.published_are_curves, "published sigma3 ideals are elliptic quartics on the variety");
    rec.check(!r.conjugator.empty() && r.conjugate_fixes_published,
              "computed sigma3 curves map onto the published ones under " +
                  (r.conjugator.empty() ? std::string("(none)") : r.conjugator) +
                  (r.direct_match ? " (direct match)" : ""));
}

void criterion_tables(Recorder& rec, const PicardData& pd, const Config& cfg)
{
    const auto& rows = published_rows();
    for (int i = 1; i <= 10; ++i) {
        QuotientReport q = involution_report(i, pd, cfg.hilbert_cap);
        std::string got = "(" + std::to_string(q.pic_resolution) + "," + std::to_string(q.euler) + ")";
        std::string want = "(" + std::to_string(rows[i - 1].pic) + "," + std::to_string(rows[i - 1].euler) + ")";
        rec.equal(got, want, "sigma" + std::to_string(i) + " (pic, e)");
    }
    QuotientReport t = trivial_report(pd);
    rec.equal("(" + std::to_string(t.pic_resolution) + "," + std::to_string(t.euler) + ")", std::string("(32,64)"),
              "trivial group (pic, e)");
    rec.equal("(" + std::to_string(t.hodge.h11) + "," + std::to_string(t.hodge.h12) + ")", std::string("(32,0)"),
              "trivial group Hodge numbers");
}

CycloNum random_cyclo(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    auto q = [&] { return mpq_class(num(rng), den(rng)); };
    return CycloNum(q(), q(), q(), q());
}

SpElement random_word(std::mt19937_64& rng, const std::vector<SpElement>& gens, int maxlen)
{
    std::uniform_int_distribution<int> len(0, maxlen), pick(0, int(gens.size()) - 1);
    SpElement e = SpElement::identity();
    for (int k = len(rng); k > 0; --k) e = e * gens[pick(rng)];
    return e;
}

void criterion_properties(Recorder& rec, const AcceptanceOptions& opt)
{
    std::mt19937_64 rng(opt.property_seed);
    const int n = opt.property_iterations;

    bool field = true;
    for (int it = 0; it < n; ++it) {
        CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        field = field && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
        if (!a.is_zero()) field = field && a * a.inv() == CycloNum(1);
        field = field && (a * b).galois(3) == a.galois(3) * b.galois(3);
        field = field && (a * b).norm() == a.norm() * b.norm();
    }
    rec.check(field, "field axioms, Galois and norm multiplicativity over " + std::to_string(n) + " samples");

    auto again = MonoGroup::closure(group_generators(), GroupMode::Projective);
    bool same = again.order() == projective_group().order();
    for (size_t a = 0; a < again.order() && same; ++a) same = again[a] == projective_group()[a];
    rec.check(same, "closure is deterministic (identical element order)");

    const auto& G = projective_group();
    std::uniform_int_distribution<int> pick_node(0, int(nodes().nodes.size()) - 1);
    bool orbstab = true;
    const auto& act = node_action(G);
    for (int it = 0; it < 8; ++it) {
        int x = pick_node(rng);
        size_t stab = 0;
        std::set<int> orbit;
        for (size_t a = 0; a < G.order(); ++a) {
            stab += act[a][x] == x;
            orbit.insert(act[a][x]);
        }
        orbstab = orbstab && orbit.size() * stab == G.order();
    }
    const auto& lg = local_groups();
    for (int axis = 0; axis < 4; ++axis) {
        std::set<int> orbit;
        size_t stab = 0;
        for (size_t a = 0; a < lg.G.order(); ++a) {
            int img = lg.G[a].perm[axis];
            orbit.insert(img);
            stab += img == axis;
        }
        orbstab = orbstab && orbit.size() * stab == lg.G.order();
    }
    rec.check(orbstab, "orbit-stabilizer on nodes and on local coordinate axes");

    std::vector<SpElement> level2;
    for (auto& e : full_generators())
        if (!e.fricke) level2.push_back(e);
    bool chi = true, sign = true, law = true;
    for (int it = 0; it < n; ++it) {
        SpElement x = random_word(rng, full_generators(), 6), y = random_word(rng, full_generators(), 6);
        if (it % 4 == 0) law = law && G.index_of(phi(x * y)) == G.index_of(phi(x) * phi(y));
        SpElement u = random_word(rng, level2, 6), v = random_word(rng, level2, 6);
        sign = sign && sign_character((u * v).m) == sign_character(u.m) * sign_character(v.m);
        chi = chi && (chi_n(u * v) - chi_n(u) - chi_n(v)) % 4 == 0;
    }
    rec.check(chi, "chi_n is a homomorphism on random level-2 words");
    rec.check(sign, "sign character is a homomorphism on random level-2 words");
    rec.check(law, "phi respects products up to scalars");

    std::uniform_int_distribution<int> pick_inv(1, 10), pick_g(0, int(G.order()) - 1);
    bool eq = true;
    for (int it = 0; it < opt.equivariance_samples; ++it)
        eq = eq && fixed_locus_equivariant(involution_transform(pick_inv(rng)), G[pick_g(rng)]);
    rec.check(eq, "fixed-locus reports are equivariant on " + std::to_string(opt.equivariance_samples) +
                      " random conjugations");

    bool euler = true;
    std::uniform_int_distribution<int> comp(0, 8), ekind(0, 2);
    for (int it = 0; it < n; ++it) {
        int sigma = involution_index(pick_inv(rng));
        FixedLocusReport f;
        for (int k = comp(rng); k > 0; --k) {
            FixedComponent c;
            c.euler = ekind(rng) == 0 ? 0 : 2;
            f.components.push_back(c);
        }
        StringEuler s = string_euler({0, sigma}, involution_oracle(sigma, f));
        euler = euler && s.complete && s.value == involution_euler_shortcut(f);
    }
    rec.check(euler, "order-two shortcut equals the commuting-pair formula");
}

}  // namespace

std::string format_result_line(const CriterionResult& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "[%s] criterion %2d  %-34s %8.1fs (budget %.0fs)", r.passed ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.seconds, r.budget_seconds);
    return buf;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress)
{
    struct Spec {
        int id;
        const char* title;
        double budget;
    };
    const Spec specs[] = {
        {1, "group orders", 180},          {2, "coset indices", 60},
        {3, "theta numerics", 60},         {4, "nodes and stabilizer", 300},
        {5, "subgroup census", 600},       {6, "divisor components", 900},
        {7, "Picard rank and invariants", 3600}, {8, "fixed loci", 600},
        {9, "quotient tables", 60},        {10, "property suites", 600},
    };
    std::vector<CriterionResult> out;
    const PicardData* pd = nullptr;
    PicardData holder;
    auto picard = [&]() -> const PicardData& {
        if (!pd) {
            holder = picard_load_or_build(opt.config.picard_cache, opt.config.picard_seed);
            pd = &holder;
        }
        return *pd;
    };
    for (auto& s : specs) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), s.id) == opt.only.end()) continue;
        CriterionResult r;
        r.id = s.id;
        r.title = s.title;
        r.budget_seconds = s.budget;
        Recorder rec(r);
        auto t0 = std::chrono::steady_clock::now();
        try {
            switch (s.id) {
            case 1: criterion_groups(rec); break;
            case 2: criterion_indices(rec); break;
            case 3: criterion_theta(rec, opt.config); break;
            case 4: criterion_nodes(rec); break;
            case 5: criterion_census(rec); break;
            case 6: criterion_divisors(rec); break;
            case 7: criterion_picard(rec, picard()); break;
            case 8: criterion_fixed(rec, opt.config); break;
            case 9: criterion_tables(rec, picard(), opt.config); break;
            case 10: criterion_properties(rec, opt); break;
            }
        } catch (const std::exception& e) {
            rec.check(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rec.check(r.seconds < r.budget_seconds, "runtime within budget");
        if (progress) progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace scy

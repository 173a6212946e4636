#include "scy/calculators.hpp"

#include "scy/local.hpp"
#include "scy/symplectic.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace scy {

int involution_index(int i)
{
    if (i < 1 || i > 10) throw std::out_of_range("involution number must be in 1..10");
    int idx = projective_group().index_of(involution_table()[i - 1].transform);
    if (idx < 0) throw std::logic_error("involution not in the group");
    return idx;
}

const MonoTransform& involution_transform(int i)
{
    if (i < 1 || i > 10) throw std::out_of_range("involution number must be in 1..10");
    return involution_table()[i - 1].transform;
}

long long resolution_euler()
{
    // c(T) = (1+H)^8 / (1+2H)^4 on a complete intersection of four quadrics; e = 16 * c3
    long long a[4], b[4];
    for (int k = 0; k < 4; ++k) {
        long long c8 = 1, c3 = 1;
        for (int j = 0; j < k; ++j) {
            c8 = c8 * (8 - j) / (j + 1);
            c3 = c3 * (k + 3 - j) / (j + 1);
        }
        a[k] = c8;
        b[k] = c3 * (k % 2 ? -1 : 1) * (1LL << k);
    }
    long long c3 = 0;
    for (int k = 0; k < 4; ++k) c3 += a[k] * b[3 - k];
    return 16 * c3 + 2 * (long long)nodes().nodes.size();
}

int invariant_dimension_of(const PicardData& pd, int group_index)
{
    return invariant_dimension(word_action(pd, projective_group().word(group_index)));
}

int invariant_dimension_of_group(const PicardData& pd, const std::vector<int>& subgroup)
{
    QMat stacked;
    for (int g : generating_subset(subgroup)) {
        QMat a = word_action(pd, projective_group().word(g));
        for (size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
        stacked.insert(stacked.end(), a.begin(), a.end());
    }
    return stacked.empty() ? pd.rank : pd.rank - q_rank(stacked);
}

std::vector<int> group_image(GroupName g)
{
    const auto& G = projective_group();
    const auto& ct = gamma_prime_cosets();
    std::set<int> s;
    for (size_t c = 0; c < ct.reps.size(); ++c)
        if (member(ct.reps[c], g)) s.insert(G.index_of(phi_word(ct.words[c])));
    std::vector<int> out(s.begin(), s.end());
    auto gens = generating_subset(out);
    std::vector<MonoTransform> gt;
    for (int x : gens) gt.push_back(G[x]);
    auto closure = MonoGroup::closure(gt.empty() ? std::vector<MonoTransform>{G[0]} : gt, GroupMode::Projective);
    bool closed = closure.order() == out.size();
    for (size_t a = 0; a < closure.order() && closed; ++a) closed = s.count(G.index_of(closure[a])) > 0;
    if (!closed) throw std::invalid_argument(group_name_str(g) + " does not contain Gamma' (image is not a subgroup)");
    return out;
}

std::vector<int> generating_subset(const std::vector<int>& subgroup)
{
    const auto& G = projective_group();
    std::vector<int> gens;
    std::set<int> reached{0};
    for (int x : subgroup) {
        if (reached.count(x)) continue;
        gens.push_back(x);
        std::vector<MonoTransform> gt;
        for (int y : gens) gt.push_back(G[y]);
        auto c = MonoGroup::closure(gt, GroupMode::Projective);
        reached.clear();
        for (size_t a = 0; a < c.order(); ++a) reached.insert(G.index_of(c[a]));
    }
    return gens;
}

std::vector<int> parse_group_spec(const std::string& spec)
{
    if (spec == "trivial") return {0};
    if (spec.rfind("sigma", 0) == 0) return {0, involution_index(std::stoi(spec.substr(5)))};
    if (spec == "J") return {0, projective_group().index_of(group_generators()[3])};
    return group_image(parse_group_name(spec));
}

Hodge hodge_numbers(long long pic, long long euler)
{
    if (euler % 2) throw std::invalid_argument("odd Euler number " + std::to_string(euler));
    return {pic, pic - euler / 2};
}

StringEuler string_euler(const std::vector<int>& group, const FixedEulerOracle& oracle)
{
    const auto& G = projective_group();
    StringEuler r;
    double sum = 0;
    for (int g : group)
        for (int h : group) {
            if (G.mul_index(g, h) != G.mul_index(h, g)) continue;
            auto e = oracle(g, h);
            if (!e) {
                r.complete = false;
                continue;
            }
            sum += *e;
        }
    r.value = sum / double(group.size());
    return r;
}

FixedEulerOracle involution_oracle(int sigma_index, const FixedLocusReport& fixed)
{
    double base = double(resolution_euler());
    double fix = fixed.euler_sum();
    return [=](int g, int h) -> std::optional<double> {
        bool ge = g == 0, he = h == 0;
        if (ge && he) return base;
        if ((ge || g == sigma_index) && (he || h == sigma_index)) return fix;
        return std::nullopt;
    };
}

double involution_euler_shortcut(const FixedLocusReport& fixed)
{
    return double(resolution_euler()) / 2 + 1.5 * fixed.euler_sum();
}

QuotientReport trivial_report(const PicardData& pd)
{
    QuotientReport r;
    r.group = "trivial";
    r.transform = MonoTransform::identity(8).str();
    r.pic_regular = pd.rank;
    r.pic_resolution = pd.rank;
    auto e = string_euler({0}, [](int, int) -> std::optional<double> { return double(resolution_euler()); });
    r.euler = (long long)e.value;
    r.hodge = hodge_numbers(r.pic_resolution, r.euler);
    r.extendable = node_resolution_extendability({0});
    return r;
}

QuotientReport involution_report(int i, const PicardData& pd, int hilbert_cap)
{
    QuotientReport r;
    int idx = involution_index(i);
    r.group = "sigma" + std::to_string(i);
    r.transform = involution_transform(i).str();
    r.pic_regular = invariant_dimension_of(pd, idx);
    r.fixed = fixed_locus(involution_transform(i), hilbert_cap);
    r.fixed_components = int(r.fixed.components.size());
    r.pic_resolution = r.pic_regular + r.fixed_components;
    double shortcut = involution_euler_shortcut(r.fixed);
    StringEuler general = string_euler({0, idx}, involution_oracle(idx, r.fixed));
    r.euler_paths_agree = general.complete && general.value == shortcut;
    if (!r.euler_paths_agree) throw std::logic_error("string Euler formulas disagree for " + r.group);
    r.euler = (long long)shortcut;
    if (double(r.euler) != shortcut) throw std::logic_error("non-integral Euler number for " + r.group);
    r.hodge = hodge_numbers(r.pic_resolution, r.euler);
    r.extendable = node_resolution_extendability({0, idx});
    return r;
}

const std::vector<PublishedRow>& published_rows()
{
    static const std::vector<PublishedRow> rows{
        {16, -1, 16, 32, "empty"},       {24, 0, 40, 80, "16 nodes"},  {16, 1, 20, 32, "4 elliptic"},
        {16, -1, 16, 32, "empty"},       {16, -1, 16, 32, "empty"},    {20, 1, 28, 56, "8 conics"},
        {20, 1, 28, 56, "8 lines"},      {16, 1, 18, 32, "2 elliptic"}, {16, 1, 18, 32, "2 elliptic"},
        {18, 1, 22, 44, "4 conics"},
    };
    return rows;
}

std::string fixed_census(const FixedLocusReport& f)
{
    if (f.components.empty()) return "empty";
    const std::pair<const char*, const char*> words[] = {
        {"node", "nodes"}, {"elliptic", "elliptic"}, {"conic", "conics"}, {"line", "lines"}};
    std::string out;
    for (auto& [kind, plural] : words)
        if (int n = f.count(kind)) out += (out.empty() ? "" : " + ") + std::to_string(n) + " " + plural;
    int other = int(f.components.size()) - f.count("node") - f.count("elliptic") - f.count("conic") - f.count("line");
    if (other) out += (out.empty() ? "" : " + ") + std::to_string(other) + " other";
    return out;
}

nlohmann::json report_to_json(const QuotientReport& r)
{
    nlohmann::json comps = nlohmann::json::array();
    for (auto& c : r.fixed.components) {
        nlohmann::json lin = nlohmann::json::array();
        for (auto& l : c.linear) lin.push_back(l.pretty());
        comps.push_back({{"kind", c.kind},
                         {"eigenspace", c.part > 0 ? "+" : "-"},
                         {"dimension", c.cls.dim},
                         {"degree", c.cls.degree},
                         {"genus", c.cls.genus},
                         {"node", c.node},
                         {"euler", c.euler},
                         {"linear_forms", lin}});
    }
    return {{"group", r.group},
            {"transform", r.transform},
            {"eigenspace_dims", {r.fixed.dim_plus, r.fixed.dim_minus}},
            {"fixed_dimension", r.fixed.dimension},
            {"fixed_components", comps},
            {"pic_regular", r.pic_regular},
            {"pic_resolution", r.pic_resolution},
            {"euler", r.euler},
            {"hodge", {{"h11", r.hodge.h11}, {"h12", r.hodge.h12}}},
            {"extendable", r.extendable}};
}

std::string report_to_text(const QuotientReport& r)
{
    std::ostringstream os;
    os << r.group << "  " << r.transform << "\n";
    if (r.group != "trivial") {
        os << "  eigenspaces " << r.fixed.dim_plus << "+" << r.fixed.dim_minus << ", fixed locus dimension "
           << r.fixed.dimension << "\n";
        std::map<std::string, int> census;
        for (auto& c : r.fixed.components) census[c.kind]++;
        os << "  fixed components:";
        if (census.empty()) os << " none";
        for (auto& [k, n] : census) os << " " << n << " " << k;
        os << "\n";
    }
    os << "  pic regular " << r.pic_regular << ", pic resolution " << r.pic_resolution << ", euler " << r.euler
       << "\n";
    os << "  hodge h11=" << r.hodge.h11 << " h12=" << r.hodge.h12 << ", local extension "
       << (r.extendable ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace scy

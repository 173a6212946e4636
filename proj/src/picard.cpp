#include "scy/picard.hpp"

#include "scy/groebner.hpp"
#include "scy/variety.hpp"

#include "json.hpp"
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scy {

long long intersection_length(const std::vector<const std::vector<FPoly>*>& parts, const PrimeField& F)
{
    std::vector<FPoly> gens;
    for (auto* p : parts) gens.insert(gens.end(), p->begin(), p->end());
    HilbertData h = hilbert_of(gens, F);
    if (h.dim > 0) return -1;
    return h.dim < 0 ? 0 : h.degree;
}

std::vector<uint32_t> node_avoiding_hyperplane(uint64_t seed, const PrimeField& F)
{
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<uint32_t> h(kVars);
        for (auto& c : h) c = uint32_t(rng() % F.p());
        bool ok = true;
        for (auto& n : nodes().nodes) {
            uint32_t s = 0;
            for (int v = 0; v < kVars; ++v) s = F.add(s, F.mul(h[v], n[v].mod(F.p(), F.zeta())));
            if (!s) ok = false;
        }
        if (ok) return h;
    }
}

namespace {

FPoly hyperplane_poly(const std::vector<uint32_t>& h, const PrimeField& F)
{
    std::vector<std::pair<Mono, uint32_t>> t;
    for (int v = 0; v < kVars; ++v) t.push_back({mono_var(v), h[v]});
    return fp_from_terms(t, F, MonoOrder{});
}

QMat column_matrix(const std::vector<std::vector<long long>>& cols)
{
    QMat m(cols[0].size(), std::vector<mpq_class>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) m[i][j] = long(cols[j][i]);
    return m;
}

std::vector<long long> column(const PicardData& pd, int w)
{
    std::vector<long long> c(pd.Q.size());
    for (size_t v = 0; v < pd.Q.size(); ++v) c[v] = pd.Q[v][w];
    return c;
}

QMat solve_on_basis(const PicardData& pd, const std::vector<std::vector<long long>>& images)
{
    std::vector<std::vector<long long>> bcols;
    for (int b : pd.basis) bcols.push_back(column(pd, b));
    return q_solve(column_matrix(bcols), column_matrix(images));
}

}  // namespace

std::vector<long long> pushed_column(const PicardData& pd, int c, const MonoTransform& g, const PrimeField& F)
{
    const DivisorData& d = divisor_data();
    FPoly h = hyperplane_poly(pd.hyperplane, F);
    std::vector<FPoly> hv{h};
    std::vector<FPoly> img = pushed_ideal(d.comps[c], g, F);
    std::vector<long long> out(d.comps.size());
    for (size_t v = 0; v < d.comps.size(); ++v) {
        out[v] = intersection_length({&img, &d.comps[v].basis, &hv}, F);
        if (out[v] < 0) throw std::runtime_error("pushed component shares a surface with a listed component");
    }
    return out;
}

PicardData compute_picard(uint64_t seed, const PrimeField& F)
{
    const DivisorData& d = divisor_data();
    PicardData pd;
    pd.seed = seed;
    pd.prime = F.p();
    pd.hyperplane = node_avoiding_hyperplane(seed, F);
    for (auto& c : d.comps) pd.components.push_back(d.forms[c.form].name() + " " + c.fingerprint);
    FPoly h = hyperplane_poly(pd.hyperplane, F);
    std::vector<FPoly> hv{h};
    int n = int(d.comps.size());
    pd.Q.assign(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            long long e = intersection_length({&d.comps[v].basis, &d.comps[w].basis, &hv}, F);
            if (e < 0) throw std::runtime_error("components meet in a surface");
            pd.Q[v][w] = pd.Q[w][v] = e;
        }
    // self-intersection from the relation: sum of the components of a form is weight * H
    for (int w = 0; w < n; ++w) {
        const auto& c = d.comps[w];
        long long s = d.forms[c.form].weight * c.degree;
        for (int u : d.comps_of_form[c.form])
            if (u != w) s -= pd.Q[u][w];
        pd.Q[w][w] = s;
    }
    // greedy column basis
    QMat acc;
    for (int w = 0; w < n; ++w) {
        QMat trial = acc;
        std::vector<mpq_class> row(n);
        for (int v = 0; v < n; ++v) row[v] = long(pd.Q[v][w]);
        trial.push_back(row);
        if (q_rank(trial) > int(acc.size())) {
            acc = std::move(trial);
            pd.basis.push_back(w);
        }
    }
    pd.rank = int(pd.basis.size());
    for (auto& g : group_generators()) {
        std::vector<int> perm = component_action(g);
        std::vector<std::vector<long long>> images;
        for (int b : pd.basis)
            images.push_back(perm[b] >= 0 ? column(pd, perm[b]) : pushed_column(pd, b, g, F));
        pd.generator_action.push_back(solve_on_basis(pd, images));
        pd.generator_perm.push_back(std::move(perm));
    }
    return pd;
}

const PicardData& picard_data()
{
    static const PicardData pd = compute_picard();
    return pd;
}

PicardData picard_load_or_build(const std::string& path, uint64_t seed, bool* loaded)
{
    if (loaded) *loaded = false;
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                PicardData pd = picard_from_json(ss.str());
                if (pd.seed == seed) {
                    if (loaded) *loaded = true;
                    return pd;
                }
            } catch (const std::exception&) {
                // stale or foreign cache; rebuild
            }
        }
    }
    PicardData pd = compute_picard(seed);
    if (!path.empty()) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write picard cache " + path);
        out << picard_to_json(pd);
    }
    return pd;
}

QMat word_action(const PicardData& pd, const std::vector<int>& word)
{
    QMat a = q_identity(pd.rank);
    for (int s : word) a = q_mul(a, pd.generator_action[s]);
    return a;
}

int invariant_dimension(const QMat& a)
{
    QMat m = a;
    for (size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
    return int(m.size()) - q_rank(m);
}

std::vector<int> component_orbit_sizes(const std::vector<std::vector<int>>& perms, int n)
{
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (auto& p : perms)
        for (int i = 0; i < n; ++i)
            if (p[i] >= 0) uf[find(i)] = find(p[i]);
    std::map<int, int> sz;
    for (int i = 0; i < n; ++i) sz[find(i)]++;
    std::vector<int> out;
    for (auto& [r, s] : sz) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::string picard_to_json(const PicardData& pd)
{
    nlohmann::json j;
    j["version"] = kPicardCacheVersion;
    j["seed"] = pd.seed;
    j["prime"] = pd.prime;
    j["hyperplane"] = pd.hyperplane;
    j["Q"] = pd.Q;
    j["rank"] = pd.rank;
    j["basis"] = pd.basis;
    j["generator_perm"] = pd.generator_perm;
    j["components"] = pd.components;
    nlohmann::json acts = nlohmann::json::array();
    for (auto& a : pd.generator_action) {
        nlohmann::json m = nlohmann::json::array();
        for (auto& r : a) {
            nlohmann::json row = nlohmann::json::array();
            for (auto& x : r) row.push_back(x.get_str());
            m.push_back(row);
        }
        acts.push_back(m);
    }
    j["generator_action"] = acts;
    return j.dump();
}

PicardData picard_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != kPicardCacheVersion) throw std::runtime_error("picard cache version mismatch");
    PicardData pd;
    pd.seed = j.at("seed").get<uint64_t>();
    pd.prime = j.at("prime").get<uint32_t>();
    pd.hyperplane = j.at("hyperplane").get<std::vector<uint32_t>>();
    pd.Q = j.at("Q").get<std::vector<std::vector<long long>>>();
    pd.rank = j.at("rank").get<int>();
    pd.basis = j.at("basis").get<std::vector<int>>();
    pd.generator_perm = j.at("generator_perm").get<std::vector<std::vector<int>>>();
    pd.components = j.at("components").get<std::vector<std::string>>();
    for (auto& m : j.at("generator_action")) {
        QMat a;
        for (auto& r : m) {
            std::vector<mpq_class> row;
            for (auto& x : r) row.emplace_back(x.get<std::string>());
            a.push_back(row);
        }
        pd.generator_action.push_back(a);
    }
    return pd;
}

}  // namespace scy

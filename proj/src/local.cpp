#include "scy/local.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace scy {

namespace {

MonoTransform mono4(std::array<int8_t, 4> perm, std::array<int8_t, 4> k)
{
    MonoTransform t = MonoTransform::identity(4);
    for (int i = 0; i < 4; ++i) {
        t.perm[i] = perm[i];
        t.k[i] = k[i];
    }
    return t;
}

// Swap of x2 and x3, i.e. X -> tX.
ExactMatrix transpose_map()
{
    ExactMatrix p(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

bool is_kronecker(const ExactMatrix& t)
{
    // T[2i+j][2k+l] = A_ik B_jl  <=>  R[(i,k)][(j,l)] has rank one
    ExactMatrix r(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = t(2 * i + j, 2 * k + l);
    return echelonize(r).rank == 1;
}

const std::vector<std::vector<int>>& projective_node_action()
{
    static const auto a = node_action(projective_group());
    return a;
}

int base_node_index()
{
    static const int i = [] {
        int j = nodes().find(base_node());
        if (j < 0) throw std::logic_error("base node not among the nodes");
        return j;
    }();
    return i;
}

std::string key_list(std::vector<unsigned __int128> keys)
{
    std::sort(keys.begin(), keys.end());
    std::string s;
    for (auto k : keys) s += std::to_string(uint64_t(k >> 64)) + ":" + std::to_string(uint64_t(k)) + ";";
    return s;
}

}  // namespace

const std::vector<MonoTransform>& local_generators()
{
    static const std::vector<MonoTransform> m{
        mono4({3, 1, 2, 0}, {0, 0, 0, 0}), mono4({0, 1, 2, 3}, {6, 4, 0, 6}), mono4({0, 1, 2, 3}, {4, 2, 2, 0}),
        mono4({0, 1, 2, 3}, {4, 4, 0, 0}), mono4({0, 2, 1, 3}, {0, 0, 0, 0}), mono4({1, 0, 3, 2}, {0, 0, 0, 0}),
    };
    return m;
}

const std::vector<SpElement>& stabilizer_matrices()
{
    static const std::vector<SpElement> m{
        SpElement::from_lift({1, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 2, 0, 0, 1}),
        SpElement::from_lift({1, 0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_lift({1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_lift({1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 1}),
        SpElement::from_lift({1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, true),
    };
    return m;
}

const Point& base_node()
{
    static const Point p{CycloNum::sqrt2(), 0, CycloNum::sqrt2(), 0, 1, 1, 0, 0};
    return p;
}

XPoly cone_quadric()
{
    return XPoly::var(0) * XPoly::var(3) - XPoly::var(1) * XPoly::var(2);
}

std::optional<CycloNum> quadric_factor(const ExactMatrix& t)
{
    if (t.rows() != 4 || t.cols() != 4) throw std::invalid_argument("local transformation must be 4x4");
    std::vector<std::vector<CycloNum>> m(8, std::vector<CycloNum>(8));
    for (int i = 0; i < 8; ++i) m[i][i] = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = t(i, j);
    XPoly q = cone_quadric();
    XPoly img = q.linear_change(m);
    CycloNum c = img.coeff(mono_var(0) + mono_var(3));
    if (c.is_zero() || !(img == c * q)) return std::nullopt;
    return c;
}

KroneckerResult kronecker_extendable(const ExactMatrix& t)
{
    if (!quadric_factor(t)) throw std::invalid_argument("transformation does not preserve the cone");
    KroneckerResult r;
    r.extends = is_kronecker(t);
    r.twist = !r.extends && is_kronecker(t * transpose_map());
    return r;
}

KroneckerResult kronecker_extendable(const MonoTransform& t) { return kronecker_extendable(t.matrix()); }

const LocalGroups& local_groups()
{
    static const LocalGroups lg = [] {
        const auto& m = local_generators();
        LocalGroups g;
        g.G = MonoGroup::closure(m, GroupMode::Linear);
        g.H = MonoGroup::closure({m[1] * m[1], m[2] * m[2], m[1] * m[0], m[2] * m[0], m[3] * m[0], m[4] * m[0],
                                  m[5] * m[0]},
                                 GroupMode::Linear);
        for (size_t a = 0; a < g.H.order(); ++a) {
            bool det1 = g.H[a].matrix().det() == CycloNum(1);
            bool untwisted = kronecker_extendable(g.H[a]).extends;
            if (det1 != untwisted)
                throw std::logic_error("determinant and Kronecker descriptions of H0 disagree at " + g.H[a].str());
            if (det1) g.H0.push_back(int(a));
        }
        for (size_t a = 0; a < g.G.order(); ++a)
            if (g.G[a].matrix().det() == CycloNum(1)) g.G0.push_back(int(a));
        return g;
    }();
    return lg;
}

namespace {

struct Type4Data {
    // sorted element keys of <h tau h^-1> -> conjugator, for h in G (and whether h may be taken in H)
    std::map<std::string, std::pair<std::string, bool>> cyclic;
};

const Type4Data& type4_data()
{
    static const Type4Data d = [] {
        const auto& lg = local_groups();
        std::vector<MonoTransform> taus{mono4({1, 3, 0, 2}, {0, 0, 0, 0}), mono4({1, 3, 0, 2}, {0, 2, 6, 0})};
        Type4Data out;
        for (auto& tau : taus)
            for (size_t a = 0; a < lg.G.order(); ++a) {
                const MonoTransform& h = lg.G[a];
                MonoTransform c = h * tau * h.inverse();
                std::vector<unsigned __int128> keys;
                MonoTransform p = MonoTransform::identity(4);
                for (int e = 0; e < 4; ++e) {
                    keys.push_back(p.key());
                    p = p * c;
                }
                bool in_h = lg.H.contains(h);
                auto [it, fresh] = out.cyclic.try_emplace(key_list(keys), h.str(), in_h);
                if (!fresh && in_h && !it->second.second) it->second = {h.str(), true};
            }
        return out;
    }();
    return d;
}

}  // namespace

SubgroupTypeReport classify_subgroup(const std::vector<int>& k, int id)
{
    const auto& lg = local_groups();
    const MonoGroup& H = lg.H;
    SubgroupTypeReport r;
    r.id = id;
    r.elements = k;
    std::set<int> inK(k.begin(), k.end());
    std::set<int> h0(lg.H0.begin(), lg.H0.end());

    bool t1 = std::all_of(k.begin(), k.end(), [&](int x) { return h0.count(x) > 0; });
    int minus = H.index_of(MonoTransform::scalar(4, 4));
    bool t2 = minus >= 0 && inK.count(minus);
    bool t3 = false;
    for (auto d : {mono4({0, 1, 2, 3}, {4, 0, 0, 4}), mono4({0, 1, 2, 3}, {0, 4, 4, 0})}) {
        int di = H.index_of(d);
        if (di < 0 || !inK.count(di)) continue;
        bool central = std::all_of(k.begin(), k.end(), [&](int x) { return H[x] * d == d * H[x]; });
        if (central) {
            t3 = true;
            r.central_witness = d.str();
            break;
        }
    }
    bool t4 = false;
    if (k.size() == 4) {
        std::vector<unsigned __int128> keys;
        for (int x : k) keys.push_back(H[x].key());
        auto it = type4_data().cyclic.find(key_list(keys));
        if (it != type4_data().cyclic.end()) {
            t4 = true;
            r.conjugator = it->second.first;
            r.type4_in_h = it->second.second;
        }
    }
    if (t1) r.types.push_back(1);
    if (t2) r.types.push_back(2);
    if (t3) r.types.push_back(3);
    if (t4) r.types.push_back(4);
    if (r.types.empty()) throw std::runtime_error("classification gap at subgroup " + std::to_string(id));
    return r;
}

std::vector<SubgroupTypeReport> classify_all_subgroups()
{
    const auto& H = local_groups().H;
    auto lat = all_subgroups(multiplication_table(H));
    std::vector<SubgroupTypeReport> out;
    for (size_t i = 0; i < lat.subgroups.size(); ++i) out.push_back(classify_subgroup(lat.subgroups[i], int(i)));
    return out;
}

ExactMatrix local_image(const MonoTransform& g)
{
    const Point& P = base_node();
    Point gP = g.apply(P);
    CycloNum lambda = gP[5] / P[5];
    for (int i = 0; i < 8; ++i)
        if (gP[i] != lambda * P[i]) throw std::invalid_argument("transformation does not fix the base node");

    // cotangent coordinates: x1 = Y1-Y3, x2 = sqrt2(X2-X3), x3 = sqrt2(X2+X3), x4 = Y1+Y3 (over X1)
    CycloNum s = CycloNum::sqrt2();
    std::vector<std::vector<CycloNum>> ell(4, std::vector<CycloNum>(8));
    ell[0][1] = 1, ell[0][3] = -1;
    ell[1][6] = s, ell[1][7] = -s;
    ell[2][6] = s, ell[2][7] = s;
    ell[3][1] = 1, ell[3][3] = 1;
    ExactMatrix J = jacobian(P);

    ExactMatrix out(4, 4);
    for (int j = 0; j < 4; ++j) {
        // row vector of ell_j o g
        std::vector<CycloNum> row(8);
        for (int i = 0; i < 8; ++i)
            if (!ell[j][i].is_zero()) row[g.perm[i]] += ell[j][i] * g.entry(i);
        // row = sum_k a_k ell_k + sum_m b_m dF_m
        ExactMatrix sys(8, 9);
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 4; ++k) sys(i, k) = ell[k][i];
            for (int m = 0; m < 4; ++m) sys(i, 4 + m) = J(m, i);
            sys(i, 8) = row[i];
        }
        bool found = false;
        for (auto& v : echelonize(sys).kernel) {
            if (v[8].is_zero()) continue;
            CycloNum f = -v[8].inv();
            for (int k = 0; k < 4; ++k) out(j, k) = v[k] * f / lambda;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("cotangent solve failed");
    }
    return out;
}

const std::vector<int>& normal_image()
{
    static const std::vector<int> img = [] {
        const auto& G = projective_group();
        const auto& ct = gamma_prime_cosets();
        std::set<int> s;
        for (size_t c = 0; c < ct.reps.size(); ++c)
            if (chi_n(ct.reps[c]) == 0) s.insert(G.index_of(phi_word(ct.words[c])));
        return std::vector<int>(s.begin(), s.end());
    }();
    return img;
}

StabilizerReport stabilizer_report()
{
    const auto& G = projective_group();
    const auto& lg = local_groups();
    StabilizerReport r;
    auto stab = node_stabilizer(G, base_node_index());
    r.stabilizer_order = stab.size();

    std::vector<MonoTransform> phis;
    for (auto& M : stabilizer_matrices()) phis.push_back(phi(M));
    r.generated_order = MonoGroup::closure(phis, GroupMode::Projective).order();
    for (size_t i = 0; i < phis.size(); ++i) r.correspondence.push_back(local_image(phis[i]) == local_generators()[i].matrix());

    std::set<int> normal(normal_image().begin(), normal_image().end());
    std::set<int> in_g, in_h;
    bool all_in = true;
    for (int a : stab) {
        auto t = MonoTransform::from_matrix(local_image(G[a]));
        int gi = t ? lg.G.index_of(*t) : -1;
        if (gi < 0) {
            all_in = false;
            continue;
        }
        in_g.insert(gi);
        if (normal.count(a)) {
            ++r.normal_part_order;
            int hi = lg.H.index_of(*t);
            if (hi >= 0) in_h.insert(hi);
        }
    }
    r.local_map_injective = all_in && in_g.size() == stab.size() && in_g.size() == lg.G.order();
    r.normal_part_onto_h = in_h.size() == r.normal_part_order && in_h.size() == lg.H.order();
    return r;
}

bool node_resolution_extendability(const std::vector<int>& subgroup)
{
    const auto& G = projective_group();
    const auto& act = projective_node_action();
    const int base = base_node_index();
    size_t n = nodes().nodes.size();
    std::vector<char> done(n, 0);
    for (size_t x = 0; x < n; ++x) {
        if (done[x]) continue;
        for (int s : subgroup) done[act[s][x]] = 1;
        // transporter t with t(base) = x
        int t = -1;
        for (size_t a = 0; a < G.order() && t < 0; ++a)
            if (act[a][base] == int(x)) t = int(a);
        MonoTransform ti = G.inverse_of(G[t]);
        for (int s : subgroup) {
            if (act[s][x] != int(x)) continue;
            if (!kronecker_extendable(local_image(ti * G[s] * G[t])).extends) return false;
        }
    }
    return true;
}

}  // namespace scy

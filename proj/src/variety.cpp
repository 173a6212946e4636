#include "scy/variety.hpp"

#include <algorithm>
#include <set>

namespace scy {

const int kSigns[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};

XPoly quadric_rhs(int k)
{
    XPoly r;
    for (int a = 0; a < 4; ++a) r += CycloNum(kSigns[k][a]) * XPoly::var(4 + a).pow(2);
    return r;
}

const std::vector<XPoly>& variety_quadrics()
{
    static const std::vector<XPoly> q = [] {
        std::vector<XPoly> v;
        for (int k = 0; k < 4; ++k) v.push_back(XPoly::var(k).pow(2) - quadric_rhs(k));
        return v;
    }();
    return q;
}

std::vector<FPoly> variety_quadrics_fp(const PrimeField& F, const MonoOrder& o)
{
    std::vector<FPoly> out;
    for (auto& q : variety_quadrics()) out.push_back(to_fp(q, F, o));
    return out;
}

const std::vector<MonoTransform>& group_generators()
{
    static const std::vector<MonoTransform> g = [] {
        std::vector<MonoTransform> v;
        MonoTransform a = MonoTransform::identity(8);
        a.perm = {0, 1, 3, 2, 4, 7, 6, 5};
        v.push_back(a);
        MonoTransform b = MonoTransform::identity(8);
        b.perm = {0, 3, 2, 1, 4, 5, 7, 6};
        v.push_back(b);
        MonoTransform c = MonoTransform::identity(8);
        c.perm = {0, 1, 2, 3, 5, 4, 7, 6};
        c.k[1] = c.k[3] = 6;  // -i
        v.push_back(c);
        MonoTransform j = MonoTransform::identity(8);
        j.perm = {4, 5, 6, 7, 0, 1, 2, 3};
        for (int i = 0; i < 4; ++i) {
            j.e[i] = 1;
            j.e[4 + i] = -1;
        }
        v.push_back(j);
        return v;
    }();
    return g;
}

const MonoGroup& linear_group()
{
    static const MonoGroup g = MonoGroup::closure(group_generators(), GroupMode::Linear);
    return g;
}

const MonoGroup& projective_group()
{
    static const MonoGroup g = MonoGroup::closure(group_generators(), GroupMode::Projective);
    return g;
}

Point normalize_point(const Point& p)
{
    for (auto& x : p)
        if (!x.is_zero()) {
            CycloNum iv = x.inv();
            Point r;
            for (auto& y : p) r.push_back(y * iv);
            return r;
        }
    throw std::invalid_argument("zero vector is not a projective point");
}

bool on_variety(const Point& p)
{
    for (auto& q : variety_quadrics())
        if (!q.eval(p).is_zero()) return false;
    return true;
}

ExactMatrix jacobian(const Point& p)
{
    ExactMatrix J(4, 8);
    for (int k = 0; k < 4; ++k) {
        J(k, k) = CycloNum(2) * p[k];
        for (int a = 0; a < 4; ++a) J(k, 4 + a) = CycloNum(-2 * kSigns[k][a]) * p[4 + a];
    }
    return J;
}

int jacobian_rank(const Point& p)
{
    if (!on_variety(p)) throw std::invalid_argument("point not on the variety");
    return echelonize(jacobian(p)).rank;
}

int tangent_cone_rank(const Point& p)
{
    ExactMatrix J = jacobian(p);
    // combination of the quadrics with vanishing gradient at p
    auto left = echelonize(J.transpose()).kernel;
    if (left.empty()) return 0;
    const auto& lam = left[0];
    ExactMatrix M(8, 8);
    for (int k = 0; k < 4; ++k) {
        M(k, k) += lam[k];
        for (int a = 0; a < 4; ++a) M(4 + a, 4 + a) -= lam[k] * CycloNum(kSigns[k][a]);
    }
    // restrict to the tangent space ker J
    auto ker = echelonize(J).kernel;
    ExactMatrix B(8, int(ker.size()));
    for (size_t c = 0; c < ker.size(); ++c)
        for (int r = 0; r < 8; ++r) B(r, int(c)) = ker[c][r];
    return echelonize(B.transpose() * M * B).rank;
}

std::string point_key(const Point& p)
{
    std::string s;
    for (auto& x : normalize_point(p)) s += x.str() + ";";
    return s;
}

int NodeSet::find(const Point& p) const
{
    auto it = index.find(point_key(p));
    return it == index.end() ? -1 : it->second;
}

std::vector<Point> enumerate_node_candidates()
{
    // two Y coordinates vanish; the rest lie in {0, +-1, +-i} times {1, sqrt2}
    const CycloNum yv[8] = {CycloNum(1), CycloNum(-1), CycloNum::i(), -CycloNum::i(),
                            CycloNum::sqrt2(), -CycloNum::sqrt2(), CycloNum::i() * CycloNum::sqrt2(),
                            -(CycloNum::i() * CycloNum::sqrt2())};
    const CycloNum xv[5] = {CycloNum(0), CycloNum(1), CycloNum(-1), CycloNum::i(), -CycloNum::i()};
    std::set<std::string> seen;
    std::vector<Point> out;
    for (int z1 = 0; z1 < 4; ++z1)
        for (int z2 = z1 + 1; z2 < 4; ++z2)
            for (int ys = 0; ys < 64; ++ys)
                for (int xs = 0; xs < 625; ++xs) {
                    Point p(8);
                    int t = ys, u = xs, nz = 0;
                    for (int k = 0; k < 4; ++k) {
                        if (k == z1 || k == z2) continue;
                        p[k] = yv[t % 8];
                        t /= 8;
                    }
                    for (int a = 0; a < 4; ++a) {
                        p[4 + a] = xv[u % 5];
                        nz += (u % 5) != 0;
                        u /= 5;
                    }
                    if (!nz) continue;
                    if (!on_variety(p)) continue;
                    Point n = normalize_point(p);
                    if (!seen.insert(point_key(n)).second) continue;
                    out.push_back(n);
                }
    return out;
}

const NodeSet& nodes()
{
    static const NodeSet ns = [] {
        NodeSet s;
        for (auto& p : enumerate_node_candidates())
            if (jacobian_rank(p) <= 3) {
                s.index[point_key(p)] = int(s.nodes.size());
                s.nodes.push_back(p);
            }
        return s;
    }();
    return ns;
}

HilbertData singular_scheme(const PrimeField& F)
{
    MonoOrder o;
    // Jacobian entries as linear polynomials
    std::vector<std::vector<FPoly>> J(4, std::vector<FPoly>(8));
    for (int k = 0; k < 4; ++k) {
        J[k][k] = fp_from_terms({{mono_var(k), 2}}, F, o);
        for (int a = 0; a < 4; ++a)
            J[k][4 + a] = fp_from_terms({{mono_var(4 + a), F.from_int(-2 * kSigns[k][a])}}, F, o);
    }
    std::vector<FPoly> gens = variety_quadrics_fp(F, o);
    auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> FPoly {
        if (rows.size() == 1) return J[rows[0]][cols[0]];
        FPoly acc;
        for (size_t c = 0; c < cols.size(); ++c) {
            if (J[rows[0]][cols[c]].zero()) continue;
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2;
            for (size_t d = 0; d < cols.size(); ++d)
                if (d != c) c2.push_back(cols[d]);
            FPoly minor = self(self, r2, c2);
            FPoly term = fp_mul(J[rows[0]][cols[c]], minor, F, o);
            if (c % 2) term = fp_mul_term(term, 0, F.neg(1), F, o);
            acc = fp_add(acc, term, F);
        }
        return acc;
    };
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d) {
                    FPoly m = det(det, {0, 1, 2, 3}, {a, b, c, d});
                    if (!m.zero()) gens.push_back(m);
                }
    return hilbert_of(gens, F);
}

int count_singular_points_mod(uint32_t p)
{
    PrimeField F(p);
    int count = 0;
    std::vector<std::array<uint32_t, 4>> xs;
    for (uint32_t a = 0; a < p; ++a)
        for (uint32_t b = 0; b < p; ++b)
            for (uint32_t c = 0; c < p; ++c) {
                xs.push_back({1, a, b, c});
            }
    for (uint32_t b = 0; b < p; ++b)
        for (uint32_t c = 0; c < p; ++c) xs.push_back({0, 1, b, c});
    for (uint32_t c = 0; c < p; ++c) xs.push_back({0, 0, 1, c});
    xs.push_back({0, 0, 0, 1});
    for (auto& x : xs) {
        std::array<uint32_t, 4> r{};
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
            uint32_t d = 0;
            for (int a = 0; a < 4; ++a) {
                uint32_t sq = F.mul(x[a], x[a]);
                d = kSigns[k][a] > 0 ? F.add(d, sq) : F.sub(d, sq);
            }
            auto s = F.sqrt(d);
            if (!s) ok = false;
            else r[k] = *s;
        }
        if (!ok) continue;
        for (int mask = 0; mask < 16; ++mask) {
            bool dup = false;
            std::array<uint32_t, 4> y;
            for (int k = 0; k < 4; ++k) {
                y[k] = (mask >> k & 1) ? F.neg(r[k]) : r[k];
                if ((mask >> k & 1) && r[k] == 0) dup = true;
            }
            if (dup) continue;
            std::vector<FpVec> J(4, FpVec(8, 0));
            for (int k = 0; k < 4; ++k) {
                J[k][k] = F.mul(2, y[k]);
                for (int a = 0; a < 4; ++a) J[k][4 + a] = F.mul(F.from_int(-2 * kSigns[k][a]), x[a]);
            }
            if (fp_rank(F, J, 8) <= 3) ++count;
        }
    }
    return count;
}

std::vector<int> node_permutation(const MonoTransform& t)
{
    const NodeSet& ns = nodes();
    std::vector<int> perm(ns.nodes.size());
    for (size_t i = 0; i < ns.nodes.size(); ++i) {
        int j = ns.find(t.apply(ns.nodes[i]));
        if (j < 0) throw std::runtime_error("node set not stable under transformation " + t.str());
        perm[i] = j;
    }
    return perm;
}

std::vector<std::vector<int>> node_action(const MonoGroup& g)
{
    std::vector<std::vector<int>> gp;
    for (auto& s : g.generators()) gp.push_back(node_permutation(s));
    std::vector<std::vector<int>> out(g.order());
    size_t n = nodes().nodes.size();
    out[0].resize(n);
    for (size_t i = 0; i < n; ++i) out[0][i] = int(i);
    for (size_t a = 1; a < g.order(); ++a) {
        auto w = g.word(int(a));
        std::vector<int> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = int(i);
        // element = s_1 s_2 ... s_k acting on points: apply s_k first
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            for (size_t i = 0; i < n; ++i) p[i] = gp[*it][p[i]];
        out[a] = std::move(p);
    }
    return out;
}

std::vector<int> node_stabilizer(const MonoGroup& g, int node)
{
    std::vector<int> out;
    const Point& P = nodes().nodes[node];
    for (size_t a = 0; a < g.order(); ++a)
        if (nodes().find(g[a].apply(P)) == node) out.push_back(int(a));
    return out;
}

}  // namespace scy

#include "scy/fixed.hpp"

#include "scy/divisor.hpp"
#include "scy/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace scy {

EigenSplit eigen_split(const MonoTransform& t)
{
    ExactMatrix T = t.matrix();
    ExactMatrix T2 = T * T;
    if (!T2.is_scalar()) throw std::invalid_argument("square of " + t.str() + " is not scalar");
    auto mu = T2(0, 0).sqrt();
    if (!mu) throw std::invalid_argument("eigenvalue of " + t.str() + " not in Q(zeta8)");
    EigenSplit s;
    s.mu = *mu;
    for (int sgn : {1, -1}) {
        ExactMatrix A = T;
        for (int j = 0; j < T.rows(); ++j) A(j, j) -= CycloNum(sgn) * *mu;
        (sgn > 0 ? s.plus : s.minus) = echelonize(A).kernel;
    }
    return s;
}

CurveClass hilbert_classify(const std::vector<FPoly>& gens, const PrimeField& F, int cap)
{
    MonoOrder o;
    std::vector<Mono> lms;
    for (auto& g : groebner(gens, F, o)) lms.push_back(g.lead().m);
    HilbertData h = hilbert_from_lms(lms);
    CurveClass c{h.dim, h.degree, h.dim == 1 ? h.genus() : 0};
    if (h.dim > 1) return c;
    // eventual polynomial a d + b, accepted once two consecutive fits agree
    for (int d = 0; d + 3 <= cap; ++d) {
        long long a = h.value(d + 1) - h.value(d), b = h.value(d) - a * d;
        bool fit = true;
        for (int e = d + 2; e <= d + 3; ++e) fit = fit && h.value(e) == a * e + b;
        if (!fit) continue;
        long long deg = h.dim == 1 ? a : b;
        if (h.dim == 1 && (a != h.degree || b != h.constant)) throw std::logic_error("Hilbert polynomial mismatch");
        if (h.dim == 0 && (a != 0 || deg != h.degree)) throw std::logic_error("Hilbert polynomial mismatch");
        if (h.dim == -1 && (a != 0 || b != 0)) throw std::logic_error("Hilbert polynomial mismatch");
        return c;
    }
    throw std::runtime_error("Hilbert function did not stabilize by the cap");
}

std::string FixedComponent::ideal_str() const
{
    std::string s = "(";
    for (size_t i = 0; i < linear.size(); ++i) s += (i ? ", " : "") + linear[i].pretty();
    return s + ", quadrics)";
}

int FixedLocusReport::count(const std::string& kind) const
{
    return int(std::count_if(components.begin(), components.end(), [&](auto& c) { return c.kind == kind; }));
}

int FixedLocusReport::euler_sum() const
{
    int s = 0;
    for (auto& c : components) s += c.euler;
    return s;
}

namespace {

// Substitution state: u_m = coef[m] * u_root[m], root -1 means u_m = 0.
struct Branch {
    std::vector<int> root;
    std::vector<CycloNum> coef;
};

int subspace_rank(const std::vector<std::vector<CycloNum>>& cols)
{
    if (cols.empty()) return 0;
    ExactMatrix m(int(cols.size()), int(cols[0].size()));
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = 0; j < cols[i].size(); ++j) m(int(i), int(j)) = cols[i][j];
    return echelonize(m).rank;
}

std::vector<Branch> split_diagonal(const std::vector<std::vector<CycloNum>>& a, int d)
{
    // a[k][m]: coefficient of u_m^2 in the k-th restricted quadric
    std::vector<Branch> out;
    Branch start;
    for (int m = 0; m < d; ++m) {
        start.root.push_back(m);
        start.coef.push_back(CycloNum(1));
    }
    std::function<void(Branch, int)> rec = [&](Branch b, int depth) {
        if (depth > d) throw std::runtime_error("splitting depth cap exceeded");
        for (;;) {
            std::vector<int> free;
            for (int m = 0; m < d; ++m)
                if (b.root[m] == m) free.push_back(m);
            if (free.empty()) return;
            int f = int(free.size());
            ExactMatrix R(int(a.size()), f);
            for (size_t k = 0; k < a.size(); ++k)
                for (int m = 0; m < d; ++m)
                    if (b.root[m] >= 0) {
                        int col = int(std::find(free.begin(), free.end(), b.root[m]) - free.begin());
                        R(int(k), col) += a[k][m] * b.coef[m] * b.coef[m];
                    }
            // relation supported on a set of at most two free variables
            auto relation_on = [&](std::vector<int> cols) -> std::vector<CycloNum> {
                std::vector<int> rest;
                for (int j = 0; j < f; ++j)
                    if (std::find(cols.begin(), cols.end(), j) == cols.end()) rest.push_back(j);
                ExactMatrix sub(int(rest.size()), R.rows());
                for (size_t r = 0; r < rest.size(); ++r)
                    for (int k = 0; k < R.rows(); ++k) sub(int(r), k) = R(k, rest[r]);
                std::vector<std::vector<CycloNum>> lams;
                if (rest.empty()) {
                    for (int k = 0; k < R.rows(); ++k) {
                        std::vector<CycloNum> e(R.rows());
                        e[k] = 1;
                        lams.push_back(e);
                    }
                } else {
                    lams = echelonize(sub).kernel;
                }
                for (auto& lam : lams) {
                    std::vector<CycloNum> v;
                    bool nz = false;
                    for (int c : cols) {
                        CycloNum s;
                        for (int k = 0; k < R.rows(); ++k) s += lam[k] * R(k, c);
                        nz = nz || !s.is_zero();
                        v.push_back(s);
                    }
                    if (nz) return v;
                }
                return {};
            };
            bool changed = false;
            for (int j = 0; j < f && !changed; ++j) {
                auto v = relation_on({j});
                if (v.empty()) continue;
                int var = free[j];
                for (int m = 0; m < d; ++m)
                    if (b.root[m] == var) b.root[m] = -1;
                changed = true;
            }
            if (changed) continue;
            for (int j = 0; j < f; ++j)
                for (int l = j + 1; l < f; ++l) {
                    auto v = relation_on({j, l});
                    if (v.empty()) continue;
                    if (v[0].is_zero() || v[1].is_zero()) throw std::logic_error("degenerate two-term relation");
                    // v0 w_j + v1 w_l = 0  ->  u_l = +- sqrt(-v0/v1) u_j
                    auto s = (-v[0] / v[1]).sqrt();
                    if (!s) throw std::runtime_error("two-term relation needs a square root outside Q(zeta8)");
                    int keep = free[j], drop = free[l];
                    for (CycloNum sg : {CycloNum(1), CycloNum(-1)}) {
                        Branch nb = b;
                        for (int m = 0; m < d; ++m)
                            if (nb.root[m] == drop) {
                                nb.root[m] = keep;
                                nb.coef[m] = nb.coef[m] * sg * *s;
                            }
                        rec(nb, depth + 1);
                    }
                    return;
                }
            out.push_back(b);
            return;
        }
    };
    rec(start, 0);
    return out;
}

std::string component_fingerprint(const std::vector<FPoly>& basis, const PrimeField& F)
{
    return fingerprint_of(basis, F);
}

}  // namespace

FixedLocusReport fixed_locus(const MonoTransform& t, int hilbert_cap)
{
    const PrimeField& F = PrimeField::primary();
    MonoOrder o;
    EigenSplit es = eigen_split(t);
    FixedLocusReport rep;
    rep.element = t.str();
    rep.dim_plus = int(es.plus.size());
    rep.dim_minus = int(es.minus.size());
    std::vector<std::pair<int, std::vector<std::vector<CycloNum>>>> spans;  // part, columns
    for (int part : {1, -1}) {
        const auto& B = part > 0 ? es.plus : es.minus;
        int d = int(B.size());
        if (d == 0) continue;
        std::vector<std::vector<CycloNum>> m(8, std::vector<CycloNum>(8));
        for (int r = 0; r < 8; ++r)
            for (int j = 0; j < d; ++j) m[r][j] = B[j][r];
        std::vector<std::vector<CycloNum>> a;
        for (auto& q : variety_quadrics()) {
            XPoly rq = q.linear_change(m);
            std::vector<CycloNum> row(d);
            for (auto& [mono, c] : rq.terms()) {
                int v = -1;
                for (int j = 0; j < d; ++j)
                    if (mono == mono_var(j, 2)) v = j;
                if (v < 0) throw std::runtime_error("restriction to an eigenspace is not diagonal");
                row[v] = c;
            }
            a.push_back(row);
        }
        for (auto& b : split_diagonal(a, d)) {
            std::vector<std::vector<CycloNum>> cols;
            for (int r = 0; r < d; ++r) {
                if (b.root[r] != r) continue;
                std::vector<CycloNum> col(8);
                for (int j = 0; j < d; ++j)
                    if (b.root[j] == r)
                        for (int i = 0; i < 8; ++i) col[i] += b.coef[j] * B[j][i];
                cols.push_back(col);
            }
            if (!cols.empty()) spans.push_back({part, cols});
        }
    }
    // drop branches whose span lies in another branch's span
    std::vector<char> keep(spans.size(), 1);
    for (size_t i = 0; i < spans.size(); ++i)
        for (size_t j = 0; j < spans.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            auto both = spans[j].second;
            both.insert(both.end(), spans[i].second.begin(), spans[i].second.end());
            int rj = subspace_rank(spans[j].second), ri = subspace_rank(spans[i].second);
            if (subspace_rank(both) == rj && (ri < rj || j < i)) keep[i] = 0;
        }
    for (size_t i = 0; i < spans.size(); ++i) {
        if (!keep[i]) continue;
        auto& [part, cols] = spans[i];
        FixedComponent c;
        c.part = part;
        ExactMatrix S(int(cols.size()), 8);
        for (size_t j = 0; j < cols.size(); ++j)
            for (int r = 0; r < 8; ++r) S(int(j), r) = cols[j][r];
        std::vector<FPoly> gens = variety_quadrics_fp(F, o);
        for (auto& l : echelonize(S).kernel) {
            XPoly p;
            for (int r = 0; r < 8; ++r) p += XPoly::term(mono_var(r), l[r]);
            c.linear.push_back(p);
            gens.push_back(to_fp(p, F, o));
        }
        c.basis = groebner(gens, F, o);
        c.cls = hilbert_classify(c.basis, F, hilbert_cap);
        if (c.cls.dim < 0) continue;
        if (c.cls.dim >= 2) throw std::runtime_error("fixed locus of " + t.str() + " has a surface component");
        if (c.cls.dim == 0) {
            if (cols.size() != 1 || c.cls.degree != 1) throw std::logic_error("unsplit zero-dimensional branch");
            c.node = nodes().find(cols[0]);
            c.kind = c.node >= 0 ? "node" : "point";
            c.euler = c.node >= 0 ? 2 : 1;
        } else {
            long long dg = c.cls.degree, g = c.cls.genus;
            c.kind = dg == 1 && g == 0 ? "line" : dg == 2 && g == 0 ? "conic" : dg == 4 && g == 1 ? "elliptic" : "curve";
            c.euler = int(2 - 2 * g);
        }
        c.fingerprint = component_fingerprint(c.basis, F);
        rep.dimension = std::max(rep.dimension, c.cls.dim);
        rep.components.push_back(std::move(c));
    }
    return rep;
}

bool fixed_locus_equivariant(const MonoTransform& t, const MonoTransform& g)
{
    const PrimeField& F = PrimeField::primary();
    MonoOrder o;
    FixedLocusReport a = fixed_locus(t);
    FixedLocusReport b = fixed_locus(g * t * g.inverse());
    FpMonomialMap m = g.inverse().fp_map(F);
    std::multiset<std::string> pushed, direct;
    for (auto& c : a.components) {
        std::vector<FPoly> img;
        for (auto& p : c.basis) img.push_back(fp_apply(p, m, F, o));
        pushed.insert(component_fingerprint(groebner(img, F, o), F));
    }
    for (auto& c : b.components) direct.insert(c.fingerprint);
    return pushed == direct;
}

std::vector<std::vector<XPoly>> published_sigma3_ideals()
{
    auto Y = [](int k) { return XPoly::var(k); };
    auto X = [](int a) { return XPoly::var(4 + a); };
    std::vector<std::vector<XPoly>> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            out.push_back({Y(0) + CycloNum(s1) * Y(1), Y(2) + CycloNum(s2) * Y(3), X(1), X(3),
                           Y(1) * Y(1) - X(0) * X(0) - X(2) * X(2), Y(3) * Y(3) - X(0) * X(0) + X(2) * X(2)});
    return out;
}

std::string ideal_fingerprint(const std::vector<XPoly>& gens)
{
    const PrimeField& F = PrimeField::primary();
    MonoOrder o;
    std::vector<FPoly> f;
    for (auto& g : gens) f.push_back(to_fp(g, F, o));
    return component_fingerprint(groebner(f, F, o), F);
}

Sigma3Reconciliation reconcile_sigma3()
{
    const PrimeField& F = PrimeField::primary();
    MonoOrder o;
    Sigma3Reconciliation r;
    const MonoTransform& s3 = involution_table()[2].transform;
    FixedLocusReport rep = fixed_locus(s3);

    std::set<std::string> published;
    r.published_are_curves = true;
    for (auto& id : published_sigma3_ideals()) {
        auto gens = id;
        for (auto& q : variety_quadrics()) gens.push_back(q);
        std::vector<FPoly> f;
        for (auto& g : gens) f.push_back(to_fp(g, F, o));
        auto gb = groebner(f, F, o);
        CurveClass c = hilbert_classify(gb, F);
        r.published_are_curves = r.published_are_curves && c.dim == 1 && c.degree == 4 && c.genus == 1;
        published.insert(component_fingerprint(gb, F));
    }
    std::set<std::string> computed;
    for (auto& c : rep.components) computed.insert(c.fingerprint);
    r.direct_match = computed == published;

    const auto& G = projective_group();
    for (size_t a = 0; a < G.order() && r.conjugator.empty(); ++a) {
        FpMonomialMap m = G[a].inverse().fp_map(F);
        std::set<std::string> img;
        for (auto& c : rep.components) {
            std::vector<FPoly> p;
            for (auto& b : c.basis) p.push_back(fp_apply(b, m, F, o));
            std::string fp = component_fingerprint(groebner(p, F, o), F);
            if (!published.count(fp)) break;
            img.insert(fp);
        }
        if (img == published) {
            r.conjugator = G[a].str();
            FixedLocusReport conj = fixed_locus(G[a] * s3 * G[a].inverse());
            std::set<std::string> fc;
            for (auto& c : conj.components) fc.insert(c.fingerprint);
            r.conjugate_fixes_published = fc == published;
        }
    }
    return r;
}

}  // namespace scy

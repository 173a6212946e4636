#include "scy/divisor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace scy {

namespace {

int bit(int a, int k) { return (a >> k) & 1; }

std::vector<CycloNum> normalize_vec(const std::vector<CycloNum>& v)
{
    for (auto& x : v)
        if (!x.is_zero()) {
            CycloNum iv = x.inv();
            std::vector<CycloNum> r;
            for (auto& y : v) r.push_back(y * iv);
            return r;
        }
    return v;
}

std::string vec_key(const std::vector<CycloNum>& v)
{
    std::string s;
    for (auto& x : v) s += x.str() + ";";
    return s;
}

// Division remainder by a single polynomial in the lexicographic order of packed monomials.
XPoly reduce_by(XPoly f, const XPoly& q)
{
    auto lt = q.terms().rbegin();
    Mono lm = lt->first;
    CycloNum lc_inv = lt->second.inv();
    XPoly r;
    while (!f.is_zero()) {
        auto top = f.terms().rbegin();
        Mono m = top->first;
        CycloNum c = top->second;
        if (mono_divides(lm, m)) {
            f -= XPoly::term(m - lm, c * lc_inv) * q;
        } else {
            r += XPoly::term(m, c);
            f -= XPoly::term(m, c);
        }
    }
    return r;
}

}  // namespace

std::vector<ExactMatrix> second_order_generators()
{
    std::vector<ExactMatrix> g;
    auto sdiag = [](int s11, int s12, int s22) {
        ExactMatrix m(4, 4);
        for (int a = 0; a < 4; ++a) {
            int a1 = bit(a, 0), a2 = bit(a, 1);
            int v = s11 * a1 * a1 + 2 * s12 * a1 * a2 + s22 * a2 * a2;
            m(a, a) = CycloNum::zeta(2 * v);
        }
        return m;
    };
    auto uperm = [](int u11, int u12, int u21, int u22) {
        ExactMatrix m(4, 4);
        for (int a = 0; a < 4; ++a) {
            int a1 = bit(a, 0), a2 = bit(a, 1);
            int b1 = (u11 * a1 + u12 * a2) % 2, b2 = (u21 * a1 + u22 * a2) % 2;
            m(a, b1 + 2 * b2) = 1;
        }
        return m;
    };
    g.push_back(sdiag(1, 0, 0));
    g.push_back(sdiag(0, 0, 1));
    g.push_back(sdiag(0, 1, 0));
    g.push_back(uperm(1, 1, 0, 1));
    g.push_back(uperm(1, 0, 1, 1));
    ExactMatrix h(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) h(a, b) = (__builtin_popcount(a & b) % 2) ? -1 : 1;
    g.push_back(h);
    return g;
}

std::vector<LinearForm> second_order_orbit()
{
    auto gens = second_order_generators();
    std::vector<std::vector<CycloNum>> orbit{{CycloNum(1), CycloNum(0), CycloNum(0), CycloNum(0)}};
    std::set<std::string> seen{vec_key(orbit[0])};
    for (size_t h = 0; h < orbit.size(); ++h)
        for (auto& g : gens) {
            auto y = normalize_vec(g.apply(orbit[h]));
            if (seen.insert(vec_key(y)).second) orbit.push_back(y);
        }
    std::vector<LinearForm> out;
    for (auto& v : orbit) out.push_back({v[0], v[1], v[2], v[3]});
    std::sort(out.begin(), out.end(), [](const LinearForm& a, const LinearForm& b) {
        for (int k = 3; k >= 0; --k) {
            int za = a[k].is_zero(), zb = b[k].is_zero();
            if (za != zb) return za > zb;
        }
        return vec_key({a[0], a[1], a[2], a[3]}) < vec_key({b[0], b[1], b[2], b[3]});
    });
    return out;
}

XPoly theta_quadric(int a, int b)
{
    XPoly q;
    for (int c = 0; c < 4; ++c) {
        int s = __builtin_popcount(b & c) % 2 ? -1 : 1;
        q += CycloNum(s) * (XPoly::var(4 + c) * XPoly::var(4 + (c ^ a)));
    }
    return q;
}

std::string DivisorForm::name() const
{
    if (kind == Coordinate) return "Y" + std::to_string(index);
    if (kind == Theta) return "theta[a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (lin[k].is_zero()) continue;
        const CycloNum& c = lin[k];
        std::string s;
        if (c == CycloNum(1)) s = first ? "" : "+";
        else if (c == CycloNum(-1)) s = "-";
        else if (c == CycloNum::i()) s = first ? "i*" : "+i*";
        else if (c == -CycloNum::i()) s = "-i*";
        else s = (first ? "(" : "+(") + c.str() + ")*";
        os << s << "X" << k;
        first = false;
    }
    return os.str();
}

std::vector<DivisorForm> divisor_forms()
{
    std::vector<DivisorForm> out;
    for (int k = 0; k < 4; ++k) {
        DivisorForm f{DivisorForm::Coordinate};
        f.index = k;
        f.poly = XPoly::var(k);
        out.push_back(f);
    }
    for (auto& l : second_order_orbit()) {
        DivisorForm f{DivisorForm::Linear};
        f.lin = l;
        f.poly = XPoly::linear({0, 0, 0, 0, l[0], l[1], l[2], l[3]});
        out.push_back(f);
    }
    int idx = 0;
    for (int a = 1; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (__builtin_popcount(a & b) % 2) continue;
            DivisorForm f{DivisorForm::Theta};
            f.index = idx++;
            f.a = a;
            f.b = b;
            f.poly = theta_quadric(a, b);
            f.weight = 2;
            out.push_back(f);
        }
    return out;
}

std::optional<XPoly> poly_sqrt(const XPoly& f)
{
    if (f.is_zero()) return XPoly();
    auto lt = f.terms().rbegin();
    Mono m = lt->first;
    for (int v = 0; v < kVars; ++v)
        if (mono_exp(m, v) % 2) return std::nullopt;
    auto s = lt->second.sqrt();
    if (!s) return std::nullopt;
    Mono half = 0;
    for (int v = 0; v < kVars; ++v) half += mono_var(v, mono_exp(m, v) / 2);
    XPoly P = XPoly::term(half, *s);
    CycloNum two_lc_inv = (CycloNum(2) * *s).inv();
    size_t cap = f.terms().size() * 4 + 64;
    for (size_t it = 0; it < cap; ++it) {
        XPoly R = f - P * P;
        if (R.is_zero()) return P;
        auto top = R.terms().rbegin();
        if (!mono_divides(half, top->first)) return std::nullopt;
        Mono q = top->first - half;
        if (q >= half) return std::nullopt;  // next term must be smaller than the leading one
        P += XPoly::term(q, top->second * two_lc_inv);
    }
    return std::nullopt;
}

std::string fingerprint_of_pieces(const std::vector<FPoly>& polys, const PrimeField& F)
{
    MonoOrder o;
    std::ostringstream os;
    for (int d = 1; d <= 2; ++d) {
        std::vector<Mono> ms = monomials_of_degree(kVars, d);
        std::sort(ms.begin(), ms.end(), [&](Mono a, Mono b) { return o.key(a) > o.key(b); });
        std::map<Mono, int> col;
        for (size_t i = 0; i < ms.size(); ++i) col[ms[i]] = int(i);
        std::vector<FpVec> rows;
        for (auto& p : polys) {
            if (p.zero() || p.degree() != d) continue;
            FpVec r(ms.size(), 0);
            for (auto& t : p.t) r[col.at(t.m)] = t.c;
            rows.push_back(std::move(r));
        }
        FpEchelon e = fp_echelon(F, rows, int(ms.size()));
        os << "d" << d << ":";
        for (auto& r : e.rows) {
            for (size_t j = 0; j < r.size(); ++j)
                if (r[j]) os << j << "=" << r[j] << ",";
            os << ";";
        }
    }
    return os.str();
}

std::string fingerprint_of(const std::vector<FPoly>& gb, const PrimeField& F)
{
    MonoOrder o;
    std::vector<FPoly> pieces = graded_piece(gb, 1, F, o);
    auto p2 = graded_piece(gb, 2, F, o);
    pieces.insert(pieces.end(), p2.begin(), p2.end());
    return fingerprint_of_pieces(pieces, F);
}

SplitResult split_divisor(const DivisorForm& f, int form_index, const PrimeField& F)
{
    MonoOrder o;
    SplitResult res;
    std::vector<FPoly> base = variety_quadrics_fp(F, o);
    base.push_back(to_fp(f.poly, F, o));
    std::vector<XPoly> cuts;  // pairs of generators for the two components
    if (f.kind == DivisorForm::Linear) {
        int v = 0;
        while (f.lin[v].is_zero()) ++v;
        XPoly sub;
        CycloNum iv = -f.lin[v].inv();
        for (int a = 0; a < 4; ++a)
            if (a != v && !f.lin[a].is_zero()) sub += XPoly::term(mono_var(4 + a), iv * f.lin[a]);
        std::vector<XPoly> D;
        for (int k = 0; k < 4; ++k) D.push_back(quadric_rhs(k).substitute(4 + v, sub));
        std::optional<XPoly> root;
        int tmask = 0;
        for (int T = 1; T < 16; ++T) {
            XPoly prod(CycloNum(1));
            for (int k = 0; k < 4; ++k)
                if (T >> k & 1) prod = prod * D[k];
            if (auto s = poly_sqrt(prod)) {
                res.square_subsets.push_back(T);
                if (!root) {
                    root = s;
                    tmask = T;
                }
            }
        }
        if (res.square_subsets.size() > 1) throw std::runtime_error("divisor splits into more than two parts: " + f.name());
        if (root) {
            XPoly ys(CycloNum(1));
            for (int k = 0; k < 4; ++k)
                if (tmask >> k & 1) ys = ys * XPoly::var(k);
            cuts = {ys - *root, ys + *root};
        }
    } else if (f.kind == DivisorForm::Theta) {
        const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (auto& pr : pairs) {
            XPoly A = reduce_by(quadric_rhs(pr[0]) * quadric_rhs(pr[1]), f.poly);
            XPoly B = reduce_by(quadric_rhs(pr[2]) * quadric_rhs(pr[3]), f.poly);
            if (B.is_zero() || A.is_zero()) continue;
            CycloNum c = A.terms().rbegin()->second / B.terms().rbegin()->second;
            if (!(A == c * B)) continue;
            auto s = c.sqrt();
            if (!s) continue;
            res.square_subsets.push_back(15);
            if (cuts.empty()) {
                // Y_i Y_j = +- sqrt(c) Y_k Y_l on the divisor
                XPoly yy = XPoly::var(pr[0]) * XPoly::var(pr[1]);
                XPoly zz = *s * (XPoly::var(pr[2]) * XPoly::var(pr[3]));
                cuts = {yy - zz, yy + zz};
            }
        }
    }
    auto finish = [&](std::vector<FPoly> gb, std::vector<XPoly> cut) {
        DivisorComponent c;
        c.form = form_index;
        c.cut = std::move(cut);
        c.basis = std::move(gb);
        std::vector<Mono> lms;
        for (auto& g : c.basis) lms.push_back(g.lead().m);
        HilbertData h = hilbert_from_lms(lms);
        if (h.dim != 2) throw std::runtime_error("component of " + f.name() + " is not a surface");
        c.degree = h.degree;
        c.fingerprint = fingerprint_of(c.basis, F);
        res.components.push_back(std::move(c));
    };
    if (cuts.empty()) {
        finish(groebner(base, F, o), {});
    } else {
        for (auto& g : cuts) {
            auto gens = base;
            gens.push_back(to_fp(g, F, o));
            finish(saturate(gens, {0, 1, 2, 3}, F, o), {g});
        }
    }
    return res;
}

int DivisorData::sibling(int c) const
{
    for (int d : comps_of_form[comps[c].form])
        if (d != c) return d;
    return -1;
}

const DivisorData& divisor_data()
{
    static const DivisorData data = [] {
        DivisorData d;
        const PrimeField& F = PrimeField::primary();
        d.forms = divisor_forms();
        d.comps_of_form.resize(d.forms.size());
        for (size_t i = 0; i < d.forms.size(); ++i) {
            SplitResult r = split_divisor(d.forms[i], int(i), F);
            for (auto& c : r.components) {
                if (!d.by_fingerprint.emplace(c.fingerprint, int(d.comps.size())).second)
                    throw std::runtime_error("fingerprint collision");
                d.comps_of_form[i].push_back(int(d.comps.size()));
                d.comps.push_back(std::move(c));
            }
        }
        return d;
    }();
    return data;
}

std::vector<FPoly> pushed_ideal(const DivisorComponent& c, const MonoTransform& g, const PrimeField& F)
{
    MonoOrder o;
    FpMonomialMap m = g.inverse().fp_map(F);
    std::vector<FPoly> out;
    for (auto& p : c.basis) out.push_back(fp_apply(p, m, F, o));
    return out;
}

std::string pushed_fingerprint(const DivisorComponent& c, const MonoTransform& g, const PrimeField& F)
{
    MonoOrder o;
    std::vector<FPoly> pieces = graded_piece(c.basis, 1, F, o);
    auto p2 = graded_piece(c.basis, 2, F, o);
    pieces.insert(pieces.end(), p2.begin(), p2.end());
    FpMonomialMap m = g.inverse().fp_map(F);
    for (auto& p : pieces) p = fp_apply(p, m, F, o);
    return fingerprint_of_pieces(pieces, F);
}

std::vector<int> component_action(const MonoTransform& g)
{
    const DivisorData& d = divisor_data();
    const PrimeField& F = PrimeField::primary();
    std::vector<int> perm(d.comps.size(), -1);
    for (size_t i = 0; i < d.comps.size(); ++i) {
        auto it = d.by_fingerprint.find(pushed_fingerprint(d.comps[i], g, F));
        if (it != d.by_fingerprint.end()) perm[i] = it->second;
    }
    return perm;
}

}  // namespace scy

namespace scy {

std::vector<int> split_linear_forms()
{
    const DivisorData& d = divisor_data();
    std::vector<int> out;
    for (size_t i = 0; i < d.forms.size(); ++i)
        if (d.forms[i].kind == DivisorForm::Linear && d.comps_of_form[i].size() == 2) out.push_back(int(i));
    return out;
}

std::vector<int> form_orbit_sizes(const std::vector<MonoTransform>& gens, const std::vector<int>& forms)
{
    const DivisorData& d = divisor_data();
    std::vector<std::vector<int>> fperm;
    for (auto& g : gens) {
        auto cp = component_action(g);
        std::vector<int> p(d.forms.size());
        for (size_t f = 0; f < d.forms.size(); ++f) {
            int img = cp[d.comps_of_form[f][0]];
            if (img < 0) throw std::runtime_error("component image not found for " + g.str());
            p[f] = d.comps[img].form;
        }
        fperm.push_back(std::move(p));
    }
    std::set<int> pending(forms.begin(), forms.end());
    std::vector<int> sizes;
    while (!pending.empty()) {
        std::set<int> orbit{*pending.begin()};
        std::vector<int> stack{*pending.begin()};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto& p : fperm)
                if (orbit.insert(p[f]).second) stack.push_back(p[f]);
        }
        for (int f : orbit) {
            if (!pending.count(f)) throw std::runtime_error("form set is not stable under the group");
            pending.erase(f);
        }
        sizes.push_back(int(orbit.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace scy

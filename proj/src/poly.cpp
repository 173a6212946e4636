#include "scy/poly.hpp"

#include <algorithm>
#include <sstream>

namespace scy {

std::vector<Mono> monomials_of_degree(int nvars, int d)
{
    std::vector<Mono> out;
    std::array<int, kVars> e{};
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1) {
            e[v] = left;
            Mono m = 0;
            for (int k = 0; k < nvars; ++k) m |= mono_var(k, e[k]);
            out.push_back(m);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[v] = a;
            self(self, v + 1, left - a);
        }
    };
    if (nvars > 0) rec(rec, 0, d);
    return out;
}

std::string mono_str(Mono m)
{
    static const char* names[kVars] = {"Y0", "Y1", "Y2", "Y3", "X0", "X1", "X2", "X3"};
    std::string s;
    for (int v = 0; v < kVars; ++v) {
        int e = mono_exp(m, v);
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

XPoly XPoly::linear(const std::array<CycloNum, kVars>& coeffs)
{
    XPoly p;
    for (int v = 0; v < kVars; ++v)
        if (!coeffs[v].is_zero()) p.t_[mono_var(v)] = coeffs[v];
    return p;
}

int XPoly::degree() const
{
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_deg(m));
    return d;
}

bool XPoly::homogeneous() const
{
    int d = -1;
    for (auto& [m, c] : t_) {
        if (d >= 0 && mono_deg(m) != d) return false;
        d = mono_deg(m);
    }
    return true;
}

CycloNum XPoly::coeff(Mono m) const
{
    auto it = t_.find(m);
    return it == t_.end() ? CycloNum(0) : it->second;
}

XPoly& XPoly::operator+=(const XPoly& o)
{
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end())
            t_[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o)
{
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end())
            t_[m] = -c;
        else {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b)
{
    XPoly r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r += XPoly::term(ma + mb, ca * cb);
    return r;
}

XPoly operator*(const CycloNum& c, const XPoly& b)
{
    XPoly r;
    if (c.is_zero()) return r;
    for (auto& [m, x] : b.t_) r.t_[m] = c * x;
    return r;
}

XPoly XPoly::pow(int e) const
{
    XPoly r(CycloNum(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

CycloNum XPoly::eval(const std::vector<CycloNum>& x) const
{
    CycloNum s;
    for (auto& [m, c] : t_) {
        CycloNum v = c;
        for (int k = 0; k < kVars; ++k) {
            int e = mono_exp(m, k);
            if (e) v *= x[k].pow(e);
        }
        s += v;
    }
    return s;
}

XPoly XPoly::substitute(int v, const XPoly& s) const
{
    XPoly r;
    std::vector<XPoly> powers{XPoly(CycloNum(1))};
    for (auto& [m, c] : t_) {
        int e = mono_exp(m, v);
        while (int(powers.size()) <= e) powers.push_back(powers.back() * s);
        Mono rest = m - mono_var(v, e);
        r += c * (XPoly::term(rest, 1) * powers[e]);
    }
    return r;
}

XPoly XPoly::linear_change(const std::vector<std::vector<CycloNum>>& mat) const
{
    std::array<XPoly, kVars> img;
    for (int i = 0; i < kVars; ++i) {
        std::array<CycloNum, kVars> row{};
        for (int j = 0; j < kVars; ++j) row[j] = mat[i][j];
        img[i] = XPoly::linear(row);
    }
    XPoly r;
    for (auto& [m, c] : t_) {
        XPoly t(c);
        for (int k = 0; k < kVars; ++k)
            for (int e = 0; e < mono_exp(m, k); ++e) t = t * img[k];
        r += t;
    }
    return r;
}

std::string XPoly::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")*" << mono_str(it->first);
    }
    return os.str();
}

MonoOrder MonoOrder::with_last(int v)
{
    MonoOrder o;
    int k = 0;
    for (int u = 0; u < kVars; ++u)
        if (u != v) o.var_order[k++] = u;
    o.var_order[kVars - 1] = v;
    return o;
}

int FPoly::degree() const
{
    int d = -1;
    for (auto& x : t) d = std::max(d, mono_deg(x.m));
    return d;
}

namespace {
void sort_terms(std::vector<FTerm>& v)
{
    std::sort(v.begin(), v.end(), [](const FTerm& a, const FTerm& b) { return a.key > b.key; });
}
}  // namespace

FPoly fp_from_terms(std::vector<std::pair<Mono, uint32_t>> terms, const PrimeField& F, const MonoOrder& o)
{
    std::map<Mono, uint32_t> acc;
    for (auto& [m, c] : terms) acc[m] = F.add(acc[m], c);
    FPoly p;
    for (auto& [m, c] : acc)
        if (c) p.t.push_back({o.key(m), m, c});
    sort_terms(p.t);
    return p;
}

FPoly to_fp(const XPoly& x, const PrimeField& F, const MonoOrder& o)
{
    std::vector<std::pair<Mono, uint32_t>> terms;
    for (auto& [m, c] : x.terms()) terms.push_back({m, c.mod(F.p(), F.zeta())});
    return fp_from_terms(std::move(terms), F, o);
}

FPoly fp_reorder(const FPoly& p, const MonoOrder& o)
{
    FPoly r = p;
    for (auto& x : r.t) x.key = o.key(x.m);
    sort_terms(r.t);
    return r;
}

FPoly fp_mul_term(const FPoly& p, Mono m, uint32_t c, const PrimeField& F, const MonoOrder& o)
{
    FPoly r;
    r.t.reserve(p.t.size());
    for (auto& x : p.t) r.t.push_back({o.key(x.m + m), x.m + m, F.mul(x.c, c)});
    return r;  // degrevlex is a monomial order, so sortedness is preserved
}

FPoly fp_add(const FPoly& a, const FPoly& b, const PrimeField& F)
{
    FPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].key > b.t[j].key))
            r.t.push_back(a.t[i++]);
        else if (i == a.t.size() || b.t[j].key > a.t[i].key)
            r.t.push_back(b.t[j++]);
        else {
            uint32_t c = F.add(a.t[i].c, b.t[j].c);
            if (c) r.t.push_back({a.t[i].key, a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

FPoly fp_mul(const FPoly& a, const FPoly& b, const PrimeField& F, const MonoOrder& o)
{
    std::vector<std::pair<Mono, uint32_t>> terms;
    for (auto& x : a.t)
        for (auto& y : b.t) terms.push_back({x.m + y.m, F.mul(x.c, y.c)});
    return fp_from_terms(std::move(terms), F, o);
}

FPoly fp_monic(const FPoly& p, const PrimeField& F)
{
    if (p.zero()) return p;
    uint32_t iv = F.inv(p.lead().c);
    FPoly r = p;
    for (auto& x : r.t) x.c = F.mul(x.c, iv);
    return r;
}

uint32_t fp_eval(const FPoly& p, const std::array<uint32_t, kVars>& x, const PrimeField& F)
{
    uint32_t s = 0;
    for (auto& t : p.t) {
        uint32_t v = t.c;
        for (int k = 0; k < kVars; ++k) {
            int e = mono_exp(t.m, k);
            if (e) v = F.mul(v, F.pow(x[k], e));
        }
        s = F.add(s, v);
    }
    return s;
}

FPoly fp_apply(const FPoly& p, const FpMonomialMap& g, const PrimeField& F, const MonoOrder& o)
{
    std::vector<std::pair<Mono, uint32_t>> terms;
    for (auto& t : p.t) {
        Mono m = 0;
        uint32_t c = t.c;
        for (int k = 0; k < kVars; ++k) {
            int e = mono_exp(t.m, k);
            if (!e) continue;
            m += mono_var(g.perm[k], e);
            c = F.mul(c, F.pow(g.scale[k], e));
        }
        terms.push_back({m, c});
    }
    return fp_from_terms(std::move(terms), F, o);
}

}  // namespace scy

namespace scy {

std::string XPoly::pretty() const
{
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto& [m, c] = *it;
        std::string mono;
        for (int v = 0; v < kVars; ++v) {
            int e = mono_exp(m, v);
            if (!e) continue;
            mono += (mono.empty() ? "" : "*") + std::string(v < 4 ? "Y" : "X") + std::to_string(v % 4) +
                    (e > 1 ? "^" + std::to_string(e) : "");
        }
        std::string coef = c.pretty(), term;
        if (mono.empty()) term = coef;
        else if (coef == "1") term = mono;
        else if (coef == "-1") term = "-" + mono;
        else term = coef + "*" + mono;
        if (s.empty()) s = term;
        else if (term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace scy

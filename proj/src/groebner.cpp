#include "scy/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace scy {

FPoly normal_form(const FPoly& f, const std::vector<FPoly>& G, const PrimeField& F, const MonoOrder& o)
{
    (void)o;
    std::map<uint64_t, std::pair<Mono, uint32_t>, std::greater<uint64_t>> acc;
    for (auto& t : f.t) acc[t.key] = {t.m, t.c};
    FPoly r;
    while (!acc.empty()) {
        auto it = acc.begin();
        Mono m = it->second.first;
        uint32_t c = it->second.second;
        acc.erase(it);
        const FPoly* div = nullptr;
        for (auto& g : G)
            if (mono_divides(g.lead().m, m)) { div = &g; break; }
        if (!div) {
            r.t.push_back({o.key(m), m, c});
            continue;
        }
        Mono q = m - div->lead().m;
        uint32_t s = F.mul(F.neg(c), F.inv(div->lead().c));
        for (size_t k = 1; k < div->t.size(); ++k) {
            Mono mm = div->t[k].m + q;
            uint64_t key = o.key(mm);
            uint32_t add = F.mul(s, div->t[k].c);
            auto jt = acc.find(key);
            if (jt == acc.end())
                acc.emplace(key, std::make_pair(mm, add));
            else {
                jt->second.second = F.add(jt->second.second, add);
                if (jt->second.second == 0) acc.erase(jt);
            }
        }
    }
    return r;
}

namespace {

FPoly spoly(const FPoly& a, const FPoly& b, const PrimeField& F, const MonoOrder& o)
{
    Mono l = mono_lcm(a.lead().m, b.lead().m);
    FPoly x = fp_mul_term(a, l - a.lead().m, F.inv(a.lead().c), F, o);
    FPoly y = fp_mul_term(b, l - b.lead().m, F.neg(F.inv(b.lead().c)), F, o);
    return fp_add(x, y, F);
}

}  // namespace

std::vector<FPoly> groebner(std::vector<FPoly> gens, const PrimeField& F, const MonoOrder& o)
{
    std::vector<FPoly> G;
    std::vector<std::vector<char>> pending;
    struct Pair {
        int i, j;
        int deg;
        uint64_t key;
    };
    std::vector<Pair> pairs;

    auto add_poly = [&](FPoly h) {
        h = fp_monic(h, F);
        int n = int(G.size());
        G.push_back(std::move(h));
        for (auto& row : pending) row.push_back(0);
        pending.emplace_back(n + 1, 0);
        for (int k = 0; k < n; ++k) {
            Mono l = mono_lcm(G[k].lead().m, G[n].lead().m);
            pairs.push_back({k, n, mono_deg(l), o.key(l)});
            pending[k][n] = pending[n][k] = 1;
        }
    };

    for (auto& g : gens) {
        if (g.zero()) continue;
        for (auto& t : g.t) t.key = o.key(t.m);
        std::sort(g.t.begin(), g.t.end(), [](const FTerm& a, const FTerm& b) { return a.key > b.key; });
        FPoly h = normal_form(g, G, F, o);
        if (!h.zero()) add_poly(std::move(h));
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].deg < pairs[best].deg ||
                (pairs[k].deg == pairs[best].deg && pairs[k].key < pairs[best].key))
                best = k;
        Pair pr = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        pending[pr.i][pr.j] = pending[pr.j][pr.i] = 0;
        Mono li = G[pr.i].lead().m, lj = G[pr.j].lead().m;
        if (mono_coprime(li, lj)) continue;
        Mono l = mono_lcm(li, lj);
        bool chain = false;
        for (int k = 0; k < int(G.size()) && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (mono_divides(G[k].lead().m, l) && !pending[pr.i][k] && !pending[pr.j][k]) chain = true;
        }
        if (chain) continue;
        FPoly h = normal_form(spoly(G[pr.i], G[pr.j], F, o), G, F, o);
        if (!h.zero()) add_poly(std::move(h));
    }

    // minimal basis
    std::vector<FPoly> M;
    for (size_t a = 0; a < G.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b) continue;
            Mono la = G[a].lead().m, lb = G[b].lead().m;
            if (mono_divides(lb, la) && (la != lb || b < a)) redundant = true;
        }
        if (!redundant) M.push_back(G[a]);
    }
    // interreduce tails
    for (size_t a = 0; a < M.size(); ++a) {
        std::vector<FPoly> others;
        for (size_t b = 0; b < M.size(); ++b)
            if (b != a) others.push_back(M[b]);
        FPoly tail;
        tail.t.assign(M[a].t.begin() + 1, M[a].t.end());
        FPoly red = normal_form(tail, others, F, o);
        FPoly out;
        out.t.push_back(M[a].lead());
        out.t.insert(out.t.end(), red.t.begin(), red.t.end());
        M[a] = fp_monic(out, F);
    }
    std::sort(M.begin(), M.end(), [](const FPoly& a, const FPoly& b) { return a.lead().key < b.lead().key; });
    return M;
}

std::vector<FPoly> saturate(std::vector<FPoly> gens, const std::vector<int>& vars, const PrimeField& F,
                            const MonoOrder& o)
{
    for (int v : vars) {
        MonoOrder ov = MonoOrder::with_last(v);
        for (auto& g : gens) g = fp_reorder(g, ov);
        std::vector<FPoly> G = groebner(gens, F, ov);
        gens.clear();
        for (auto& g : G) {
            int e = 127;
            for (auto& t : g.t) e = std::min(e, mono_exp(t.m, v));
            FPoly h = g;
            for (auto& t : h.t) t.m -= mono_var(v, e);
            gens.push_back(h);
        }
    }
    for (auto& g : gens) g = fp_reorder(g, o);
    return groebner(gens, F, o);
}

namespace {

using TPoly = std::vector<long long>;

void tpoly_add(TPoly& a, const TPoly& b, int shift)
{
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
}

std::vector<Mono> minimalize(std::vector<Mono> g)
{
    std::sort(g.begin(), g.end(), [](Mono a, Mono b) { return mono_deg(a) < mono_deg(b); });
    std::vector<Mono> out;
    for (Mono m : g) {
        bool red = false;
        for (Mono k : out)
            if (mono_divides(k, m)) { red = true; break; }
        if (!red) out.push_back(m);
    }
    return out;
}

TPoly hn_rec(std::vector<Mono> g)
{
    g = minimalize(std::move(g));
    if (g.empty()) return {1};
    bool coprime = true;
    for (size_t a = 0; a < g.size() && coprime; ++a)
        for (size_t b = a + 1; b < g.size() && coprime; ++b)
            if (!mono_coprime(g[a], g[b])) coprime = false;
    if (coprime) {
        TPoly r{1};
        for (Mono m : g) {
            TPoly f(mono_deg(m) + 1, 0);
            f[0] = 1;
            f[mono_deg(m)] -= 1;
            TPoly s(r.size() + f.size() - 1, 0);
            for (size_t i = 0; i < r.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) s[i + j] += r[i] * f[j];
            r = s;
        }
        return r;
    }
    int count[kVars] = {0};
    auto pure = [](Mono m) {
        int nz = 0;
        for (int v = 0; v < kVars; ++v) nz += mono_exp(m, v) > 0;
        return nz <= 1;
    };
    for (Mono m : g)
        if (!pure(m))
            for (int v = 0; v < kVars; ++v) count[v] += mono_exp(m, v) > 0;
    int x = int(std::max_element(count, count + kVars) - count);
    std::vector<int> ex;
    for (Mono m : g)
        if (!pure(m) && mono_exp(m, x) > 0) ex.push_back(mono_exp(m, x));
    std::sort(ex.begin(), ex.end());
    int e = ex[ex.size() / 2];
    Mono p = mono_var(x, e);
    std::vector<Mono> plus = g;
    plus.push_back(p);
    std::vector<Mono> colon;
    for (Mono m : g) {
        int k = std::min(mono_exp(m, x), e);
        colon.push_back(m - mono_var(x, k));
    }
    TPoly r = hn_rec(std::move(plus));
    tpoly_add(r, hn_rec(std::move(colon)), e);
    return r;
}

// Binomial C(a, b) for integer a (possibly negative) as a polynomial value.
long long binom_poly(long long a, int b)
{
    // a(a-1)...(a-b+1)/b!
    __int128 num = 1, den = 1;
    for (int k = 0; k < b; ++k) {
        num *= (a - k);
        den *= (k + 1);
    }
    return (long long)(num / den);
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Mono> lms, int nvars)
{
    (void)nvars;
    TPoly r = hn_rec(std::move(lms));
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

long long HilbertData::value(int d) const
{
    long long s = 0;
    for (size_t j = 0; j < numerator.size(); ++j) {
        long long a = d - (long long)j;
        if (a < 0) continue;
        s += numerator[j] * binom_poly(a + nvars - 1, nvars - 1);
    }
    return s;
}

HilbertData hilbert_from_lms(const std::vector<Mono>& lms, int nvars)
{
    HilbertData h;
    h.nvars = nvars;
    h.numerator = hilbert_numerator(lms, nvars);
    TPoly n = h.numerator;
    bool allzero = std::all_of(n.begin(), n.end(), [](long long c) { return c == 0; });
    if (allzero) return h;
    int k = nvars;
    while (k > 0) {
        long long s = 0;
        for (auto c : n) s += c;
        if (s != 0) break;
        // divide by (1 - t)
        TPoly q(n.size() - 1, 0);
        long long acc = 0;
        for (size_t j = 0; j + 1 < n.size(); ++j) {
            acc += n[j];
            q[j] = acc;
        }
        n = q;
        --k;
    }
    h.dim = k - 1;
    if (k == 0) {
        h.dim = -1;
        return h;
    }
    long long s = 0;
    for (auto c : n) s += c;
    h.degree = s;
    long long c0 = 0;
    for (size_t j = 0; j < n.size(); ++j) c0 += n[j] * binom_poly((long long)k - 1 - (long long)j, k - 1);
    h.constant = c0;
    return h;
}

HilbertData hilbert_of(const std::vector<FPoly>& gens, const PrimeField& F)
{
    MonoOrder o;
    std::vector<FPoly> G = groebner(gens, F, o);
    std::vector<Mono> lms;
    for (auto& g : G) lms.push_back(g.lead().m);
    return hilbert_from_lms(lms);
}

std::vector<FPoly> graded_piece(const std::vector<FPoly>& G, int d, const PrimeField& F, const MonoOrder& o)
{
    std::vector<Mono> ms = monomials_of_degree(kVars, d);
    std::sort(ms.begin(), ms.end(), [&](Mono a, Mono b) { return o.key(a) > o.key(b); });
    std::vector<FPoly> out;
    for (Mono m : ms) {
        bool in = false;
        for (auto& g : G)
            if (mono_divides(g.lead().m, m)) { in = true; break; }
        if (!in) continue;
        FPoly x;
        x.t.push_back({o.key(m), m, 1});
        FPoly nf = normal_form(x, G, F, o);
        FPoly r;
        r.t.push_back({o.key(m), m, 1});
        for (auto& t : nf.t) r.t.push_back({t.key, t.m, F.neg(t.c)});
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace scy

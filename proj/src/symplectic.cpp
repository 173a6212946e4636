#include "scy/symplectic.hpp"

#include "scy/variety.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scy {

namespace {

int md(long long v, int n) { return int(((v % n) + n) % n); }

// 4x4 integer matrix helpers (row-major)
std::array<int, 16> mul4(const std::array<int, 16>& x, const std::array<int, 16>& y)
{
    std::array<int, 16> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += x[4 * i + k] * y[4 * k + j];
            r[4 * i + j] = s;
        }
    return r;
}

// 2x2 block (r, c) in {0,1} as a flat array
std::array<int, 4> block(const std::array<int, 16>& m, int r, int c)
{
    return {m[4 * (2 * r) + 2 * c], m[4 * (2 * r) + 2 * c + 1], m[4 * (2 * r + 1) + 2 * c],
            m[4 * (2 * r + 1) + 2 * c + 1]};
}

std::array<int, 4> mul_abt(const std::array<int, 4>& x, const std::array<int, 4>& y)  // x * y^t
{
    return {x[0] * y[0] + x[1] * y[1], x[0] * y[2] + x[1] * y[3], x[2] * y[0] + x[3] * y[1],
            x[2] * y[2] + x[3] * y[3]};
}

std::array<int, 16> assemble(const std::array<int, 4>& A, const std::array<int, 4>& B, const std::array<int, 4>& C,
                             const std::array<int, 4>& D)
{
    return {A[0], A[1], B[0], B[1], A[2], A[3], B[2], B[3], C[0], C[1], D[0], D[1], C[2], C[3], D[2], D[3]};
}

const int kMaxLift = 1 << 24;

std::optional<IntMat4> lift_product(const std::optional<IntMat4>& x, const std::optional<IntMat4>& y)
{
    if (!x || !y) return std::nullopt;
    IntMat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long s = 0;
            for (int k = 0; k < 4; ++k) s += (*x)[4 * i + k] * (*y)[4 * k + j];
            if (std::llabs(s) > kMaxLift) return std::nullopt;
            r[4 * i + j] = s;
        }
    return r;
}

}  // namespace

SpElement SpElement::from_ints(const std::array<long long, 16>& v, bool fricke)
{
    SpElement e;
    for (int k = 0; k < 16; ++k) e.m[k] = md(v[k], 16);
    e.fricke = fricke;
    e.reduce();
    if (!e.symplectic_mod8()) throw std::invalid_argument("matrix is not symplectic mod 8");
    return e;
}

SpElement SpElement::from_lift(const IntMat4& v)
{
    SpElement e = from_ints(v, false);
    e.lift = v;
    return e;
}

SpElement SpElement::fricke_involution()
{
    SpElement e;
    e.fricke = 1;
    return e;
}

void SpElement::reduce()
{
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            int mod = (r >= 2 && c < 2) ? 16 : 8;
            m[4 * r + c] = md(m[4 * r + c], mod);
        }
}

bool SpElement::symplectic_mod8() const
{
    // M^t J M = J with J = (0 E; -E 0)
    static const std::array<int, 16> J{0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0};
    std::array<int, 16> t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[4 * i + j] = m[4 * j + i];
    auto r = mul4(mul4(t, J), m);
    for (int k = 0; k < 16; ++k)
        if (md(r[k] - J[k], 8)) return false;
    return true;
}

bool SpElement::c_even() const { return m[8] % 2 == 0 && m[9] % 2 == 0 && m[12] % 2 == 0 && m[13] % 2 == 0; }

SpElement fricke_conjugate(const SpElement& x)
{
    auto A = block(x.m, 0, 0), B = block(x.m, 0, 1), C = block(x.m, 1, 0), D = block(x.m, 1, 1);
    if (!x.c_even()) throw std::invalid_argument("Fricke conjugation needs C = 0 mod 2");
    std::array<int, 4> nC, nB;
    for (int k = 0; k < 4; ++k) {
        nB[k] = -C[k] / 2;
        nC[k] = -2 * B[k];
    }
    SpElement r;
    r.m = assemble(D, nB, nC, A);
    r.reduce();
    return r;
}

SpElement operator*(const SpElement& x, const SpElement& y)
{
    SpElement r;
    if (!x.fricke) {
        r.m = mul4(x.m, y.m);
        r.fricke = y.fricke;
        if (!y.fricke) r.lift = lift_product(x.lift, y.lift);
    } else {
        SpElement yf = y;
        yf.fricke = 0;
        r.m = mul4(x.m, fricke_conjugate(yf).m);
        if (y.fricke) {
            for (auto& v : r.m) v = -v;
            r.fricke = 0;
        } else {
            r.fricke = 1;
        }
    }
    r.reduce();
    return r;
}

bool operator==(const SpElement& x, const SpElement& y) { return x.m == y.m && x.fricke == y.fricke; }

SpElement SpElement::inverse() const
{
    auto A = block(m, 0, 0), B = block(m, 0, 1), C = block(m, 1, 0), D = block(m, 1, 1);
    auto tr = [](std::array<int, 4> x) { return std::array<int, 4>{x[0], x[2], x[1], x[3]}; };
    auto neg = [](std::array<int, 4> x) {
        for (auto& v : x) v = -v;
        return x;
    };
    SpElement r;
    r.m = assemble(tr(D), neg(tr(B)), neg(tr(C)), tr(A));
    r.reduce();
    if (lift && !fricke) {
        IntMat4 L = *lift, R{};
        auto at = [&](int i, int j) { return L[4 * i + j]; };
        // (D^t, -B^t; -C^t, A^t)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                R[4 * i + j] = at(2 + j, 2 + i);
                R[4 * i + 2 + j] = -at(j, 2 + i);
                R[4 * (2 + i) + j] = -at(2 + j, i);
                R[4 * (2 + i) + 2 + j] = at(j, i);
            }
        r.lift = R;
    }
    if (fricke) {
        // (M J)^-1 = -J M^-1 = -(J M^-1 J^-1) J
        SpElement c = fricke_conjugate(r);
        for (auto& v : c.m) v = -v;
        c.reduce();
        c.fricke = 1;
        return c;
    }
    return r;
}

std::string SpElement::key() const
{
    std::string s(17, '\0');
    for (int k = 0; k < 16; ++k) s[k] = char(m[k]);
    s[16] = char(fricke);
    return s;
}

std::string SpElement::str() const
{
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < 4; ++c) os << (c ? " " : "") << md(m[4 * r + c], (r >= 2 && c < 2) ? 8 : 8);
    }
    os << "]" << (fricke ? "*J" : "");
    return os.str();
}

GroupName parse_group_name(const std::string& s)
{
    for (auto g : all_group_names())
        if (group_name_str(g) == s) return g;
    throw std::invalid_argument("unknown group name: " + s);
}

std::string group_name_str(GroupName g)
{
    switch (g) {
    case GroupName::Gamma2_2: return "Gamma2[2]";
    case GroupName::Gamma2_4: return "Gamma2[4]";
    case GroupName::Gamma2_8: return "Gamma2[8]";
    case GroupName::Gamma2_2_4: return "Gamma2[2,4]";
    case GroupName::Gamma20_2: return "Gamma20[2]";
    case GroupName::Gamma20_4: return "Gamma20[4]";
    case GroupName::Gamma20theta_4: return "Gamma20theta[4]";
    case GroupName::Gamma20_2n: return "Gamma20[2]n";
    case GroupName::HatGamma20_2: return "HatGamma20[2]";
    case GroupName::HatGamma20_2n: return "HatGamma20[2]n";
    case GroupName::GammaPrime: return "GammaPrime";
    case GroupName::GammaPrimeIntro: return "GammaPrimeIntro";
    }
    return "?";
}

const std::vector<GroupName>& all_group_names()
{
    static const std::vector<GroupName> v{GroupName::Gamma2_2,      GroupName::Gamma2_4,       GroupName::Gamma2_8,
                                          GroupName::Gamma2_2_4,    GroupName::Gamma20_2,      GroupName::Gamma20_4,
                                          GroupName::Gamma20theta_4, GroupName::Gamma20_2n,    GroupName::HatGamma20_2,
                                          GroupName::HatGamma20_2n, GroupName::GammaPrime,     GroupName::GammaPrimeIntro};
    return v;
}

namespace {

bool congruent_identity(const SpElement& e, int l)
{
    for (int k = 0; k < 16; ++k)
        if (md(e.m[k] - (k % 5 == 0 ? 1 : 0), l)) return false;
    return true;
}

bool c_zero(const SpElement& e, int l)
{
    for (int k : {8, 9, 12, 13})
        if (md(e.m[k], l)) return false;
    return true;
}

bool diag_zero(const std::array<int, 4>& s, int l) { return md(s[0], l) == 0 && md(s[3], l) == 0; }

bool gamma2_2_4(const SpElement& e)
{
    if (!congruent_identity(e, 2)) return false;
    auto A = block(e.m, 0, 0), B = block(e.m, 0, 1), C = block(e.m, 1, 0), D = block(e.m, 1, 1);
    return diag_zero(mul_abt(A, B), 4) && diag_zero(mul_abt(C, D), 4);
}

bool det_d_pm1(const SpElement& e)
{
    auto D = block(e.m, 1, 1);
    int d = md(D[0] * D[3] - D[1] * D[2], 8);
    return d == 1 || d == 7;
}

}  // namespace

bool member(const SpElement& e, GroupName g)
{
    if (g == GroupName::HatGamma20_2) return e.c_even();
    if (g == GroupName::HatGamma20_2n) return e.c_even() && chi_n(e) == 0;
    if (e.fricke) return false;
    auto C = block(e.m, 1, 0), D = block(e.m, 1, 1);
    switch (g) {
    case GroupName::Gamma2_2: return congruent_identity(e, 2);
    case GroupName::Gamma2_4: return congruent_identity(e, 4);
    case GroupName::Gamma2_8: return congruent_identity(e, 8);
    case GroupName::Gamma2_2_4: return gamma2_2_4(e);
    case GroupName::Gamma20_2: return c_zero(e, 2);
    case GroupName::Gamma20_4: return c_zero(e, 4);
    case GroupName::Gamma20theta_4: return c_zero(e, 4) && diag_zero(mul_abt(C, D), 8);
    case GroupName::Gamma20_2n: return c_zero(e, 2) && chi_n(e) == 0;
    case GroupName::GammaPrime:
        return gamma2_2_4(e) && c_zero(e, 4) && diag_zero(C, 8) && det_d_pm1(e);
    case GroupName::GammaPrimeIntro:
        return gamma2_2_4(e) && c_zero(e, 4) && diag_zero(mul_abt(C, D), 8) && det_d_pm1(e);
    default: return false;
    }
}

std::vector<Characteristic> all_characteristics()
{
    std::vector<Characteristic> v;
    for (int k = 0; k < 16; ++k) v.push_back({k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1});
    return v;
}

bool is_even(const Characteristic& c) { return (c[0] * c[2] + c[1] * c[3]) % 2 == 0; }

Characteristic characteristic_action(const std::array<int, 16>& m, const Characteristic& c)
{
    // t(M^-1) = (D, -C; -B, A); the a-part is shifted by diag(C D^t), the b-part by diag(A B^t)
    auto A = block(m, 0, 0), B = block(m, 0, 1), C = block(m, 1, 0), D = block(m, 1, 1);
    auto ab = mul_abt(A, B), cd = mul_abt(C, D);
    int a1 = c[0], a2 = c[1], b1 = c[2], b2 = c[3];
    Characteristic r{D[0] * a1 + D[1] * a2 - C[0] * b1 - C[1] * b2 + cd[0],
                     D[2] * a1 + D[3] * a2 - C[2] * b1 - C[3] * b2 + cd[3],
                     -B[0] * a1 - B[1] * a2 + A[0] * b1 + A[1] * b2 + ab[0],
                     -B[2] * a1 - B[3] * a2 + A[2] * b1 + A[3] * b2 + ab[3]};
    for (auto& v : r) v = md(v, 2);
    return r;
}

int sign_character(const std::array<int, 16>& m)
{
    std::vector<Characteristic> odd;
    for (auto& c : all_characteristics())
        if (!is_even(c)) odd.push_back(c);
    std::vector<int> perm;
    for (auto& c : odd) {
        auto d = characteristic_action(m, c);
        perm.push_back(int(std::find(odd.begin(), odd.end(), d) - odd.begin()));
    }
    int sign = 1;
    std::vector<bool> seen(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int chi_n(const SpElement& e)
{
    if (!e.c_even()) throw std::invalid_argument("chi_n needs an element with C = 0 mod 2");
    auto C = block(e.m, 1, 0), D = block(e.m, 1, 1);
    auto cd = mul_abt(C, D);
    int k = md(cd[0] + cd[1] + cd[3], 4);
    if (sign_character(e.m) < 0) k = (k + 2) % 4;
    return k;
}

const std::vector<SpElement>& table_generators()
{
    static const std::vector<SpElement> g{
        SpElement::from_lift({1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 1}),   // U = (1 0; 1 1)
        SpElement::from_lift({1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 1}),   // U = (1 1; 0 1)
        SpElement::from_lift({1, 0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}),    // S = diag(2, 0)
        SpElement::fricke_involution()};
    return g;
}

const std::vector<SpElement>& full_generators()
{
    static const std::vector<SpElement> g = [] {
        std::vector<SpElement> v;
        const int S[3][4] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}};
        for (auto& s : S)
            v.push_back(SpElement::from_lift({1, 0, s[0], s[1], 0, 1, s[2], s[3], 0, 0, 1, 0, 0, 0, 0, 1}));
        // diag(U^t, U^-1)
        const int U[3][4] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {-1, 0, 0, 1}};
        for (auto& u : U) {
            int det = u[0] * u[3] - u[1] * u[2];
            int ui[4] = {u[3] * det, -u[1] * det, -u[2] * det, u[0] * det};
            v.push_back(SpElement::from_lift({u[0], u[2], 0, 0, u[1], u[3], 0, 0, 0, 0, ui[0], ui[1], 0, 0, ui[2], ui[3]}));
        }
        for (auto& s : S)
            v.push_back(
                SpElement::from_lift({1, 0, 0, 0, 0, 1, 0, 0, 2 * s[0], 2 * s[1], 1, 0, 2 * s[2], 2 * s[3], 0, 1}));
        v.push_back(SpElement::fricke_involution());
        return v;
    }();
    return g;
}

namespace {

std::string bucket_key(const SpElement& e, GroupName sub)
{
    bool fine = sub == GroupName::GammaPrime || sub == GroupName::GammaPrimeIntro || sub == GroupName::Gamma2_2 ||
                sub == GroupName::Gamma2_4 || sub == GroupName::Gamma2_8 || sub == GroupName::Gamma2_2_4;
    std::string k(1, char(e.fricke));
    if (fine)
        for (int v : e.m) k += char('0' + v % 2);
    return k;
}

}  // namespace

int CosetTable::find(const SpElement& e) const
{
    auto it = buckets.find(bucket_key(e, sub));
    if (it == buckets.end()) return -1;
    for (int c : it->second)
        if (member(e * reps[c].inverse(), sub)) return c;
    return -1;
}

CosetTable coset_enumeration(const std::vector<SpElement>& gens, GroupName sub, size_t cap)
{
    CosetTable t;
    t.sub = sub;
    auto add = [&](const SpElement& e, std::vector<int> w) {
        t.buckets[bucket_key(e, sub)].push_back(int(t.reps.size()));
        t.reps.push_back(e);
        t.words.push_back(std::move(w));
    };
    add(SpElement::identity(), {});
    for (size_t h = 0; h < t.reps.size(); ++h)
        for (size_t s = 0; s < gens.size(); ++s) {
            SpElement y = t.reps[h] * gens[s];
            if (t.find(y) >= 0) continue;
            if (t.reps.size() >= cap) throw std::runtime_error("coset enumeration exceeded cap");
            auto w = t.words[h];
            w.push_back(int(s));
            add(y, std::move(w));
        }
    return t;
}

const CosetTable& gamma_prime_cosets()
{
    static const CosetTable t = coset_enumeration(table_generators(), GroupName::GammaPrime);
    return t;
}

IndexReport gamma_prime_indices()
{
    IndexReport r;
    for (auto& e : gamma_prime_cosets().reps) {
        int chi = chi_n(e);
        ++r.hat;
        if (chi == 0) ++r.hat_n;
        if (!e.fricke) {
            ++r.gamma20_2;
            if (chi == 0) ++r.gamma20_2n;
        }
    }
    return r;
}

MonoTransform phi_word(const std::vector<int>& word)
{
    MonoTransform t = MonoTransform::identity(8);
    for (int s : word) t = t * group_generators()[s];
    return t.normalized();
}

MonoTransform phi(const SpElement& e)
{
    if (!e.c_even()) throw std::invalid_argument("phi needs an element of the extended level-2 group");
    int c = gamma_prime_cosets().find(e);
    if (c < 0) throw std::runtime_error("element outside the enumerated cosets");
    return phi_word(gamma_prime_cosets().words[c]);
}

const std::vector<InvolutionRow>& involution_table()
{
    static const std::vector<InvolutionRow> rows = [] {
        auto mk = [](std::array<int8_t, 8> p, std::array<int8_t, 8> k) {
            MonoTransform t;
            t.perm = p;
            t.k = k;
            return t;
        };
        const std::array<int8_t, 8> id{0, 1, 2, 3, 4, 5, 6, 7};
        const std::array<std::array<long long, 16>, 9> mats{{
            {3, 0, 4, 0, 0, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1},
            {5, 2, 6, 2, 2, 1, 2, 6, 4, 4, 1, 6, 4, 4, 6, 5},
            {1, 0, 2, 6, 2, 1, 2, 6, 0, 0, 1, 6, 0, 0, 0, 1},
            {3, 6, 4, 2, 4, 7, 6, 2, 0, 0, 3, 4, 0, 4, 2, 7},
            {3, 2, 6, 7, 2, 3, 7, 2, 4, 2, 1, 2, 2, 4, 2, 1},
            {5, 2, 6, 7, 0, 3, 1, 0, 0, 2, 3, 0, 6, 4, 6, 5},
            {7, 4, 7, 6, 0, 7, 2, 3, 6, 4, 5, 0, 4, 6, 4, 5},
            {3, 7, 5, 2, 6, 1, 2, 6, 0, 6, 1, 6, 2, 0, 7, 3},
            {1, 0, 7, 0, 0, 7, 0, 0, 2, 0, 7, 0, 0, 0, 0, 7},
        }};
        const MonoTransform tr[9] = {
            mk(id, {0, 0, 0, 0, 4, 4, 4, 4}),
            mk(id, {0, 4, 4, 0, 0, 4, 4, 0}),
            mk(id, {0, 0, 0, 0, 0, 4, 4, 0}),
            mk(id, {4, 4, 0, 0, 0, 0, 4, 4}),
            mk(id, {4, 4, 4, 0, 0, 0, 0, 4}),
            mk(id, {4, 4, 4, 0, 4, 4, 4, 0}),
            mk({3, 2, 1, 0, 7, 6, 5, 4}, {4, 6, 6, 0, 0, 2, 2, 4}),
            mk({1, 0, 2, 3, 6, 5, 4, 7}, {4, 0, 6, 6, 0, 6, 4, 2}),
            mk({1, 0, 3, 2, 5, 4, 7, 6}, {6, 0, 6, 0, 0, 6, 0, 6}),
        };
        std::vector<InvolutionRow> v;
        for (int i = 0; i < 9; ++i) v.push_back({SpElement::from_ints(mats[i]), tr[i]});
        v.push_back({SpElement::fricke_involution(), group_generators()[3]});
        return v;
    }();
    return rows;
}

PredicateCheck predicate_closure_check(GroupName g, int pairs, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto& gens = full_generators();
    std::uniform_int_distribution<int> len(1, 12), pick(0, int(gens.size()) - 1);
    auto random_member = [&] {
        SpElement x = SpElement::identity();
        for (int k = len(rng); k > 0; --k) x = x * gens[pick(rng)];
        SpElement p = x;
        while (!member(p, g)) p = p * x;
        return p;
    };
    PredicateCheck r{g};
    for (int i = 0; i < pairs; ++i) {
        SpElement a = random_member(), b = random_member();
        r.closed = r.closed && member(a * b, g) && member(a.inverse(), g);
        ++r.pairs;
    }
    return r;
}

}  // namespace scy

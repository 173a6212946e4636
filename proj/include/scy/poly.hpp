#pragma once
#include "scy/cyclo.hpp"
#include "scy/fp.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scy {

// Monomial in 8 variables, one byte per exponent (exponents < 128).
using Mono = uint64_t;
constexpr int kVars = 8;

inline int mono_exp(Mono m, int v) { return int((m >> (8 * v)) & 0xff); }
inline Mono mono_var(int v, int e = 1) { return Mono(e) << (8 * v); }
inline int mono_deg(Mono m) { return int((m * 0x0101010101010101ull) >> 56); }
inline bool mono_divides(Mono a, Mono b)
{
    constexpr Mono H = 0x8080808080808080ull;
    return (((b | H) - a) & H) == H;
}
inline Mono mono_lcm(Mono a, Mono b)
{
    Mono r = 0;
    for (int v = 0; v < kVars; ++v) r |= mono_var(v, std::max(mono_exp(a, v), mono_exp(b, v)));
    return r;
}
inline bool mono_coprime(Mono a, Mono b)
{
    for (int v = 0; v < kVars; ++v)
        if (mono_exp(a, v) && mono_exp(b, v)) return false;
    return true;
}
std::vector<Mono> monomials_of_degree(int nvars, int d);  // in variables 0..nvars-1
std::string mono_str(Mono m);

// Exact polynomial over Q(zeta8).
class XPoly {
public:
    XPoly() = default;
    XPoly(const CycloNum& c) { if (!c.is_zero()) t_[0] = c; }
    static XPoly var(int v) { XPoly p; p.t_[mono_var(v)] = 1; return p; }
    static XPoly term(Mono m, const CycloNum& c) { XPoly p; if (!c.is_zero()) p.t_[m] = c; return p; }
    static XPoly linear(const std::array<CycloNum, kVars>& coeffs);

    const std::map<Mono, CycloNum>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;
    bool homogeneous() const;
    CycloNum coeff(Mono m) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const CycloNum& c, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.t_ == b.t_; }
    XPoly pow(int e) const;

    CycloNum eval(const std::vector<CycloNum>& x) const;
    // Substitute variable v by polynomial s.
    XPoly substitute(int v, const XPoly& s) const;
    // Linear change x_i -> sum_j m[i][j] x_j.
    XPoly linear_change(const std::vector<std::vector<CycloNum>>& m) const;
    std::string str() const;
    std::string pretty() const;  // e.g. "Y2 - i*X1^2"

private:
    std::map<Mono, CycloNum> t_;
};

// Degree-reverse-lexicographic order with a variable priority (var_order[0] largest).
struct MonoOrder {
    std::array<int, kVars> var_order{0, 1, 2, 3, 4, 5, 6, 7};
    uint64_t key(Mono m) const
    {
        uint64_t k = uint64_t(mono_deg(m)) << 56;
        for (int j = 0; j < kVars; ++j) k |= uint64_t(127 - mono_exp(m, var_order[j])) << (7 * j);
        return k;
    }
    static MonoOrder with_last(int v);
};

struct FTerm {
    uint64_t key;
    Mono m;
    uint32_t c;
};

// Polynomial over F_p with terms sorted by decreasing key.
struct FPoly {
    std::vector<FTerm> t;
    bool zero() const { return t.empty(); }
    const FTerm& lead() const { return t.front(); }
    int degree() const;
};

FPoly to_fp(const XPoly& p, const PrimeField& F, const MonoOrder& o);
FPoly fp_from_terms(std::vector<std::pair<Mono, uint32_t>> terms, const PrimeField& F, const MonoOrder& o);
FPoly fp_reorder(const FPoly& p, const MonoOrder& o);
FPoly fp_mul_term(const FPoly& p, Mono m, uint32_t c, const PrimeField& F, const MonoOrder& o);
FPoly fp_add(const FPoly& a, const FPoly& b, const PrimeField& F);  // keys must agree
FPoly fp_mul(const FPoly& a, const FPoly& b, const PrimeField& F, const MonoOrder& o);
FPoly fp_monic(const FPoly& p, const PrimeField& F);
uint32_t fp_eval(const FPoly& p, const std::array<uint32_t, kVars>& x, const PrimeField& F);

// Monomial substitution x_i -> s_i * x_{perm[i]} over F_p.
struct FpMonomialMap {
    std::array<int, kVars> perm;
    std::array<uint32_t, kVars> scale;
};
FPoly fp_apply(const FPoly& p, const FpMonomialMap& g, const PrimeField& F, const MonoOrder& o);

}  // namespace scy

#pragma once
#include "scy/matrix.hpp"
#include "scy/poly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace scy {

// Monomial matrix on n <= 8 coordinates: (T v)_i = z^k[i] * sqrt2^e[i] * v_{perm[i]}.
struct MonoTransform {
    int n = 8;
    std::array<int8_t, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
    std::array<int8_t, 8> k{};  // exponent of zeta mod 8
    std::array<int8_t, 8> e{};  // exponent of sqrt2

    static MonoTransform identity(int n);
    static MonoTransform scalar(int n, int k, int e = 0);

    friend MonoTransform operator*(const MonoTransform& a, const MonoTransform& b);
    friend bool operator==(const MonoTransform& a, const MonoTransform& b)
    {
        return a.n == b.n && a.perm == b.perm && a.k == b.k && a.e == b.e;
    }
    MonoTransform inverse() const;
    MonoTransform normalized() const;  // first nonzero entry in row-major order is 1
    bool is_scalar() const;
    CycloNum entry(int i) const;  // scalar at row i
    ExactMatrix matrix() const;
    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;
    // Substitution f -> f(T x) on polynomials over F_p.
    FpMonomialMap fp_map(const PrimeField& F) const;
    XPoly substitute(const XPoly& f) const;
    unsigned __int128 key() const;
    std::string str() const;  // e.g. (Y0,-iY1,...)
    static std::optional<MonoTransform> from_matrix(const ExactMatrix& m);
};

struct KeyHash {
    size_t operator()(unsigned __int128 k) const
    {
        uint64_t a = uint64_t(k), b = uint64_t(k >> 64);
        return size_t(a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull + (a << 6)));
    }
};

}  // namespace scy

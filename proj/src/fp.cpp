#include "scy/fp.hpp"

#include <stdexcept>

namespace scy {

PrimeField::PrimeField(uint32_t p) : p_(p), zeta_(0)
{
    if (p % 8 != 1) throw std::invalid_argument("prime must be 1 mod 8");
    // a^((p-1)/8) for a non-residue a is a primitive 8th root of unity
    for (uint32_t a = 2; a < p; ++a) {
        if (pow(a, (p - 1) / 2) == p - 1) {
            zeta_ = pow(a, (p - 1) / 8);
            break;
        }
    }
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const
{
    uint64_t r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return uint32_t(r);
}

uint32_t PrimeField::inv(uint32_t a) const
{
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

uint32_t PrimeField::from_int(long v) const
{
    long r = v % long(p_);
    if (r < 0) r += p_;
    return uint32_t(r);
}

std::optional<uint32_t> PrimeField::sqrt(uint32_t a) const
{
    if (a == 0) return 0u;
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
    // Tonelli-Shanks
    uint32_t q = p_ - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    uint32_t z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    uint32_t m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        uint32_t i = 0, tt = t;
        while (tt != 1) { tt = mul(tt, tt); ++i; }
        uint32_t b = c;
        for (uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

const PrimeField& PrimeField::primary()
{
    static const PrimeField f(998244353u);
    return f;
}

const PrimeField& PrimeField::secondary()
{
    static const PrimeField f(469762049u);
    return f;
}

FpEchelon fp_echelon(const PrimeField& F, std::vector<FpVec> m, int cols)
{
    FpEchelon out;
    size_t r = 0;
    for (int c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        uint32_t iv = F.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], iv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint64_t f = F.p() - m[i][c];
            const uint32_t p_ = F.p();
            for (int j = c; j < cols; ++j)
                if (m[r][j]) m[i][j] = uint32_t((m[i][j] + f * m[r][j]) % p_);
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int fp_rank(const PrimeField& F, std::vector<FpVec> m, int cols)
{
    // forward elimination only
    int r = 0;
    const uint64_t p = F.p();
    for (int c = 0; c < cols && r < int(m.size()); ++c) {
        int piv = r;
        while (piv < int(m.size()) && m[piv][c] == 0) ++piv;
        if (piv == int(m.size())) continue;
        std::swap(m[piv], m[r]);
        uint32_t iv = F.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], iv);
        for (int i = r + 1; i < int(m.size()); ++i) {
            if (m[i][c] == 0) continue;
            uint64_t f = p - m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j]) m[i][j] = uint32_t((m[i][j] + f * m[r][j]) % p);
        }
        ++r;
    }
    return r;
}

std::vector<FpVec> fp_kernel(const PrimeField& F, const std::vector<FpVec>& m, int cols)
{
    FpEchelon e = fp_echelon(F, m, cols);
    std::vector<bool> piv(cols, false);
    for (int c : e.pivots) piv[c] = true;
    std::vector<FpVec> out;
    for (int f = 0; f < cols; ++f) {
        if (piv[f]) continue;
        FpVec v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = F.neg(e.rows[i][f]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace scy

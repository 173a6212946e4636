#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace scy {

// Prime field F_p with p = 1 mod 8, carrying a fixed primitive 8th root of unity.
class PrimeField {
public:
    explicit PrimeField(uint32_t p);
    uint32_t p() const { return p_; }
    uint32_t zeta() const { return zeta_; }  // image of z
    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a ? p_ - a : 0; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t(uint64_t(a) * b % p_); }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    uint32_t from_int(long v) const;
    std::optional<uint32_t> sqrt(uint32_t a) const;

    static const PrimeField& primary();    // 998244353
    static const PrimeField& secondary();  // 469762049

private:
    uint32_t p_, zeta_;
};

using FpVec = std::vector<uint32_t>;

struct FpEchelon {
    std::vector<FpVec> rows;  // reduced, pivots normalized to 1
    std::vector<int> pivots;
    int rank() const { return int(rows.size()); }
};

FpEchelon fp_echelon(const PrimeField& F, std::vector<FpVec> m, int cols);
int fp_rank(const PrimeField& F, std::vector<FpVec> m, int cols);
std::vector<FpVec> fp_kernel(const PrimeField& F, const std::vector<FpVec>& m, int cols);

}  // namespace scy

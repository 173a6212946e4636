#pragma once
#include <gmpxx.h>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace scy {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(zeta8)") {}
};

// Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(zeta8), z^4 = -1.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(long v) { c_[0] = v; }
    CycloNum(const mpq_class& v) { c_[0] = v; c_[0].canonicalize(); }
    CycloNum(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

    static CycloNum zeta(int k);  // z^k, any integer k
    static CycloNum i() { return zeta(2); }
    static CycloNum sqrt2() { return zeta(1) - zeta(3); }

    const mpq_class& operator[](int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }
    bool operator<(const CycloNum& o) const;  // arbitrary total order for containers

    // Galois automorphism z -> z^k, k odd.
    CycloNum galois(int k) const;
    CycloNum conj() const { return galois(7); }
    mpq_class norm() const;  // absolute norm to Q
    CycloNum inv() const;
    CycloNum pow(long e) const;

    std::complex<double> to_complex() const;
    // Exact square root, if one exists in Q(zeta8).
    std::optional<CycloNum> sqrt() const;
    // Nearest element with denominators dividing den, if within tol of z.
    static std::optional<CycloNum> snap(std::complex<double> z, long den, double tol);

    // Image under z -> zp in F_p.
    uint32_t mod(uint32_t p, uint32_t zp) const;

    std::string str() const;  // "c0 + c1*z + c2*z^2 + c3*z^3"
    std::string pretty() const;  // "-i", "sqrt2", "3/2*z" where possible
    static CycloNum parse(const std::string& s);

private:
    std::array<mpq_class, 4> c_;
};

}  // namespace scy

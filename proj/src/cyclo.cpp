#include "scy/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace scy {

namespace {

const std::complex<double>& zeta_c()
{
    static const std::complex<double> z = std::polar(1.0, std::numbers::pi / 4);
    return z;
}

// Best rational approximation with denominator <= maxden.
mpq_class rationalize(double x, long maxden)
{
    long sign = x < 0 ? -1 : 1;
    double y = std::fabs(x);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = y;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (a > 1e15) break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = r - a;
        if (frac < 1e-13) break;
        r = 1.0 / frac;
    }
    if (q1 == 0) return mpq_class(0);
    mpq_class out(sign * p1, q1);
    out.canonicalize();
    return out;
}

uint32_t powmod(uint64_t b, uint64_t e, uint64_t p)
{
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t zmod(const mpz_class& z, uint32_t p)
{
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<uint32_t>(r.get_ui());
}

}  // namespace

CycloNum::CycloNum(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)}
{
    for (auto& x : c_) x.canonicalize();
}

CycloNum CycloNum::zeta(int k)
{
    k = ((k % 8) + 8) % 8;
    CycloNum r;
    if (k < 4)
        r.c_[k] = 1;
    else
        r.c_[k - 4] = -1;
    return r;
}

bool CycloNum::is_zero() const
{
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycloNum::operator<(const CycloNum& o) const
{
    for (int k = 0; k < 4; ++k) {
        if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
    }
    return false;
}

CycloNum CycloNum::operator-() const
{
    CycloNum r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o)
{
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o)
{
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b)
{
    std::array<mpq_class, 4> r;
    for (int j = 0; j < 4; ++j) {
        if (a.c_[j] == 0) continue;
        for (int k = 0; k < 4; ++k) {
            if (b.c_[k] == 0) continue;
            mpq_class t = a.c_[j] * b.c_[k];
            int e = j + k;
            if (e < 4)
                r[e] += t;
            else
                r[e - 4] -= t;
        }
    }
    CycloNum out;
    out.c_ = std::move(r);
    return out;
}

CycloNum CycloNum::galois(int k) const
{
    CycloNum r;
    for (int j = 0; j < 4; ++j) {
        if (c_[j] == 0) continue;
        CycloNum t = zeta(j * k);
        for (int m = 0; m < 4; ++m) r.c_[m] += c_[j] * t.c_[m];
    }
    return r;
}

mpq_class CycloNum::norm() const
{
    CycloNum n = *this * galois(3) * galois(5) * galois(7);
    return n.c_[0];
}

CycloNum CycloNum::inv() const
{
    if (is_zero()) throw DivisionByZero();
    CycloNum rest = galois(3) * galois(5) * galois(7);
    mpq_class n = (*this * rest).c_[0];
    CycloNum r;
    for (int k = 0; k < 4; ++k) r.c_[k] = rest.c_[k] / n;
    return r;
}

CycloNum CycloNum::pow(long e) const
{
    if (e < 0) return inv().pow(-e);
    CycloNum r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::complex<double> CycloNum::to_complex() const
{
    std::complex<double> s = 0, z = 1;
    for (int k = 0; k < 4; ++k) {
        s += c_[k].get_d() * z;
        z *= zeta_c();
    }
    return s;
}

std::optional<CycloNum> CycloNum::snap(std::complex<double> z, long den, double tol)
{
    // x = c0 + c1 z + c2 i + c3 z^3 has Re = c0 + u/sqrt2, Im = c2 + v/sqrt2 with
    // u = c1 - c3, v = c1 + c3 of equal parity; small |u|, |v| are searched.
    const double r2 = std::sqrt(2.0);
    double re = z.real() * den, im = z.imag() * den;
    const long bound = 4 * den + 4;
    double best = 1e300;
    std::optional<CycloNum> out;
    for (long u = -bound; u <= bound; ++u) {
        long a = std::lround(re - u / r2);
        double er_re = std::fabs(re - a - u / r2);
        for (long v = -bound; v <= bound; ++v) {
            if ((u - v) % 2 != 0) continue;
            long c = std::lround(im - v / r2);
            double er = er_re + std::fabs(im - c - v / r2);
            if (er < best - 1e-12) {
                best = er;
                out = CycloNum(mpq_class(a, den), mpq_class((u + v) / 2, den), mpq_class(c, den),
                               mpq_class((v - u) / 2, den));
            }
        }
    }
    if (best / den > tol) return std::nullopt;
    return out;
}

std::optional<CycloNum> CycloNum::sqrt() const
{
    if (is_zero()) return CycloNum(0);
    // Square roots in each complex embedding z -> z^k (k = 1,3,5,7), signs searched.
    std::array<std::complex<double>, 4> r;
    const int ks[4] = {1, 3, 5, 7};
    for (int j = 0; j < 4; ++j) r[j] = std::sqrt(galois(ks[j]).to_complex());
    for (int mask = 0; mask < 8; ++mask) {
        std::array<std::complex<double>, 4> s = r;
        for (int j = 1; j < 4; ++j)
            if (mask >> (j - 1) & 1) s[j] = -s[j];
        CycloNum cand;
        bool ok = true;
        for (int m = 0; m < 4 && ok; ++m) {
            std::complex<double> acc = 0;
            for (int j = 0; j < 4; ++j) acc += s[j] * std::pow(zeta_c(), -double(ks[j] * m));
            double v = acc.real() / 4;
            if (std::fabs(acc.imag()) > 1e-6 * (1 + std::fabs(v))) ok = false;
            cand.c_[m] = rationalize(v, 1 << 20);
        }
        if (ok && cand * cand == *this) return cand;
    }
    return std::nullopt;
}

uint32_t CycloNum::mod(uint32_t p, uint32_t zp) const
{
    uint64_t s = 0, z = 1;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] != 0) {
            uint64_t num = zmod(c_[k].get_num(), p);
            uint64_t den = zmod(c_[k].get_den(), p);
            if (den == 0) throw std::domain_error("denominator vanishes mod p");
            s = (s + num * powmod(den, p - 2, p) % p * z) % p;
        }
        z = z * zp % p;
    }
    return static_cast<uint32_t>(s);
}

std::string CycloNum::str() const
{
    std::ostringstream os;
    os << c_[0].get_str() << " + " << c_[1].get_str() << "*z + " << c_[2].get_str() << "*z^2 + "
       << c_[3].get_str() << "*z^3";
    return os.str();
}

CycloNum CycloNum::parse(const std::string& s)
{
    CycloNum r;
    size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
        size_t end = k < 3 ? s.find(" + ", pos) : std::string::npos;
        std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        size_t star = tok.find('*');
        if (star != std::string::npos) tok = tok.substr(0, star);
        r.c_[k] = mpq_class(tok);
        r.c_[k].canonicalize();
        if (end == std::string::npos) break;
        pos = end + 3;
    }
    return r;
}

}  // namespace scy

namespace scy {

// Rational multiple of zeta^k or sqrt2 * zeta^k, else the full form.
std::string CycloNum::pretty() const
{
    static const char* unit_names[4] = {"", "z", "i", "z^3"};
    if (is_rational()) return c_[0].get_str();
    for (int s = 0; s < 2; ++s)
        for (int k = 1 - s; k < 4; ++k) {
            CycloNum u = zeta(k);
            if (s) u = u * sqrt2();
            CycloNum q = *this / u;
            if (!q.is_rational()) continue;
            std::string name = std::string(s ? "sqrt2" : "") + (k ? std::string(s ? "*" : "") + unit_names[k] : "");
            if (q[0] == 1) return name;
            if (q[0] == -1) return "-" + name;
            return q[0].get_str() + "*" + name;
        }
    return "(" + str() + ")";
}

}  // namespace scy

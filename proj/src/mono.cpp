#include "scy/mono.hpp"

#include <sstream>

namespace scy {

MonoTransform MonoTransform::identity(int n)
{
    MonoTransform t;
    t.n = n;
    return t;
}

MonoTransform MonoTransform::scalar(int n, int k, int e)
{
    MonoTransform t = identity(n);
    for (int i = 0; i < n; ++i) {
        t.k[i] = int8_t(((k % 8) + 8) % 8);
        t.e[i] = int8_t(e);
    }
    return t;
}

MonoTransform operator*(const MonoTransform& a, const MonoTransform& b)
{
    MonoTransform r = MonoTransform::identity(a.n);
    for (int i = 0; i < a.n; ++i) {
        int p = a.perm[i];
        r.perm[i] = b.perm[p];
        r.k[i] = int8_t((a.k[i] + b.k[p]) & 7);
        r.e[i] = int8_t(a.e[i] + b.e[p]);
    }
    return r;
}

MonoTransform MonoTransform::inverse() const
{
    MonoTransform r = identity(n);
    for (int i = 0; i < n; ++i) {
        int p = perm[i];
        r.perm[p] = int8_t(i);
        r.k[p] = int8_t((8 - k[i]) & 7);
        r.e[p] = int8_t(-e[i]);
    }
    return r;
}

MonoTransform MonoTransform::normalized() const
{
    // row-major first nonzero entry is row 0
    MonoTransform r = *this;
    int k0 = k[0], e0 = e[0];
    for (int i = 0; i < n; ++i) {
        r.k[i] = int8_t((k[i] - k0 + 8) & 7);
        r.e[i] = int8_t(e[i] - e0);
    }
    return r;
}

bool MonoTransform::is_scalar() const
{
    for (int i = 0; i < n; ++i)
        if (perm[i] != i || k[i] != k[0] || e[i] != e[0]) return false;
    return true;
}

CycloNum MonoTransform::entry(int i) const
{
    return CycloNum::zeta(k[i]) * CycloNum::sqrt2().pow(e[i]);
}

ExactMatrix MonoTransform::matrix() const
{
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, perm[i]) = entry(i);
    return m;
}

std::vector<CycloNum> MonoTransform::apply(const std::vector<CycloNum>& v) const
{
    std::vector<CycloNum> out(n);
    for (int i = 0; i < n; ++i) out[i] = entry(i) * v[perm[i]];
    return out;
}

FpMonomialMap MonoTransform::fp_map(const PrimeField& F) const
{
    FpMonomialMap g;
    for (int i = 0; i < kVars; ++i) {
        g.perm[i] = i < n ? perm[i] : i;
        g.scale[i] = i < n ? entry(i).mod(F.p(), F.zeta()) : 1;
    }
    return g;
}

XPoly MonoTransform::substitute(const XPoly& f) const
{
    XPoly r;
    std::array<CycloNum, 8> ent;
    for (int i = 0; i < n; ++i) ent[i] = entry(i);
    for (auto& [m, c] : f.terms()) {
        Mono mm = 0;
        CycloNum cc = c;
        for (int i = 0; i < n; ++i) {
            int x = mono_exp(m, i);
            if (!x) continue;
            mm += mono_var(perm[i], x);
            cc *= ent[i].pow(x);
        }
        r += XPoly::term(mm, cc);
    }
    return r;
}

unsigned __int128 MonoTransform::key() const
{
    unsigned __int128 x = 0;
    for (int i = 0; i < n; ++i) {
        x = (x << 3) | unsigned(perm[i]);
        x = (x << 3) | unsigned(k[i] & 7);
        x = (x << 5) | unsigned((e[i] + 16) & 31);
    }
    return x;
}

std::string MonoTransform::str() const
{
    static const char* names8[8] = {"Y0", "Y1", "Y2", "Y3", "X0", "X1", "X2", "X3"};
    static const char* names4[4] = {"x1", "x2", "x3", "x4"};
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        int kk = k[i] & 7;
        const char* z[8] = {"", "z*", "i*", "z^3*", "-", "-z*", "-i*", "-z^3*"};
        os << z[kk];
        if (e[i]) os << "s2^" << int(e[i]) << "*";
        os << (n == 8 ? names8[perm[i]] : names4[perm[i]]);
    }
    os << ")";
    return os.str();
}

std::optional<MonoTransform> MonoTransform::from_matrix(const ExactMatrix& m)
{
    MonoTransform t = identity(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        int nz = -1;
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                if (nz >= 0) return std::nullopt;
                nz = j;
            }
        if (nz < 0) return std::nullopt;
        t.perm[i] = int8_t(nz);
        bool found = false;
        for (int e = -4; e <= 4 && !found; ++e)
            for (int k = 0; k < 8 && !found; ++k)
                if (CycloNum::zeta(k) * CycloNum::sqrt2().pow(e) == m(i, nz)) {
                    t.k[i] = int8_t(k);
                    t.e[i] = int8_t(e);
                    found = true;
                }
        if (!found) return std::nullopt;
    }
    return t;
}

}  // namespace scy

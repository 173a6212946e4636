#include "scy/theta.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace scy {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Mat2 {
    Complex a, b, c, d;
};

Mat2 to_mat(const SiegelPoint& z) { return {z.z0, z.z1, z.z1, z.z2}; }
Mat2 mul(const Mat2& x, const Mat2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
Mat2 inv(const Mat2& x)
{
    Complex det = x.a * x.d - x.b * x.c;
    return {x.d / det, -x.b / det, -x.c / det, x.a / det};
}
SiegelPoint from_mat(const Mat2& m) { return {m.a, (m.b + m.c) * 0.5, m.d}; }

double tail(double lambda, int r)
{
    double s = 0;
    for (int n = r + 1; n < r + 60; ++n) s += 8.0 * n * std::exp(-kPi * lambda * (n - 0.5) * (n - 0.5));
    return s;
}

}  // namespace

bool SiegelPoint::valid() const
{
    double y0 = z0.imag(), y1 = z1.imag(), y2 = z2.imag();
    return y0 > 0 && y0 * y2 - y1 * y1 > 0;
}

double SiegelPoint::min_imag_eigenvalue() const
{
    double y0 = z0.imag(), y1 = z1.imag(), y2 = z2.imag();
    double tr = y0 + y2, disc = std::sqrt((y0 - y2) * (y0 - y2) + 4 * y1 * y1);
    return (tr - disc) / 2;
}

ThetaValue theta_eval(int a, int b, const SiegelPoint& z, double eps)
{
    if (!z.valid()) throw std::invalid_argument("imaginary part not positive definite");
    double lambda = z.min_imag_eigenvalue();
    int r = 1;
    while (tail(lambda, r) >= eps) {
        if (++r > 60) throw std::runtime_error("theta summation radius exceeds cap");
    }
    double a1 = (a & 1) / 2.0, a2 = ((a >> 1) & 1) / 2.0;
    int b1 = b & 1, b2 = (b >> 1) & 1;
    Complex s = 0;
    for (int g1 = -r; g1 <= r; ++g1)
        for (int g2 = -r; g2 <= r; ++g2) {
            double v1 = g1 + a1, v2 = g2 + a2;
            Complex q = z.z0 * (v1 * v1) + z.z1 * (2 * v1 * v2) + z.z2 * (v2 * v2) + (b1 * v1 + b2 * v2);
            s += std::exp(Complex(0, kPi) * q);
        }
    return {s, tail(lambda, r)};
}

std::array<Complex, 8> theta_coordinates(const SiegelPoint& z)
{
    std::array<Complex, 8> v;
    SiegelPoint z2 = z.scaled(2);
    for (int k = 0; k < 4; ++k) {
        v[k] = theta_eval(0, k, z).value;
        v[4 + k] = theta_eval(k, 0, z2).value;
    }
    return v;
}

SiegelPoint random_siegel_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 1.3), off(-0.2, 0.2);
    return {{re(rng), im(rng)}, {re(rng), off(rng)}, {re(rng), im(rng)}};
}

SiegelPoint act(const IntMat4& m, const SiegelPoint& z)
{
    auto blk = [&](int r, int c) {
        return Mat2{double(m[4 * r + c]), double(m[4 * r + c + 1]), double(m[4 * (r + 1) + c]),
                    double(m[4 * (r + 1) + c + 1])};
    };
    Mat2 A = blk(0, 0), B = blk(0, 2), C = blk(2, 0), D = blk(2, 2), Z = to_mat(z);
    Mat2 num = mul(A, Z), den = mul(C, Z);
    num = {num.a + B.a, num.b + B.b, num.c + B.c, num.d + B.d};
    den = {den.a + D.a, den.b + D.b, den.c + D.c, den.d + D.d};
    return from_mat(mul(num, inv(den)));
}

Complex det_cz_d(const IntMat4& m, const SiegelPoint& z)
{
    Complex a = double(m[8]) * z.z0 + double(m[9]) * z.z1 + double(m[10]);
    Complex b = double(m[8]) * z.z1 + double(m[9]) * z.z2 + double(m[11]);
    Complex c = double(m[12]) * z.z0 + double(m[13]) * z.z1 + double(m[14]);
    Complex d = double(m[12]) * z.z1 + double(m[13]) * z.z2 + double(m[15]);
    return a * d - b * c;
}

SiegelPoint fricke(const SiegelPoint& z)
{
    Mat2 w = inv(to_mat(z.scaled(2)));
    return from_mat({-w.a, -w.b, -w.c, -w.d});
}

double relation_residual(const SiegelPoint& z)
{
    static const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    auto v = theta_coordinates(z);
    double worst = 0;
    for (int k = 0; k < 4; ++k) {
        Complex r = v[k] * v[k];
        for (int a = 0; a < 4; ++a) r -= double(s[k][a]) * v[4 + a] * v[4 + a];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double verify_relations(int samples, uint64_t seed)
{
    if (samples < 1) throw std::invalid_argument("need at least one sample point");
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, relation_residual(random_siegel_point(rng)));
    return worst;
}

Complex weight3_form(const SiegelPoint& z)
{
    // theta[10;00] theta[10;01] theta[01;00] theta[01;10] theta[11;00] theta[11;11]
    const int ch[6][2] = {{1, 0}, {1, 2}, {2, 0}, {2, 1}, {3, 0}, {3, 3}};
    Complex p = 1;
    for (auto& c : ch) p *= theta_eval(c[0], c[1], z).value;
    return p;
}

double duplication_residual(int a, int b, const SiegelPoint& z)
{
    auto v = theta_coordinates(z);
    Complex t = theta_eval(a, b, z).value;
    Complex r = t * t;
    for (int c = 0; c < 4; ++c) r -= double(__builtin_popcount(b & c) % 2 ? -1 : 1) * v[4 + c] * v[4 + (c ^ a)];
    return std::abs(r);
}

double duplication_check(int a, int b, int samples, uint64_t seed)
{
    if (__builtin_popcount(a & b) % 2) throw std::invalid_argument("odd characteristic");
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, duplication_residual(a, b, random_siegel_point(rng)));
    return worst;
}

DerivedTransform derive_transformation(const std::function<SiegelPoint(const SiegelPoint&)>& g, int samples,
                                       uint64_t seed)
{
    if (samples < 8) throw std::invalid_argument("transport needs at least 8 sample points");
    std::mt19937_64 rng(seed);
    int n = samples;
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(8 * n, 64 + n);
    for (int s = 0; s < n; ++s) {
        SiegelPoint z = random_siegel_point(rng);
        auto v = theta_coordinates(z);
        auto w = theta_coordinates(g(z));
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) sys(8 * s + i, 8 * i + j) = v[j];
            sys(8 * s + i, 64 + s) = -w[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    Eigen::VectorXcd u = svd.matrixV().col(64 + n - 1);
    Complex pivot = 0;
    for (int k = 0; k < 64 && pivot == Complex(0); ++k)
        if (std::abs(u(k)) > 1e-8 * u.norm()) pivot = u(k);
    DerivedTransform out;
    ExactMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Complex x = u(8 * i + j) / pivot;
            auto c = CycloNum::snap(x, 4, 1e-6);
            if (!c) throw std::runtime_error("snap failure at entry " + std::to_string(i) + "," + std::to_string(j));
            out.snap_distance = std::max(out.snap_distance, std::abs(c->to_complex() - x));
            m(i, j) = *c;
        }
    auto t = MonoTransform::from_matrix(m);
    if (!t) throw std::runtime_error("derived transformation is not monomial");
    out.transform = t->normalized();
    out.revalidation = transport_residual(g, out.transform, 4, seed + 7919);
    return out;
}

double transport_residual(const std::function<SiegelPoint(const SiegelPoint&)>& g, const MonoTransform& t,
                          int samples, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        SiegelPoint z = random_siegel_point(rng);
        auto v = theta_coordinates(z);
        auto w = theta_coordinates(g(z));
        std::array<Complex, 8> tv;
        for (int i = 0; i < 8; ++i) tv[i] = t.entry(i).to_complex() * v[t.perm[i]];
        Complex num = 0, den = 0;
        for (int i = 0; i < 8; ++i) {
            num += std::conj(tv[i]) * w[i];
            den += std::conj(tv[i]) * tv[i];
        }
        Complex c = num / den;
        double r = 0, nw = 0;
        for (int i = 0; i < 8; ++i) {
            r += std::norm(w[i] - c * tv[i]);
            nw += std::norm(w[i]);
        }
        worst = std::max(worst, std::sqrt(r / nw));
    }
    return worst;
}

}  // namespace scy

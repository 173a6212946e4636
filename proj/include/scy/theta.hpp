#pragma once
#include "scy/mono.hpp"

#include <array>
#include <complex>
#include <functional>
#include <random>

namespace scy {

using Complex = std::complex<double>;

// Z = (z0 z1; z1 z2) in the Siegel upper half plane of degree 2.
struct SiegelPoint {
    Complex z0, z1, z2;
    bool valid() const;
    double min_imag_eigenvalue() const;
    SiegelPoint scaled(double s) const { return {z0 * s, z1 * s, z2 * s}; }
};

struct ThetaValue {
    Complex value;
    double bound = 0;  // tail estimate
};

// Characteristic (a;b) with a = a1 + 2 a2, b = b1 + 2 b2.
ThetaValue theta_eval(int a, int b, const SiegelPoint& z, double eps = 1e-14);

// (Y0..Y3, X0..X3) at Z: Y_b = theta[0;b](Z), X_a = theta[a;0](2Z).
std::array<Complex, 8> theta_coordinates(const SiegelPoint& z);

SiegelPoint random_siegel_point(std::mt19937_64& rng);

using IntMat4 = std::array<long long, 16>;  // row-major (A B; C D)
SiegelPoint act(const IntMat4& m, const SiegelPoint& z);
SiegelPoint fricke(const SiegelPoint& z);  // Z -> -(2Z)^-1
Complex det_cz_d(const IntMat4& m, const SiegelPoint& z);

// Max |Y_k^2 - sum_a s_ka X_a^2| over the four relations at z.
double relation_residual(const SiegelPoint& z);
double verify_relations(int samples, uint64_t seed);

// Weight-3 product of the six even thetas with a != 0.
Complex weight3_form(const SiegelPoint& z);

// theta[a;b](Z)^2 - sum_c (-1)^{b.c} X_c X_{c+a}.
double duplication_residual(int a, int b, const SiegelPoint& z);
double duplication_check(int a, int b, int samples, uint64_t seed);

struct DerivedTransform {
    MonoTransform transform;   // projectively normalized
    double snap_distance = 0;  // worst entry distance to its snapped value
    double revalidation = 0;   // relative residual at fresh points
};

// Solves v(gZ) ~ T v(Z) from samples and snaps T into Q(z8).
DerivedTransform derive_transformation(const std::function<SiegelPoint(const SiegelPoint&)>& g, int samples,
                                       uint64_t seed);

// Relative residual of v(gZ) ~ T v(Z) at random points.
double transport_residual(const std::function<SiegelPoint(const SiegelPoint&)>& g, const MonoTransform& t,
                          int samples, uint64_t seed);

}  // namespace scy

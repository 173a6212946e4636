#include "scy/symplectic.hpp"
#include "scy/theta.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <random>

using namespace scy;

namespace {

// Direct summation over a fixed large box, independent of the adaptive radius.
Complex theta_box(int a, int b, const SiegelPoint& z, int r = 14)
{
    Complex s = 0;
    for (int g1 = -r; g1 <= r; ++g1)
        for (int g2 = -r; g2 <= r; ++g2) {
            double v1 = g1 + (a & 1) / 2.0, v2 = g2 + ((a >> 1) & 1) / 2.0;
            Complex q = z.z0 * (v1 * v1) + 2.0 * z.z1 * (v1 * v2) + z.z2 * (v2 * v2) +
                        double(b & 1) * v1 + double((b >> 1) & 1) * v2;
            s += std::exp(Complex(0, M_PI) * q);
        }
    return s;
}

const SiegelPoint iE{{0, 1}, {0, 0}, {0, 1}};

std::function<SiegelPoint(const SiegelPoint&)> action_of(const SpElement& e)
{
    if (e.fricke) return [](const SiegelPoint& z) { return fricke(z); };
    IntMat4 m = *e.lift;
    return [m](const SiegelPoint& z) { return act(m, z); };
}

}  // namespace

TEST_CASE("theta values agree with direct summation")
{
    std::mt19937_64 rng(21);
    for (int it = 0; it < 5; ++it) {
        SiegelPoint z = random_siegel_point(rng);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                ThetaValue t = theta_eval(a, b, z);
                CHECK(t.bound >= 0);
                CHECK(t.bound < 1e-14);
                CHECK(std::abs(t.value - theta_box(a, b, z)) < 1e-12);
            }
    }
}

TEST_CASE("odd characteristics vanish")
{
    std::mt19937_64 rng(22);
    SiegelPoint z = random_siegel_point(rng);
    for (auto& c : all_characteristics())
        if (!is_even(c)) CHECK(std::abs(theta_eval(c[0] + 2 * c[1], c[2] + 2 * c[3], z).value) < 1e-13);
}

TEST_CASE("theta null at iE is real and positive")
{
    Complex v = theta_eval(0, 0, iE).value;
    CHECK(v.real() > 0);
    CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("invalid points are rejected")
{
    SiegelPoint bad{{0, 1}, {0, 2}, {0, 1}};
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(theta_eval(0, 0, bad), std::invalid_argument);
}

TEST_CASE("quadric relations")
{
    CHECK(relation_residual(iE) < 1e-12);
    CHECK(verify_relations(20, 3) < 1e-9);
    // first relation by hand: Y0^2 = X0^2 + X1^2 + X2^2 + X3^2
    std::mt19937_64 rng(23);
    for (int it = 0; it < 5; ++it) {
        auto v = theta_coordinates(random_siegel_point(rng));
        Complex rhs = v[4] * v[4] + v[5] * v[5] + v[6] * v[6] + v[7] * v[7];
        CHECK(std::abs(v[0] * v[0] - rhs) < 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("weight three product vanishes on the diagonal")
{
    std::mt19937_64 rng(24);
    SiegelPoint z = random_siegel_point(rng);
    z.z1 = 0;
    CHECK(std::abs(weight3_form(z)) < 1e-9);
}

TEST_CASE("duplication identities")
{
    for (auto& c : all_characteristics())
        if (is_even(c)) CHECK(duplication_check(c[0] + 2 * c[1], c[2] + 2 * c[3], 10, 5) < 1e-9);
    CHECK_THROWS(duplication_check(1, 1, 1, 1));
}

TEST_CASE("generator transformations are recovered exactly")
{
    const auto& tg = table_generators();
    for (size_t i = 0; i < tg.size(); ++i) {
        DerivedTransform d = derive_transformation(action_of(tg[i]), 10, 31 + i);
        CHECK(d.transform == group_generators()[i].normalized());
        CHECK(d.snap_distance < 1e-6);
        CHECK(d.revalidation < 1e-9);
    }
}

TEST_CASE("too few samples are rejected")
{
    CHECK_THROWS_AS(verify_relations(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(derive_transformation([](const SiegelPoint& z) { return z; }, 4, 1), std::invalid_argument);
}

TEST_CASE("derived transformations respect products")
{
    const auto& tg = table_generators();
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            SpElement p = tg[i] * tg[j];
            REQUIRE(p.lift);
            auto ti = derive_transformation(action_of(tg[i]), 10, 41).transform;
            auto tj = derive_transformation(action_of(tg[j]), 10, 42).transform;
            auto tp = derive_transformation(action_of(p), 10, 43).transform;
            CHECK(tp == (ti * tj).normalized());
        }
}

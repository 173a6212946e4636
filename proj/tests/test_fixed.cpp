#include "scy/calculators.hpp"
#include "scy/fixed.hpp"
#include "scy/groebner.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <random>

using namespace scy;

namespace {

std::vector<FPoly> fp(const std::vector<XPoly>& ps)
{
    const PrimeField& F = PrimeField::primary();
    std::vector<FPoly> out;
    for (auto& p : ps) out.push_back(to_fp(p, F, MonoOrder{}));
    return out;
}

XPoly v(int i) { return XPoly::var(i); }

}  // namespace

TEST_CASE("eigenspace splitting")
{
    auto dims = [](const MonoTransform& t) {
        EigenSplit s = eigen_split(t);
        return std::pair{s.plus.size(), s.minus.size()};
    };
    CHECK(dims(MonoTransform::identity(8)) == std::pair<size_t, size_t>{8, 0});
    CHECK(dims(involution_transform(1)) == std::pair<size_t, size_t>{4, 4});
    CHECK(dims(involution_transform(3)) == std::pair<size_t, size_t>{6, 2});
    EigenSplit s3 = eigen_split(involution_transform(3));
    // all four Y coordinates lie in the larger eigenspace
    for (int y = 0; y < 4; ++y) {
        std::vector<CycloNum> e(8);
        e[y] = 1;
        ExactMatrix m(int(s3.plus.size()) + 1, 8);
        for (size_t r = 0; r < s3.plus.size(); ++r)
            for (int c = 0; c < 8; ++c) m(int(r), c) = s3.plus[r][c];
        for (int c = 0; c < 8; ++c) m(int(s3.plus.size()), c) = e[c];
        CHECK(echelonize(m).rank == int(s3.plus.size()));
    }
    CHECK_THROWS_AS(eigen_split(group_generators()[2]), std::invalid_argument);
}

TEST_CASE("Hilbert classification of standard curves")
{
    const PrimeField& F = PrimeField::primary();
    // line: six coordinates vanish
    CurveClass line = hilbert_classify(fp({v(0), v(1), v(2), v(3), v(4), v(5)}), F);
    CHECK(line.dim == 1);
    CHECK(line.degree == 1);
    CHECK(line.genus == 0);
    CurveClass conic = hilbert_classify(fp({v(0), v(1), v(2), v(3), v(4), v(5) * v(6) - v(7) * v(7)}), F);
    CHECK(conic.dim == 1);
    CHECK(conic.degree == 2);
    CHECK(conic.genus == 0);
    CurveClass ell = hilbert_classify(
        fp({v(0), v(1), v(2), v(3), v(4) * v(4) + v(5) * v(5) - v(6) * v(6), v(4) * v(4) - v(5) * v(5) - v(7) * v(7)}), F);
    CHECK(ell.dim == 1);
    CHECK(ell.degree == 4);
    CHECK(ell.genus == 1);
    CurveClass plane = hilbert_classify(fp({v(0), v(1), v(2), v(3), v(4)}), F);
    CHECK(plane.dim == 2);
}

TEST_CASE("fixed loci of the ten involutions")
{
    const int dims[10] = {-1, 0, 1, -1, -1, 1, 1, 1, 1, 1};
    for (int i = 1; i <= 10; ++i) {
        FixedLocusReport f = fixed_locus(involution_transform(i));
        CHECK(f.dimension == dims[i - 1]);
        CHECK(fixed_census(f) == published_rows()[i - 1].fixed);
        for (auto& c : f.components) {
            if (c.cls.dim == 0) {
                CHECK(c.kind == "node");
                CHECK(c.node >= 0);
            }
            if (c.kind == "elliptic") CHECK(c.euler == 0);
            if (c.kind == "line" || c.kind == "conic" || c.kind == "node") CHECK(c.euler == 2);
        }
    }
}

TEST_CASE("nodes on the fixed curves")
{
    // exact incidence: a node lies on a component iff the component's linear forms vanish there
    auto count = [](int i) {
        std::vector<int> per;
        for (auto& c : fixed_locus(involution_transform(i)).components) {
            int n = 0;
            for (auto& p : nodes().nodes) {
                bool on = true;
                for (auto& l : c.linear) on = on && l.eval(p).is_zero();
                n += on;
            }
            per.push_back(n);
        }
        return per;
    };
    CHECK(count(3) == std::vector<int>(4, 8));
    CHECK(count(8) == std::vector<int>(2, 4));
    CHECK(count(9) == std::vector<int>(2, 0));
    CHECK(count(7) == std::vector<int>(8, 2));
}

TEST_CASE("fixed loci are equivariant")
{
    std::mt19937_64 rng(3);
    const auto& G = projective_group();
    std::uniform_int_distribution<int> pick(0, int(G.order()) - 1);
    for (int i = 1; i <= 10; ++i) CHECK(fixed_locus_equivariant(involution_transform(i), G[pick(rng)]));
}

TEST_CASE("published sigma3 ideals")
{
    auto pub = published_sigma3_ideals();
    CHECK(pub.size() == 4);
    Sigma3Reconciliation r = reconcile_sigma3();
    CHECK(r.published_are_curves);
    CHECK_FALSE(r.conjugator.empty());
    CHECK(r.conjugate_fixes_published);
}

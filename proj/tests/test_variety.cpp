#include "scy/local.hpp"
#include "scy/symplectic.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <set>

using namespace scy;

TEST_CASE("Jacobian rank at nodes and smooth points")
{
    const Point& p = base_node();
    CHECK(on_variety(p));
    CHECK(jacobian_rank(p) == 3);
    Point q = p;
    q[0] = -q[0];
    CHECK(on_variety(q));
    CHECK(jacobian_rank(q) == 3);
    // X = (1, 0, 0, 0) forces Y_k = +-1
    Point s(8);
    s[4] = 1;
    for (int k = 0; k < 4; ++k) s[k] = k == 2 ? -1 : 1;
    CHECK(on_variety(s));
    CHECK(jacobian_rank(s) == 4);
    Point off(8);
    off[0] = 1;
    CHECK_FALSE(on_variety(off));
    CHECK_THROWS(jacobian_rank(off));
}

TEST_CASE("node catalog")
{
    const auto& ns = nodes().nodes;
    CHECK(ns.size() == 96);
    int y13 = 0;
    for (auto& p : ns) {
        CHECK(on_variety(p));
        CHECK(jacobian_rank(p) == 3);
        CHECK(tangent_cone_rank(p) == 4);
        CHECK(normalize_point(p) == p);
        y13 += p[1].is_zero() && p[3].is_zero();
    }
    CHECK(y13 == 16);
    CHECK(nodes().find(base_node()) >= 0);
}

TEST_CASE("completeness certificates")
{
    HilbertData h = singular_scheme(PrimeField::primary());
    CHECK(h.dim == 0);
    CHECK(h.degree == 96);
    CHECK(count_singular_points_mod(17) == 96);
    CHECK(count_singular_points_mod(41) == 96);
}

TEST_CASE("the group permutes the nodes")
{
    for (auto& g : group_generators()) {
        auto p = node_permutation(g);
        std::set<int> img(p.begin(), p.end());
        CHECK(img.size() == 96);
        CHECK(*img.begin() == 0);
    }
}

TEST_CASE("node stabilizers")
{
    int P = nodes().find(base_node());
    CHECK(node_stabilizer(projective_group(), P).size() == 256);
    auto trivial = MonoGroup::closure({}, GroupMode::Projective);
    CHECK(node_stabilizer(trivial, P).size() == 1);
    std::set<int> normal(normal_image().begin(), normal_image().end());
    const auto& act = node_action(projective_group());
    int inside = 0;
    for (int g : normal) inside += act[g][P] == P;
    CHECK(inside == 128);
}

TEST_CASE("stabilizer matrices fix the base node")
{
    int P = nodes().find(base_node());
    for (auto& m : stabilizer_matrices()) {
        CHECK(member(m, GroupName::HatGamma20_2));
        CHECK(node_permutation(phi(m))[P] == P);
    }
}

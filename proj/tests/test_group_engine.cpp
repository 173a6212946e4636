#include "scy/group.hpp"
#include "scy/local.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace scy;

namespace {

std::set<unsigned __int128> keys(const MonoGroup& g)
{
    std::set<unsigned __int128> s;
    for (auto& x : g.elements()) s.insert(x.key());
    return s;
}

}  // namespace

TEST_CASE("closure of the four generators")
{
    CHECK(linear_group().order() == 98304);
    CHECK(projective_group().order() == 24576);
}

TEST_CASE("closure of the local generators")
{
    CHECK(local_groups().G.order() == 256);
    CHECK(local_groups().H.order() == 128);
}

TEST_CASE("empty generator set gives the trivial group")
{
    auto g = MonoGroup::closure({}, GroupMode::Linear);
    CHECK(g.order() == 1);
}

TEST_CASE("closure does not depend on generator order")
{
    auto gens = group_generators();
    std::mt19937_64 rng(4);
    std::shuffle(gens.begin(), gens.end(), rng);
    auto g = MonoGroup::closure(gens, GroupMode::Projective);
    CHECK(keys(g) == keys(projective_group()));
}

TEST_CASE("projective normalization absorbs scalars")
{
    const auto& G = linear_group();
    for (size_t a = 0; a < G.order(); a += 997)
        for (int k = 0; k < 8; k += 2)
            CHECK((MonoTransform::scalar(8, k) * G[a]).normalized() == G[a].normalized());
}

TEST_CASE("centers")
{
    const auto& H = local_groups().H;
    auto z = H.center();
    REQUIRE(z.size() == 2);
    CHECK(H[z[1]] == MonoTransform::scalar(4, 4));
    // H0 has the same center
    std::vector<MonoTransform> h0;
    for (int x : local_groups().H0) h0.push_back(H[x]);
    auto H0 = MonoGroup::closure(h0, GroupMode::Linear);
    CHECK(H0.order() == 64);
    std::set<unsigned __int128> zh, zh0;
    for (int x : z) zh.insert(H[x].key());
    for (int x : H0.center()) zh0.insert(H0[x].key());
    CHECK(zh == zh0);
    // an abelian group is its own center
    auto c4 = MonoGroup::closure({MonoTransform::scalar(4, 2)}, GroupMode::Linear);
    CHECK(c4.center().size() == c4.order());
}

TEST_CASE("subgroup enumeration")
{
    auto c4 = MonoGroup::closure({MonoTransform::scalar(4, 2)}, GroupMode::Linear);
    CHECK(all_subgroups(multiplication_table(c4)).subgroups.size() == 3);
    auto trivial = MonoGroup::closure({}, GroupMode::Linear);
    CHECK(all_subgroups(multiplication_table(trivial)).subgroups.size() == 1);
}

TEST_CASE("subgroups of H satisfy Lagrange and are closed")
{
    const auto& H = local_groups().H;
    auto t = multiplication_table(H);
    auto subs = all_subgroups(t).subgroups;
    CHECK(subs.size() == 336);
    std::set<std::vector<int>> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == subs.size());
    for (auto& s : subs) {
        CHECK(H.order() % s.size() == 0);
        CHECK(table_closure(t, s) == s);
    }
}

TEST_CASE("subgroups of a small group against brute force")
{
    // oracle: closures of all pairs of elements cover every 2-generated subgroup
    const auto& G = local_groups().G;
    std::vector<MonoTransform> gens{G[1], G[2], G[3]};
    auto K = MonoGroup::closure(gens, GroupMode::Linear);
    auto t = multiplication_table(K);
    std::set<std::vector<int>> brute;
    for (size_t a = 0; a < K.order(); ++a)
        for (size_t b = 0; b < K.order(); ++b) brute.insert(table_closure(t, {int(a), int(b)}));
    auto subs = all_subgroups(t).subgroups;
    std::set<std::vector<int>> got(subs.begin(), subs.end());
    for (auto& s : brute) CHECK(got.count(s) == 1);
}

TEST_CASE("conjugacy classes of involutions")
{
    auto c2 = MonoGroup::closure({MonoTransform::scalar(4, 4)}, GroupMode::Linear);
    CHECK(involution_classes(c2).size() == 1);
    CHECK(involution_classes(projective_group()).size() == 18);
}

TEST_CASE("action on the nodes")
{
    const auto& G = projective_group();
    const auto& act = node_action(G);
    std::vector<int> id(nodes().nodes.size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
    CHECK(act[0] == id);
    std::set<int> orbit;
    for (size_t a = 0; a < G.order(); ++a) orbit.insert(act[a][0]);
    CHECK(orbit.size() == 96);
    for (int x : {0, 17, 95}) {
        size_t stab = 0;
        std::set<int> o;
        for (size_t a = 0; a < G.order(); ++a) {
            stab += act[a][x] == x;
            o.insert(act[a][x]);
        }
        CHECK(o.size() * stab == G.order());
    }
    CHECK(node_stabilizer(G, 0).size() == 256);
}

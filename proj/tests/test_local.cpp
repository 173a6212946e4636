#include "scy/calculators.hpp"
#include "scy/local.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace scy;

namespace {

const MonoTransform& m(int i) { return local_generators()[i - 1]; }

std::vector<int> subgroup_of(std::initializer_list<MonoTransform> gens)
{
    const auto& H = local_groups().H;
    auto K = MonoGroup::closure(gens, GroupMode::Linear, 1 << 10, &H[0]);
    std::vector<int> idx;
    for (auto& x : K.elements()) idx.push_back(H.index_of(x));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

TEST_CASE("Kronecker extendability examples")
{
    KroneckerResult r5 = kronecker_extendable(m(5));
    CHECK_FALSE(r5.extends);
    CHECK(r5.twist);
    CHECK(kronecker_extendable(m(2)).extends);
    KroneckerResult id = kronecker_extendable(MonoTransform::identity(4));
    CHECK(id.extends);
    CHECK_FALSE(id.twist);
}

TEST_CASE("local generators preserve the cone")
{
    for (auto& g : local_generators()) CHECK(quadric_factor(g.matrix()).has_value());
    ExactMatrix bad = ExactMatrix::identity(4);
    bad(0, 1) = 1;
    CHECK_FALSE(quadric_factor(bad).has_value());
    CHECK_THROWS(kronecker_extendable(bad));
}

TEST_CASE("H0")
{
    const auto& lg = local_groups();
    CHECK(lg.H0.size() == 64);
    CHECK(lg.H.order() == 2 * lg.H0.size());
    CHECK(lg.G.order() == 2 * lg.G0.size());
    for (auto g : {m(1) * m(5), m(2), m(3), m(4), m(6)}) CHECK(g.matrix().det() == CycloNum(1));
    for (int x : lg.H0) {
        CHECK(lg.H[x].matrix().det() == CycloNum(1));
        CHECK(kronecker_extendable(lg.H[x]).extends);
    }
}

TEST_CASE("subgroup types")
{
    const auto& H = local_groups().H;
    SubgroupTypeReport t = classify_subgroup({0});
    CHECK(std::count(t.types.begin(), t.types.end(), 1) == 1);
    auto pm = subgroup_of({MonoTransform::scalar(4, 4)});
    CHECK(pm.size() == 2);
    t = classify_subgroup(pm);
    CHECK(std::count(t.types.begin(), t.types.end(), 2) == 1);
    CHECK(H.index_of(MonoTransform::scalar(4, 4)) >= 0);
}

TEST_CASE("every subgroup of H has a type")
{
    auto all = classify_all_subgroups();
    CHECK(all.size() == 336);
    for (auto& r : all) CHECK_FALSE(r.types.empty());
}

TEST_CASE("types 1 to 3 are invariant under conjugation in H")
{
    const auto& H = local_groups().H;
    auto all = classify_all_subgroups();
    for (size_t s = 0; s < all.size(); s += 7) {
        for (size_t h = 1; h < H.order(); h += 31) {
            auto p = H.conjugation_perm(H[h]);
            std::vector<int> k;
            for (int x : all[s].elements) k.push_back(p[x]);
            std::sort(k.begin(), k.end());
            auto a = all[s].types, b = classify_subgroup(k).types;
            auto low = [](std::vector<int> v) {
                v.erase(std::remove(v.begin(), v.end(), 4), v.end());
                return v;
            };
            CHECK(low(a) == low(b));
        }
    }
}

TEST_CASE("chart correspondence")
{
    StabilizerReport r = stabilizer_report();
    CHECK(r.stabilizer_order == 256);
    CHECK(r.normal_part_order == 128);
    CHECK(r.correspondence.size() == 6);
    for (bool b : r.correspondence) CHECK(b);
    CHECK(r.local_map_injective);
    CHECK(r.normal_part_onto_h);
}

TEST_CASE("resolution extendability")
{
    CHECK(node_resolution_extendability({0}));
    CHECK(node_resolution_extendability({0, involution_index(2)}));
    const auto& ni = normal_image();
    CHECK_FALSE(node_resolution_extendability(std::vector<int>(ni.begin(), ni.end())));
}

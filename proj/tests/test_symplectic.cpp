#include "scy/symplectic.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace scy;

namespace {

// Generators of Sp(4,Z): translations, GL(2,Z) blocks and the standard J.
std::vector<SpElement> sp4z_generators()
{
    return {
        SpElement::from_ints({1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_ints({1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_ints({1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
        SpElement::from_ints({1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 1}),
        SpElement::from_ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}),
        SpElement::from_ints({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0}),
    };
}

SpElement word(std::mt19937_64& rng, const std::vector<SpElement>& gens, int maxlen)
{
    std::uniform_int_distribution<int> len(0, maxlen), pick(0, int(gens.size()) - 1);
    SpElement e = SpElement::identity();
    for (int k = len(rng); k > 0; --k) e = e * gens[pick(rng)];
    return e;
}

std::vector<SpElement> level2_generators()
{
    std::vector<SpElement> v;
    for (auto& e : full_generators())
        if (!e.fricke) v.push_back(e);
    return v;
}

}  // namespace

TEST_CASE("membership examples")
{
    CHECK(member(SpElement::identity(), GroupName::GammaPrime));
    SpElement m2 = SpElement::from_ints({1, 0, 0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1});
    CHECK(member(m2, GroupName::Gamma20_2));
    CHECK_FALSE(member(m2, GroupName::Gamma2_2_4));
    for (auto& row : involution_table()) CHECK(member(row.matrix, GroupName::HatGamma20_2n));
}

TEST_CASE("non-symplectic input is rejected")
{
    CHECK_THROWS(SpElement::from_ints({1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
}

TEST_CASE("predicates are closed under products and inverses")
{
    for (GroupName g : all_group_names()) {
        PredicateCheck c = predicate_closure_check(g, 1000, 11);
        CHECK_MESSAGE(c.closed, group_name_str(g));
    }
}

TEST_CASE("sign character")
{
    CHECK(sign_character(SpElement::identity().m) == 1);
    std::mt19937_64 rng(8);
    auto gens = sp4z_generators();
    for (int it = 0; it < 1000; ++it) {
        SpElement x = word(rng, gens, 8), y = word(rng, gens, 8);
        CHECK(sign_character((x * y).m) == sign_character(x.m) * sign_character(y.m));
    }
    bool onto = false;
    for (auto& g : gens) onto = onto || sign_character(g.m) == -1;
    CHECK(onto);
}

TEST_CASE("characteristic action")
{
    Characteristic zero{0, 0, 0, 0};
    for (auto& c : all_characteristics())
        CHECK(characteristic_action(SpElement::identity().m, c) == c);
    auto orbit = [&](Characteristic start) {
        std::set<Characteristic> o{start};
        std::vector<Characteristic> stack{start};
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            for (auto& g : sp4z_generators())
                if (o.insert(characteristic_action(g.m, c)).second) stack.push_back(characteristic_action(g.m, c));
        }
        return o;
    };
    auto even = orbit(zero);
    CHECK(even.size() == 10);
    for (auto& c : even) CHECK(is_even(c));
    CHECK(orbit({1, 0, 1, 0}).size() == 6);
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        SpElement x = word(rng, sp4z_generators(), 6), y = word(rng, sp4z_generators(), 6);
        for (auto& c : all_characteristics())
            CHECK(characteristic_action((x * y).m, c) == characteristic_action(x.m, characteristic_action(y.m, c)));
    }
}

TEST_CASE("coset indices")
{
    IndexReport r = gamma_prime_indices();
    CHECK(r.gamma20_2n == 6144);
    CHECK(r.hat_n == 12288);
    CHECK(r.hat_n == 2 * r.gamma20_2n);
    CHECK(coset_enumeration(level2_generators(), GroupName::Gamma20_2).reps.size() == 1);
}

TEST_CASE("coset table is consistent")
{
    const auto& ct = gamma_prime_cosets();
    const auto& gens = table_generators();
    for (size_t c = 0; c < ct.reps.size(); c += 101)
        for (auto& g : gens) CHECK(ct.find(ct.reps[c] * g) >= 0);
    std::set<int> seen;
    for (size_t c = 0; c < ct.reps.size(); c += 37) CHECK(seen.insert(ct.find(ct.reps[c])).second);
}

TEST_CASE("chi_n")
{
    CHECK(chi_n(SpElement::identity()) == 0);
    CHECK(chi_n(SpElement::fricke_involution()) == 0);
    std::mt19937_64 rng(10);
    auto gens = full_generators();
    // Gamma' elements as minimal member powers of random words
    for (int it = 0; it < 10000; ++it) {
        SpElement x = word(rng, gens, 10), p = x;
        while (!member(p, GroupName::GammaPrime)) p = p * x;
        CHECK(chi_n(p) == 0);
    }
    auto l2 = level2_generators();
    for (int it = 0; it < 1000; ++it) {
        SpElement x = word(rng, l2, 8), y = word(rng, l2, 8);
        CHECK((chi_n(x * y) - chi_n(x) - chi_n(y)) % 4 == 0);
    }
    CHECK_THROWS(chi_n(SpElement::from_ints({1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1})));
}

TEST_CASE("Fricke conjugation")
{
    std::mt19937_64 rng(12);
    auto l2 = level2_generators();
    for (int it = 0; it < 500; ++it) {
        SpElement x = word(rng, l2, 8);
        SpElement c = fricke_conjugate(x);
        CHECK(c.symplectic_mod8());
        CHECK(member(c, GroupName::Gamma20_2));
    }
    SpElement j = SpElement::fricke_involution();
    SpElement minus = SpElement::from_ints({-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
    CHECK(j * j == minus);
}

TEST_CASE("phi on generators and the table")
{
    const auto& tg = table_generators();
    for (size_t i = 0; i < tg.size(); ++i)
        CHECK(phi(tg[i]).normalized() == group_generators()[i].normalized());
    CHECK(phi(SpElement::identity()).is_scalar());
    // rows 7-9 of the table list the transpose of phi(matrix); both lie in one conjugacy class
    const auto& G = projective_group();
    auto classes = involution_classes(G);
    auto class_of = [&](int x) {
        for (size_t c = 0; c < classes.size(); ++c)
            if (std::count(classes[c].begin(), classes[c].end(), x)) return int(c);
        return -1;
    };
    for (size_t r = 0; r < involution_table().size(); ++r) {
        const auto& row = involution_table()[r];
        MonoTransform p = phi(row.matrix).normalized();
        auto transposed = MonoTransform::from_matrix(row.transform.matrix().transpose());
        REQUIRE(transposed);
        if (r >= 6 && r <= 8) CHECK(p == transposed->normalized());
        else CHECK(p == row.transform.normalized());
        CHECK(class_of(G.index_of(p)) == class_of(G.index_of(row.transform)));
    }
    CHECK_THROWS(phi(SpElement::from_ints({1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1})));
}

TEST_CASE("Gamma' words map to scalars")
{
    std::mt19937_64 rng(13);
    const auto& gens = full_generators();
    std::vector<MonoTransform> images;
    for (auto& g : gens) images.push_back(phi(g));
    std::uniform_int_distribution<int> len(1, 8), pick(0, int(gens.size()) - 1);
    for (int it = 0; it < 100; ++it) {
        SpElement x = SpElement::identity();
        MonoTransform t = MonoTransform::identity(8);
        for (int k = len(rng); k > 0; --k) {
            int g = pick(rng);
            x = x * gens[g];
            t = t * images[g];
        }
        SpElement p = x;
        MonoTransform tp = t;
        while (!member(p, GroupName::GammaPrime)) {
            p = p * x;
            tp = tp * t;
        }
        CHECK(tp.is_scalar());
    }
}

TEST_CASE("phi is a homomorphism up to scalars")
{
    std::mt19937_64 rng(14);
    const auto& G = projective_group();
    for (int it = 0; it < 200; ++it) {
        SpElement x = word(rng, full_generators(), 6), y = word(rng, full_generators(), 6);
        CHECK(G.index_of(phi(x * y)) == G.index_of(phi(x) * phi(y)));
    }
}

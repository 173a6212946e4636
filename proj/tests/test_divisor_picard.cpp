#include "scy/calculators.hpp"
#include "scy/divisor.hpp"
#include "scy/picard.hpp"
#include "scy/variety.hpp"

#include "doctest.h"

#include <set>

using namespace scy;

namespace {

int form_named(const std::string& name)
{
    const auto& forms = divisor_data().forms;
    for (size_t f = 0; f < forms.size(); ++f)
        if (forms[f].name() == name) return int(f);
    return -1;
}

// Coefficient vector of a quadric on the 36 degree-2 monomials.
std::vector<CycloNum> coeffs(const XPoly& p)
{
    auto ms = monomials_of_degree(8, 2);
    std::vector<CycloNum> v;
    for (auto m : ms) v.push_back(p.coeff(m));
    return v;
}

int span_rank(const std::vector<XPoly>& ps)
{
    ExactMatrix m(int(ps.size()), 36);
    for (size_t i = 0; i < ps.size(); ++i) {
        auto v = coeffs(ps[i]);
        for (int j = 0; j < 36; ++j) m(int(i), j) = v[j];
    }
    return echelonize(m).rank;
}

QMat minus_identity(QMat a)
{
    for (size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
    return a;
}

}  // namespace

TEST_CASE("second order orbit")
{
    auto orbit = second_order_orbit();
    CHECK(orbit.size() == 60);
    std::set<std::string> names;
    for (auto& f : divisor_forms()) names.insert(f.name());
    for (auto n : {"X0", "X1", "X2", "X3", "X0+X1+X2+X3"}) CHECK(names.count(n) == 1);
    CHECK(divisor_forms().size() == 70);
    CHECK(names.size() == 70);
}

TEST_CASE("splitting examples")
{
    const PrimeField& F = PrimeField::primary();
    const auto& forms = divisor_data().forms;
    for (auto [name, parts] : {std::pair{"Y0", 1}, {"X0", 1}, {"X0-X1", 2}}) {
        int f = form_named(name);
        REQUIRE(f >= 0);
        CHECK(split_divisor(forms[f], f, F).components.size() == size_t(parts));
    }
    // witness: Y1^2 + Y3^2 - 2 X0^2 + 2 X1^2 lies in the span of the four quadrics
    XPoly w = XPoly::var(1).pow(2) + XPoly::var(3).pow(2) - CycloNum(2) * XPoly::var(4).pow(2) +
              CycloNum(2) * XPoly::var(5).pow(2);
    auto qs = variety_quadrics();
    CHECK(span_rank(qs) == 4);
    qs.push_back(w);
    CHECK(span_rank(qs) == 4);
}

TEST_CASE("component census")
{
    const DivisorData& d = divisor_data();
    CHECK(d.comps.size() == 132);
    std::set<std::string> fp;
    for (auto& c : d.comps) fp.insert(c.fingerprint);
    CHECK(fp.size() == 132);
    for (size_t f = 0; f < d.forms.size(); ++f) {
        long long deg = 0;
        for (int c : d.comps_of_form[f]) deg += d.comps[c].degree;
        CHECK(deg == 16 * d.forms[f].weight);
    }
}

TEST_CASE("component action")
{
    auto id = component_action(MonoTransform::identity(8));
    for (size_t c = 0; c < id.size(); ++c) CHECK(id[c] == int(c));
    for (int k = 0; k < 8; k += 2) CHECK(component_action(MonoTransform::scalar(8, k)) == id);
    for (int g = 0; g < 3; ++g) {
        auto p = component_action(group_generators()[g]);
        CHECK(std::set<int>(p.begin(), p.end()).size() == 132);
    }
}

TEST_CASE("level two orbits on the split linear forms")
{
    std::vector<MonoTransform> gens;
    for (auto& e : full_generators())
        if (!e.fricke) gens.push_back(phi(e));
    auto sizes = form_orbit_sizes(gens, split_linear_forms());
    CHECK(split_linear_forms().size() == 56);
    CHECK(sizes == std::vector<int>{24, 32});
}

TEST_CASE("Picard data")
{
    const PicardData& pd = picard_data();
    CHECK(pd.rank == 32);
    CHECK(int(pd.Q.size()) - pd.rank == 100);
    // the pairing is preserved by every level-two generator permutation
    for (int g = 0; g < 3; ++g) {
        const auto& p = pd.generator_perm[g];
        bool same = true;
        for (size_t v = 0; v < pd.Q.size(); ++v)
            for (size_t w = 0; w < pd.Q.size(); ++w) same = same && pd.Q[p[v]][p[w]] == pd.Q[v][w];
        CHECK(same);
    }
}

TEST_CASE("invariant dimensions against the averaging oracle")
{
    const PicardData& pd = picard_data();
    CHECK(invariant_dimension_of_group(pd, {0}) == 32);
    CHECK(invariant_dimension_of(pd, involution_index(2)) == 24);
    CHECK(invariant_dimension_of(pd, involution_index(10)) == 18);
    for (int i = 1; i <= 10; ++i) {
        QMat a = word_action(pd, projective_group().word(involution_index(i)));
        QMat avg = a;
        for (size_t r = 0; r < a.size(); ++r)
            for (size_t c = 0; c < a.size(); ++c) avg[r][c] = (a[r][c] + (r == c ? 1 : 0)) / 2;
        CHECK(q_rank(avg) == invariant_dimension(a));
    }
    QMat stacked;
    for (auto& a : pd.generator_action) {
        QMat m = minus_identity(a);
        stacked.insert(stacked.end(), m.begin(), m.end());
    }
    CHECK(pd.rank - q_rank(stacked) >= 1);
}

TEST_CASE("Picard cache round trip")
{
    PicardData pd;
    pd.seed = 9;
    pd.prime = 17;
    pd.hyperplane = {1, 2, 3};
    pd.Q = {{1, -2}, {3, 4}};
    pd.rank = 2;
    pd.basis = {0, 1};
    pd.generator_action = {{{mpq_class(1, 2), 0}, {0, 1}}};
    pd.generator_perm = {{1, -1}};
    pd.components = {"Y0 abc", "X0 def"};
    PicardData back = picard_from_json(picard_to_json(pd));
    CHECK(back.seed == pd.seed);
    CHECK(back.prime == pd.prime);
    CHECK(back.hyperplane == pd.hyperplane);
    CHECK(back.Q == pd.Q);
    CHECK(back.rank == pd.rank);
    CHECK(back.basis == pd.basis);
    CHECK(back.generator_action == pd.generator_action);
    CHECK(back.generator_perm == pd.generator_perm);
    CHECK(back.components == pd.components);
    CHECK(picard_to_json(back) == picard_to_json(pd));
    CHECK_THROWS(picard_from_json("{\"version\": 1}"));
}

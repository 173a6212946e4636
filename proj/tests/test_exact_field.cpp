#include "scy/cyclo.hpp"
#include "scy/matrix.hpp"

#include "doctest.h"

#include <random>

using namespace scy;

namespace {

CycloNum rnd(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> n(-5, 5), d(1, 3);
    return CycloNum(mpq_class(n(rng), d(rng)), mpq_class(n(rng), d(rng)), mpq_class(n(rng), d(rng)),
                    mpq_class(n(rng), d(rng)));
}

ExactMatrix random_matrix(std::mt19937_64& rng, int r, int c, int sparsity = 0)
{
    ExactMatrix m(r, c);
    std::uniform_int_distribution<int> keep(0, sparsity);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (keep(rng) == 0) m(i, j) = rnd(rng);
    return m;
}

}  // namespace

TEST_CASE("defining relations of Q(zeta8)")
{
    CHECK(CycloNum::zeta(4) == CycloNum(-1));
    CHECK(CycloNum::zeta(8) == CycloNum(1));
    CHECK(CycloNum::zeta(-1) * CycloNum::zeta(1) == CycloNum(1));
    CHECK(CycloNum::sqrt2() * CycloNum::sqrt2() == CycloNum(2));
    CHECK(CycloNum::i() * CycloNum::i() == CycloNum(-1));
}

TEST_CASE("Gaussian inverse")
{
    CycloNum one_plus_i = CycloNum(1) + CycloNum::i();
    CycloNum want = (CycloNum(1) - CycloNum::i()) * CycloNum(mpq_class(1, 2));
    CHECK(one_plus_i.inv() == want);
    CHECK(CycloNum(1) / one_plus_i == want);
}

TEST_CASE("division by zero is an error")
{
    CHECK_THROWS_AS(CycloNum().inv(), DivisionByZero);
    CHECK_THROWS_AS(CycloNum(3) / CycloNum(), DivisionByZero);
}

TEST_CASE("canonical form")
{
    CHECK(CycloNum(mpq_class(2, 4)) == CycloNum(mpq_class(1, 2)));
    CycloNum h(mpq_class(-3, 6));
    CHECK(h[0].get_den() > 0);
    CHECK(h == CycloNum(mpq_class(-1, 2)));
    CHECK(CycloNum(mpq_class(6, 4), 0, 0, mpq_class(-4, 8))[3] == mpq_class(-1, 2));
    CycloNum x(mpq_class(1, 2), 0, mpq_class(-3, 4), 1);
    CHECK(CycloNum::parse(x.str()) == x);
}

TEST_CASE("conjugation and norm")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        CycloNum a = rnd(rng);
        CycloNum prod = 1;
        for (int k : {1, 3, 5, 7}) prod *= a.galois(k);
        CHECK(prod.is_rational());
        CHECK(prod[0] == a.norm());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 1000; ++it) {
        CycloNum a = rnd(rng), b = rnd(rng), c = rnd(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == CycloNum(1));
    }
}

TEST_CASE("complex embedding")
{
    auto z = CycloNum::zeta(1).to_complex();
    CHECK(std::abs(z - std::polar(1.0, M_PI / 4)) < 1e-15);
    CHECK(std::abs(CycloNum::sqrt2().to_complex() - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("echelonize small cases")
{
    Echelon e = echelonize(ExactMatrix::identity(8));
    CHECK(e.rank == 8);
    CHECK(e.kernel.empty());

    ExactMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = CycloNum::i();
    m(1, 0) = CycloNum::i();
    m(1, 1) = -1;
    e = echelonize(m);
    CHECK(e.rank == 1);
    REQUIRE(e.kernel.size() == 1);
    CHECK(m.apply(e.kernel[0]) == std::vector<CycloNum>{0, 0});
}

TEST_CASE("echelonize random matrices")
{
    std::mt19937_64 rng(2);
    for (int it = 0; it < 20; ++it) {
        // rank deficiency forced by a duplicated combination of rows
        ExactMatrix m = random_matrix(rng, 5, 9, it % 3);
        CycloNum s = rnd(rng);
        for (int j = 0; j < 9; ++j) m(4, j) = m(0, j) + s * m(1, j);
        Echelon e = echelonize(m);
        CHECK(e.rank + int(e.kernel.size()) == 9);
        CHECK(e.rank <= 4);
        for (auto& k : e.kernel) CHECK(m.apply(k) == std::vector<CycloNum>(5));
        // every input row is a combination of the echelon rows: appending them keeps the rank
        ExactMatrix both(5 + e.rank, 9);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 9; ++j) both(i, j) = m(i, j);
        for (int i = 0; i < e.rank; ++i)
            for (int j = 0; j < 9; ++j) both(5 + i, j) = e.echelon(i, j);
        CHECK(echelonize(both).rank == e.rank);
        CHECK(echelonize(e.echelon).echelon == e.echelon);
    }
}

TEST_CASE("rank of a product is bounded by the factors")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        ExactMatrix a = random_matrix(rng, 4, 3, 2), b = random_matrix(rng, 3, 5, 2);
        int ra = echelonize(a).rank, rb = echelonize(b).rank;
        CHECK(echelonize(a * b).rank <= std::min(ra, rb));
    }
}

#pragma once
#include "scy/mono.hpp"
#include "scy/theta.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace scy {

// Element M * J^fricke of the extended group, M = (A B; C D) with A, B, D mod 8 and C mod 16.
// C mod 16 is what the Fricke conjugation (D, -C/2; -2B, A) needs.
struct SpElement {
    std::array<int, 16> m{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    int fricke = 0;
    std::optional<IntMat4> lift;  // integral matrix for explicit generators and their products

    static SpElement identity() { return {}; }
    static SpElement from_ints(const std::array<long long, 16>& v, bool fricke = false);
    static SpElement from_lift(const IntMat4& v);
    static SpElement fricke_involution();

    int at(int r, int c) const { return m[4 * r + c]; }
    void reduce();
    bool symplectic_mod8() const;
    bool c_even() const;
    SpElement inverse() const;
    std::string key() const;
    std::string str() const;
};

SpElement operator*(const SpElement& x, const SpElement& y);
bool operator==(const SpElement& x, const SpElement& y);
SpElement fricke_conjugate(const SpElement& x);  // J x J^-1 for fricke-free x

enum class GroupName {
    Gamma2_2, Gamma2_4, Gamma2_8, Gamma2_2_4, Gamma20_2, Gamma20_4, Gamma20theta_4, Gamma20_2n,
    HatGamma20_2, HatGamma20_2n, GammaPrime, GammaPrimeIntro
};
GroupName parse_group_name(const std::string& s);
std::string group_name_str(GroupName g);
const std::vector<GroupName>& all_group_names();

bool member(const SpElement& e, GroupName g);

// Parity of the permutation induced on the six odd characteristics (any integral matrix mod 2).
int sign_character(const std::array<int, 16>& m);
// chi_n as an exponent of i; chi_n(J) = 0.
int chi_n(const SpElement& e);

using Characteristic = std::array<int, 4>;  // (a1, a2, b1, b2)
bool is_even(const Characteristic& c);
Characteristic characteristic_action(const std::array<int, 16>& m, const Characteristic& c);
std::vector<Characteristic> all_characteristics();

// Standard generators: the four transformation-table matrices in the order of group_generators().
const std::vector<SpElement>& table_generators();
// Larger generating set of the extended group (translations, GL2 blocks, lower translations, J).
const std::vector<SpElement>& full_generators();

struct CosetTable {
    std::vector<SpElement> reps;
    std::vector<std::vector<int>> words;  // generator words, product left to right
    int find(const SpElement& e) const;   // coset index of Gamma' e, or -1
    std::unordered_map<std::string, std::vector<int>> buckets;
    GroupName sub;
};

// Right cosets of sub in the group generated by gens, by breadth-first search.
CosetTable coset_enumeration(const std::vector<SpElement>& gens, GroupName sub, size_t cap = 1 << 16);
const CosetTable& gamma_prime_cosets();  // table generators, sub = Gamma'

struct IndexReport {
    long gamma20_2 = 0, gamma20_2n = 0, hat = 0, hat_n = 0;
};
IndexReport gamma_prime_indices();

// phi(e) modulo the scalars <i>, through the coset word of e.
MonoTransform phi(const SpElement& e);
MonoTransform phi_word(const std::vector<int>& word);

// Rows of the involution table: mod-8 matrices (row 10 is J) and their transformations.
struct InvolutionRow {
    SpElement matrix;
    MonoTransform transform;
};
const std::vector<InvolutionRow>& involution_table();

struct PredicateCheck {
    GroupName group;
    int pairs = 0;        // member pairs tested
    bool closed = true;   // products and inverses stay members
};
// Random members are minimal member powers of random words in the full generators.
PredicateCheck predicate_closure_check(GroupName g, int pairs, uint64_t seed);

}  // namespace scy

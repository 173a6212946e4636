#pragma once
#include "scy/groebner.hpp"
#include "scy/group.hpp"
#include "scy/variety.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scy {

using LinearForm = std::array<CycloNum, 4>;  // coefficients of X0..X3

// Orbit of [1:0:0:0] under the second-order representation (60 forms).
std::vector<LinearForm> second_order_orbit();
// The three kinds of generators of that representation, as 4x4 matrices.
std::vector<ExactMatrix> second_order_generators();

struct DivisorForm {
    enum Kind { Coordinate, Linear, Theta } kind;
    int index = 0;      // Y index for Coordinate; characteristic index for Theta
    LinearForm lin{};   // Linear kind
    int a = 0, b = 0;   // Theta kind: characteristic halves as 2-bit integers
    XPoly poly;         // defining polynomial
    int weight = 1;     // polynomial degree
    std::string name() const;
};

// sum_c (-1)^{b.c} X_c X_{c+a}
XPoly theta_quadric(int a, int b);
std::vector<DivisorForm> divisor_forms();  // 70 forms

struct DivisorComponent {
    int form = -1;
    std::vector<XPoly> cut;    // exact extra generators beyond the form
    std::vector<FPoly> basis;  // reduced Groebner basis of the component ideal
    std::string fingerprint;   // canonical degree-1 and degree-2 pieces
    long long degree = 0;
};

struct SplitResult {
    std::vector<DivisorComponent> components;
    std::vector<int> square_subsets;  // bitmasks T with prod_{k in T} D_k a square on the divisor
};
SplitResult split_divisor(const DivisorForm& f, int form_index, const PrimeField& F);

struct DivisorData {
    std::vector<DivisorForm> forms;
    std::vector<DivisorComponent> comps;
    std::map<std::string, int> by_fingerprint;
    std::vector<std::vector<int>> comps_of_form;
    int sibling(int c) const;  // other component of the same form, or -1
};
const DivisorData& divisor_data();

// Polynomial square root over Q(zeta8), if the input is a perfect square.
std::optional<XPoly> poly_sqrt(const XPoly& f);

std::string fingerprint_of_pieces(const std::vector<FPoly>& polys, const PrimeField& F);
std::string fingerprint_of(const std::vector<FPoly>& gb, const PrimeField& F);
// Fingerprint of g(W) computed from the stored fingerprint data of W.
std::string pushed_fingerprint(const DivisorComponent& c, const MonoTransform& g, const PrimeField& F);
// Image of each component under g; -1 where the image is not a listed component.
std::vector<int> component_action(const MonoTransform& g);
// Ideal generators of g(W).
std::vector<FPoly> pushed_ideal(const DivisorComponent& c, const MonoTransform& g, const PrimeField& F);

// Orbit sizes on a set of forms under the group generated by gens, via the component action.
std::vector<int> form_orbit_sizes(const std::vector<MonoTransform>& gens, const std::vector<int>& forms);
// Linear forms whose divisor splits into two components.
std::vector<int> split_linear_forms();

}  // namespace scy

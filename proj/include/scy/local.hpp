#pragma once
#include "scy/group.hpp"
#include "scy/symplectic.hpp"
#include "scy/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scy {

// Local coordinates x1..x4 at a node, read as the matrix X = (x1 x2; x3 x4).
// The cone is x1 x4 = x2 x3; a local transformation is a 4x4 point map x -> T x.

// m1..m6 as monomial maps on four coordinates.
const std::vector<MonoTransform>& local_generators();
// M1..M6 (M6 carries the Fricke involution).
const std::vector<SpElement>& stabilizer_matrices();
// The node [sqrt2, 0, sqrt2, 0, 1, 1, 0, 0].
const Point& base_node();

XPoly cone_quadric();  // x1 x4 - x2 x3 in variables 0..3
// c with q(T x) = c q(x), if T preserves the cone equation up to a scalar.
std::optional<CycloNum> quadric_factor(const ExactMatrix& t);

struct KroneckerResult {
    bool extends = false;  // X -> A X tB
    bool twist = false;    // X -> A tX tB
};
// Throws std::invalid_argument if t does not preserve the cone.
KroneckerResult kronecker_extendable(const ExactMatrix& t);
KroneckerResult kronecker_extendable(const MonoTransform& t);

struct LocalGroups {
    MonoGroup G;  // <m1..m6>
    MonoGroup H;  // <m2^2, m3^2, m2m1, m3m1, m4m1, m5m1, m6m1>
    std::vector<int> H0;  // indices into H: determinant one, equal to the untwisted part
    std::vector<int> G0;  // indices into G: determinant one
};
// Throws if the two descriptions of H0 disagree.
const LocalGroups& local_groups();

struct SubgroupTypeReport {
    int id = 0;
    std::vector<int> elements;  // indices into H
    std::vector<int> types;     // subset of {1,2,3,4}, type 4 by conjugacy inside G
    bool type4_in_h = false;    // conjugacy inside H suffices
    std::string central_witness;  // type 3
    std::string conjugator;       // type 4 (element of G)
};
// Throws std::runtime_error on a classification gap.
SubgroupTypeReport classify_subgroup(const std::vector<int>& k, int id = 0);
std::vector<SubgroupTypeReport> classify_all_subgroups();

// Linear map induced on the local coordinates at the base node by a projective
// transformation fixing it.
ExactMatrix local_image(const MonoTransform& g);

struct StabilizerReport {
    size_t stabilizer_order = 0;    // stabilizer of the base node in the projective group
    size_t generated_order = 0;     // subgroup generated by phi(M1..M6)
    size_t normal_part_order = 0;   // stabilizer inside the image of the chi_n kernel
    std::vector<bool> correspondence;  // local_image(phi(Mi)) == mi
    bool local_map_injective = false;  // stabilizer -> G is a bijection
    bool normal_part_onto_h = false;   // normal part -> H is a bijection
};
StabilizerReport stabilizer_report();

// Projective group indices of the image of the chi_n kernel.
const std::vector<int>& normal_image();

// True iff at one node of every orbit of the subgroup, all stabilizer elements act untwisted.
bool node_resolution_extendability(const std::vector<int>& subgroup);

}  // namespace scy

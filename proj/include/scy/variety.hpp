#pragma once
#include "scy/groebner.hpp"
#include "scy/group.hpp"
#include "scy/mono.hpp"

#include <map>
#include <vector>

namespace scy {

using Point = std::vector<CycloNum>;

// Sign pattern of the defining quadrics: Y_k^2 = sum_a kSigns[k][a] X_a^2.
extern const int kSigns[4][4];

const std::vector<XPoly>& variety_quadrics();
std::vector<FPoly> variety_quadrics_fp(const PrimeField& F, const MonoOrder& o = {});
XPoly quadric_rhs(int k);  // sum_a kSigns[k][a] X_a^2

// The four generator transformations of the automorphism group (last one is the Fricke map).
const std::vector<MonoTransform>& group_generators();
const MonoGroup& linear_group();      // order 98304
const MonoGroup& projective_group();  // order 24576

Point normalize_point(const Point& p);
bool on_variety(const Point& p);
int jacobian_rank(const Point& p);
// 4x8 Jacobian of the quadrics at p.
ExactMatrix jacobian(const Point& p);
// Rank of the quadratic tangent cone at a singular point (4 for a node).
int tangent_cone_rank(const Point& p);

struct NodeSet {
    std::vector<Point> nodes;
    std::map<std::string, int> index;
    int find(const Point& p) const;
};
std::string point_key(const Point& p);
const NodeSet& nodes();
// Candidates of the stated shape (entries 0, +-1, +-sqrt2, two vanishing Y's).
std::vector<Point> enumerate_node_candidates();
// Degree of the singular scheme (quadrics plus 4x4 Jacobian minors).
HilbertData singular_scheme(const PrimeField& F);
// Number of singular F_p-points (p = 1 mod 8).
int count_singular_points_mod(uint32_t p);

std::vector<int> node_permutation(const MonoTransform& t);
// Permutations of the 96 nodes for all elements of a group, composed along words.
std::vector<std::vector<int>> node_action(const MonoGroup& g);
std::vector<int> node_stabilizer(const MonoGroup& g, int node);

}  // namespace scy

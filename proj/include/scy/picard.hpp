#pragma once
#include "scy/divisor.hpp"
#include "scy/group.hpp"
#include "scy/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scy {

// Length of the zero-dimensional scheme cut by the union of the generator lists; -1 if not finite.
long long intersection_length(const std::vector<const std::vector<FPoly>*>& parts, const PrimeField& F);

// Hyperplane over F_p, nonzero at every node; seeded.
std::vector<uint32_t> node_avoiding_hyperplane(uint64_t seed, const PrimeField& F);

// Divisor classes tested against the curves W.H, one per component W.
struct PicardData {
    uint64_t seed = 0;
    uint32_t prime = 0;
    std::vector<uint32_t> hyperplane;
    std::vector<std::vector<long long>> Q;  // Q[V][W] = V.W.H
    int rank = 0;
    std::vector<int> basis;                 // components whose columns span
    std::vector<QMat> generator_action;     // one per group generator, on the basis
    std::vector<std::vector<int>> generator_perm;  // component permutation, -1 where undefined
    std::vector<std::string> components;    // form name and fingerprint per component
};

PicardData compute_picard(uint64_t seed = 1, const PrimeField& F = PrimeField::primary());
const PicardData& picard_data();

// Curve-pairing vector of the image of component c under g, for all components.
std::vector<long long> pushed_column(const PicardData& pd, int c, const MonoTransform& g, const PrimeField& F);

// Action matrix of an element given as a word in the group generators (product left to right).
QMat word_action(const PicardData& pd, const std::vector<int>& word);
int invariant_dimension(const QMat& a);

// Orbit decomposition sizes of the component classes under a permutation group (Theorem-style check).
std::vector<int> component_orbit_sizes(const std::vector<std::vector<int>>& perms, int n);

// JSON round trip for the cache.
std::string picard_to_json(const PicardData& pd);
PicardData picard_from_json(const std::string& text);
inline constexpr int kPicardCacheVersion = 2;
// Reads the cache at path when it matches version and seed, otherwise computes and writes it.
PicardData picard_load_or_build(const std::string& path, uint64_t seed = 1, bool* loaded = nullptr);

}  // namespace scy

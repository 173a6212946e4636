#pragma once
#include "scy/groebner.hpp"
#include "scy/variety.hpp"

#include <string>
#include <vector>

namespace scy {

struct EigenSplit {
    CycloNum mu;                               // eigenvalue of V+, -mu for V-
    std::vector<std::vector<CycloNum>> plus;   // basis vectors in C^8
    std::vector<std::vector<CycloNum>> minus;
};
// Throws std::invalid_argument if t^2 is not scalar or its square root is not in Q(zeta8).
EigenSplit eigen_split(const MonoTransform& t);

struct CurveClass {
    int dim = -1;
    long long degree = 0;
    long long genus = 0;
};
// Dimension, degree and arithmetic genus from the Hilbert polynomial; stabilization
// is checked on two consecutive fits up to the cap.
CurveClass hilbert_classify(const std::vector<FPoly>& gens, const PrimeField& F, int cap = 40);

struct FixedComponent {
    int part = 0;  // +1 for V+, -1 for V-
    std::vector<XPoly> linear;  // linear forms cutting out the spanning subspace
    std::vector<FPoly> basis;   // Groebner basis of linear forms plus the quadrics
    CurveClass cls;
    std::string kind;  // "node", "point", "line", "conic", "elliptic", "curve"
    int node = -1;     // node index for isolated points
    int euler = 0;  // Euler number of the matching component on a small resolution
    std::string fingerprint;
    std::string ideal_str() const;
};

struct FixedLocusReport {
    std::string element;
    int dim_plus = 0, dim_minus = 0;
    std::vector<FixedComponent> components;
    int dimension = -1;  // -1 for empty
    int count(const std::string& kind) const;
    int euler_sum() const;
};
// Throws std::runtime_error on a component of dimension >= 2.
FixedLocusReport fixed_locus(const MonoTransform& t, int hilbert_cap = 40);

// Component fingerprints of g(report) versus those of the report of g t g^-1.
bool fixed_locus_equivariant(const MonoTransform& t, const MonoTransform& g);

// The four elliptic curve ideals as printed for the sigma_3 example.
std::vector<std::vector<XPoly>> published_sigma3_ideals();
std::string ideal_fingerprint(const std::vector<XPoly>& gens);
struct Sigma3Reconciliation {
    bool published_are_curves = false;   // each published ideal is an elliptic curve on the variety
    bool direct_match = false;           // published set equals the computed set
    std::string conjugator;              // group element moving computed onto published, if any
    bool conjugate_fixes_published = false;  // g sigma3 g^-1 fixes the published curves pointwise
};
Sigma3Reconciliation reconcile_sigma3();

}  // namespace scy

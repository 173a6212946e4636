#pragma once
#include "scy/poly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace scy {

// Reduced Groebner basis over F_p for the given order.
std::vector<FPoly> groebner(std::vector<FPoly> gens, const PrimeField& F, const MonoOrder& o);
FPoly normal_form(const FPoly& f, const std::vector<FPoly>& G, const PrimeField& F, const MonoOrder& o);

// Saturation by each listed variable in turn (Bayer-Stillman); result in order o.
std::vector<FPoly> saturate(std::vector<FPoly> gens, const std::vector<int>& vars, const PrimeField& F,
                            const MonoOrder& o);

// Hilbert series numerator N(t) of S/I with S in nvars variables, I = (leading monomials).
std::vector<long long> hilbert_numerator(std::vector<Mono> lms, int nvars);

struct HilbertData {
    int nvars = kVars;
    std::vector<long long> numerator;
    int dim = -1;          // projective dimension, -1 for empty
    long long degree = 0;  // leading coefficient times dim!
    long long constant = 0;  // Hilbert polynomial value at 0
    long long value(int d) const;  // Hilbert function
    long long genus() const { return 1 - constant; }  // arithmetic genus for curves
};

HilbertData hilbert_from_lms(const std::vector<Mono>& lms, int nvars = kVars);
HilbertData hilbert_of(const std::vector<FPoly>& gens, const PrimeField& F);

// Canonical reduced basis of the degree-d piece of an ideal given by a Groebner basis.
std::vector<FPoly> graded_piece(const std::vector<FPoly>& G, int d, const PrimeField& F, const MonoOrder& o);

}  // namespace scy

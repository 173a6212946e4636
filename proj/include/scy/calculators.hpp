#pragma once
#include "scy/fixed.hpp"
#include "scy/picard.hpp"
#include "scy/symplectic.hpp"

#include "json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace scy {

// Projective group index of the i-th involution of the table (1-based).
int involution_index(int i);
const MonoTransform& involution_transform(int i);

// Euler number of the small resolution: smooth complete intersection of four
// quadrics in P^7 plus two for every node.
long long resolution_euler();

int invariant_dimension_of(const PicardData& pd, int group_index);
// Invariant dimension for a subgroup given by projective indices.
int invariant_dimension_of_group(const PicardData& pd, const std::vector<int>& subgroup);

// Projective indices of the image of a named group containing Gamma'.
// Throws std::invalid_argument if the image is not a subgroup.
std::vector<int> group_image(GroupName g);
// Few elements generating the given subgroup.
std::vector<int> generating_subset(const std::vector<int>& subgroup);
// "trivial", "sigma<1..10>", "J", or a group name such as "Gamma20[2]n".
std::vector<int> parse_group_spec(const std::string& spec);

struct Hodge {
    long long h11 = 0, h12 = 0;
};
// Throws std::invalid_argument on an odd Euler number.
Hodge hodge_numbers(long long pic, long long euler);

// Euler number of the common fixed set of <g, h> on the resolution, if known.
using FixedEulerOracle = std::function<std::optional<double>(int g, int h)>;
struct StringEuler {
    double value = 0;
    bool complete = true;  // false when some commuting pair had no fixed-set data
};
// (1/#G) sum over commuting pairs of e(M^<g,h>); group given by projective indices.
StringEuler string_euler(const std::vector<int>& group, const FixedEulerOracle& oracle);
// Oracle covering the trivial group and one involution with its fixed-locus report.
FixedEulerOracle involution_oracle(int sigma_index, const FixedLocusReport& fixed);
// e = e(resolution)/2 + 3/2 * sum of component Euler numbers.
double involution_euler_shortcut(const FixedLocusReport& fixed);

struct QuotientReport {
    std::string group;  // "trivial" or "sigma<i>"
    std::string transform;
    int pic_regular = 0;
    FixedLocusReport fixed;
    int fixed_components = 0;
    int pic_resolution = 0;
    long long euler = 0;
    Hodge hodge;
    bool extendable = true;
    bool euler_paths_agree = true;
};
QuotientReport trivial_report(const PicardData& pd);
QuotientReport involution_report(int i, const PicardData& pd, int hilbert_cap = 40);

struct PublishedRow {
    int pic_regular, dimension, pic, euler;
    const char* fixed;
};
// Reference values for the ten involutions.
const std::vector<PublishedRow>& published_rows();
// Census string in the table's vocabulary: "empty", "16 nodes", "4 elliptic", "8 conics", ...
std::string fixed_census(const FixedLocusReport& f);

nlohmann::json report_to_json(const QuotientReport& r);
std::string report_to_text(const QuotientReport& r);

}  // namespace scy

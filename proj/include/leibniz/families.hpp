#pragma once

#include "leibniz/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

enum class Family {
    L2,
    // right, codimension one, canonical forms
    G1, G2, G3, G4,
    // right, codimension two
    Gc2,
    // left counterparts
    L1, Ll2, Ll3, Ll4, Lc2,
    // right extensions before absorption, one per parameter case
    RThm1Case1, RThm1Case2, RThm1Case3, RThm1Case4,
    // left extensions before absorption
    LThm1Case1, LThm1Case2, LThm1Case3, LThm1Case4,
    // right extensions after absorption
    RThm2Case1, RThm2Case2, RThm2Case3, RThm2Case4,
    // left extensions after absorption
    LThm2Case1, LThm2Case2, LThm2Case3, LThm2Case4,
};

using Params = std::map<std::string, Rational>;

struct AlgebraDescriptor {
    Family family = Family::L2;
    int n = 4;
    Params params;
};

// Which Leibniz identity the family is built to satisfy.
enum class FamilySide { both, right, left };

struct FamilyInfo {
    Family family;
    std::string name;
    FamilySide side;
    int codim;        // extra generators beyond the nilradical
    int min_n;
    std::string note; // parameter regime, as stated alongside the brackets
};

const std::vector<FamilyInfo>& family_registry();
const FamilyInfo& family_info(Family f);
std::string family_name(Family f);
// Throws UsageError for an unknown name.
Family parse_family(const std::string& name);

// Parameter names accepted by the family at this n, in a fixed order.
// Nilradical indices appear as a_<k>_<j>; a_2_n1 and a_n_n1 stand for
// a_{2,n+1} and a_{n,n+1}; b_1.. are the free tail of the epsilon families.
std::vector<std::string> param_names(Family f, int n);

// Throws DescriptorError naming the violated constraint.
void validate(const AlgebraDescriptor& d);

// strict = true ignores every entry of patches() and builds the brackets exactly
// as transcribed.
StructureTensor build(const AlgebraDescriptor& d, bool strict = false);

// Deterministic parameters with small numerators and denominators, resampled
// until validate() passes. Throws DescriptorError when n is out of range for the
// family or after 1000 rejected draws. G1 and L1 never draw a = 1, where the
// lower central series drops below the listed dimensions.
AlgebraDescriptor sample_params(Family f, int n, std::uint64_t seed);

struct ExpectedInvariants {
    std::vector<int> ds_dims;
    std::vector<int> ls_dims;
    bool ls_stabilized = false;
    std::optional<int> center_dim;
    FamilySide side = FamilySide::both;
};

// Catalog invariants; only defined for L2 and the canonical families.
std::optional<ExpectedInvariants> expected_invariants(const AlgebraDescriptor& d);

// Corrections applied on top of the transcribed brackets (see build()).
struct Patch {
    Family family;
    std::string bracket;
    std::string transcribed;
    std::string corrected;
    std::string evidence;
};
const std::vector<Patch>& patches();

// Coefficients the brackets define through formulas of the other parameters.
std::map<std::string, Rational> derived_coefficients(const AlgebraDescriptor& d);

bool is_canonical(Family f);

// Values of the single coefficient c^k_{ij} for which T satisfies the identity
// of the given side, every other coefficient held fixed. Empty when no value
// works. Throws PreconditionError when every value works.
std::vector<Rational> resolve_coefficient(const StructureTensor& T, Side side, int i, int j, int k);

// Multiplication operators of L2(n) by e_i, written out entry by entry.
LinearMap expected_inner_right(int n, int i);
LinearMap expected_inner_left(int n, int i);

// The two outer derivations of L2(n) realised by the codimension-two
// extensions. c is the free (2,1) entry, a_2_3 the (2,3) entry, and band[m]
// the sub-diagonal band value a_{m,3} for m = 5..n.
struct OuterPair {
    LinearMap first;
    LinearMap second;
};
OuterPair outer_right_pair(int n, const Rational& c, const Rational& a23, const std::map<int, Rational>& band);
OuterPair outer_left_pair(int n, const Rational& c, const Rational& a23, const std::map<int, Rational>& band);
bool is_pre_absorption(Family f);
bool is_post_absorption(Family f);

} // namespace leibniz

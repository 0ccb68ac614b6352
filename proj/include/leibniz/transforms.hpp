#pragma once

#include "leibniz/families.hpp"
#include "leibniz/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace leibniz {

struct TransformStep {
    std::string description;
    LinearMap map; // columns are the new basis vectors in old coordinates
};

using Position = std::tuple<int, int, int>; // (i, j, k) of c^k_{ij}

// Required zeros and pinned values of a structure tensor. Positions in neither
// set are free.
struct ShapePattern {
    int dim = 0;
    std::set<Position> zero_set;
    std::map<Position, Rational> fixed_set;
};

// Pins every coefficient of T except the listed free positions.
ShapePattern pattern_from_tensor(const StructureTensor& T, const std::set<Position>& free_positions = {});
bool matches(const StructureTensor& T, const ShapePattern& pattern);
// First position where T departs from the pattern, if any.
std::optional<Position> first_mismatch(const StructureTensor& T, const ShapePattern& pattern);

enum class StepKind { shift, scale };

// shift: e'_target = e_target + sum c e_k over coeffs.
// scale: e'_k = c e_k for each (k, c) in coeffs; target is ignored.
// Throws UsageError for bad indices and SingularMapError for a zero scale.
TransformStep absorption_step(StepKind kind, int dim, int target, const std::vector<std::pair<int, Rational>>& coeffs,
                              std::string description = {});

struct ChainReport {
    bool ok = false;
    int failed_step = -1;  // index of the step that broke the nilradical, -1 if none
    std::string reason;
    StructureTensor result;
};

// Applies the steps in order. The block on e_1..e_n must stay equal to L2(n)
// after each step and the final tensor must match the pattern.
ChainReport run_chain(const StructureTensor& start, int n, const std::vector<TransformStep>& steps,
                      const ShapePattern& target);
bool verify_chain(const AlgebraDescriptor& start, const std::vector<TransformStep>& steps, const ShapePattern& target);

// Product of the step maps: applying it once equals applying the steps in order.
LinearMap compose(const std::vector<TransformStep>& steps, int dim);

struct Chain {
    std::string name;
    AlgebraDescriptor start;
    AlgebraDescriptor target;
    std::vector<TransformStep> steps;
    ShapePattern pattern;
};

// Absorption of the right case a != 0, b != 2a into its reduced form.
Chain right_case1_absorption(const AlgebraDescriptor& start);
// Absorption of the right case a = 0, b != 0.
Chain right_case3_absorption(const AlgebraDescriptor& start);
// Absorption of the left case a != 0, b != a.
Chain left_case1_absorption(const AlgebraDescriptor& start);
// Normalisation of the reduced right case a = 0 to the epsilon family. The
// coefficient a_5_3 / b must be zero or plus/minus a rational square; throws
// UsageError otherwise.
Chain right_case3_to_epsilon_family(const AlgebraDescriptor& start);

// Descriptor for right_case3_to_epsilon_family whose a_5_3 / b is 0 or +-q^2.
AlgebraDescriptor sample_square_case3(int n, std::uint64_t seed);

// transform_basis(A, P) == B. Throws UsageError on a dimension mismatch and
// SingularMapError for singular P.
bool iso_witness_check(const StructureTensor& A, const StructureTensor& B, const LinearMap& P);

} // namespace leibniz

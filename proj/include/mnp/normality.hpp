#pragma once

#include "mnp/autos.hpp"
#include "mnp/lattice.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mnp {

/// Function {0..r} -> N; [x, y, Delta] appends Delta(j) copies of a_j in index order.
struct DeltaFunction {
    std::vector<int> values;

    int degree() const;
    bool is_zero() const { return degree() == 0; }
    /// Generator sequence a_0^Delta(0) ... a_r^Delta(r) as indices.
    std::vector<int> expand() const;

    friend auto operator<=>(const DeltaFunction&, const DeltaFunction&) = default;
};

/// All functions {0..size-1} -> N of the given degree, in descending lexicographic order.
std::vector<DeltaFunction> enumerate_deltas(int size, int degree);

/// Least j with Delta(j) != 0.
int delta_min(const DeltaFunction& delta);
/// Moves one unit from position j to position j'.
DeltaFunction delta_shift(const DeltaFunction& delta, int j, int j_prime);

Element eval_delta_comm(const Element& x, const Element& y, const DeltaFunction& delta);

/// Exponents epsilon(i, Delta) of prod [a_s, a_i, Delta]^epsilon(i, Delta).
using ExponentAssignment = std::map<std::pair<int, DeltaFunction>, Integer>;

/// [a^t b, c_1, ..., c_(k-1)] for every sequence c over `subset` (all generators by default).
std::vector<Element> lemma31_generators(int a_idx, int b_idx, const Integer& t, const GroupParams& params,
                                        const std::optional<std::set<int>>& subset = std::nullopt);

/// Coefficients expressing w over gens in top-layer coordinates, when possible.
std::optional<IntVector> closure_membership(const Element& w, const std::vector<Element>& gens);

/// Top-layer basic coordinates of prod [a_s, a_i, Delta]^eps by the symbolic case split
/// on i, s and the least index of Delta. Ambient class is degree + 2.
IntVector lemma32_rewrite(const ExponentAssignment& eps, int s, const GroupParams& params);

/// Matrix of epsilon(i, Delta), i != s, to top-layer coordinates, with its column labels.
struct RewriteMatrix {
    IntMatrix matrix;
    std::vector<std::pair<int, DeltaFunction>> columns;
};
RewriteMatrix lemma32_matrix(int s, const GroupParams& params);

struct IndependenceCertificate {
    bool injective = false;
    std::size_t rank = 0;
    std::size_t columns = 0;
    IntVector invariant_factors;
};
IndependenceCertificate lemma32_independent(int s, const GroupParams& params);

/// Refusal of the synthesizer: the integer system at `layer` has no solution.
struct NotGeneralizedInner {
    int witness_generator = 0;
    int layer = 0;
    IntVector defect;
    InfeasibilityCertificate certificate;
    std::string reason;
};

using SynthesisResult = std::variant<GenInnerData, NotGeneralizedInner>;

/// Decides whether an automorphism is generalized inner; on success the data reproduces f.
SynthesisResult synthesize_gen_inner(const AutoSpec& f);

/// Elements x, y with phi(xy) != phi(x) phi(y) in the class-2 quotient, if any are found.
std::optional<std::pair<Element, Element>> poly_multiplicativity_witness(const PolyAutoData& data);

SynthesisResult poly_to_gen_inner(const PolyAutoData& data);

}  // namespace mnp

#pragma once

#include "mnp/element.hpp"
#include "mnp/lattice.hpp"

#include <optional>
#include <vector>

namespace mnp {

/// Endomorphism of M_k given by the images of the free generators.
struct AutoSpec {
    GroupParams params;
    std::vector<Element> images;

    static AutoSpec identity(const GroupParams& params);
    /// Validates that there is one image per generator, each with matching params.
    static AutoSpec from_images(const GroupParams& params, std::vector<Element> images);

    friend bool operator==(const AutoSpec&, const AutoSpec&) = default;
};

struct GenInnerPair {
    Element u;
    Integer lambda;

    friend bool operator==(const GenInnerPair&, const GenInnerPair&) = default;
};

/// x -> x prod [x, u_i]^lambda_i. Storage merges equal u (first appearance fixes the position) and drops zero
/// exponents and central u.
struct GenInnerData {
    GroupParams params;
    std::vector<GenInnerPair> pairs;

    explicit GenInnerData(GroupParams p) : params(p) {}
    GenInnerData(GroupParams p, std::vector<GenInnerPair> raw);

    bool empty() const { return pairs.empty(); }
    friend bool operator==(const GenInnerData&, const GenInnerData&) = default;
};

struct NestedTerm {
    std::vector<Element> tail;
    Integer eta;
};

/// x -> x prod [x, v_i1, ..., v_i sigma(i)]^eta_i.
struct NestedGenInnerData {
    GroupParams params;
    std::vector<NestedTerm> terms;
};

struct PolyAutoPair {
    Element u;
    Integer eps;
};

/// x -> (u1^-1 x^eps1 u1) ... (um^-1 x^epsm um).
struct PolyAutoData {
    GroupParams params;
    std::vector<PolyAutoPair> pairs;
};

Element apply_endo(const AutoSpec& f, const Element& x);
/// Spec of g o f.
AutoSpec compose_endo(const AutoSpec& g, const AutoSpec& f);
bool is_ia(const AutoSpec& f);
/// Integer matrix of the induced map on the abelianization; column i is the exponent of f(a_i).
std::vector<std::vector<Integer>> abelianization_matrix(const AutoSpec& f);
bool abelianization_invertible(const AutoSpec& f);
AutoSpec invert_ia(const AutoSpec& f);
/// f^-1 o g^-1 o f o g.
AutoSpec aut_commutator(const AutoSpec& f, const AutoSpec& g);

Element apply_gen_inner(const GenInnerData& data, const Element& x);
AutoSpec gen_inner_to_spec(const GenInnerData& data);
Element apply_nested(const NestedGenInnerData& data, const Element& x);
NestedGenInnerData to_nested(const GenInnerData& data);

/// Flat form obtained from [x, y, z] = [x, y]^-1 [x, z]^-1 [x, yz].
GenInnerData flatten(const NestedGenInnerData& nested);

/// Data for psi o phi in nested form; terms that are identically trivial at
/// this class (weight above k or an identity entry) are dropped.
NestedGenInnerData compose_nested(const NestedGenInnerData& psi, const NestedGenInnerData& phi);
GenInnerData compose_gen_inner(const GenInnerData& psi, const GenInnerData& phi);
GenInnerData invert_gen_inner(const GenInnerData& phi);
/// Extensional equality: same images on every generator.
bool gen_inner_equivalent(const GenInnerData& a, const GenInnerData& b);
GenInnerData lift_gen_inner(const GenInnerData& data, int k);

/// The u with x[x, u] equal to the given map; class at most 2.
Element class2_conjugator(const GenInnerData& data);

/// Result of the layer-by-layer conjugator search.
struct InnerSearch {
    std::optional<Element> conjugator;
    /// Weight at which the layer system had no integral solution.
    int failed_layer = 0;
    std::optional<InfeasibilityCertificate> certificate;
    /// Per-generator right-hand side of the failed layer system.
    std::vector<IntVector> defects;
};
InnerSearch search_conjugator(const AutoSpec& f);
std::optional<Element> is_inner(const AutoSpec& f);

Element apply_poly_auto(const PolyAutoData& data, const Element& x);
Integer epsilon_sum(const PolyAutoData& data);
/// x prod (x^-1 x^u)^lambda written as a product of conjugates of x^{+-1}.
PolyAutoData gen_inner_to_poly(const GenInnerData& data);

}  // namespace mnp

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gradedroots/rational.hpp"

namespace gradedroots {

inline constexpr long long kDefaultIterationCap = 1'000'000;

/// Element of the lattice L in the vertex basis.
struct LatticeVector {
    std::vector<Int> c;
    bool operator==(const LatticeVector&) const = default;
};

/// Element of the dual lattice L' given by its values on the vertex basis.
struct DualVector {
    std::vector<Int> v;
    bool operator==(const DualVector&) const = default;
};

/// Characteristic element of L': k(b_j) + e_j even for every vertex.
/// Construct through make_characteristic so the parity invariant holds.
struct CharVector {
    std::vector<Int> k;
    bool operator==(const CharVector&) const = default;
};

/// Symmetric pairing matrix of a plumbing graph: weights on the diagonal,
/// 1 for each edge. The exact rational inverse is computed up front.
class IntersectionForm {
public:
    IntersectionForm(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges);

    int size() const { return size_; }
    Int at(int i, int j) const { return matrix_[i][j]; }
    const std::vector<std::vector<Int>>& matrix() const { return matrix_; }

    bool negative_definite() const { return negative_definite_; }
    bool invertible() const { return invertible_; }
    const Rational& det() const { return det_; }
    const std::vector<std::vector<Rational>>& inverse() const;

    Int pairing(const LatticeVector& x, const LatticeVector& y) const;

private:
    int size_;
    std::vector<std::vector<Int>> matrix_;
    bool negative_definite_ = false;
    bool invertible_ = false;
    Rational det_;
    std::vector<std::vector<Rational>> inverse_;
};

class PlumbingGraph;
struct CanonicalBuild;
CanonicalBuild build_graph_with_map(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges,
                                    std::optional<int> base = std::nullopt);

/// Weighted connected tree in canonical vertex order, with a base vertex.
/// Instances are immutable; build through build_graph or brieskorn_graph.
class PlumbingGraph {
public:
    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<Int>& weights() const { return weights_; }
    Int weight(int j) const { return weights_[j]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int base() const { return base_; }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    int valency(int j) const { return static_cast<int>(adjacency_[j].size()); }
    const IntersectionForm& form() const { return form_; }

private:
    PlumbingGraph(std::vector<Int> weights, std::vector<std::pair<int, int>> edges, int base);

    std::vector<Int> weights_;
    std::vector<std::pair<int, int>> edges_;  // (min,max) pairs, sorted
    int base_;
    std::vector<std::vector<int>> adjacency_;
    IntersectionForm form_;

    friend struct CanonicalBuild;
    friend CanonicalBuild build_graph_with_map(const std::vector<Int>&, const std::vector<std::pair<int, int>>&,
                                               std::optional<int>);
};

/// Result of canonicalization: the graph plus old-id -> new-id mapping.
struct CanonicalBuild {
    PlumbingGraph graph;
    std::vector<int> id_map;
};

PlumbingGraph build_graph(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges,
                          std::optional<int> base = std::nullopt);

bool is_negative_definite(const PlumbingGraph& graph);

CharVector canonical_class(const PlumbingGraph& graph);

/// Validates the parity invariant; throws NotCharacteristic.
CharVector make_characteristic(const PlumbingGraph& graph, std::vector<Int> values);

/// chi_k(x) = -(k(x) + (x,x)) / 2, exact.
Int chi(const PlumbingGraph& graph, const CharVector& k, const LatticeVector& x);

DualVector pd(const PlumbingGraph& graph, const LatticeVector& x);
std::vector<Rational> pd_inverse(const PlumbingGraph& graph, const std::vector<Int>& ell);
std::vector<Rational> pd_inverse(const PlumbingGraph& graph, const std::vector<Rational>& ell);

/// K paired with PD^{-1}(K), exact rational.
Rational k_squared(const PlumbingGraph& graph);

/// Vertices with -e_j < valency(b_j).
std::vector<int> bad_vertices(const PlumbingGraph& graph);

/// Minimal Z > 0 with (Z, b_j) <= 0 for all j, by Laufer's iteration.
LatticeVector fundamental_cycle(const PlumbingGraph& graph, long long cap = kDefaultIterationCap);

/// Artin criterion, with the no-bad-vertices quick path.
bool is_rational(const PlumbingGraph& graph);

/// All base vertices certified admissible by weight decrease within the
/// bound (0 selects the default 1 + sum|e_j| + max valency). Rationality is
/// closed under decreasing weights, so testing the bound itself suffices.
/// Empty result means "not detected within the bound", not "not AR".
std::vector<int> is_almost_rational(const PlumbingGraph& graph, Int bound = 0);

Int default_ar_bound(const PlumbingGraph& graph);

/// Negative definite star graph of the Brieskorn sphere.
PlumbingGraph brieskorn_graph(Int p, Int q, Int r);

/// Negative continued fraction p/q = [x1,...,xs], all xi >= 2.
std::vector<Int> negative_continued_fraction(Int p, Int q);

}  // namespace gradedroots

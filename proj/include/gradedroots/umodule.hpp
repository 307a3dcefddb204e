#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gradedroots/gf2.hpp"
#include "gradedroots/graded_root.hpp"

namespace gradedroots {

/// Homogeneous degree-d part of H(R,chi): coefficient space over the
/// admissible vertices (chi(v) <= d/2) cut out by the edge constraints,
/// solved exactly over the two-element field.
struct DegreeSlice {
    Int degree = 0;
    std::vector<int> admissible;            // vertex ids, ascending
    std::vector<std::vector<bool>> basis;   // basis of the solution space

    int dim() const { return static_cast<int>(basis.size()); }
};

DegreeSlice slice(const GradedRoot& root, Int d);

/// Matrix of U from slice(d+2) to slice(d) in the slice bases.
Gf2Matrix u_map(const GradedRoot& root, Int d);

struct UDepth {
    bool infinite = false;
    Int depth = 0;
};

struct GradedFUModule {
    Rational shift;         // applied grading shift; 0 for the pre-shift module
    Rational tower_bottom;  // degree of the bottom of the infinite tower
    std::vector<std::pair<Rational, int>> reduced;  // (degree, rank), ascending

    Int pre_shift_bottom = 0;
    std::vector<std::pair<Int, int>> pre_shift_reduced;
    GradedRoot root;  // kept for U-depth queries
};

/// H(R,chi) as an F[U]-module, pre-shift: tower bottom 2*min(chi) and
/// reduced rank dim(slice(d)) - 1 per degree.
GradedFUModule homology(const GradedRoot& root);

/// homology(graded_root(laufer_trace)) with every degree shifted so the
/// module matches HF+ of the orientation-reversed boundary in the
/// canonical Spin^c structure.
GradedFUModule hf_plus(const PlumbingGraph& graph, int b0, const LauferCaps& caps = {});

Rational d_invariant(const GradedFUModule& module);

Rational grading_shift(const PlumbingGraph& graph);

/// Largest D with the leaf's indicator class in the image of U^D;
/// infinite exactly when divisibility persists past the reduced range.
UDepth u_depth(const GradedRoot& root, int leaf);

/// Same computation for an arbitrary vertex's dual class (the sigma engine
/// entry point; leaves are the Ker U case).
UDepth u_depth_of_vertex(const GradedRoot& root, int vertex);

}  // namespace gradedroots

#pragma once

#include <string>
#include <vector>

#include "gradedroots/laufer.hpp"

namespace gradedroots {

/// Finite truncation of the graded root R_tau up to grade max(tau), with
/// the trunk marker on the single top vertex. Vertices are the merge
/// classes of the rays R_i; each vertex knows which Laufer indices i have
/// their branch root there (the provenance map).
class GradedRoot {
public:
    struct Vertex {
        Int grade;
        int parent = -1;               // vertex one grade up, -1 for the top
        std::vector<int> children;     // vertices one grade down
        std::vector<int> laufer_indices;  // i with class(v_i^{tau(i)}) = this vertex
    };

    int size() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    Int grade(int v) const { return vertices_[v].grade; }
    int top() const { return top_; }
    Int min_grade() const { return min_grade_; }
    Int max_grade() const { return max_grade_; }

    bool is_leaf(int v) const { return vertices_[v].children.empty(); }
    std::vector<int> leaves() const;

    /// Vertex of the class of v_i^{tau(i)}.
    int vertex_of_index(int laufer_index) const { return index_to_vertex_[laufer_index]; }

    /// Copy with the trunk extended upward to the given grade.
    GradedRoot extended(Int up_to_grade) const;

    /// Canonical structural fingerprint (grade + sorted child shapes).
    /// Ignores provenance, so roots built from different index sets compare equal.
    std::string shape_key() const;

    friend GradedRoot graded_root_from_tau(const std::vector<Int>& tau);

private:
    std::vector<Vertex> vertices_;
    int top_ = -1;
    Int min_grade_ = 0;
    Int max_grade_ = 0;
    std::vector<int> index_to_vertex_;
};

/// Builds the truncated merge tree of tau. Requires tau(0) = 0 and the
/// final value to be >= 2 and the maximum of the sequence.
GradedRoot graded_root_from_tau(const std::vector<Int>& tau);

inline GradedRoot graded_root(const LauferTrace& trace) { return graded_root_from_tau(trace.tau); }

/// Deterministic Graphviz output; the trunk vertex is double-circled.
std::string root_to_dot(const GradedRoot& root);

}  // namespace gradedroots

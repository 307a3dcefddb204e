#include "gradedroots/umodule.hpp"

#include <algorithm>

#include "gradedroots/errors.hpp"

namespace gradedroots {

namespace {

bool even(Int d) { return ((d % 2) + 2) % 2 == 0; }

// position of each admissible vertex in the slice coordinate order
std::vector<int> positions(const GradedRoot& root, const std::vector<int>& admissible) {
    std::vector<int> pos(root.size(), -1);
    for (int i = 0; i < static_cast<int>(admissible.size()); ++i) pos[admissible[i]] = i;
    return pos;
}

// Express a coefficient vector in the basis of a slice. The basis produced
// by null_space has one free coordinate per basis vector, so coordinates
// can be read off; the reconstruction is verified exactly.
std::optional<std::vector<bool>> express_in_basis(const DegreeSlice& s, const std::vector<bool>& w) {
    const int dim = s.dim();
    const int n = static_cast<int>(s.admissible.size());
    Gf2Matrix m(n, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < n; ++i) m.set(i, j, s.basis[j][i]);
    return m.solve(w);
}

}  // namespace

DegreeSlice slice(const GradedRoot& root, Int d) {
    DegreeSlice out;
    out.degree = d;
    if (!even(d)) return out;

    GradedRoot ext = (d / 2 > root.max_grade()) ? root.extended(d / 2) : root;
    for (int v = 0; v < ext.size(); ++v)
        if (2 * ext.grade(v) <= d) out.admissible.push_back(v);
    if (out.admissible.empty()) return out;

    std::vector<int> pos = positions(ext, out.admissible);
    // one constraint per edge with both endpoints admissible: c_child = c_parent
    std::vector<std::pair<int, int>> constraints;
    for (int v : out.admissible) {
        int p = ext.vertex(v).parent;
        if (p != -1 && pos[p] != -1) constraints.emplace_back(pos[v], pos[p]);
    }
    Gf2Matrix a(static_cast<int>(constraints.size()), static_cast<int>(out.admissible.size()));
    for (int r = 0; r < static_cast<int>(constraints.size()); ++r) {
        a.set(r, constraints[r].first, true);
        a.set(r, constraints[r].second, true);
    }
    out.basis = a.null_space();
    return out;
}

Gf2Matrix u_map(const GradedRoot& root, Int d) {
    // compute both slices against the same extension so vertex ids agree
    GradedRoot ext = ((d + 2) / 2 > root.max_grade() && even(d)) ? root.extended(d / 2 + 1) : root;
    DegreeSlice hi = slice(ext, d + 2);
    DegreeSlice lo = slice(ext, d);

    Gf2Matrix m(lo.dim(), hi.dim());
    if (hi.dim() == 0 || lo.admissible.empty()) return m;

    std::vector<int> lo_pos = positions(ext, lo.admissible);
    for (int j = 0; j < hi.dim(); ++j) {
        // U drops the coefficients at the top admissible grade of the higher slice
        std::vector<bool> w(lo.admissible.size(), false);
        for (int i = 0; i < static_cast<int>(hi.admissible.size()); ++i) {
            int v = hi.admissible[i];
            if (lo_pos.size() > static_cast<size_t>(v) && lo_pos[v] != -1) w[lo_pos[v]] = hi.basis[j][i];
        }
        auto coords = express_in_basis(lo, w);
        if (!coords) throw Error(ErrorKind::Internal, "U image is not a slice element");
        for (int i = 0; i < lo.dim(); ++i) m.set(i, j, (*coords)[i]);
    }
    return m;
}

GradedFUModule homology(const GradedRoot& root) {
    GradedFUModule mod;
    mod.root = root;
    mod.shift = rat(0);
    mod.pre_shift_bottom = 2 * root.min_grade();
    for (Int d = 2 * root.min_grade(); d <= 2 * root.max_grade(); d += 2) {
        int dim = slice(root, d).dim();
        if (dim < 1) throw Error(ErrorKind::Internal, "tower slice vanished inside the degree range");
        if (dim > 1) mod.pre_shift_reduced.emplace_back(d, dim - 1);
    }
    mod.tower_bottom = rat(mod.pre_shift_bottom);
    for (auto [d, r] : mod.pre_shift_reduced) mod.reduced.emplace_back(rat(d), r);
    return mod;
}

Rational grading_shift(const PlumbingGraph& graph) {
    // -(K^2 + s)/4: fixed against the known HF+ of the reversed boundary
    // for the E8 graph and the Sigma(2,3,11) graph.
    return -(k_squared(graph) + rat(graph.size())) / 4;
}

GradedFUModule hf_plus(const PlumbingGraph& graph, int b0, const LauferCaps& caps) {
    LauferTrace trace = laufer_trace(graph, b0, caps);
    GradedFUModule mod = homology(graded_root(trace));
    Rational shift = grading_shift(graph);
    mod.shift = shift;
    mod.tower_bottom = rat(mod.pre_shift_bottom) + shift;
    mod.reduced.clear();
    for (auto [d, r] : mod.pre_shift_reduced) mod.reduced.emplace_back(rat(d) + shift, r);
    return mod;
}

Rational d_invariant(const GradedFUModule& module) { return module.tower_bottom; }

namespace {

// Dual class of a vertex: the indicator of its sublevel subtree, which is
// the unique slice element of degree 2*chi(v) whose degree-zero component
// is supported exactly at v among same-grade vertices.
std::vector<bool> vertex_indicator(const GradedRoot& ext, const DegreeSlice& s, int vertex) {
    std::vector<bool> w(s.admissible.size(), false);
    std::vector<int> pos = positions(ext, s.admissible);
    std::vector<int> stack{vertex};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (pos[v] == -1) throw Error(ErrorKind::Internal, "subtree vertex missing from slice");
        w[pos[v]] = true;
        for (int c : ext.vertex(v).children) stack.push_back(c);
    }
    return w;
}

}  // namespace

UDepth u_depth_of_vertex(const GradedRoot& root, int vertex) {
    const Int d0 = 2 * root.grade(vertex);

    // last degree with a reduced contribution; above it every slice is the tower
    Int stab = 2 * root.min_grade() - 2;
    for (Int d = 2 * root.min_grade(); d <= 2 * root.max_grade(); d += 2)
        if (slice(root, d).dim() > 1) stab = d;

    GradedRoot ext = root.extended(std::max(root.max_grade(), stab / 2 + 3) + 1);
    DegreeSlice base = slice(ext, d0);
    auto target = express_in_basis(base, vertex_indicator(ext, base, vertex));
    if (!target) throw Error(ErrorKind::Internal, "vertex indicator is not a slice element");

    Gf2Matrix composite = Gf2Matrix::identity(base.dim());
    Int depth = 0;
    while (true) {
        composite = composite.multiply(u_map(ext, d0 + 2 * depth));
        if (!composite.solve(*target)) return UDepth{false, depth};
        ++depth;
        if (d0 + 2 * depth > stab + 2) return UDepth{true, 0};
    }
}

UDepth u_depth(const GradedRoot& root, int leaf) {
    if (leaf < 0 || leaf >= root.size() || !root.is_leaf(leaf))
        throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(leaf) + " is not a leaf of the graded root");
    return u_depth_of_vertex(root, leaf);
}

}  // namespace gradedroots

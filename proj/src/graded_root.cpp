#include "gradedroots/graded_root.hpp"

#include <algorithm>
#include <sstream>

#include "gradedroots/errors.hpp"

namespace gradedroots {

GradedRoot graded_root_from_tau(const std::vector<Int>& tau) {
    if (tau.empty() || tau.front() != 0)
        throw Error(ErrorKind::Internal, "tau must start at 0");
    Int maxv = *std::max_element(tau.begin(), tau.end());
    Int minv = *std::min_element(tau.begin(), tau.end());
    if (tau.back() < 2 || tau.back() != maxv)
        throw Error(ErrorKind::Internal, "tau must end at its maximum, which must be >= 2");

    const int n = static_cast<int>(tau.size());
    GradedRoot root;
    root.min_grade_ = minv;
    root.max_grade_ = maxv;
    root.index_to_vertex_.assign(n, -1);

    // Level sweep: at grade m the vertices are the runs of {i : tau(i) <= m};
    // the parent of a run is the containing run one grade up.
    std::vector<int> prev_vertex_of_i(n, -1);  // vertex at the previous level containing index i
    for (Int m = minv; m <= maxv; ++m) {
        std::vector<int> cur_vertex_of_i(n, -1);
        int i = 0;
        while (i < n) {
            if (tau[i] > m) {
                ++i;
                continue;
            }
            int lo = i;
            while (i < n && tau[i] <= m) ++i;
            int hi = i - 1;  // run [lo, hi]
            int v = static_cast<int>(root.vertices_.size());
            root.vertices_.push_back(GradedRoot::Vertex{m, -1, {}, {}});
            for (int t = lo; t <= hi; ++t) {
                cur_vertex_of_i[t] = v;
                if (tau[t] == m) root.vertices_[v].laufer_indices.push_back(t);
                if (tau[t] == m && root.index_to_vertex_[t] == -1) root.index_to_vertex_[t] = v;
                if (prev_vertex_of_i[t] != -1 && root.vertices_[prev_vertex_of_i[t]].parent == -1) {
                    root.vertices_[prev_vertex_of_i[t]].parent = v;
                    root.vertices_[v].children.push_back(prev_vertex_of_i[t]);
                }
            }
        }
        prev_vertex_of_i = std::move(cur_vertex_of_i);
    }

    // single class at the top grade
    int tops = 0;
    for (int v = 0; v < root.size(); ++v)
        if (root.vertices_[v].parent == -1) {
            root.top_ = v;
            ++tops;
        }
    if (tops != 1) throw Error(ErrorKind::Internal, "graded root does not have a unique top vertex");
    return root;
}

std::vector<int> GradedRoot::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

GradedRoot GradedRoot::extended(Int up_to_grade) const {
    GradedRoot out = *this;
    int cur = out.top_;
    for (Int m = max_grade_ + 1; m <= up_to_grade; ++m) {
        int v = static_cast<int>(out.vertices_.size());
        out.vertices_.push_back(Vertex{m, -1, {cur}, {}});
        out.vertices_[cur].parent = v;
        out.top_ = v;
        cur = v;
    }
    if (up_to_grade > out.max_grade_) out.max_grade_ = up_to_grade;
    return out;
}

namespace {

std::string shape_of(const GradedRoot& root, int v) {
    std::vector<std::string> child_keys;
    for (int c : root.vertex(v).children) child_keys.push_back(shape_of(root, c));
    std::sort(child_keys.begin(), child_keys.end());
    std::ostringstream os;
    os << "(" << root.grade(v);
    for (const auto& k : child_keys) os << k;
    os << ")";
    return os.str();
}

}  // namespace

std::string GradedRoot::shape_key() const { return shape_of(*this, top_); }

std::string root_to_dot(const GradedRoot& root) {
    std::ostringstream os;
    os << "digraph graded_root {\n";
    os << "  rankdir=BT;\n";
    for (int v = 0; v < root.size(); ++v) {
        os << "  v" << v << " [label=\"chi=" << root.grade(v) << "\"";
        if (v == root.top()) os << " shape=doublecircle";
        os << "];\n";
    }
    for (int v = 0; v < root.size(); ++v)
        if (root.vertex(v).parent != -1) os << "  v" << v << " -> v" << root.vertex(v).parent << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gradedroots

#include "gradedroots/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "gradedroots/errors.hpp"

namespace gradedroots {

// ---------------------------------------------------------------------------
// IntersectionForm

IntersectionForm::IntersectionForm(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges)
    : size_(static_cast<int>(weights.size())) {
    matrix_.assign(size_, std::vector<Int>(size_, 0));
    for (int j = 0; j < size_; ++j) matrix_[j][j] = weights[j];
    for (auto [a, b] : edges) {
        matrix_[a][b] = 1;
        matrix_[b][a] = 1;
    }

    // Leading principal minors by fraction-free-ish rational elimination.
    // Negative definite iff minors alternate in sign starting negative;
    // a zero pivot means some minor vanishes, so not definite.
    {
        std::vector<std::vector<Rational>> a(size_, std::vector<Rational>(size_));
        for (int i = 0; i < size_; ++i)
            for (int j = 0; j < size_; ++j) a[i][j] = rat(matrix_[i][j]);
        bool ok = true;
        Rational minor = rat(1);
        for (int k = 0; k < size_ && ok; ++k) {
            if (a[k][k] == 0) {
                ok = false;
                break;
            }
            minor *= a[k][k];
            int want = (k % 2 == 0) ? -1 : 1;
            if (sgn(minor) != want) ok = false;
            for (int i = k + 1; i < size_; ++i) {
                if (a[i][k] == 0) continue;
                Rational f = a[i][k] / a[k][k];
                for (int j = k; j < size_; ++j) a[i][j] -= f * a[k][j];
            }
        }
        negative_definite_ = ok;
    }

    // Determinant and exact inverse with partial pivoting.
    {
        std::vector<std::vector<Rational>> a(size_, std::vector<Rational>(2 * size_));
        for (int i = 0; i < size_; ++i) {
            for (int j = 0; j < size_; ++j) a[i][j] = rat(matrix_[i][j]);
            a[i][size_ + i] = rat(1);
        }
        det_ = rat(1);
        bool singular = false;
        for (int k = 0; k < size_; ++k) {
            int piv = -1;
            for (int i = k; i < size_; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            if (piv != k) {
                std::swap(a[piv], a[k]);
                det_ = -det_;
            }
            det_ *= a[k][k];
            Rational pivot = a[k][k];
            for (int j = 0; j < 2 * size_; ++j) a[k][j] /= pivot;
            for (int i = 0; i < size_; ++i) {
                if (i == k || a[i][k] == 0) continue;
                Rational f = a[i][k];
                for (int j = 0; j < 2 * size_; ++j) a[i][j] -= f * a[k][j];
            }
        }
        if (singular) {
            det_ = rat(0);
            invertible_ = false;
        } else {
            invertible_ = true;
            inverse_.assign(size_, std::vector<Rational>(size_));
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j) inverse_[i][j] = a[i][size_ + j];
        }
    }
}

const std::vector<std::vector<Rational>>& IntersectionForm::inverse() const {
    if (!invertible_) throw Error(ErrorKind::NotNegativeDefinite, "intersection form is singular");
    return inverse_;
}

Int IntersectionForm::pairing(const LatticeVector& x, const LatticeVector& y) const {
    Int acc = 0;
    for (int i = 0; i < size_; ++i) {
        if (x.c[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < size_; ++j) row += matrix_[i][j] * y.c[j];
        acc += x.c[i] * row;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Canonical ordering

namespace {

struct TreeView {
    int size;
    std::vector<Int> weights;
    std::vector<std::vector<int>> adj;
};

// Components of tree \ root; each either is a hanging path attached to the
// root at one end (a leg) or not. Legs are listed center-outward.
std::optional<std::vector<std::vector<int>>> star_legs(const TreeView& t, int root) {
    std::vector<std::vector<int>> legs;
    for (int start : t.adj[root]) {
        std::vector<int> leg;
        int prev = root, cur = start;
        while (true) {
            leg.push_back(cur);
            std::vector<int> next;
            for (int nb : t.adj[cur])
                if (nb != prev) next.push_back(nb);
            if (next.empty()) break;
            if (next.size() > 1) return std::nullopt;  // branch off the leg
            prev = cur;
            cur = next[0];
            if (cur == root) return std::nullopt;
        }
        legs.push_back(std::move(leg));
    }
    return legs;
}

// Structural sort key for a subtree: (size, weight, children keys).
struct SubtreeKey {
    size_t size;
    Int weight;
    std::vector<SubtreeKey> children;
    bool operator<(const SubtreeKey& o) const {
        if (size != o.size) return size < o.size;
        if (weight != o.weight) return weight < o.weight;
        return children < o.children;
    }
};

SubtreeKey subtree_key(const TreeView& t, int v, int parent) {
    SubtreeKey key{1, t.weights[v], {}};
    for (int nb : t.adj[v]) {
        if (nb == parent) continue;
        SubtreeKey ck = subtree_key(t, nb, v);
        key.size += ck.size;
        key.children.push_back(std::move(ck));
    }
    std::sort(key.children.begin(), key.children.end());
    return key;
}

// Canonical order: base first. If every branch of the base is a hanging
// path (star case), legs sorted by (length, weight sequence) and emitted
// contiguously center-outward. Otherwise breadth-first from the base with
// children ordered by structural key.
std::vector<int> canonical_order(const TreeView& t, int root) {
    std::vector<int> order{root};
    if (auto legs = star_legs(t, root)) {
        std::vector<std::pair<std::vector<Int>, int>> keyed;
        for (size_t i = 0; i < legs->size(); ++i) {
            std::vector<Int> wseq;
            for (int v : (*legs)[i]) wseq.push_back(t.weights[v]);
            keyed.emplace_back(std::move(wseq), static_cast<int>(i));
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (const auto& [wseq, idx] : keyed)
            for (int v : (*legs)[idx]) order.push_back(v);
        return order;
    }

    std::queue<int> q;
    std::vector<int> parent(t.size, -1);
    parent[root] = root;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v != root) order.push_back(v);
        std::vector<std::pair<SubtreeKey, int>> kids;
        for (int nb : t.adj[v]) {
            if (parent[nb] != -1) continue;
            parent[nb] = v;
            kids.emplace_back(subtree_key(t, nb, v), nb);
        }
        std::sort(kids.begin(), kids.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first || (!(b.first < a.first) && a.second < b.second); });
        for (auto& [key, nb] : kids) q.push(nb);
    }
    return order;
}

int pick_root(const TreeView& t) {
    int best = 0;
    for (int v = 1; v < t.size; ++v) {
        size_t bv = t.adj[best].size(), vv = t.adj[v].size();
        if (vv > bv || (vv == bv && t.weights[v] < t.weights[best])) best = v;
    }
    return best;
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<Int> weights, std::vector<std::pair<int, int>> edges, int base)
    : weights_(std::move(weights)), edges_(std::move(edges)), base_(base), form_(weights_, edges_) {
    adjacency_.assign(weights_.size(), {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbs : adjacency_) std::sort(nbs.begin(), nbs.end());
}

CanonicalBuild build_graph_with_map(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges,
                                    std::optional<int> base) {
    const int s = static_cast<int>(weights.size());
    if (s == 0) throw Error(ErrorKind::NotATree, "empty vertex set");
    std::set<std::pair<int, int>> seen;
    TreeView t{s, weights, std::vector<std::vector<int>>(s)};
    for (auto [a, b] : edges) {
        if (a < 0 || a >= s || b < 0 || b >= s) throw Error(ErrorKind::NotATree, "edge references unknown vertex id");
        if (a == b) throw Error(ErrorKind::NotATree, "self loop");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) throw Error(ErrorKind::DuplicateEdge, "repeated edge");
        t.adj[a].push_back(b);
        t.adj[b].push_back(a);
    }
    if (static_cast<int>(edges.size()) != s - 1) throw Error(ErrorKind::NotATree, "edge count is not |V|-1");
    // connectivity
    {
        std::vector<bool> vis(s, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int nb : t.adj[v])
                if (!vis[nb]) {
                    vis[nb] = true;
                    ++count;
                    q.push(nb);
                }
        }
        if (count != s) throw Error(ErrorKind::NotATree, "graph is disconnected");
    }
    if (base && (*base < 0 || *base >= s)) throw Error(ErrorKind::NotATree, "base vertex id out of range");

    int root = base ? *base : pick_root(t);
    std::vector<int> order = canonical_order(t, root);

    std::vector<int> id_map(s, -1);  // old -> new
    for (int pos = 0; pos < s; ++pos) id_map[order[pos]] = pos;

    std::vector<Int> new_weights(s);
    for (int old = 0; old < s; ++old) new_weights[id_map[old]] = weights[old];
    std::vector<std::pair<int, int>> new_edges;
    new_edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        auto p = std::minmax(id_map[a], id_map[b]);
        new_edges.emplace_back(p.first, p.second);
    }
    std::sort(new_edges.begin(), new_edges.end());

    return CanonicalBuild{PlumbingGraph(std::move(new_weights), std::move(new_edges), 0), std::move(id_map)};
}

PlumbingGraph build_graph(const std::vector<Int>& weights, const std::vector<std::pair<int, int>>& edges,
                          std::optional<int> base) {
    return build_graph_with_map(weights, edges, base).graph;
}

// ---------------------------------------------------------------------------
// Lattice operations

bool is_negative_definite(const PlumbingGraph& graph) { return graph.form().negative_definite(); }

CharVector canonical_class(const PlumbingGraph& graph) {
    CharVector k;
    k.k.reserve(graph.size());
    for (Int e : graph.weights()) k.k.push_back(-e - 2);
    return k;
}

CharVector make_characteristic(const PlumbingGraph& graph, std::vector<Int> values) {
    if (static_cast<int>(values.size()) != graph.size())
        throw Error(ErrorKind::NotCharacteristic, "length mismatch");
    for (int j = 0; j < graph.size(); ++j)
        if (((values[j] + graph.weight(j)) % 2 + 2) % 2 != 0)
            throw Error(ErrorKind::NotCharacteristic,
                        "k(b_" + std::to_string(j) + ") + e_" + std::to_string(j) + " is odd");
    return CharVector{std::move(values)};
}

Int chi(const PlumbingGraph& graph, const CharVector& k, const LatticeVector& x) {
    Int kx = 0;
    for (int j = 0; j < graph.size(); ++j) kx += k.k[j] * x.c[j];
    Int xx = graph.form().pairing(x, x);
    Int num = kx + xx;
    if (num % 2 != 0) throw Error(ErrorKind::NotCharacteristic, "chi is not an integer");
    return -num / 2;
}

DualVector pd(const PlumbingGraph& graph, const LatticeVector& x) {
    const auto& m = graph.form().matrix();
    DualVector out;
    out.v.assign(graph.size(), 0);
    for (int i = 0; i < graph.size(); ++i) {
        Int acc = 0;
        for (int j = 0; j < graph.size(); ++j) acc += m[i][j] * x.c[j];
        out.v[i] = acc;
    }
    return out;
}

std::vector<Rational> pd_inverse(const PlumbingGraph& graph, const std::vector<Rational>& ell) {
    const auto& inv = graph.form().inverse();
    std::vector<Rational> x(graph.size(), rat(0));
    for (int i = 0; i < graph.size(); ++i)
        for (int j = 0; j < graph.size(); ++j)
            if (ell[j] != 0) x[i] += inv[i][j] * ell[j];
    return x;
}

std::vector<Rational> pd_inverse(const PlumbingGraph& graph, const std::vector<Int>& ell) {
    std::vector<Rational> r(ell.size());
    for (size_t i = 0; i < ell.size(); ++i) r[i] = rat(ell[i]);
    return pd_inverse(graph, r);
}

Rational k_squared(const PlumbingGraph& graph) {
    CharVector k = canonical_class(graph);
    std::vector<Rational> x = pd_inverse(graph, k.k);
    Rational acc = rat(0);
    for (int j = 0; j < graph.size(); ++j) acc += rat(k.k[j]) * x[j];
    return acc;
}

std::vector<int> bad_vertices(const PlumbingGraph& graph) {
    std::vector<int> out;
    for (int j = 0; j < graph.size(); ++j)
        if (-graph.weight(j) < graph.valency(j)) out.push_back(j);
    return out;
}

LatticeVector fundamental_cycle(const PlumbingGraph& graph, long long cap) {
    const int s = graph.size();
    const auto& m = graph.form().matrix();
    LatticeVector z;
    z.c.assign(s, 1);
    // pairing values (z, b_j), updated incrementally as vertices are added
    std::vector<Int> pair(s, 0);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < s; ++i) pair[j] += m[j][i];
    long long steps = 0;
    while (true) {
        int j = -1;
        for (int t = 0; t < s; ++t)
            if (pair[t] > 0) {
                j = t;
                break;
            }
        if (j < 0) break;
        z.c[j] += 1;
        for (int i = 0; i < s; ++i) pair[i] += m[i][j];
        if (++steps > cap)
            throw Error(ErrorKind::IterationCapExceeded, "fundamental cycle iteration exceeded cap");
    }
    return z;
}

bool is_rational(const PlumbingGraph& graph) {
    if (bad_vertices(graph).empty()) return true;
    LatticeVector z = fundamental_cycle(graph);
    return chi(graph, canonical_class(graph), z) == 1;
}

Int default_ar_bound(const PlumbingGraph& graph) {
    Int sum = 0;
    for (Int e : graph.weights()) sum += e < 0 ? -e : e;
    Int maxval = 0;
    for (int j = 0; j < graph.size(); ++j) maxval = std::max<Int>(maxval, graph.valency(j));
    return 1 + sum + maxval;
}

std::vector<int> is_almost_rational(const PlumbingGraph& graph, Int bound) {
    if (bound <= 0) bound = default_ar_bound(graph);
    std::vector<int> out;
    for (int b = 0; b < graph.size(); ++b) {
        std::vector<Int> w = graph.weights();
        w[b] -= bound;  // rationality survives further decreases, so the bound alone decides
        PlumbingGraph decreased = build_graph(w, graph.edges(), b);
        if (is_rational(decreased)) out.push_back(b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brieskorn graphs

std::vector<Int> negative_continued_fraction(Int p, Int q) {
    std::vector<Int> out;
    while (q > 0) {
        Int x = (p + q - 1) / q;  // ceil
        out.push_back(x);
        Int np = q, nq = x * q - p;
        p = np;
        q = nq;
    }
    return out;
}

namespace {

Int mod_inverse(Int a, Int m) {
    Int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        Int qq = r / nr;
        Int tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(ErrorKind::Internal, "non-invertible residue");
    return ((t % m) + m) % m;
}

}  // namespace

PlumbingGraph brieskorn_graph(Int p, Int q, Int r) {
    if (p < 2 || q < 2 || r < 2) throw Error(ErrorKind::NotCoprime, "p, q, r must all be >= 2");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw Error(ErrorKind::NotCoprime, "p, q, r must be pairwise coprime");

    const Int total = p * q * r;
    std::vector<Int> weights{0};
    std::vector<std::pair<int, int>> edges;
    Int weighted_sum = 0;
    for (Int pi : {p, q, r}) {
        Int alpha = total / pi;
        Int qi = (pi - mod_inverse(alpha, pi)) % pi;  // (-alpha^{-1}) mod pi, in (0, pi)
        weighted_sum += qi * alpha;
        std::vector<Int> leg = negative_continued_fraction(pi, qi);
        int prev = 0;
        for (Int x : leg) {
            weights.push_back(-x);
            edges.emplace_back(prev, static_cast<int>(weights.size()) - 1);
            prev = static_cast<int>(weights.size()) - 1;
        }
    }
    Int e0_num = -1 - weighted_sum;
    if (e0_num % total != 0) throw Error(ErrorKind::Internal, "central weight is not integral");
    weights[0] = e0_num / total;

    PlumbingGraph graph = build_graph(weights, edges, 0);
    if (!graph.form().negative_definite())
        throw Error(ErrorKind::Internal, "Brieskorn graph is not negative definite");
    Rational d = graph.form().det();
    if (d != rat(1) && d != rat(-1)) throw Error(ErrorKind::Internal, "Brieskorn graph determinant is not +-1");
    return graph;
}

}  // namespace gradedroots

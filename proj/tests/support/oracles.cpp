#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gradedroots::testing {

bool brute_rational(const PlumbingGraph& graph, Int box) {
    const int s = graph.size();
    CharVector k = canonical_class(graph);
    std::vector<Int> x(s, 0);
    while (true) {
        // next vector in the box, odometer style
        int pos = 0;
        while (pos < s && x[pos] == box) {
            x[pos] = 0;
            ++pos;
        }
        if (pos == s) return true;
        ++x[pos];
        LatticeVector v{x};
        if (chi(graph, k, v) < 1) return false;
    }
}

LatticeVector brute_fundamental_cycle(const PlumbingGraph& graph, Int box) {
    const int s = graph.size();
    std::vector<Int> x(s, 0);
    std::vector<std::vector<Int>> candidates;
    while (true) {
        int pos = 0;
        while (pos < s && x[pos] == box) {
            x[pos] = 0;
            ++pos;
        }
        if (pos == s) break;
        ++x[pos];
        bool nonpositive = true;
        for (int j = 0; j < s && nonpositive; ++j) {
            Int pair = 0;
            for (int i = 0; i < s; ++i) pair += graph.form().at(j, i) * x[i];
            if (pair > 0) nonpositive = false;
        }
        if (nonpositive) candidates.push_back(x);
    }
    if (candidates.empty()) throw std::runtime_error("no cycle inside the box");
    std::vector<Int> best = candidates.front();
    for (const auto& c : candidates)
        for (int j = 0; j < s; ++j) best[j] = std::min(best[j], c[j]);
    // the componentwise minimum must itself qualify, else the box was too small
    for (int j = 0; j < s; ++j) {
        Int pair = 0;
        for (int i = 0; i < s; ++i) pair += graph.form().at(j, i) * best[i];
        if (pair > 0) throw std::runtime_error("box too small for a unique minimal cycle");
    }
    return LatticeVector{best};
}

std::vector<std::vector<bool>> brute_slice_elements(const GradedRoot& root, Int d) {
    // enumerate phi with phi(v) in {0, gen_{(d - 2 chi(v))/2}} and check the
    // module relation on every edge, modelling T+ levels directly
    const int n = root.size();
    std::vector<Int> level(n, -1);  // generator level of a nonzero value, -1 if forced zero
    for (int v = 0; v < n; ++v) {
        Int num = d - 2 * root.grade(v);
        if (num >= 0 && num % 2 == 0) level[v] = num / 2;
    }
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
        if (level[v] >= 0) support.push_back(v);
    if (support.size() > 24) throw std::runtime_error("slice enumeration too large");

    std::vector<std::vector<bool>> solutions;
    for (uint64_t mask = 0; mask < (uint64_t(1) << support.size()); ++mask) {
        std::vector<Int> value(n, -1);  // -1 encodes zero, otherwise the generator level
        for (size_t t = 0; t < support.size(); ++t)
            if ((mask >> t) & 1) value[support[t]] = level[support[t]];
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int p = root.vertex(v).parent;
            if (p == -1) continue;
            // edge [v, p] with chi(v) < chi(p): U phi(v) = phi(p)
            Int lhs = value[v] >= 1 ? value[v] - 1 : -1;  // U kills gen_0
            if (lhs != value[p]) ok = false;
        }
        if (!ok) continue;
        std::vector<bool> coeff(n, false);
        for (int v = 0; v < n; ++v) coeff[v] = value[v] >= 0;
        solutions.push_back(std::move(coeff));
    }
    return solutions;
}

int brute_slice_dim(const GradedRoot& root, Int d) {
    size_t count = brute_slice_elements(root, d).size();
    int dim = 0;
    while ((size_t(1) << dim) < count) ++dim;
    if ((size_t(1) << dim) != count) throw std::runtime_error("solution count is not a power of two");
    return dim;
}

int brute_u_rank(const GradedRoot& root, Int d) {
    auto upstairs = brute_slice_elements(root, d + 2);
    std::set<std::vector<bool>> image;
    for (const auto& phi : upstairs) {
        // U phi: value at v drops one level; coefficient survives iff the
        // degree-(d) level is still >= 0, i.e. 2 chi(v) <= d
        std::vector<bool> img(root.size(), false);
        for (int v = 0; v < root.size(); ++v) img[v] = phi[v] && 2 * root.grade(v) <= d;
        image.insert(std::move(img));
    }
    int rank = 0;
    while ((size_t(1) << rank) < image.size()) ++rank;
    if ((size_t(1) << rank) != image.size()) throw std::runtime_error("image count is not a power of two");
    return rank;
}

std::optional<Int> merge_tree_depth(const GradedRoot& root, int vertex) {
    const Int m = root.grade(vertex);
    // components at grade m below a given ancestor = vertices of grade m in
    // its subtree; count them by walking down
    auto count_grade_m_below = [&](int ancestor) {
        int count = 0;
        std::vector<int> stack{ancestor};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (root.grade(v) == m) {
                ++count;
                continue;  // grade-m components are disjoint below this point
            }
            for (int c : root.vertex(v).children) stack.push_back(c);
        }
        return count;
    };

    Int depth = 0;
    int ancestor = vertex;
    while (true) {
        int parent = root.vertex(ancestor).parent;
        if (parent == -1) return std::nullopt;  // reached the trunk with a single component: unbounded
        if (count_grade_m_below(parent) != 1) return depth;
        ancestor = parent;
        ++depth;
    }
}

std::vector<CorpusGraph> random_ar_corpus(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto randint = [&](Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };

    std::vector<CorpusGraph> out;
    while (static_cast<int>(out.size()) < count) {
        int kind = static_cast<int>(out.size()) % 3;
        std::vector<Int> weights;
        std::vector<std::pair<int, int>> edges;
        bool star = false;
        if (kind == 0) {
            // linear chain: rational, no bad vertices
            int len = static_cast<int>(randint(1, 6));
            for (int i = 0; i < len; ++i) weights.push_back(-randint(2, 5));
            for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
        } else if (kind == 1) {
            Int p = randint(2, 5);
            Int q, r;
            do {
                q = randint(p + 1, 9);
                r = randint(q + 1, 13);
            } while (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1);
            out.push_back(CorpusGraph{brieskorn_graph(p, q, r), true});
            continue;
        } else {
            // random star from continued-fraction legs
            star = true;
            int nlegs = static_cast<int>(randint(3, 4));
            weights.push_back(0);
            Rational euler = rat(0);
            for (int l = 0; l < nlegs; ++l) {
                Int alpha = randint(2, 8);
                Int qq = randint(1, alpha - 1);
                Int g = std::gcd(alpha, qq);
                alpha /= g;
                qq /= g;
                if (alpha < 2) {
                    alpha = 2;
                    qq = 1;
                }
                euler += rat(qq, alpha);
                int prev = 0;
                for (Int x : negative_continued_fraction(alpha, qq)) {
                    weights.push_back(-x);
                    edges.emplace_back(prev, static_cast<int>(weights.size()) - 1);
                    prev = static_cast<int>(weights.size()) - 1;
                }
            }
            mpz_class floor_euler = euler.get_num() / euler.get_den();
            weights[0] = -static_cast<Int>(floor_euler.get_si()) - 1 - randint(0, 1);
        }
        PlumbingGraph g = build_graph(weights, edges, kind == 0 ? std::optional<int>{} : std::optional<int>{0});
        if (!is_negative_definite(g)) continue;
        out.push_back(CorpusGraph{std::move(g), star});
    }
    return out;
}

std::vector<Int> random_tau(std::mt19937_64& rng, int max_vertices) {
    auto randint = [&](Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
    while (true) {
        int len = static_cast<int>(randint(1, 7));
        std::vector<Int> tau{0};
        for (int i = 0; i < len; ++i) tau.push_back(randint(-3, 1));
        Int maxv = *std::max_element(tau.begin(), tau.end());
        tau.push_back(std::max<Int>(2, maxv + 1));
        GradedRoot root = graded_root_from_tau(tau);
        if (root.size() <= max_vertices) return tau;
    }
}

}  // namespace gradedroots::testing

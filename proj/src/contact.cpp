#include "gradedroots/contact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gradedroots/errors.hpp"

namespace gradedroots {

namespace {

// Shared index computation: PD^{-1}((k - K)/2) must be integral (else the
// vector is outside the canonical Spin^c orbit) and its base component is
// the Laufer index.
Int locate_index(const PlumbingGraph& graph, int b0, const CharVector& k) {
    CharVector kk = canonical_class(graph);
    std::vector<Int> ell(graph.size());
    for (int j = 0; j < graph.size(); ++j) ell[j] = (k.k[j] - kk.k[j]) / 2;
    std::vector<Rational> x = pd_inverse(graph, ell);
    for (const Rational& xi : x)
        if (!is_integer(xi))
            throw Error(ErrorKind::NonIntegralIndex, "k - K is not twice an embedded lattice class");
    Int i0 = to_int(x[b0]);
    if (i0 < 0)
        throw Error(ErrorKind::NonIntegralIndex, "index " + std::to_string(i0) + " is negative");
    return i0;
}

void verify_against_trace(const CharVector& k, Int i0, const LauferTrace& trace) {
    if (i0 <= trace.stop_index && !(trace.k(static_cast<int>(i0)) == k))
        throw Error(ErrorKind::Internal, "detected index disagrees with the recorded Laufer step");
}

bool in_box(const PlumbingGraph& graph, const CharVector& k) {
    for (int j = 0; j < graph.size(); ++j) {
        Int e = graph.weight(j);
        if (k.k[j] < e + 2 || k.k[j] > -e - 2) return false;
    }
    return true;
}

}  // namespace

Int detect_in_laufer(const PlumbingGraph& graph, int b0, const CharVector& k, const LauferTrace* trace) {
    if (!in_box(graph, k))
        throw Error(ErrorKind::OutsideBox, "k is outside the box e_j+2 <= k(b_j) <= -e_j-2");
    Int i0 = locate_index(graph, b0, k);
    if (trace) verify_against_trace(k, i0, *trace);
    return i0;
}

ContactLocation sigma_of_char(const PlumbingGraph& graph, const LauferTrace& trace, const GradedRoot& root,
                              const CharVector& k) {
    Int i0 = locate_index(graph, trace.b0, k);
    verify_against_trace(k, i0, trace);
    if (i0 > trace.stop_index) {
        // box vectors are guaranteed to appear at or before the stop index
        ErrorKind kind = in_box(graph, k) ? ErrorKind::Internal : ErrorKind::OutsideBox;
        throw Error(kind, "index " + std::to_string(i0) + " lies beyond the trace stop " +
                              std::to_string(trace.stop_index));
    }

    ContactLocation loc;
    loc.k = k;
    loc.laufer_index = i0;
    loc.root_vertex = root.vertex_of_index(static_cast<int>(i0));
    loc.vertex_grade = root.grade(loc.root_vertex);
    UDepth depth = u_depth_of_vertex(root, loc.root_vertex);
    loc.sigma = depth.infinite ? sigma_minus_infinity() : sigma_finite(-depth.depth);
    return loc;
}

ContactLocation sigma_of_char(const PlumbingGraph& graph, int b0, const CharVector& k, const LauferCaps& caps) {
    LauferTrace trace = laufer_trace(graph, b0, caps);
    GradedRoot root = graded_root(trace);
    return sigma_of_char(graph, trace, root, k);
}

std::pair<PlumbingGraph, CharVector> stein_family_chern(Int n, Int m) {
    if (n < 1 || m < 0 || m > n - 1)
        throw Error(ErrorKind::BadRange, "need n >= 1 and 0 <= m <= n-1");
    PlumbingGraph graph = brieskorn_graph(3, 3 * n + 1, 9 * n + 2);

    // outermost vertex of the length-3 leg hanging off the base
    int target = -1;
    for (int start : graph.adjacency()[graph.base()]) {
        std::vector<int> leg;
        int prev = graph.base(), cur = start;
        while (true) {
            leg.push_back(cur);
            int next = -1;
            for (int nb : graph.adjacency()[cur])
                if (nb != prev) next = nb;
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        if (leg.size() == 3) target = leg.back();
    }
    if (target < 0) throw Error(ErrorKind::Internal, "family graph has no length-3 leg");

    CharVector k = canonical_class(graph);
    k.k[target] = n - 2 * m - 1;
    return {std::move(graph), std::move(k)};
}

SemigroupTau semigroup_tau(Int p, Int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw Error(ErrorKind::NotCoprime, "p, q must be coprime and >= 2");

    SemigroupTau out;
    out.p = p;
    out.q = q;
    out.delta = (p - 1) * (q - 1) / 2;
    const Int pq = p * q;
    const Int frobenius = pq - p - q;

    std::vector<bool> member(static_cast<size_t>(frobenius) + 1, false);
    member[0] = true;
    for (Int a = 0; a * p <= frobenius; ++a)
        for (Int b = 0; a * p + b * q <= frobenius; ++b) member[a * p + b * q] = true;
    auto in_semigroup = [&](Int s) { return s > frobenius || member[s]; };

    // Counting parameter in the two set counts resolved to t, the only
    // reading that agrees with direct Laufer traces (see the test suite).
    auto members_up_to = [&](Int n) {
        Int c = 0;
        for (Int s = 0; s <= n; ++s)
            if (in_semigroup(s)) ++c;
        return c;
    };
    auto gaps_from = [&](Int n) {
        Int c = 0;
        for (Int s = n; s <= frobenius; ++s)
            if (!in_semigroup(s)) ++c;
        return c;
    };

    Int tau = 0;
    out.minima.emplace_back(0, 0);
    for (Int t = 0; t <= 2 * out.delta - 3; ++t) {
        Int rise = members_up_to(t);
        Int drop = gaps_from(t + 2);
        if (rise <= 0 || drop <= 0)
            throw Error(ErrorKind::Internal, "semigroup extremum difference is not strictly positive");
        Int peak = tau + rise;
        out.maxima.emplace_back(t * pq + 1, peak);
        tau = peak - drop;
        out.minima.emplace_back((t + 1) * (pq - 1), tau);
    }
    return out;
}

LinkClassification classify_link(const PlumbingGraph& graph, Int ar_bound) {
    if (!is_negative_definite(graph))
        throw Error(ErrorKind::NotNegativeDefinite, "classification requires a negative definite graph");

    LinkClassification out;
    if (is_rational(graph)) {
        out.kind = LinkClassification::Kind::Rational;
        out.sigma_K = sigma_minus_infinity();
        return out;
    }
    out.ar_bases = is_almost_rational(graph, ar_bound);
    if (out.ar_bases.empty()) {
        out.kind = LinkClassification::Kind::NotDetected;
        return out;
    }
    out.kind = LinkClassification::Kind::ProperAR;
    int b0 = out.ar_bases.front();
    LauferTrace trace = laufer_trace(graph, b0);
    GradedRoot root = graded_root(trace);
    ContactLocation loc = sigma_of_char(graph, trace, root, canonical_class(graph));
    out.sigma_K = loc.sigma;
    out.root = std::move(root);
    return out;
}

}  // namespace gradedroots

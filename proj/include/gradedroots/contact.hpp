#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gradedroots/umodule.hpp"

namespace gradedroots {

struct SigmaValue {
    bool minus_infinity = false;
    Int value = 0;  // <= 0 when finite

    bool operator==(const SigmaValue&) const = default;
};

inline SigmaValue sigma_finite(Int v) { return SigmaValue{false, v}; }
inline SigmaValue sigma_minus_infinity() { return SigmaValue{true, 0}; }

/// Where a characteristic vector lands in the Laufer sequence and the
/// graded root, together with its U-filtration depth.
struct ContactLocation {
    CharVector k;
    Int laufer_index = 0;
    int root_vertex = -1;
    Int vertex_grade = 0;
    SigmaValue sigma;
};

/// Index extraction: the base-vertex component of PD^{-1}((k - K)/2).
/// Requires k characteristic and inside the box e_j+2 <= k(b_j) <= -e_j-2;
/// when a trace is supplied and the index lies within it, the vector is
/// compared against the recorded step (a mismatch is an internal error).
Int detect_in_laufer(const PlumbingGraph& graph, int b0, const CharVector& k, const LauferTrace* trace = nullptr);

ContactLocation sigma_of_char(const PlumbingGraph& graph, int b0, const CharVector& k, const LauferCaps& caps = {});

/// Precomputed-pipeline variant used by batch callers.
ContactLocation sigma_of_char(const PlumbingGraph& graph, const LauferTrace& trace, const GradedRoot& root,
                              const CharVector& k);

/// The Brieskorn family member Sigma(3, 3n+1, 9n+2) together with the
/// Chern class of its m-th Stein structure: the canonical class except
/// value n-2m-1 at the outermost vertex of the length-3 leg.
std::pair<PlumbingGraph, CharVector> stein_family_chern(Int n, Int m);

/// tau extrema of Sigma(p, q, pq-1) predicted by semigroup counting:
/// minima at a_t = t(pq-1), maxima at A_t = tpq+1.
struct SemigroupTau {
    Int p = 0, q = 0;
    Int delta = 0;                                // (p-1)(q-1)/2
    std::vector<std::pair<Int, Int>> minima;      // (index, tau), t = 0..2delta-2
    std::vector<std::pair<Int, Int>> maxima;      // (index, tau), t = 0..2delta-3
};

SemigroupTau semigroup_tau(Int p, Int q);

struct LinkClassification {
    enum class Kind { Rational, ProperAR, NotDetected };
    Kind kind = Kind::NotDetected;
    std::vector<int> ar_bases;               // admissible base vertices found
    std::optional<SigmaValue> sigma_K;       // certificate for proper AR / rational
    std::optional<GradedRoot> root;          // certificate root for proper AR
};

LinkClassification classify_link(const PlumbingGraph& graph, Int ar_bound = 0);

}  // namespace gradedroots

#pragma once

#include <functional>
#include <vector>

#include "gradedroots/plumbing.hpp"

namespace gradedroots {

struct LauferCaps {
    long long max_steps = kDefaultIterationCap;
    long long max_additions = kDefaultIterationCap;
};

/// One step of the computation sequence: k -> k_next, the vertices added
/// in order (the base vertex first, then each selected b_j), and
/// chi_{k}(b_0) computed from the incoming k.
struct LauferStepResult {
    CharVector next;
    std::vector<int> added;
    Int chi0;
};

/// Qualifying-vertex selection: smallest id by default (deterministic);
/// the callback form exists so tests can randomize and check confluence.
using VertexChooser = std::function<int(const std::vector<int>&)>;

LauferStepResult laufer_step(const PlumbingGraph& graph, int b0, const CharVector& k,
                             long long inner_cap = kDefaultIterationCap, const VertexChooser& choose = {});

struct LauferStep {
    CharVector k;            // k(i)
    std::vector<int> added;  // vertices added computing k(i+1); empty at the stop index
    Int chi0;                // chi_{k(i)}(b_0)
};

struct LauferTrace {
    int b0 = 0;
    std::vector<LauferStep> steps;  // i = 0..N
    std::vector<Int> tau;           // tau(0..N), tau(0) = 0
    int stop_index = 0;             // N, first index with tau >= 2

    const CharVector& k(int i) const { return steps[i].k; }
};

/// Runs the recursion from k(0) = K until tau >= 2.
LauferTrace laufer_trace(const PlumbingGraph& graph, int b0, const LauferCaps& caps = {},
                         const VertexChooser& choose = {});

/// Minimal alternating (index, value) subsequence: first entry (0, 0),
/// strict extrema with plateaus collapsed to their first index, and the
/// final entry always included.
std::vector<std::pair<int, Int>> tau_extrema(const std::vector<Int>& tau);

}  // namespace gradedroots

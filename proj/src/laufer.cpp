#include "gradedroots/laufer.hpp"

#include "gradedroots/errors.hpp"

namespace gradedroots {

LauferStepResult laufer_step(const PlumbingGraph& graph, int b0, const CharVector& k, long long inner_cap,
                             const VertexChooser& choose) {
    const int s = graph.size();
    const auto& m = graph.form().matrix();

    LauferStepResult out;
    out.chi0 = -(k.k[b0] + graph.weight(b0)) / 2;

    std::vector<Int> z = k.k;
    auto add = [&](int j) {
        for (int i = 0; i < s; ++i) z[i] += 2 * m[i][j];
        out.added.push_back(j);
    };
    add(b0);

    long long additions = 0;
    while (true) {
        std::vector<int> qualifying;
        for (int j = 0; j < s; ++j)
            if (j != b0 && z[j] == -graph.weight(j)) qualifying.push_back(j);
        if (qualifying.empty()) break;
        add(choose ? choose(qualifying) : qualifying.front());
        if (++additions > inner_cap)
            throw Error(ErrorKind::IterationCapExceeded, "computation sequence exceeded the inner cap");
    }
    out.next = CharVector{std::move(z)};
    return out;
}

LauferTrace laufer_trace(const PlumbingGraph& graph, int b0, const LauferCaps& caps, const VertexChooser& choose) {
    LauferTrace trace;
    trace.b0 = b0;
    trace.tau.push_back(0);

    CharVector k = canonical_class(graph);
    long long steps = 0;
    while (true) {
        LauferStepResult step = laufer_step(graph, b0, k, caps.max_additions, choose);
        trace.steps.push_back(LauferStep{k, step.added, step.chi0});
        trace.tau.push_back(trace.tau.back() + step.chi0);
        k = std::move(step.next);
        if (trace.tau.back() >= 2) break;
        if (++steps >= caps.max_steps)
            throw Error(ErrorKind::IterationCapExceeded, "Laufer sequence exceeded the step cap");
    }
    // record the final vector k(N); no step is performed from it
    Int chi_last = -(k.k[b0] + graph.weight(b0)) / 2;
    trace.steps.push_back(LauferStep{std::move(k), {}, chi_last});
    trace.stop_index = static_cast<int>(trace.tau.size()) - 1;
    return trace;
}

std::vector<std::pair<int, Int>> tau_extrema(const std::vector<Int>& tau) {
    // collapse plateaus to their first index
    std::vector<std::pair<int, Int>> compressed;
    for (int i = 0; i < static_cast<int>(tau.size()); ++i)
        if (compressed.empty() || tau[i] != compressed.back().second) compressed.emplace_back(i, tau[i]);

    std::vector<std::pair<int, Int>> out;
    out.push_back(compressed.front());
    for (size_t t = 1; t + 1 < compressed.size(); ++t) {
        Int a = compressed[t - 1].second, b = compressed[t].second, c = compressed[t + 1].second;
        if ((b > a && b > c) || (b < a && b < c)) out.push_back(compressed[t]);
    }
    if (compressed.size() > 1) out.push_back(compressed.back());
    return out;
}

}  // namespace gradedroots

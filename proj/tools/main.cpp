#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gradedroots/config.hpp"
#include "gradedroots/json_io.hpp"

namespace gr = gradedroots;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw gr::Error(gr::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Env cap fallback applies only when --max-iter was not given.
void apply_env_cap(gr::Config& cfg, bool flag_given) {
    if (flag_given) return;
    if (const char* env = std::getenv("GRADED_ROOTS_MAX_ITER")) {
        try {
            long long cap = std::stoll(env);
            if (cap >= 1) {
                cfg.caps.max_steps = cap;
                cfg.caps.max_additions = cap;
            }
        } catch (...) {
        }
    }
}

gr::ParsedGraph load_graph(const std::string& text) {
    gr::ParsedGraph parsed = gr::graph_from_json(gr::parse_json(text));
    if (parsed.remapped)
        std::cerr << "id-map " << gr::id_map_to_json(parsed.id_map).dump() << "\n";
    return parsed;
}

int resolve_b0(const gr::PlumbingGraph& g, int flag_b0) {
    if (flag_b0 < 0) return g.base();
    if (flag_b0 >= g.size()) throw gr::Error(gr::ErrorKind::ParseError, "--b0 out of range");
    return flag_b0;
}

// Run fn over items with a small thread pool; results keep input order.
template <typename In, typename Fn>
std::vector<gr::Json> run_jobs(const std::vector<In>& items, int jobs, Fn fn) {
    std::vector<gr::Json> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::exception_ptr first_error;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::string classification_text(const gr::LinkClassification& c) {
    std::ostringstream os;
    switch (c.kind) {
        case gr::LinkClassification::Kind::Rational: os << "rational"; break;
        case gr::LinkClassification::Kind::ProperAR: os << "proper AR"; break;
        case gr::LinkClassification::Kind::NotDetected: os << "not detected within the AR bound"; break;
    }
    if (c.sigma_K) os << "; sigma(K) = " << gr::sigma_value_string(*c.sigma_K);
    if (!c.ar_bases.empty()) {
        os << "; admissible bases:";
        for (int b : c.ar_bases) os << " " << b;
    }
    return os.str();
}

std::string module_text(const gr::GradedFUModule& m) {
    std::ostringstream os;
    os << "HF+ = T+(" << gr::rational_to_string(m.tower_bottom) << ")";
    for (const auto& [deg, rank] : m.reduced)
        os << " + F^" << rank << "(" << gr::rational_to_string(deg) << ")";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-roots: plumbing graphs, graded roots, HF+ modules, contact sigma invariants, "
                 "and Stein cobordism word plans"};
    app.require_subcommand(1);

    gr::Config cfg;
    long long max_iter = -1;
    int b0_flag = -1;
    std::string format = "json";
    app.add_option("--max-iter", max_iter, "iteration cap for Laufer sequences and cycles");
    app.add_option("--ar-bound", cfg.ar_bound, "weight-decrease bound for the AR test (0 = default)");
    app.add_option("--format", format, "output format: json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--jobs", cfg.jobs, "parallel workers for batch inputs")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized corpus tooling (reserved)");

    // brieskorn
    auto* cmd_brieskorn = app.add_subcommand("brieskorn", "emit the plumbing graph of Sigma(p,q,r)");
    long long bp = 0, bq = 0, br = 0;
    cmd_brieskorn->add_option("p", bp)->required();
    cmd_brieskorn->add_option("q", bq)->required();
    cmd_brieskorn->add_option("r", br)->required();

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "rational / proper AR classification with certificate");
    std::string classify_input;
    cmd_classify->add_option("graph", classify_input, "graph JSON file (default stdin)");

    // root
    auto* cmd_root = app.add_subcommand("root", "Laufer trace and graded root");
    std::string root_input;
    cmd_root->add_option("graph", root_input, "graph JSON file (default stdin)");
    cmd_root->add_option("--b0", b0_flag, "base vertex (default: graph base)");

    // hf
    auto* cmd_hf = app.add_subcommand("hf", "HF+ module of the reversed boundary, canonical Spin^c");
    std::string hf_input;
    cmd_hf->add_option("graph", hf_input, "graph JSON file (default stdin)");
    cmd_hf->add_option("--b0", b0_flag, "base vertex (default: graph base)");

    // sigma
    auto* cmd_sigma = app.add_subcommand("sigma", "contact invariant location and sigma");
    std::string sigma_input;
    std::string char_json;
    std::vector<long long> family;
    cmd_sigma->add_option("graph", sigma_input, "graph JSON file (default stdin)");
    cmd_sigma->add_option("--char", char_json, "characteristic vector as a JSON array");
    cmd_sigma->add_option("--family", family, "Stein family parameters n m (graph is generated)")->expected(2);
    cmd_sigma->add_option("--b0", b0_flag, "base vertex (default: graph base)");

    // plan
    auto* cmd_plan = app.add_subcommand("plan", "Stein cobordism word plan");
    std::string plan_input;
    long long plan_n = -1;
    bool emit_target = false;
    cmd_plan->add_option("wordfile", plan_input, "monodromy word file (default stdin)");
    cmd_plan->add_option("--n", plan_n, "target boundary twist count (default max(n0,1))");
    cmd_plan->add_flag("--target-graph", emit_target, "emit the target Brieskorn plumbing JSON instead");

    // semigroup-tau
    auto* cmd_semigroup = app.add_subcommand("semigroup-tau", "tau extrema of Sigma(p,q,pq-1) by semigroup counts");
    long long sp = 0, sq = 0;
    cmd_semigroup->add_option("p", sp)->required();
    cmd_semigroup->add_option("q", sq)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    cfg.format = format == "dot" ? gr::OutputFormat::Dot : format == "text" ? gr::OutputFormat::Text : gr::OutputFormat::Json;
    if (max_iter >= 1) {
        cfg.caps.max_steps = max_iter;
        cfg.caps.max_additions = max_iter;
    }
    apply_env_cap(cfg, max_iter >= 1);

    try {
        if (cmd_brieskorn->parsed()) {
            gr::PlumbingGraph g = gr::brieskorn_graph(bp, bq, br);
            std::cout << gr::graph_to_json(g).dump() << "\n";
            return 0;
        }

        if (cmd_classify->parsed()) {
            gr::Json input = gr::parse_json(read_input(classify_input));
            if (input.is_array()) {
                std::vector<gr::Json> items(input.begin(), input.end());
                auto results = run_jobs(items, cfg.jobs, [&](const gr::Json& j) {
                    gr::ParsedGraph p = gr::graph_from_json(j);
                    return gr::classification_to_json(gr::classify_link(p.graph, cfg.ar_bound));
                });
                gr::Json out = gr::Json::array();
                for (auto& r : results) out.push_back(std::move(r));
                std::cout << out.dump() << "\n";
                return 0;
            }
            gr::ParsedGraph p = load_graph(input.dump());
            gr::LinkClassification c = gr::classify_link(p.graph, cfg.ar_bound);
            if (cfg.format == gr::OutputFormat::Text)
                std::cout << classification_text(c) << "\n";
            else
                std::cout << gr::classification_to_json(c).dump() << "\n";
            return 0;
        }

        if (cmd_root->parsed()) {
            gr::ParsedGraph p = load_graph(read_input(root_input));
            int b0 = resolve_b0(p.graph, b0_flag);
            gr::LauferTrace trace = gr::laufer_trace(p.graph, b0, cfg.caps);
            gr::GradedRoot root = gr::graded_root(trace);
            if (cfg.format == gr::OutputFormat::Dot) {
                std::cout << gr::root_to_dot(root);
            } else if (cfg.format == gr::OutputFormat::Text) {
                std::cout << "N = " << trace.stop_index << ", leaves = " << root.leaves().size()
                          << ", grades [" << root.min_grade() << ", " << root.max_grade() << "]\n";
            } else {
                gr::Json j = gr::trace_to_json(trace);
                j["dot"] = gr::root_to_dot(root);
                std::cout << j.dump() << "\n";
            }
            return 0;
        }

        if (cmd_hf->parsed()) {
            gr::Json input = gr::parse_json(read_input(hf_input));
            if (input.is_array()) {
                std::vector<gr::Json> items(input.begin(), input.end());
                auto results = run_jobs(items, cfg.jobs, [&](const gr::Json& j) {
                    gr::ParsedGraph p = gr::graph_from_json(j);
                    return gr::module_to_json(gr::hf_plus(p.graph, p.graph.base(), cfg.caps));
                });
                gr::Json out = gr::Json::array();
                for (auto& r : results) out.push_back(std::move(r));
                std::cout << out.dump() << "\n";
                return 0;
            }
            gr::ParsedGraph p = load_graph(input.dump());
            gr::GradedFUModule m = gr::hf_plus(p.graph, resolve_b0(p.graph, b0_flag), cfg.caps);
            if (cfg.format == gr::OutputFormat::Text)
                std::cout << module_text(m) << "\n";
            else
                std::cout << gr::module_to_json(m).dump() << "\n";
            return 0;
        }

        if (cmd_sigma->parsed()) {
            if (!family.empty() && !char_json.empty())
                throw gr::Error(gr::ErrorKind::ParseError, "--char and --family are mutually exclusive");
            gr::ContactLocation loc;
            if (!family.empty()) {
                auto [graph, k] = gr::stein_family_chern(family[0], family[1]);
                loc = gr::sigma_of_char(graph, graph.base(), k, cfg.caps);
            } else {
                if (char_json.empty())
                    throw gr::Error(gr::ErrorKind::ParseError, "sigma needs --char or --family");
                gr::ParsedGraph p = load_graph(read_input(sigma_input));
                gr::Json kj = gr::parse_json(char_json);
                if (!kj.is_array()) throw gr::Error(gr::ErrorKind::ParseError, "--char must be a JSON array");
                std::vector<gr::Int> values;
                for (const auto& x : kj) values.push_back(x.get<gr::Int>());
                gr::CharVector k = gr::make_characteristic(p.graph, std::move(values));
                loc = gr::sigma_of_char(p.graph, resolve_b0(p.graph, b0_flag), k, cfg.caps);
            }
            if (cfg.format == gr::OutputFormat::Text)
                std::cout << "sigma = " << gr::sigma_value_string(loc.sigma) << " (Laufer index "
                          << loc.laufer_index << ", grade " << loc.vertex_grade << ")\n";
            else
                std::cout << gr::sigma_to_json(loc).dump() << "\n";
            return 0;
        }

        if (cmd_plan->parsed()) {
            gr::MonodromyWord word = gr::parse_word(read_input(plan_input));
            std::optional<gr::Int> n;
            if (plan_n >= 0) n = plan_n;
            gr::CobordismPlan plan = gr::plan_stein_cobordism(word, n);
            if (emit_target) {
                gr::PlumbingGraph g = gr::brieskorn_graph(plan.target[0], plan.target[1], plan.target[2]);
                std::cout << gr::graph_to_json(g).dump() << "\n";
            } else if (cfg.format == gr::OutputFormat::Text) {
                std::cout << "n0 = " << plan.n0 << ", n = " << plan.n << ", added right twists = "
                          << plan.added_twists << ", target = Sigma(" << plan.target[0] << "," << plan.target[1]
                          << "," << plan.target[2] << ")\n";
            } else {
                std::cout << gr::plan_to_json(plan).dump() << "\n";
            }
            return 0;
        }

        if (cmd_semigroup->parsed()) {
            gr::SemigroupTau st = gr::semigroup_tau(sp, sq);
            std::cout << gr::semigroup_to_json(st).dump() << "\n";
            return 0;
        }
    } catch (const gr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "nonsep/crosscheck.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "nonsep/classify.hpp"
#include "nonsep/embedding.hpp"
#include "nonsep/minor.hpp"

namespace nonsep {

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    std::vector<Graph> current{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : current) {
            for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << (k - 1)); ++nbrs) {
                Graph h(k);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (VertexSet m = nbrs; m; m &= m - 1)
                    h.add_edge(k - 1, std::countr_zero(m));
                next.emplace(canonical_form(h), std::move(h));
            }
        }
        current.clear();
        for (auto& [key, g] : next) current.push_back(std::move(g));
    }
    return current;
}

std::vector<Graph> crosscheck_corpus(int n_max, bool include_disconnected) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= n_max; ++n)
        for (Graph& g : all_graphs_up_to_iso(n))
            if (include_disconnected || is_connected(g)) corpus.push_back(std::move(g));
    return corpus;
}

namespace {

struct PerGraph {
    std::string classifier;
    std::string minor;
    std::string oracle;
    int witness_kind = -1;  // 0 outerplanar, 1 wheel, 2 prism
    double t_minor = 0, t_classifier = 0, t_oracle = 0;
};

PerGraph check_one(const Graph& g, const EmbeddingLimits& lim) {
    using clock = std::chrono::steady_clock;
    PerGraph r;

    auto t0 = clock::now();
    bool obstruction_free = true;
    for (const auto& [name, h] : obstruction_catalog()) {
        auto m = find_minor_model(g, h);
        if (m) {
            if (!verify_minor_model(g, h, *m)) {
                r.minor = "error: model for " + name + " failed verification";
                obstruction_free = false;
                break;
            }
            obstruction_free = false;
        }
    }
    if (r.minor.empty()) r.minor = obstruction_free ? "member" : "non-member";
    auto t1 = clock::now();
    r.t_minor = std::chrono::duration<double>(t1 - t0).count();

    try {
        Classification c = classify(g);
        if (!verify_classification(g, c)) {
            r.classifier = "error: certificate failed re-verification";
        } else {
            r.classifier = c.member ? "member" : "non-member";
            if (c.member) r.witness_kind = static_cast<int>(c.witness->index());
        }
    } catch (const std::exception& e) {
        r.classifier = std::string("error: ") + e.what();
    }
    auto t2 = clock::now();
    r.t_classifier = std::chrono::duration<double>(t2 - t1).count();

    try {
        auto drawing = exists_nonseparating_drawing(g, lim);
        r.oracle = drawing ? "member" : "non-member";
    } catch (const std::exception& e) {
        r.oracle = std::string("error: ") + e.what();
    }
    auto t3 = clock::now();
    r.t_oracle = std::chrono::duration<double>(t3 - t2).count();
    return r;
}

}  // namespace

CrosscheckReport run_crosscheck_on(const std::vector<Graph>& corpus,
                                   const CrosscheckOptions& opt) {
    CrosscheckReport report;
    report.n_max = opt.n_max;
    report.include_disconnected = opt.include_disconnected;
    report.graphs = static_cast<long>(corpus.size());

    std::vector<PerGraph> results(corpus.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < corpus.size();
             i = cursor.fetch_add(1))
            results[i] = check_one(corpus[i], opt.oracle_limits);
    };
    if (opt.jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < opt.jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        PerGraph& r = results[i];
        if (static_cast<int>(i) == opt.selftest_flip)
            r.classifier = r.classifier == "member" ? "non-member" : "member";
        report.seconds_minor += r.t_minor;
        report.seconds_classifier += r.t_classifier;
        report.seconds_oracle += r.t_oracle;
        if (r.classifier == "member") {
            ++report.members;
            if (r.witness_kind == 0) ++report.outerplanar_witnesses;
            if (r.witness_kind == 1) ++report.wheel_witnesses;
            if (r.witness_kind == 2) ++report.prism_witnesses;
        }
        if (r.classifier != r.minor || r.minor != r.oracle)
            report.mismatches.push_back(
                {i, to_graph6(corpus[i]), r.classifier, r.minor, r.oracle});
    }
    return report;
}

CrosscheckReport run_crosscheck(const CrosscheckOptions& opt) {
    int guard = opt.include_disconnected ? 6 : 7;
    if (opt.n_max < 1 || opt.n_max > guard)
        throw capacity_error("crosscheck guard: n_max must be within 1.." +
                             std::to_string(guard) +
                             (opt.include_disconnected ? " with disconnected graphs" : ""));
    return run_crosscheck_on(crosscheck_corpus(opt.n_max, opt.include_disconnected), opt);
}

}  // namespace nonsep

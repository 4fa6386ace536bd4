#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsep/embedding.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

/// All graphs on exactly n vertices, one per isomorphism class, built by
/// vertex augmentation with canonical-form dedup; deterministic order.
std::vector<Graph> all_graphs_up_to_iso(int n);

/// Corpus for the crosscheck: graphs on 1..n_max vertices, connected ones
/// only unless include_disconnected.
std::vector<Graph> crosscheck_corpus(int n_max, bool include_disconnected);

struct CrosscheckOptions {
    int n_max = 5;
    bool include_disconnected = false;
    int jobs = 1;
    /// Flips the classifier verdict of this corpus index; a harness
    /// self-test hook that must produce a mismatch.
    int selftest_flip = -1;
    EmbeddingLimits oracle_limits{};
};

struct CrosscheckMismatch {
    std::size_t index = 0;
    std::string graph6;
    std::string classifier;  // "member", "non-member" or "error: ..."
    std::string minor;
    std::string oracle;
};

struct CrosscheckReport {
    int n_max = 0;
    bool include_disconnected = false;
    long graphs = 0;
    long members = 0;
    long outerplanar_witnesses = 0;
    long wheel_witnesses = 0;
    long prism_witnesses = 0;
    std::vector<CrosscheckMismatch> mismatches;
    // cumulative worker seconds per stage
    double seconds_minor = 0, seconds_classifier = 0, seconds_oracle = 0;
};

/// Runs the three-way comparison (obstruction minors, structural classifier,
/// embedding oracle) over the given corpus. Certificate failures count as
/// mismatches. Deterministic for fixed inputs regardless of jobs.
CrosscheckReport run_crosscheck_on(const std::vector<Graph>& corpus,
                                   const CrosscheckOptions& opt);

/// Generates the corpus internally; n_max is guarded at 7 (connected) or
/// 6 (with disconnected graphs).
CrosscheckReport run_crosscheck(const CrosscheckOptions& opt);

}  // namespace nonsep

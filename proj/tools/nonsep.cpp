// Command-line surface over the recognition toolkit: batch classification
// with certificates, the three-way crosscheck, and the maximal-linkless
// family build.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonsep/serialize.hpp"

namespace {

using namespace nonsep;

// exit-code contract: 0 ok, 1 verification mismatch, 2 input error, 3 capacity
enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kCapacity = 3 };

EmbeddingLimits limits_from_env() {
    EmbeddingLimits lim;
    if (const char* cap = std::getenv("NONSEP_CAPACITY")) {
        try {
            lim.max_vertices = std::stoi(cap);
        } catch (const std::exception&) {
            std::cerr << "nonsep: ignoring malformed NONSEP_CAPACITY\n";
        }
    }
    return lim;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

int run_classify(const std::string& file, bool verify, const std::string& expect,
                 bool emit_drawing, bool summary) {
    std::vector<std::string> lines;
    try {
        lines = read_lines(file);
    } catch (const parse_error& e) {
        std::cerr << "nonsep classify: " << e.what() << "\n";
        return kInputError;
    }
    bool parse_failed = false, mismatch = false, capacity = false;
    long members = 0, non_members = 0;
    EmbeddingLimits lim = limits_from_env();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        Graph g;
        try {
            g = parse_graph6(lines[i]);
        } catch (const capacity_error& e) {
            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            capacity = true;
            continue;
        } catch (const parse_error& e) {
            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            parse_failed = true;
            continue;
        }
        Classification c = classify(g);
        json out = classification_to_json(c);
        if (verify) {
            bool ok = verify_classification(g, c);
            out["verified"] = ok;
            if (!ok) mismatch = true;
        }
        if (!expect.empty()) {
            std::string verdict = c.member ? "member" : "non-member";
            if (verdict != expect) mismatch = true;
        }
        if (emit_drawing) {
            if (c.member) {
                try {
                    auto d = exists_nonseparating_drawing(g, lim);
                    if (d)
                        out["drawing"] = drawing_to_json(*d);
                    else
                        out["drawing"] = nullptr;
                } catch (const capacity_error& e) {
                    out["drawing_error"] = e.what();
                    capacity = true;
                }
            } else {
                out["drawing"] = nullptr;
            }
        }
        (c.member ? members : non_members)++;
        if (!summary) std::cout << out.dump() << "\n";
    }
    if (summary)
        std::cout << json{{"member", members}, {"non-member", non_members}}.dump() << "\n";
    if (parse_failed) return kInputError;
    if (capacity) return kCapacity;
    if (mismatch) return kMismatch;
    return kOk;
}

int run_crosscheck(int n, bool include_disconnected, const std::string& from, int jobs,
                   bool stable, int selftest_flip) {
    CrosscheckOptions opt;
    opt.n_max = n;
    opt.include_disconnected = include_disconnected;
    opt.jobs = jobs;
    opt.selftest_flip = selftest_flip;
    opt.oracle_limits = limits_from_env();
    CrosscheckReport report;
    try {
        if (!from.empty()) {
            std::vector<Graph> corpus;
            auto lines = read_lines(from);
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (blank(lines[i])) continue;
                try {
                    corpus.push_back(parse_graph6(lines[i]));
                } catch (const std::exception& e) {
                    std::cerr << from << ":" << i + 1 << ": " << e.what() << "\n";
                    return kInputError;
                }
                if (corpus.back().vertex_count() > opt.oracle_limits.max_vertices) {
                    std::cerr << from << ":" << i + 1
                              << ": graph exceeds the oracle guard of "
                              << opt.oracle_limits.max_vertices << " vertices\n";
                    return kCapacity;
                }
            }
            report = run_crosscheck_on(corpus, opt);
        } else {
            report = nonsep::run_crosscheck(opt);
        }
    } catch (const capacity_error& e) {
        std::cerr << "nonsep crosscheck: " << e.what() << "\n";
        return kCapacity;
    } catch (const parse_error& e) {
        std::cerr << "nonsep crosscheck: " << e.what() << "\n";
        return kInputError;
    }
    std::cout << crosscheck_report_to_json(report, stable).dump() << "\n";
    return report.mismatches.empty() ? kOk : kMismatch;
}

int recount_graph(const Graph& g, const std::string& label, int jobs) {
    json out;
    out["graph6"] = to_graph6(g);
    int n = g.vertex_count(), m = g.edge_count();
    bool identity = m == 3 * n - 3;
    out["edge_identity_3v_minus_3"] = identity;
    bool linkless = is_linkless(g);
    out["linkless"] = linkless;
    bool maximal = false;
    if (linkless) {
        auto rep = verify_maximal_linkless(g, jobs);
        maximal = rep.maximal;
    }
    out["maximal"] = maximal;
    std::cout << out.dump() << "\n";
    if (!identity || !linkless || !maximal) {
        std::cerr << "nonsep linkless: " << label << " failed "
                  << (!identity ? "the 3|V|-3 edge count"
                                : (!linkless ? "the linklessness check"
                                             : "the maximality check"))
                  << "\n";
        return kMismatch;
    }
    return kOk;
}

int run_linkless(int max_len, bool recount, const std::string& file, int jobs) {
    if (!file.empty()) {  // verification mode over an existing stream
        std::vector<std::string> lines;
        try {
            lines = read_lines(file);
        } catch (const parse_error& e) {
            std::cerr << "nonsep linkless: " << e.what() << "\n";
            return kInputError;
        }
        int rc = kOk;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (blank(lines[i]) || lines[i][0] == '{') continue;  // skip report lines
            Graph g;
            try {
                g = parse_graph6(lines[i]);
            } catch (const std::exception& e) {
                std::cerr << file << ":" << i + 1 << ": " << e.what() << "\n";
                return kInputError;
            }
            int one = recount_graph(g, "line " + std::to_string(i + 1), jobs);
            if (one != kOk) rc = one;
        }
        return rc;
    }
    std::vector<SachsInstance> family;
    try {
        family = sachs_family(max_len, jobs);
    } catch (const precondition_error& e) {
        std::cerr << "nonsep linkless: " << e.what() << "\n";
        return kInputError;
    } catch (const capacity_error& e) {
        std::cerr << "nonsep linkless: " << e.what() << "\n";
        return kCapacity;
    }
    int rc = kOk;
    for (const auto& inst : family) {
        std::string g6 = to_graph6(inst.graph);
        std::cout << g6 << "\n";
        std::cout << sachs_instance_to_json(inst).dump() << "\n";
        if (recount) {
            // independent round trip through the serialized form
            int one = recount_graph(parse_graph6(g6), g6, jobs);
            if (one != kOk) rc = one;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-separating planar graph recognition and certification"};
    app.require_subcommand(1);

    auto* cls = app.add_subcommand("classify", "classify graph6 lines, one JSON each");
    std::string cls_file;
    bool cls_verify = false, cls_drawing = false, cls_summary = false;
    std::string cls_expect;
    cls->add_option("file", cls_file, "graph6 input file, or - for stdin");
    cls->add_flag("--verify", cls_verify, "re-check every certificate");
    cls->add_option("--expect", cls_expect, "fail unless every verdict matches")
        ->check(CLI::IsMember({"member", "non-member"}));
    cls->add_flag("--emit-drawing", cls_drawing,
                  "attach a non-separating drawing for members (oracle-guarded)");
    cls->add_flag("--summary", cls_summary, "print one aggregate object only");

    auto* cross = app.add_subcommand("crosscheck",
                                     "compare minors, classifier and drawing oracle");
    int cross_n = 5, cross_jobs = 1, cross_flip = -1;
    bool cross_disc = false, cross_stable = false;
    std::string cross_from;
    cross->add_option("--n", cross_n, "largest vertex count")->required();
    cross->add_flag("--include-disconnected", cross_disc, "widen to disconnected graphs");
    cross->add_option("--from", cross_from, "use this graph6 corpus instead");
    cross->add_option("--jobs", cross_jobs, "worker threads");
    cross->add_flag("--stable", cross_stable, "suppress timing fields");
    cross->add_option("--selftest-flip", cross_flip,
                      "flip one classifier verdict (harness self-test)")
        ->group("");  // hidden

    auto* link = app.add_subcommand("linkless",
                                    "build and verify the maximal linkless family");
    int link_len = 3, link_jobs = 1;
    bool link_recount = false;
    std::string link_file;
    link->add_option("--max-len", link_len, "largest total side length");
    link->add_flag("--recount", link_recount, "re-verify after serialization");
    link->add_option("--jobs", link_jobs, "worker threads");
    link->add_option("file", link_file, "re-verify this graph6 stream instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed())
            return run_classify(cls_file, cls_verify, cls_expect, cls_drawing, cls_summary);
        if (cross->parsed())
            return run_crosscheck(cross_n, cross_disc, cross_from, cross_jobs,
                                  cross_stable, cross_flip);
        if (link->parsed()) return run_linkless(link_len, link_recount, link_file, link_jobs);
    } catch (const std::exception& e) {
        std::cerr << "nonsep: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "vc/connectivity.hpp"
#include "vc/graph.hpp"
#include "vc/hrg.hpp"

namespace vc {

enum class Algo { local1, local1plus, local2, local2plus, hrg };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::local1: return "LOCAL1";
        case Algo::local1plus: return "LOCAL1PLUS";
        case Algo::local2: return "LOCAL2";
        case Algo::local2plus: return "LOCAL2PLUS";
        case Algo::hrg: return "HRG";
    }
    return "?";
}

inline std::optional<Algo> parse_algo(std::string s) {
    for (char& c : s) c = static_cast<char>(tolower(c));
    if (s == "local1") return Algo::local1;
    if (s == "local1plus" || s == "local1+") return Algo::local1plus;
    if (s == "local2") return Algo::local2;
    if (s == "local2plus" || s == "local2+") return Algo::local2plus;
    if (s == "hrg") return Algo::hrg;
    return std::nullopt;
}

struct BenchOptions {
    uint64_t seed = 0;
    int boost = 1;
    int k_initial = 0;
    double budget_factor = 0;
    int reference_kappa = -1;  // < 0: unknown
    std::string instance_id = "-";
    int trial = 0;
};

struct BenchRecord {
    std::string algorithm;
    std::string instance;
    int trial = 0;
    int n = 0;
    long long m = 0;
    int kappa_found = 0;
    bool have_cut = false;
    bool cut_valid = false;   // independent re-verification, vacuously true without a cut
    bool success = false;     // kappa_found equals the reference, when known
    bool success_known = false;
    double time_ms = 0;
    PhaseTimes phases;
    long long edge_queries = 0;
    long long vertex_queries = 0;
    long long localec_calls = 0;
    long long flow_calls = 0;
    std::vector<std::pair<long long, double>> edges_per_call_over_nu_k;
    uint64_t seed = 0;
};

/// Mean edges per local-search call for each volume parameter, normalized by
/// nu * k of the call.
inline std::vector<std::pair<long long, double>> normalized_call_profile(
    const std::vector<LocalCallRecord>& log) {
    std::map<long long, std::pair<double, long long>> acc;  // nu -> (sum, count)
    for (const auto& c : log) {
        double norm = static_cast<double>(c.edges) /
                      (static_cast<double>(c.nu) * std::max(c.k, 1));
        auto& slot = acc[c.nu];
        slot.first += norm;
        slot.second += 1;
    }
    std::vector<std::pair<long long, double>> out;
    out.reserve(acc.size());
    for (const auto& [nu, s] : acc) out.emplace_back(nu, s.first / s.second);
    return out;
}

inline BenchRecord record_from_report(const Graph& g, Algo algo, const BenchOptions& opts,
                                      const VcReport& report) {
    BenchRecord r;
    r.algorithm = algo_name(algo);
    r.instance = opts.instance_id;
    r.trial = opts.trial;
    r.n = g.vertex_count();
    r.m = g.arc_count() / 2;
    r.kappa_found = report.kappa;
    r.have_cut = report.cut.has_value();
    r.cut_valid = !r.have_cut || (is_vertex_cut(g, *report.cut) &&
                                  static_cast<int>(report.cut->size()) == report.kappa);
    r.success_known = opts.reference_kappa >= 0;
    r.success = r.success_known && report.kappa == opts.reference_kappa;
    r.time_ms = report.total_ms;
    r.phases = report.phase_times;
    r.edge_queries = report.counters.edge_accesses;
    r.vertex_queries = report.counters.unique_vertices;
    r.localec_calls = report.localec_calls;
    r.flow_calls = report.flow_calls;
    r.edges_per_call_over_nu_k = normalized_call_profile(report.localec_call_log);
    r.seed = opts.seed;
    return r;
}

inline BenchRecord run_algorithm(const Graph& g, Algo algo, const BenchOptions& opts) {
    VcReport report;
    if (algo == Algo::hrg) {
        HrgConfig cfg;
        cfg.seed = opts.seed;
        cfg.k_initial = opts.k_initial;
        report = hrg_vertex_connectivity(g, cfg);
    } else {
        DriverConfig cfg;
        switch (algo) {
            case Algo::local1: cfg.variant = LocalVariant::local1; break;
            case Algo::local1plus: cfg.variant = LocalVariant::local1_plus; break;
            case Algo::local2: cfg.variant = LocalVariant::local2; break;
            default: cfg.variant = LocalVariant::local2_plus; break;
        }
        cfg.seed = opts.seed;
        cfg.boost = opts.boost;
        cfg.k_initial = opts.k_initial;
        cfg.budget_factor = opts.budget_factor;
        report = vertex_connectivity(g, cfg);
    }
    return record_from_report(g, algo, opts, report);
}

// ---- CSV emission -------------------------------------------------------

inline std::string csv_header() {
    return "kind,algorithm,instance,trial,n,m,kappa_found,cut_valid,success,success_rate,"
           "time_ms,sparsify_build_ms,trivial_ms,balanced_ff_ms,unbalanced_localec_ms,"
           "other_ms,edge_queries,vertex_queries,localec_calls,flow_calls,"
           "edges_per_call_over_nu_k,seed";
}

inline std::string format_call_profile(const std::vector<std::pair<long long, double>>& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ';';
        os << p[i].first << ':' << p[i].second;
    }
    return os.str();
}

inline std::string csv_row(const BenchRecord& r) {
    std::ostringstream os;
    os << "trial," << r.algorithm << ',' << r.instance << ',' << r.trial << ',' << r.n << ','
       << r.m << ',' << r.kappa_found << ',' << (r.cut_valid ? 1 : 0) << ','
       << (r.success_known ? (r.success ? "1" : "0") : "") << ",," << r.time_ms << ','
       << r.phases.sparsify_build << ',' << r.phases.trivial << ',' << r.phases.balanced_ff
       << ',' << r.phases.unbalanced_localec << ',' << r.phases.other << ',' << r.edge_queries
       << ',' << r.vertex_queries << ',' << r.localec_calls << ',' << r.flow_calls << ','
       << format_call_profile(r.edges_per_call_over_nu_k) << ',' << r.seed;
    return os.str();
}

/// Per (instance, algorithm) means over trials.
struct BenchGroup {
    std::string algorithm;
    std::string instance;
    int trials = 0;
    double n = 0, m = 0, kappa_found = 0;
    bool all_cuts_valid = true;
    double success_rate = 0;
    bool success_known = false;
    double time_ms = 0;
    PhaseTimes phases;
    double edge_queries = 0, vertex_queries = 0, localec_calls = 0, flow_calls = 0;
    std::vector<std::pair<long long, double>> edges_per_call_over_nu_k;
};

inline std::vector<BenchGroup> aggregate_records(const std::vector<BenchRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::vector<const BenchRecord*>> groups;
    for (const auto& r : records) groups[{r.instance, r.algorithm}].push_back(&r);
    std::vector<BenchGroup> out;
    for (const auto& [key, rs] : groups) {
        BenchGroup g;
        g.instance = key.first;
        g.algorithm = key.second;
        g.trials = static_cast<int>(rs.size());
        std::map<long long, std::pair<double, long long>> prof;
        int successes = 0;
        for (const BenchRecord* r : rs) {
            g.n += r->n;
            g.m += static_cast<double>(r->m);
            g.kappa_found += r->kappa_found;
            g.all_cuts_valid = g.all_cuts_valid && r->cut_valid;
            g.success_known = g.success_known || r->success_known;
            successes += r->success ? 1 : 0;
            g.time_ms += r->time_ms;
            g.phases.sparsify_build += r->phases.sparsify_build;
            g.phases.trivial += r->phases.trivial;
            g.phases.balanced_ff += r->phases.balanced_ff;
            g.phases.unbalanced_localec += r->phases.unbalanced_localec;
            g.phases.other += r->phases.other;
            g.edge_queries += static_cast<double>(r->edge_queries);
            g.vertex_queries += static_cast<double>(r->vertex_queries);
            g.localec_calls += static_cast<double>(r->localec_calls);
            g.flow_calls += static_cast<double>(r->flow_calls);
            for (const auto& [nu, val] : r->edges_per_call_over_nu_k) {
                prof[nu].first += val;
                prof[nu].second += 1;
            }
        }
        double inv = 1.0 / g.trials;
        g.n *= inv;
        g.m *= inv;
        g.kappa_found *= inv;
        g.success_rate = static_cast<double>(successes) / g.trials;
        g.time_ms *= inv;
        g.phases.sparsify_build *= inv;
        g.phases.trivial *= inv;
        g.phases.balanced_ff *= inv;
        g.phases.unbalanced_localec *= inv;
        g.phases.other *= inv;
        g.edge_queries *= inv;
        g.vertex_queries *= inv;
        g.localec_calls *= inv;
        g.flow_calls *= inv;
        for (const auto& [nu, s] : prof)
            g.edges_per_call_over_nu_k.emplace_back(nu, s.first / s.second);
        out.push_back(std::move(g));
    }
    return out;
}

inline std::string csv_row(const BenchGroup& g) {
    std::ostringstream os;
    os << "mean," << g.algorithm << ',' << g.instance << ',' << g.trials << ',' << g.n << ','
       << g.m << ',' << g.kappa_found << ',' << (g.all_cuts_valid ? 1 : 0) << ",,"
       << (g.success_known ? std::to_string(g.success_rate) : "") << ',' << g.time_ms << ','
       << g.phases.sparsify_build << ',' << g.phases.trivial << ',' << g.phases.balanced_ff
       << ',' << g.phases.unbalanced_localec << ',' << g.phases.other << ',' << g.edge_queries
       << ',' << g.vertex_queries << ',' << g.localec_calls << ',' << g.flow_calls << ','
       << format_call_profile(g.edges_per_call_over_nu_k) << ',';
    return os.str();
}

// ---- worker pool --------------------------------------------------------

inline int default_thread_count() {
    if (const char* env = std::getenv("VC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct BenchJob {
    const Graph* graph = nullptr;
    Algo algo = Algo::local1;
    BenchOptions opts;
};

/// Runs all jobs (possibly concurrently); results are index-aligned with the
/// input regardless of completion order.
inline std::vector<BenchRecord> run_bench_jobs(const std::vector<BenchJob>& jobs, int threads) {
    std::vector<BenchRecord> results(jobs.size());
    if (threads < 1) threads = 1;
    threads = std::min<std::size_t>(threads, jobs.size() ? jobs.size() : 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const BenchJob& j = jobs[i];
            results[i] = run_algorithm(*j.graph, j.algo, j.opts);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace vc

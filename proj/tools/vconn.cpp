// vconn: vertex-connectivity toolkit front end.
//   vconn vc <edge-list> --algo local2plus      compute kappa and a witness cut
//   vconn gen planted ... / gen kcore ...       build benchmark instances
//   vconn bench ...                             run a trial matrix, emit CSV
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vc/bench.hpp"
#include "vc/edge_list.hpp"
#include "vc/generate.hpp"

using nlohmann::json;

namespace {

struct VcArgs {
    std::string input;
    std::string algo = "local1";
    int k_initial = 0;
    uint64_t seed = 0;
    int boost = 1;
    bool counters = false;
};

int cmd_vc(const VcArgs& a) {
    auto algo = vc::parse_algo(a.algo);
    if (!algo) {
        std::cerr << "unknown algorithm: " << a.algo << "\n";
        return 1;
    }
    auto loaded = vc::load_edge_list(a.input);
    vc::BenchOptions opts;
    opts.seed = a.seed;
    opts.boost = a.boost;
    opts.k_initial = a.k_initial;
    opts.instance_id = a.input;
    auto rec = vc::run_algorithm(loaded.graph, *algo, opts);

    json out{{"algorithm", rec.algorithm},
             {"instance", rec.instance},
             {"n", rec.n},
             {"m", rec.m},
             {"kappa", rec.kappa_found},
             {"cut_valid", rec.cut_valid},
             {"time_ms", rec.time_ms},
             {"seed", rec.seed}};
    if (a.counters) {
        out["edge_queries"] = rec.edge_queries;
        out["vertex_queries"] = rec.vertex_queries;
        out["localec_calls"] = rec.localec_calls;
        out["flow_calls"] = rec.flow_calls;
        out["phase_ms"] = {{"sparsify_build", rec.phases.sparsify_build},
                           {"trivial", rec.phases.trivial},
                           {"balanced_ff", rec.phases.balanced_ff},
                           {"unbalanced_localec", rec.phases.unbalanced_localec},
                           {"other", rec.phases.other}};
        json prof = json::array();
        for (auto& [nu, val] : rec.edges_per_call_over_nu_k)
            prof.push_back({{"nu", nu}, {"edges_over_nu_k", val}});
        out["edges_per_call_over_nu_k"] = prof;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

struct GenPlantedArgs {
    int n = 1000;
    int size_l = 5;
    int size_s = 5;
    int k_gen = 60;
    uint64_t seed = 0;
    std::string out;
};

int cmd_gen_planted(const GenPlantedArgs& a) {
    vc::PlantedParams p;
    p.n = a.n;
    p.size_l = a.size_l;
    p.size_s = a.size_s;
    p.k_gen = a.k_gen;
    vc::Rng rng(a.seed);
    auto inst = vc::generate_planted(p, rng);
    vc::save_edge_list(inst.graph, a.out);

    json meta{{"kind", "planted"},
              {"n", a.n},
              {"size_l", a.size_l},
              {"size_s", a.size_s},
              {"k_gen", a.k_gen},
              {"seed", a.seed},
              {"kappa", a.size_s},
              {"separator", inst.triple.separator},
              {"left", inst.triple.left},
              {"m", inst.graph.arc_count() / 2}};
    std::ofstream mf(a.out + ".meta.json");
    if (!mf) throw std::runtime_error("cannot write metadata next to " + a.out);
    mf << meta.dump(2) << "\n";
    std::cerr << "wrote " << a.out << " (n=" << a.n << ", m=" << inst.graph.arc_count() / 2
              << ", kappa=" << a.size_s << ")\n";
    return 0;
}

struct GenKcoreArgs {
    std::string input;
    int k = 2;
    std::string out;
};

int cmd_gen_kcore(const GenKcoreArgs& a) {
    auto loaded = vc::load_edge_list(a.input);
    std::vector<int> orig;
    auto core = vc::k_core(loaded.graph, a.k, &orig);
    // keep the input file's vertex labels in the output
    std::vector<long long> ids(orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) ids[i] = loaded.ids[orig[i]];
    vc::save_edge_list(core, a.out, &ids);

    json meta{{"kind", "kcore"},
              {"source", a.input},
              {"k", a.k},
              {"n", core.vertex_count()},
              {"m", core.arc_count() / 2}};
    std::ofstream mf(a.out + ".meta.json");
    if (!mf) throw std::runtime_error("cannot write metadata next to " + a.out);
    mf << meta.dump(2) << "\n";
    std::cerr << "wrote " << a.out << " (n=" << core.vertex_count() << ", m="
              << core.arc_count() / 2 << ")\n";
    return 0;
}

struct PlantedSpec {
    int n = 1000;
    int size_l = 5;
    int size_s = 5;
    int k_gen = 60;
};

// "n=1000,l=5,s=8,kgen=60"
PlantedSpec parse_planted_spec(const std::string& text) {
    PlantedSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--planted", "expected key=value in '" + item + "'");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (key == "n") spec.n = value;
        else if (key == "l") spec.size_l = value;
        else if (key == "s") spec.size_s = value;
        else if (key == "kgen") spec.k_gen = value;
        else throw CLI::ValidationError("--planted", "unknown key '" + key + "'");
    }
    return spec;
}

struct BenchArgs {
    std::vector<std::string> algos{"local1", "local1plus", "local2plus", "hrg"};
    std::vector<std::string> planted;
    std::vector<std::string> inputs;
    int graphs = 5;
    int trials = 5;
    uint64_t seed = 0;
    int threads = 0;
    int boost = 1;
    std::string out;
};

int cmd_bench(const BenchArgs& a) {
    std::vector<vc::Algo> algos;
    for (const auto& name : a.algos) {
        auto parsed = vc::parse_algo(name);
        if (!parsed) {
            std::cerr << "unknown algorithm: " << name << "\n";
            return 1;
        }
        algos.push_back(*parsed);
    }

    // materialize the instance set; each owns its graph for the worker pool
    struct Instance {
        std::string id;
        vc::Graph graph;
        int reference_kappa = -1;
    };
    std::vector<Instance> instances;
    for (const auto& text : a.planted) {
        PlantedSpec spec = parse_planted_spec(text);
        for (int gidx = 0; gidx < a.graphs; ++gidx) {
            vc::PlantedParams p;
            p.n = spec.n;
            p.size_l = spec.size_l;
            p.size_s = spec.size_s;
            p.k_gen = spec.k_gen;
            vc::Rng rng(vc::derive_seed(a.seed, 0xB00 + instances.size()));
            auto inst = vc::generate_planted(p, rng);
            std::ostringstream id;
            id << "planted_n" << spec.n << "_l" << spec.size_l << "_s" << spec.size_s << "_g"
               << gidx;
            instances.push_back({id.str(), std::move(inst.graph), spec.size_s});
        }
    }
    for (const auto& path : a.inputs) {
        auto loaded = vc::load_edge_list(path);
        instances.push_back({path, std::move(loaded.graph), -1});
    }

    std::vector<vc::BenchJob> jobs;
    for (const auto& inst : instances)
        for (auto algo : algos)
            for (int t = 0; t < a.trials; ++t) {
                vc::BenchOptions opts;
                opts.seed = vc::derive_seed(a.seed, 0xBE7C0 + jobs.size());
                opts.boost = a.boost;
                opts.reference_kappa = inst.reference_kappa;
                opts.instance_id = inst.id;
                opts.trial = t;
                jobs.push_back({&inst.graph, algo, opts});
            }

    int threads = a.threads > 0 ? a.threads : vc::default_thread_count();
    auto records = vc::run_bench_jobs(jobs, threads);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) {
            std::cerr << "cannot open " << a.out << " for writing\n";
            return 1;
        }
        os = &file;
    }
    *os << vc::csv_header() << "\n";
    for (const auto& rec : records) *os << vc::csv_row(rec) << "\n";
    for (const auto& group : vc::aggregate_records(records)) *os << vc::csv_row(group) << "\n";

    bool all_valid = true;
    for (const auto& rec : records) all_valid = all_valid && rec.cut_valid;
    if (!all_valid) std::cerr << "warning: some reported cuts failed re-verification\n";
    return all_valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex connectivity toolkit"};
    app.require_subcommand(1);

    VcArgs vc_args;
    auto* vc_cmd = app.add_subcommand("vc", "compute vertex connectivity of an edge list");
    vc_cmd->add_option("input", vc_args.input, "edge-list file")->required();
    vc_cmd->add_option("--algo", vc_args.algo,
                       "local1|local1plus|local2|local2plus|hrg");
    vc_cmd->add_option("--k", vc_args.k_initial, "initial doubling bound (0 = auto)");
    vc_cmd->add_option("--seed", vc_args.seed, "random seed");
    vc_cmd->add_option("--boost", vc_args.boost, "repetitions per stage");
    vc_cmd->add_flag("--counters", vc_args.counters, "include query counters and phase times");

    auto* gen_cmd = app.add_subcommand("gen", "generate benchmark instances");
    gen_cmd->require_subcommand(1);

    GenPlantedArgs planted_args;
    auto* planted_cmd = gen_cmd->add_subcommand("planted", "graph with a planted minimum cut");
    planted_cmd->add_option("-n,--n", planted_args.n, "vertex count")->required();
    planted_cmd->add_option("--l", planted_args.size_l, "hidden side size");
    planted_cmd->add_option("--s", planted_args.size_s, "separator size (= kappa)");
    planted_cmd->add_option("--k-gen", planted_args.k_gen, "spanning structures kept");
    planted_cmd->add_option("--seed", planted_args.seed, "random seed");
    planted_cmd->add_option("-o,--out", planted_args.out, "output edge list")->required();

    GenKcoreArgs kcore_args;
    auto* kcore_cmd = gen_cmd->add_subcommand("kcore", "dense core of an edge list");
    kcore_cmd->add_option("input", kcore_args.input, "edge-list file")->required();
    kcore_cmd->add_option("--k", kcore_args.k, "minimum degree")->required();
    kcore_cmd->add_option("-o,--out", kcore_args.out, "output edge list")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run a trial matrix, emit CSV");
    bench_cmd->add_option("--algos", bench_args.algos, "algorithms to run")->delimiter(',');
    bench_cmd->add_option("--planted", bench_args.planted,
                          "planted spec n=..,l=..,s=..,kgen=.. (repeatable)");
    bench_cmd->add_option("--input", bench_args.inputs, "edge-list instance (repeatable)");
    bench_cmd->add_option("--graphs", bench_args.graphs, "graphs per planted spec");
    bench_cmd->add_option("--trials", bench_args.trials, "runs per instance and algorithm");
    bench_cmd->add_option("--seed", bench_args.seed, "master seed");
    bench_cmd->add_option("--threads", bench_args.threads,
                          "worker threads (default: VC_THREADS or 1)");
    bench_cmd->add_option("--boost", bench_args.boost, "repetitions per stage");
    bench_cmd->add_option("-o,--out", bench_args.out, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (vc_cmd->parsed()) return cmd_vc(vc_args);
        if (planted_cmd->parsed()) return cmd_gen_planted(planted_args);
        if (kcore_cmd->parsed()) return cmd_gen_kcore(kcore_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

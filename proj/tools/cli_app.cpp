#include "cli_app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chaingraph/block_cache.hpp"
#include "chaingraph/digest.hpp"
#include "chaingraph/fetcher.hpp"
#include "chaingraph/graph.hpp"
#include "chaingraph/kernels.hpp"
#include "chaingraph/metrics.hpp"
#include "chaingraph/miners.hpp"
#include "chaingraph/pajek.hpp"
#include "chaingraph/random_baseline.hpp"
#include "chaingraph/reports.hpp"

#ifndef CHAINGRAPH_VERSION
#define CHAINGRAPH_VERSION "dev"
#endif

namespace chaingraph::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string command;
    std::string rpc_url;
    fs::path cache_dir = "chaincache";
    std::optional<std::uint64_t> start_block;
    std::optional<std::uint64_t> num_blocks;
    std::vector<std::string> snapshot_texts;
    std::optional<fs::path> input_net;
    ExactnessPolicy policy;
    std::size_t trials = 5;
    std::uint64_t seed = 1;
    fs::path out_dir = ".";
    std::string format = "csv";
    bool offline = false;
    std::size_t max_in_flight = 4;
    int threads = 0;
};

// Everything that can change output bytes goes into the hash; paths, URLs and
// thread counts do not.
std::string config_hash(const RunConfig& c, const std::vector<std::string>& sources) {
    std::ostringstream s;
    s << "command=" << c.command << ";sources=";
    for (const auto& x : sources) s << x << ',';
    s << ";seed=" << c.seed << ";trials=" << c.trials << ";exact_threshold=" << c.policy.exact_threshold
      << ";sample_sources=" << c.policy.sample_sources << ";format=" << c.format;
    return sha256_hex(s.str());
}

class Session {
  public:
    Session(RunConfig config, std::ostream& out, std::ostream& err, const TransportFactory& factory)
        : c_(std::move(config)), out_(out), err_(err), factory_(factory) {}

    int dispatch() {
        if (c_.threads > 0) kernels::set_threads(c_.threads);
        if (c_.command == "fetch") return cmd_fetch();
        if (c_.command == "analyze") return cmd_analyze();
        if (c_.command == "smallworld") return cmd_smallworld();
        if (c_.command == "snapshots") return cmd_snapshots();
        if (c_.command == "miners") return cmd_miners();
        if (c_.command == "export") return cmd_export();
        throw std::invalid_argument("unknown command " + c_.command);
    }

  private:
    // ---- block access -------------------------------------------------

    const RpcClient* client() {
        if (c_.offline || c_.rpc_url.empty()) return nullptr;
        if (!client_) {
            transport_ = factory_ ? factory_(c_.rpc_url) : std::make_unique<HttpTransport>(c_.rpc_url);
            client_ = std::make_unique<RpcClient>(*transport_);
        }
        return client_.get();
    }

    FetchOptions fetch_options() const {
        FetchOptions o;
        o.offline = c_.offline;
        o.max_in_flight = c_.max_in_flight;
        return o;
    }

    // Single range from --snapshot, --start-block/--num-blocks, or the newest
    // --num-blocks blocks when no start is given.
    SnapshotSpec single_range() {
        if (!c_.snapshot_texts.empty()) {
            if (c_.snapshot_texts.size() != 1 || c_.start_block || c_.num_blocks)
                throw std::invalid_argument(c_.command + " takes exactly one block range");
            return SnapshotSpec::parse(c_.snapshot_texts.front());
        }
        if (!c_.num_blocks) throw std::invalid_argument("--num-blocks (or --snapshot start:count) is required");
        SnapshotSpec spec;
        spec.count = *c_.num_blocks;
        if (spec.count == 0) throw std::invalid_argument("empty block range: --num-blocks must be >= 1");
        if (c_.start_block) {
            spec.start_block = *c_.start_block;
        } else {
            auto* rpc = client();
            if (!rpc) throw std::invalid_argument("--start-block is required without a reachable --rpc-url");
            std::uint64_t head = rpc->block_number();
            if (head + 1 < spec.count) throw std::invalid_argument("chain has fewer blocks than requested");
            spec.start_block = head + 1 - spec.count;
        }
        spec.validate();
        return spec;
    }

    FetchStats stream_blocks(const SnapshotSpec& spec, const BlockSink& sink) {
        BlockCache cache(c_.cache_dir);
        return fetch_range(client(), cache, spec, fetch_options(), sink);
    }

    struct GraphInput {
        TransactionGraph graph;
        std::string label;   // "blocks" column
        std::string source;  // provenance snapshot line
    };

    GraphInput load_graph() {
        GraphInput in;
        if (c_.input_net) {
            if (c_.num_blocks || c_.start_block || !c_.snapshot_texts.empty())
                throw std::invalid_argument("--input-net cannot be combined with a block range");
            std::ifstream f(*c_.input_net);
            if (!f) throw std::runtime_error("cannot open " + c_.input_net->string());
            in.graph = import_pajek(f);
            in.label = "-";
            in.source = "file:" + c_.input_net->filename().string();
            return in;
        }
        SnapshotSpec spec = single_range();
        stream_blocks(spec, [&](const BlockRecord& b) { in.graph.add_block(b); });
        in.label = std::to_string(spec.count);
        in.source = spec.to_string();
        return in;
    }

    // ---- output --------------------------------------------------------

    Provenance provenance(const std::vector<std::string>& sources) const {
        return {CHAINGRAPH_VERSION, c_.command, config_hash(c_, sources), c_.seed, sources};
    }

    void write_output(const std::string& name, const Provenance& prov, char marker,
                      const std::function<void(std::ostream&)>& body) {
        fs::create_directories(c_.out_dir);
        fs::path path = c_.out_dir / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        prov.write(f, marker);
        body(f);
        if (!f.flush()) throw std::runtime_error("write failed: " + path.string());
        written_.push_back(path);
    }

    void report_written() {
        for (const auto& p : written_) out_ << "wrote " << p.string() << '\n';
    }

    bool pretty() const { return c_.format == "pretty"; }

    // ---- commands ------------------------------------------------------

    int cmd_fetch() {
        SnapshotSpec spec = single_range();
        std::uint64_t blocks = 0;
        auto stats = stream_blocks(spec, [&](const BlockRecord&) { ++blocks; });
        out_ << stats.fetched << " fetched, " << stats.cache_hits << " cached";
        if (stats.corrupt_refetched) out_ << ", " << stats.corrupt_refetched << " corrupt entries refetched";
        out_ << " (" << blocks << " blocks " << spec.to_string() << ")\n";
        return 0;
    }

    int cmd_analyze() {
        GraphInput in = load_graph();
        const auto prov = provenance({in.source});
        SimpleGraph simple = project_simple(in.graph);
        ComponentSet comps = connected_components(simple);
        MetricsReport report = general_metrics(simple, comps);
        auto hist = degree_distribution(in.graph, false);
        auto whist = degree_distribution(in.graph, true);
        std::optional<DistanceSummary> dist;
        InducedSubgraph main = largest_component(simple, comps);
        if (main.graph.node_count() > 0) dist = distance_summary(main.graph, c_.policy);

        write_output("metrics.csv", prov, '#', [&](std::ostream& o) {
            o << kMetricsHeader << '\n';
            write_metrics_row(report, in.label, o);
        });
        write_output("degree.csv", prov, '#', [&](std::ostream& o) { write_degree_csv(hist, o); });
        write_output("degree_weighted.csv", prov, '#', [&](std::ostream& o) { write_degree_csv(whist, o); });
        write_output("degree_loglog.csv", prov, '#', [&](std::ostream& o) { write_degree_loglog_csv(hist, o); });
        write_output("distances.csv", prov, '#', [&](std::ostream& o) {
            o << kDistanceHeader << '\n';
            if (dist) write_distance_row(*dist, o);
        });
        write_output("graph.net", prov, '%', [&](std::ostream& o) { export_pajek(in.graph, o); });

        if (pretty()) {
            print_general_table(in.label, report);
            if (dist) print_diameter_table(in.label, *dist);
        }
        report_written();
        return 0;
    }

    int cmd_smallworld() {
        GraphInput in = load_graph();
        const auto prov = provenance({in.source});
        InducedSubgraph main = largest_component(project_simple(in.graph));
        if (main.graph.edge_count() == 0) throw std::invalid_argument("main component has no edges");
        SmallWorldReport r = small_world_report(main.graph, c_.trials, c_.seed, c_.policy);
        write_output("smallworld.csv", prov, '#', [&](std::ostream& o) {
            o << kSmallWorldHeader << '\n';
            write_smallworld_row(r, in.label, o);
        });
        if (pretty()) print_smallworld_table(in.label, r);
        report_written();
        return 0;
    }

    int cmd_snapshots() {
        if (c_.snapshot_texts.size() < 2)
            throw std::invalid_argument("snapshots needs at least two --snapshot start:count ranges");
        std::vector<SnapshotSpec> specs;
        std::vector<std::string> sources;
        for (const auto& t : c_.snapshot_texts) {
            specs.push_back(SnapshotSpec::parse(t));
            sources.push_back(specs.back().to_string());
        }
        const auto prov = provenance(sources);
        std::ostringstream rows;
        int failures = 0;
        for (const auto& spec : specs) {
            rows << spec.start_block << ',' << spec.count << ',';
            try {
                TransactionGraph g;
                stream_blocks(spec, [&](const BlockRecord& b) { g.add_block(b); });
                SimpleGraph simple = project_simple(g);
                ComponentSet comps = connected_components(simple);
                InducedSubgraph main = largest_component(simple, comps);
                std::string avg = "", method = "";
                if (main.graph.node_count() > 0) {
                    auto d = distance_summary(main.graph, c_.policy);
                    avg = format_double(d.average_distance);
                    method = std::string(to_string(d.average_method));
                }
                rows << simple.node_count() << ',' << main.graph.node_count() << ',' << simple.edge_count() << ','
                     << main.graph.edge_count() << ',' << comps.count() << ',' << avg << ',' << method << ",ok\n";
            } catch (const std::exception& e) {
                ++failures;
                std::string msg = e.what();
                for (auto& ch : msg)
                    if (ch == ',' || ch == '\n') ch = ' ';
                rows << ",,,,,,,error: " << msg << '\n';
                err_ << "snapshot " << spec.to_string() << " failed: " << e.what() << '\n';
            }
        }
        write_output("snapshots.csv", prov, '#', [&](std::ostream& o) {
            o << "start_block,num_blocks,nodes,nodes_main_comp,edges,edges_main_comp,components,avg_distance,"
                 "avg_distance_method,status\n"
              << rows.str();
        });
        report_written();
        return failures ? 1 : 0;
    }

    int cmd_miners() {
        SnapshotSpec spec = single_range();
        MinerCounter counter;
        stream_blocks(spec, [&](const BlockRecord& b) { counter.add(b); });
        MinerHistogram h = counter.finish();
        const auto prov = provenance({spec.to_string()});
        write_output("miners.csv", prov, '#', [&](std::ostream& o) { write_miners_csv(h, o); });
        write_output("miner_distribution.csv", prov, '#',
                     [&](std::ostream& o) { write_miner_distribution_csv(h, o); });
        if (pretty()) {
            out_ << std::left << std::setw(14) << "blocks mined" << "miners\n";
            for (const auto& [k, n] : h.distribution) out_ << std::setw(14) << k << n << '\n';
        }
        report_written();
        return 0;
    }

    int cmd_export() {
        GraphInput in = load_graph();
        const auto prov = provenance({in.source});
        if (c_.format == "pajek")
            write_output("graph.net", prov, '%', [&](std::ostream& o) { export_pajek(in.graph, o); });
        else
            write_output("edges.csv", prov, '#', [&](std::ostream& o) { export_edge_csv(in.graph, o); });
        report_written();
        return 0;
    }

    // ---- pretty tables ---------------------------------------------------

    void print_general_table(const std::string& label, const MetricsReport& r) {
        out_ << std::left << std::setw(10) << "# Blocks" << std::setw(10) << "# nodes" << std::setw(10)
             << "# edges" << std::setw(16) << "avg clus coeff" << std::setw(14) << "# components" << std::setw(22)
             << "# nodes largest comp" << "# edges largest comp\n";
        std::ostringstream cc;
        cc << std::fixed << std::setprecision(3) << r.avg_clustering;
        out_ << std::setw(10) << label << std::setw(10) << r.n << std::setw(10) << r.m << std::setw(16) << cc.str()
             << std::setw(14) << r.num_components << std::setw(22) << r.largest_component_nodes
             << r.largest_component_edges << "\n\n";
    }

    void print_diameter_table(const std::string& label, const DistanceSummary& d) {
        out_ << std::left << std::setw(10) << "# Blocks" << std::setw(22) << "# nodes (main comp)"
             << "diameter\n";
        out_ << std::setw(10) << label << std::setw(22) << d.node_count << d.diameter;
        if (d.diameter_method != DistanceMethod::exact) out_ << " (" << to_string(d.diameter_method) << ')';
        out_ << "\n\n";
    }

    void print_smallworld_table(const std::string& label, const SmallWorldReport& r) {
        auto fixed = [](double v, int p) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(p) << v;
            return s.str();
        };
        auto sci = [](double v) {
            std::ostringstream s;
            s << std::scientific << std::setprecision(2) << v;
            return s.str();
        };
        out_ << std::left << std::setw(10) << "# Blocks" << std::setw(10) << "# nodes" << std::setw(10)
             << "# edges" << std::setw(8) << "cc" << std::setw(8) << "L" << std::setw(12) << "cc RG" << std::setw(8)
             << "L RG" << "sigma\n";
        out_ << std::setw(10) << label << std::setw(10) << r.n << std::setw(10) << r.m << std::setw(8)
             << fixed(r.cc, 3) << std::setw(8) << fixed(r.L, 2) << std::setw(12) << sci(r.cc_rg) << std::setw(8)
             << fixed(r.L_rg, 2) << (r.sigma ? fixed(*r.sigma, 2) : std::string("UNDEFINED")) << "\n\n";
    }

    RunConfig c_;
    std::ostream& out_;
    std::ostream& err_;
    const TransportFactory& factory_;
    std::unique_ptr<RpcTransport> transport_;
    std::unique_ptr<RpcClient> client_;
    std::vector<fs::path> written_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const TransportFactory& factory) {
    CLI::App app{"Ethereum transaction-graph analysis", "chaingraph"};
    app.set_version_flag("--version", CHAINGRAPH_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig c;
    app.add_option("--rpc-url", c.rpc_url, "JSON-RPC endpoint (may embed an API key)")->envname("CHAINGRAPH_RPC_URL");
    app.add_option("--cache-dir", c.cache_dir, "Block cache directory")->capture_default_str();
    app.add_option("--start-block", c.start_block, "First block of the range");
    app.add_option("--num-blocks", c.num_blocks, "Blocks in the range (newest blocks when no start is given)");
    app.add_option("--snapshot", c.snapshot_texts, "Block range start:count (repeatable)");
    app.add_option("--input-net", c.input_net, "Analyze a Pajek .net file instead of chain blocks")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", c.seed, "Seed for random baselines and distance sampling")->capture_default_str();
    app.add_option("--trials", c.trials, "Random graphs per small-world baseline")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--exact-threshold", c.policy.exact_threshold, "Largest component size for exact distances")
        ->capture_default_str();
    app.add_option("--sample-sources", c.policy.sample_sources, "BFS sources when sampling distances")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out-dir", c.out_dir, "Directory for output files")->capture_default_str();
    app.add_option("--format", c.format, "csv, pajek or pretty")
        ->check(CLI::IsMember({"csv", "pajek", "pretty"}))
        ->capture_default_str();
    app.add_flag("--offline", c.offline, "Fail on cache misses instead of contacting the node");
    app.add_option("--max-in-flight", c.max_in_flight, "Concurrent RPC requests")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threads", c.threads, "Worker threads for metric kernels (0 = OpenMP default)");

    for (const char* name : {"fetch", "analyze", "smallworld", "snapshots", "miners", "export"}) {
        auto* sub = app.add_subcommand(name);
        sub->callback([&c, name] { c.command = name; });
    }
    app.get_subcommand("fetch")->description("Populate the block cache");
    app.get_subcommand("analyze")->description("General metrics, degree distributions, distances");
    app.get_subcommand("smallworld")->description("Main component vs. equivalent random graphs");
    app.get_subcommand("snapshots")->description("Network statistics for several block ranges");
    app.get_subcommand("miners")->description("Blocks mined per miner");
    app.get_subcommand("export")->description("Write the graph as Pajek or CSV edge list");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    c.policy.seed = c.seed;
    try {
        Session session(std::move(c), out, err, factory);
        return session.dispatch();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace chaingraph::cli

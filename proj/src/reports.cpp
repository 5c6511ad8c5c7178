#include "chaingraph/reports.hpp"

#include <charconv>
#include <cmath>

namespace chaingraph {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_sigma(const std::optional<double>& sigma) {
    return sigma ? format_double(*sigma) : std::string("UNDEFINED");
}

void Provenance::write(std::ostream& out, char marker) const {
    out << marker << " tool chaingraph " << tool_version << '\n';
    out << marker << " command " << command << '\n';
    out << marker << " config sha256:" << config_hash << '\n';
    out << marker << " seed " << seed << '\n';
    for (const auto& s : snapshots) out << marker << " snapshot " << s << '\n';
}

void write_degree_csv(const DegreeHistogram& h, std::ostream& out) {
    out << (h.weighted ? "weighted_degree,count\n" : "degree,count\n");
    for (const auto& [d, c] : h.entries) out << d << ',' << c << '\n';
}

void write_degree_loglog_csv(const DegreeHistogram& h, std::ostream& out) {
    out << "log10_degree,log10_count\n";
    for (const auto& [d, c] : h.entries) {
        if (d == 0 || c == 0) continue;
        out << format_double(std::log10(static_cast<double>(d))) << ','
            << format_double(std::log10(static_cast<double>(c))) << '\n';
    }
}

void write_metrics_row(const MetricsReport& r, std::string_view blocks_label, std::ostream& out) {
    out << blocks_label << ',' << r.n << ',' << r.m << ',' << format_double(r.avg_clustering) << ','
        << format_double(r.transitivity) << ',' << r.num_components << ',' << r.largest_component_nodes << ','
        << r.largest_component_edges << '\n';
}

void write_distance_row(const DistanceSummary& d, std::ostream& out) {
    out << d.node_count << ',' << d.edge_count << ',' << format_double(d.average_distance) << ','
        << to_string(d.average_method) << ',' << d.diameter << ',' << to_string(d.diameter_method) << ','
        << d.sources << ',' << d.seed << '\n';
}

void write_smallworld_row(const SmallWorldReport& r, std::string_view blocks_label, std::ostream& out) {
    // A trial list mixing methods is reported as SAMPLED.
    DistanceMethod rg_method = DistanceMethod::exact;
    for (const auto& t : r.trial_results)
        if (t.method != DistanceMethod::exact) rg_method = t.method;
    out << blocks_label << ',' << r.n << ',' << r.m << ',' << format_double(r.cc) << ',' << format_double(r.L) << ','
        << format_double(r.cc_rg) << ',' << format_double(r.L_rg) << ',' << format_sigma(r.sigma) << ','
        << r.trials << ',' << r.seed << ',' << to_string(r.subject_distance.average_method) << ','
        << to_string(rg_method) << '\n';
}

void write_miners_csv(const MinerHistogram& h, std::ostream& out) {
    out << "miner,blocks\n";
    for (const auto& [miner, n] : h.per_miner) out << miner.str() << ',' << n << '\n';
}

void write_miner_distribution_csv(const MinerHistogram& h, std::ostream& out) {
    out << "blocks_mined,num_miners\n";
    for (const auto& [k, n] : h.distribution) out << k << ',' << n << '\n';
}

}  // namespace chaingraph

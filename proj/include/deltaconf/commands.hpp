#pragma once

#include <cstdint>
#include <string>

#include "deltaconf/ingest.hpp"
#include "deltaconf/table.hpp"
#include "deltaconf/types.hpp"

namespace deltaconf {

/// Everything a CLI run needs; defaults follow the common experimental
/// setup (alpha 2, delta 1, shortest paths, 200 null samples).
struct RunConfig {
    std::string input;
    std::string attributes;   // attribute file path, optional
    std::string attribute;    // attribute column name, optional
    Instant delta = 1;
    double alpha = 2.0;
    Instant stride = 1;
    PathType path_type = PathType::Shortest;
    Instant bucket = 1;
    std::size_t null_samples = 200;
    std::uint64_t seed = 42;
    std::string output;       // empty: stdout
    std::string format = "csv";
    IngestConfig::EdgeFormat edge_format = IngestConfig::EdgeFormat::Generic;
    IngestConfig::AttributeMode attribute_mode = IngestConfig::AttributeMode::Static;
    char delimiter = 0;
    unsigned workers = 1;

    void validate() const;
    IngestConfig ingest_config() const;
};

/// Ingest the edge file and, when configured, the attribute file.
/// Warnings land on stderr.
Ingested load_stream(const RunConfig& cfg);

/// Human-readable stream summary: counts, time span, label distribution.
std::string run_info(const RunConfig& cfg);

/// Per-node and per-group sliding-window score rows.
/// Columns: kind,anchor,node,label,score,valid,mean_degree,group_size.
Table run_trends(const RunConfig& cfg);

/// Group z-score rows against the rewired null ensemble.
/// Columns: anchor,label,observed,mu,sigma,n,z,z_defined,band_lo,band_hi.
Table run_zscore(const RunConfig& cfg);

/// Writes the table to cfg.output (or stdout when empty) in cfg.format.
void emit(const Table& table, const RunConfig& cfg);

}  // namespace deltaconf

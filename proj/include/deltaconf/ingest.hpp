#pragma once

#include <string>
#include <vector>

#include "deltaconf/stream_graph.hpp"

namespace deltaconf {

/// Ingestion-time bucketing and file-format settings. Raw timestamps are
/// normalized so the earliest record lands at instant 0:
///   instant = floor((raw_t - min_raw_t) / bucket)
struct IngestConfig {
    Instant bucket = 1;  // raw time units per discrete instant (e.g. 3600 for hourly)
    enum class EdgeFormat { Generic, Sociopatterns } format = EdgeFormat::Generic;
    enum class AttributeMode { Static, Temporal } attribute_mode = AttributeMode::Static;
    // 0 selects the format default: ',' for generic files, whitespace runs
    // for sociopatterns; ' ' always means whitespace runs.
    char delimiter = 0;
};

struct Ingested {
    StreamGraph graph;
    Instant raw_origin = 0;  // min raw timestamp, needed to bucket attribute times
    Instant bucket = 1;
    // sociopatterns class columns, when present, are applied as static labels
    bool has_embedded_classes = false;
};

/// Parses a link-stream file. Generic records are `t,u,v`; sociopatterns
/// records are `t i j [Ci Cj]` (class columns applied as static labels).
/// Duplicate (instant, pair) records collapse to one event; timestamps may
/// arrive in any order. Malformed lines and self-loops raise a parse error
/// carrying the line number.
Ingested parse_edges(const std::string& path, const IngestConfig& cfg);

/// Attribute files are comma-separated (unless cfg.delimiter overrides):
/// static mode `node,label`, temporal mode `node,t,label` with t in raw
/// units, bucketed against the edge file's origin. An optional header line
/// starting with the field `node` names the attribute columns; `attribute`
/// selects among them (empty picks the only column, errors when ambiguous).
/// Returns non-fatal warnings (unknown nodes, duplicate entries).
std::vector<std::string> load_attributes(Ingested& ing, const std::string& path,
                                         const IngestConfig& cfg,
                                         const std::string& attribute = "");

/// Attribute column names a file offers (header names, or "label").
std::vector<std::string> attribute_names(const std::string& path, const IngestConfig& cfg);

}  // namespace deltaconf

#include "deltaconf/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "deltaconf/conformity.hpp"
#include "deltaconf/null_models.hpp"
#include "parallel.hpp"

namespace deltaconf {

void RunConfig::validate() const {
    if (input.empty()) throw Error(ErrorCategory::Usage, "input file required");
    if (delta < 1) throw Error(ErrorCategory::Usage, "delta must be >= 1");
    if (stride < 1) throw Error(ErrorCategory::Usage, "stride must be >= 1");
    if (bucket < 1) throw Error(ErrorCategory::Usage, "bucket must be >= 1");
    if (alpha < 0) throw Error(ErrorCategory::Usage, "alpha must be >= 0");
    if (null_samples < 2) throw Error(ErrorCategory::Usage, "null-samples must be >= 2");
    if (format != "csv" && format != "json")
        throw Error(ErrorCategory::Usage, "format must be csv or json");
}

IngestConfig RunConfig::ingest_config() const {
    IngestConfig ic;
    ic.bucket = bucket;
    ic.format = edge_format;
    ic.attribute_mode = attribute_mode;
    ic.delimiter = delimiter;
    return ic;
}

Ingested load_stream(const RunConfig& cfg) {
    Ingested ing = parse_edges(cfg.input, cfg.ingest_config());
    if (!cfg.attributes.empty()) {
        for (const auto& warning :
             load_attributes(ing, cfg.attributes, cfg.ingest_config(), cfg.attribute))
            std::cerr << "warning: " << warning << '\n';
    }
    return ing;
}

std::string run_info(const RunConfig& cfg) {
    Ingested ing = load_stream(cfg);
    const StreamGraph& g = ing.graph;

    std::set<NodeId> active;
    std::set<Instant> instants;
    for (const Event& e : g.events()) {
        active.insert(e.u);
        active.insert(e.v);
        instants.insert(e.t);
    }

    std::ostringstream out;
    out << active.size() << " active nodes, " << g.num_events() << " events, T=[" << g.alpha()
        << "," << g.omega() << "]\n";
    out << "instants: " << instants.size() << "\n";
    if (g.num_nodes() > active.size())
        out << "attribute-only nodes: " << g.num_nodes() - active.size() << "\n";

    std::map<std::string, std::size_t> distribution;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (auto l = g.label_at(v, g.alpha())) ++distribution[g.label_name(*l)];
    if (!distribution.empty()) {
        out << "labels:";
        for (const auto& [name, count] : distribution) out << ' ' << name << ':' << count;
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<Instant> anchors_of(const StreamGraph& g, Instant delta, Instant stride) {
    std::vector<Instant> anchors;
    for (Instant t = g.alpha(); t + delta <= g.omega(); t += stride) anchors.push_back(t);
    if (anchors.empty())
        throw Error(ErrorCategory::Domain,
                    "delta " + std::to_string(delta) + " exceeds the stream span");
    return anchors;
}

}  // namespace

Table run_trends(const RunConfig& cfg) {
    Ingested ing = load_stream(cfg);
    const StreamGraph& g = ing.graph;
    std::vector<Instant> anchors = anchors_of(g, cfg.delta, cfg.stride);

    Table table;
    table.columns = {"kind", "anchor", "node",        "label",
                     "score", "valid", "mean_degree", "group_size"};

    std::vector<std::vector<std::vector<Cell>>> per_anchor(anchors.size());
    detail::parallel_for(anchors.size(), cfg.workers, [&](std::size_t ai) {
        Instant t = anchors[ai];
        WindowView w = g.window(t, cfg.delta);
        auto scores = conformity_all(w, cfg.alpha, cfg.path_type);

        std::vector<std::pair<std::string, std::vector<Cell>>> node_rows;
        struct GroupAcc {
            double sum = 0;
            std::size_t valid = 0;
            std::size_t present = 0;
        };
        std::map<std::string, GroupAcc> groups;
        for (const ConformityScore& s : scores) {
            LabelId l = w.label(s.node);
            std::string label = l == kNoLabel ? "" : w.label_name(l);
            std::vector<Cell> row{std::string("node"),
                                  static_cast<long long>(t),
                                  g.node_name(s.node),
                                  label,
                                  s.valid ? Cell(s.value) : Cell(std::monostate{}),
                                  static_cast<long long>(s.valid ? 1 : 0),
                                  std::monostate{},
                                  std::monostate{}};
            node_rows.emplace_back(g.node_name(s.node), std::move(row));
            if (l != kNoLabel) {
                auto& acc = groups[w.label_name(l)];
                ++acc.present;
                if (s.valid) {
                    acc.sum += s.value;
                    ++acc.valid;
                }
            }
        }
        std::sort(node_rows.begin(), node_rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        auto& rows = per_anchor[ai];
        for (auto& [name, row] : node_rows) rows.push_back(std::move(row));
        for (const auto& [label, acc] : groups) {
            LabelId lid = g.find_label(label);
            auto mean_degree = w.average_degree(lid);
            rows.push_back({std::string("group"), static_cast<long long>(t), std::monostate{},
                            label,
                            acc.valid > 0 ? Cell(acc.sum / static_cast<double>(acc.valid))
                                          : Cell(std::monostate{}),
                            static_cast<long long>(acc.valid > 0 ? 1 : 0),
                            mean_degree ? Cell(*mean_degree) : Cell(std::monostate{}),
                            static_cast<long long>(acc.present)});
        }
    });
    for (auto& rows : per_anchor)
        for (auto& row : rows) table.add_row(std::move(row));
    return table;
}

Table run_zscore(const RunConfig& cfg) {
    Ingested ing = load_stream(cfg);
    const StreamGraph& g = ing.graph;
    anchors_of(g, cfg.delta, cfg.stride);  // validates the span

    std::vector<std::string> labels;
    for (LabelId l = 0; l < g.num_label_values(); ++l) labels.push_back(g.label_name(l));
    std::sort(labels.begin(), labels.end());
    if (labels.empty())
        throw Error(ErrorCategory::Usage, "z-score requires node attributes (see --attributes)");

    std::vector<std::vector<NullEnsembleStats>> per_label(labels.size());
    detail::parallel_for(labels.size(), cfg.workers, [&](std::size_t li) {
        per_label[li] = z_score_trend(g, g.find_label(labels[li]), cfg.alpha, cfg.delta,
                                      cfg.stride, cfg.path_type, cfg.null_samples, cfg.seed);
    });

    // rows ordered by (anchor, label)
    std::vector<const NullEnsembleStats*> flat;
    for (const auto& trend : per_label)
        for (const auto& s : trend) flat.push_back(&s);
    std::sort(flat.begin(), flat.end(), [](const NullEnsembleStats* a, const NullEnsembleStats* b) {
        return std::tie(a->window_anchor, a->group) < std::tie(b->window_anchor, b->group);
    });

    Table table;
    table.columns = {"anchor", "label", "observed", "mu",      "sigma",
                     "n",      "z",     "z_defined", "band_lo", "band_hi"};
    for (const NullEnsembleStats* s : flat) {
        table.add_row({static_cast<long long>(s->window_anchor), s->group,
                       s->observed_valid ? Cell(s->observed) : Cell(std::monostate{}),
                       s->samples > 0 && s->observed_valid ? Cell(s->mean) : Cell(std::monostate{}),
                       s->samples > 0 && s->observed_valid ? Cell(s->stdev) : Cell(std::monostate{}),
                       static_cast<long long>(s->group_size),
                       s->z_defined ? Cell(s->z) : Cell(std::monostate{}),
                       static_cast<long long>(s->z_defined ? 1 : 0), kZBandLower, kZBandUpper});
    }
    return table;
}

void emit(const Table& table, const RunConfig& cfg) {
    if (cfg.output.empty()) {
        table.write(std::cout, cfg.format);
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw Error(ErrorCategory::Io, "cannot open output file " + cfg.output);
    table.write(out, cfg.format);
}

}  // namespace deltaconf

#include "deltaconf/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

namespace deltaconf {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    if (delim == ' ') {  // whitespace runs
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) out.push_back(tok);
        return out;
    }
    std::string tok;
    std::istringstream ss(line);
    while (std::getline(ss, tok, delim)) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Instant parse_instant(const std::string& tok, const std::string& path, std::size_t lineno) {
    try {
        std::size_t pos = 0;
        Instant v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCategory::Parse,
                    path + ":" + std::to_string(lineno) + ": malformed timestamp '" + tok + "'");
    }
}

char edge_delimiter(const IngestConfig& cfg) {
    if (cfg.delimiter != 0) return cfg.delimiter;
    return cfg.format == IngestConfig::EdgeFormat::Sociopatterns ? ' ' : ',';
}

Instant floor_div(Instant a, Instant b) {
    Instant q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

struct AttributeFile {
    std::vector<std::string> columns;                 // attribute column names
    bool temporal = false;
    // rows: (node, raw_t or 0, one value per column)
    std::vector<std::tuple<std::string, Instant, std::vector<std::string>>> rows;
};

AttributeFile read_attribute_file(const std::string& path, const IngestConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::Io, "cannot open attribute file " + path);
    char delim = cfg.delimiter != 0 ? cfg.delimiter : ',';
    bool temporal = cfg.attribute_mode == IngestConfig::AttributeMode::Temporal;

    AttributeFile file;
    file.temporal = temporal;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto tokens = split(line, delim);
        for (auto& t : tokens) t = trim(t);
        std::size_t fixed = temporal ? 2 : 1;  // node [+ t] before the value columns
        if (tokens.size() <= fixed)
            throw Error(ErrorCategory::Parse,
                        path + ":" + std::to_string(lineno) + ": expected at least " +
                            std::to_string(fixed + 1) + " fields");
        std::string first = tokens[0];
        std::transform(first.begin(), first.end(), first.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (!saw_header && file.rows.empty() && first == "node") {
            saw_header = true;
            file.columns.assign(tokens.begin() + fixed, tokens.end());
            continue;
        }
        if (file.columns.empty()) {
            std::size_t n = tokens.size() - fixed;
            for (std::size_t i = 0; i < n; ++i)
                file.columns.push_back(n == 1 ? "label" : "label" + std::to_string(i + 1));
        }
        if (tokens.size() - fixed != file.columns.size())
            throw Error(ErrorCategory::Parse,
                        path + ":" + std::to_string(lineno) + ": inconsistent field count");
        Instant raw = temporal ? parse_instant(tokens[1], path, lineno) : 0;
        file.rows.emplace_back(tokens[0], raw,
                               std::vector<std::string>(tokens.begin() + fixed, tokens.end()));
    }
    if (file.columns.size() == 1 && file.columns[0].empty()) file.columns[0] = "label";
    return file;
}

}  // namespace

Ingested parse_edges(const std::string& path, const IngestConfig& cfg) {
    if (cfg.bucket < 1) throw Error(ErrorCategory::Usage, "bucket must be >= 1");
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::Io, "cannot open edge file " + path);
    char delim = edge_delimiter(cfg);
    bool socio = cfg.format == IngestConfig::EdgeFormat::Sociopatterns;

    struct Record {
        Instant raw;
        std::string u, v;
    };
    std::vector<Record> records;
    std::vector<std::pair<std::string, std::string>> classes;  // (node, class)

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto tokens = split(line, delim);
        for (auto& t : tokens) t = trim(t);
        bool ok = socio ? (tokens.size() == 3 || tokens.size() == 5) : tokens.size() == 3;
        if (!ok)
            throw Error(ErrorCategory::Parse, path + ":" + std::to_string(lineno) +
                                                  ": expected " + (socio ? "3 or 5" : "3") +
                                                  " fields, got " + std::to_string(tokens.size()));
        Instant raw = parse_instant(tokens[0], path, lineno);
        if (tokens[1] == tokens[2])
            throw Error(ErrorCategory::Parse,
                        path + ":" + std::to_string(lineno) + ": self-loop on node " + tokens[1]);
        records.push_back({raw, tokens[1], tokens[2]});
        if (socio && tokens.size() == 5) {
            classes.emplace_back(tokens[1], tokens[3]);
            classes.emplace_back(tokens[2], tokens[4]);
        }
    }
    if (records.empty()) throw Error(ErrorCategory::Parse, path + ": no records");

    Instant origin = std::numeric_limits<Instant>::max();
    for (const auto& r : records) origin = std::min(origin, r.raw);

    Ingested ing;
    ing.raw_origin = origin;
    ing.bucket = cfg.bucket;
    for (const auto& r : records)
        ing.graph.add_event(floor_div(r.raw - origin, cfg.bucket), r.u, r.v);
    for (const auto& [node, cls] : classes) {
        ing.graph.set_label(node, ing.graph.alpha(), cls);
        ing.has_embedded_classes = true;
    }
    return ing;
}

std::vector<std::string> attribute_names(const std::string& path, const IngestConfig& cfg) {
    return read_attribute_file(path, cfg).columns;
}

std::vector<std::string> load_attributes(Ingested& ing, const std::string& path,
                                         const IngestConfig& cfg, const std::string& attribute) {
    AttributeFile file = read_attribute_file(path, cfg);

    std::size_t col = 0;
    if (attribute.empty()) {
        if (file.columns.size() != 1) {
            std::string available;
            for (const auto& c : file.columns) available += (available.empty() ? "" : ", ") + c;
            throw Error(ErrorCategory::Usage,
                        "attribute name required; available: " + available);
        }
    } else {
        auto it = std::find(file.columns.begin(), file.columns.end(), attribute);
        if (it == file.columns.end()) {
            std::string available;
            for (const auto& c : file.columns) available += (available.empty() ? "" : ", ") + c;
            throw Error(ErrorCategory::Usage,
                        "unknown attribute '" + attribute + "'; available: " + available);
        }
        col = static_cast<std::size_t>(it - file.columns.begin());
    }

    std::vector<std::string> warnings;
    std::set<std::pair<NodeId, Instant>> seen;
    for (const auto& [node, raw, values] : file.rows) {
        if (ing.graph.find_node(node) == kInvalidNode)
            warnings.push_back("node " + node + " appears in attributes but has no events");
        Instant start = file.temporal ? floor_div(raw - ing.raw_origin, ing.bucket)
                                      : (ing.graph.num_events() > 0 ? ing.graph.alpha() : 0);
        NodeId id = ing.graph.add_node(node);
        if (!seen.insert({id, start}).second)
            warnings.push_back("duplicate attribute entry for node " + node + " at " +
                               std::to_string(start) + "; last wins");
        ing.graph.set_label(id, start, ing.graph.intern_label(values[col]));
    }
    return warnings;
}

}  // namespace deltaconf

#include "webtopo/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace webtopo {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

[[noreturn]] void fail_line(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
    fail(path, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Shortest decimal form that parses back to the same double.
void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

// Writes through a temp file and renames into place so readers never see a
// half-written output.
class AtomicWriter {
public:
    explicit AtomicWriter(const std::filesystem::path& path)
        : path_(path), tmp_(path) {
        tmp_ += ".tmp";
        stream_.open(tmp_, std::ios::binary | std::ios::trunc);
        if (!stream_) fail(path_, "cannot open for writing");
    }

    std::ofstream& stream() { return stream_; }

    void commit() {
        stream_.flush();
        if (!stream_) fail(path_, "write failed");
        stream_.close();
        std::error_code ec;
        std::filesystem::rename(tmp_, path_, ec);
        if (ec) fail(path_, "rename failed: " + ec.message());
        committed_ = true;
    }

    ~AtomicWriter() {
        if (!committed_) {
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }

private:
    std::filesystem::path path_, tmp_;
    std::ofstream stream_;
    bool committed_ = false;
};

}  // namespace

void for_each_edge_in_file(const std::filesystem::path& path,
                           const EdgeListFormat& format,
                           const std::function<void(std::string_view,
                                                    std::string_view)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view sv = trim_cr(line);

        std::size_t i = 0;
        while (i < sv.size() && is_space(sv[i])) ++i;
        if (i == sv.size() || sv[i] == format.comment_prefix) continue;

        const std::size_t a0 = i;
        while (i < sv.size() && !is_space(sv[i])) ++i;
        const std::string_view a = sv.substr(a0, i - a0);

        while (i < sv.size() && is_space(sv[i])) ++i;
        if (i == sv.size()) fail_line(path, lineno, "expected two tokens, got one");
        const std::size_t b0 = i;
        while (i < sv.size() && !is_space(sv[i])) ++i;
        const std::string_view b = sv.substr(b0, i - b0);

        while (i < sv.size() && is_space(sv[i])) ++i;
        if (i != sv.size())
            fail_line(path, lineno, "expected two tokens, got more");

        fn(a, b);
    }
    if (in.bad()) fail(path, "read error");
}

std::vector<std::pair<std::string, std::string>> read_edge_list(
    const std::filesystem::path& path, const EdgeListFormat& format) {
    std::vector<std::pair<std::string, std::string>> out;
    for_each_edge_in_file(path, format, [&](std::string_view a, std::string_view b) {
        out.emplace_back(std::string(a), std::string(b));
    });
    return out;
}

namespace {

template <typename Graph>
Graph read_graph(const std::filesystem::path& path, const EdgeListFormat& format) {
    LabelInterner interner;
    std::vector<std::pair<NodeId, NodeId>> arcs;
    for_each_edge_in_file(path, format, [&](std::string_view a, std::string_view b) {
        const NodeId u = interner.intern(a);
        const NodeId v = interner.intern(b);
        arcs.emplace_back(u, v);
    });
    const std::size_t n = interner.size();
    return Graph::from_arcs(n, std::move(arcs), interner.take_labels());
}

template <typename Graph, typename EmitLinks>
void write_edges(const Graph& g, const std::filesystem::path& path,
                 EmitLinks&& emit) {
    AtomicWriter w(path);
    const auto& labels = g.labels();
    std::string buf;
    emit([&](NodeId u, NodeId v) {
        buf.clear();
        if (labels.empty()) {
            buf += std::to_string(u);
            buf += ' ';
            buf += std::to_string(v);
        } else {
            buf += labels[u];
            buf += ' ';
            buf += labels[v];
        }
        buf += '\n';
        w.stream() << buf;
    });
    w.commit();
}

}  // namespace

UndirectedGraph read_undirected(const std::filesystem::path& path,
                                const EdgeListFormat& format) {
    return read_graph<UndirectedGraph>(path, format);
}

DirectedGraph read_directed(const std::filesystem::path& path,
                            const EdgeListFormat& format) {
    return read_graph<DirectedGraph>(path, format);
}

void write_edge_list(const UndirectedGraph& g, const std::filesystem::path& path) {
    write_edges(g, path, [&](auto&& line) { g.for_each_link(line); });
}

void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path) {
    write_edges(g, path, [&](auto&& line) {
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v : g.out_adjacent(u)) line(u, v);
    });
}

std::string curve_csv_text(const MetricCurve& curve) {
    std::string buf = "x,y\n";
    for (const auto& pt : curve.points) {
        append_double(buf, pt.x);
        buf += ',';
        append_double(buf, pt.y);
        buf += '\n';
    }
    return buf;
}

void write_curve(const MetricCurve& curve, const std::filesystem::path& path) {
    AtomicWriter w(path);
    w.stream() << curve_csv_text(curve);
    w.commit();
}

MetricCurve read_curve(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");

    MetricCurve curve;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view sv = trim_cr(line);
        if (sv.empty() || sv.front() == '#') continue;
        if (!header_seen) {
            if (sv != "x,y") fail_line(path, lineno, "expected header \"x,y\"");
            header_seen = true;
            continue;
        }
        const std::size_t comma = sv.find(',');
        if (comma == std::string_view::npos)
            fail_line(path, lineno, "expected \"x,y\" row");
        CurvePoint pt{};
        auto rx = std::from_chars(sv.data(), sv.data() + comma, pt.x);
        if (rx.ec != std::errc{} || rx.ptr != sv.data() + comma)
            fail_line(path, lineno, "bad x value");
        auto ry = std::from_chars(sv.data() + comma + 1, sv.data() + sv.size(), pt.y);
        if (ry.ec != std::errc{} || ry.ptr != sv.data() + sv.size())
            fail_line(path, lineno, "bad y value");
        curve.points.push_back(pt);
    }
    if (in.bad()) fail(path, "read error");
    if (!header_seen) fail(path, "missing \"x,y\" header");
    return curve;
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string summary_json_text(const NetworkSummary& summary,
                              std::string_view dataset_name) {
    nlohmann::json j;
    j["nodes"] = summary.nodes;
    j["links"] = summary.links;
    j["average_degree"] = summary.average_degree;
    if (summary.assortative_coefficient)
        j["assortative_coefficient"] = *summary.assortative_coefficient;
    else
        j["assortative_coefficient"] = nullptr;
    j["mean_triangle_coefficient"] = summary.mean_triangle_coefficient;
    j["metadata"] = {{"dataset", std::string(dataset_name)},
                     {"generated_at", utc_timestamp()},
                     {"tool_version", std::string(kToolVersion)}};
    return j.dump(2) + "\n";
}

void write_summary(const NetworkSummary& summary, const std::filesystem::path& path,
                   std::string_view dataset_name) {
    AtomicWriter w(path);
    w.stream() << summary_json_text(summary, dataset_name);
    w.commit();
}

NetworkSummary read_summary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(path, e.what());
    }

    NetworkSummary s;
    try {
        s.nodes = j.at("nodes").get<std::uint64_t>();
        s.links = j.at("links").get<std::uint64_t>();
        s.average_degree = j.at("average_degree").get<double>();
        const auto& alpha = j.at("assortative_coefficient");
        if (!alpha.is_null()) s.assortative_coefficient = alpha.get<double>();
        s.mean_triangle_coefficient = j.at("mean_triangle_coefficient").get<double>();
    } catch (const nlohmann::json::exception& e) {
        fail(path, e.what());
    }
    return s;
}

}  // namespace webtopo

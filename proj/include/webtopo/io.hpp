#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "webtopo/curves.hpp"
#include "webtopo/graph.hpp"

namespace webtopo {

inline constexpr std::string_view kToolVersion = "1.0.0";

// One edge per line, two whitespace-separated tokens; blank lines and lines
// starting with the comment prefix are ignored.
struct EdgeListFormat {
    char comment_prefix = '#';
    bool directed = false;
};

// Streams every edge line through fn(first_token, second_token). Lines with
// any other token count raise std::runtime_error naming the line number.
void for_each_edge_in_file(const std::filesystem::path& path,
                           const EdgeListFormat& format,
                           const std::function<void(std::string_view,
                                                    std::string_view)>& fn);

// Raw pairs in file order; cleaning is the graph builders' job.
std::vector<std::pair<std::string, std::string>> read_edge_list(
    const std::filesystem::path& path, const EdgeListFormat& format = {});

// Streaming loads: labels are interned on the fly so peak memory stays
// proportional to the graph, not the file.
UndirectedGraph read_undirected(const std::filesystem::path& path,
                                const EdgeListFormat& format = {});
DirectedGraph read_directed(const std::filesystem::path& path,
                            const EdgeListFormat& format = {});

void write_edge_list(const UndirectedGraph& g, const std::filesystem::path& path);
void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path);

// CSV with header "x,y", x ascending, values printed with the shortest
// representation that parses back to the same double.
std::string curve_csv_text(const MetricCurve& curve);
void write_curve(const MetricCurve& curve, const std::filesystem::path& path);
MetricCurve read_curve(const std::filesystem::path& path);

// JSON with the summary fields plus {dataset, generated_at, tool_version}
// metadata; the assortative coefficient serializes as null when undefined.
std::string summary_json_text(const NetworkSummary& summary,
                              std::string_view dataset_name);
void write_summary(const NetworkSummary& summary, const std::filesystem::path& path,
                   std::string_view dataset_name);
NetworkSummary read_summary(const std::filesystem::path& path);

}  // namespace webtopo

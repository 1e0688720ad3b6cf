#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/histogram.hpp"

namespace splitgraph {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed multigraph as an ordered (source, target) pair list; the node
// set is derived from the edges.
struct EdgeList {
    std::vector<std::pair<std::string, std::string>> edges;
};

// Survival function points: fraction of nodes with degree >= d, emitted
// at every observed degree. Degrees strictly increasing, fractions
// non-increasing, first fraction is 1.
struct CcdfTable {
    std::vector<std::pair<std::int64_t, double>> points;
    void check() const;
};

// All real numbers written by the toolkit use shortest round-trip
// decimal rendering (std::to_chars), locale-independent.
std::string format_double(double x);

// Histogram files: CSV with header "degree,count". Zero-degree rows are
// dropped at ingestion and tallied in dropped_zeros.
DegreeHistogram read_histogram(const std::filesystem::path& path);
void write_histogram(const DegreeHistogram& hist,
                     const std::filesystem::path& path);

// Edge lists: TSV "source<TAB>target", '#' comment lines allowed.
EdgeList read_edge_list(const std::filesystem::path& path);
void write_edge_list(const EdgeList& el, const std::filesystem::path& path);

// (out, in) degree histograms of the edge list. Nodes appearing only as
// target (or only as source) count into the dropped_zeros tally of the
// out (resp. in) histogram.
std::pair<DegreeHistogram, DegreeHistogram>
histograms_from_edges(const EdgeList& el);

CcdfTable ccdf(const DegreeHistogram& hist);
void write_ccdf(const CcdfTable& table, const std::filesystem::path& path);

// Import-graph extraction: a lexical approximation of the "depends on"
// metric for a Java source corpus. Nodes are top-level types declared in
// the corpus; an edge A -> B is recorded for each explicit single-type
// import in A's file that resolves to a corpus-declared type B. Imports
// of outside types, wildcard and static imports are skipped and tallied.
struct SkipReport {
    std::int64_t wildcard_imports = 0;
    std::int64_t static_imports = 0;
    std::int64_t unresolved_imports = 0;  // outside the corpus
    std::int64_t unreadable_files = 0;
};

struct ImportGraph {
    EdgeList edges;  // sorted canonical order
    SkipReport skipped;
};

ImportGraph extract_import_graph(const std::filesystem::path& root);
std::string skip_report_text(const SkipReport& r);

}  // namespace splitgraph

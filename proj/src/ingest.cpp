#include "splitgraph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace splitgraph {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------
// Formatting and small parse helpers

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

namespace {

[[noreturn]] void parse_fail(const fs::path& path, std::size_t line,
                             const std::string& what) {
    std::ostringstream os;
    os << path.string() << ":" << line << ": " << what;
    throw ParseError(os.str());
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

std::int64_t parse_int(std::string_view s, const fs::path& path,
                       std::size_t line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        parse_fail(path, line, "expected integer, got '" + std::string(s) + "'");
    return value;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::ifstream open_in(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return in;
}

}  // namespace

// ---------------------------------------------------------------------
// Histogram CSV

DegreeHistogram read_histogram(const fs::path& path) {
    auto in = open_in(path);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
    ++lineno;
    strip_cr(line);
    if (line != "degree,count")
        parse_fail(path, lineno, "expected header 'degree,count'");

    DegreeHistogram h;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            parse_fail(path, lineno, "expected 'degree,count' row");
        auto degree = parse_int(std::string_view(line).substr(0, comma), path,
                                lineno);
        auto count = parse_int(std::string_view(line).substr(comma + 1), path,
                               lineno);
        if (degree < 0) parse_fail(path, lineno, "negative degree");
        if (count < 0) parse_fail(path, lineno, "negative count");
        h.add(degree, count);
    }
    return h;
}

void write_histogram(const DegreeHistogram& hist, const fs::path& path) {
    auto out = open_out(path);
    out << "degree,count\n";
    // A zero row keeps the dropped tally through a round trip.
    if (hist.dropped_zeros() > 0) out << "0," << hist.dropped_zeros() << "\n";
    for (const auto& [deg, cnt] : hist.bins()) out << deg << "," << cnt << "\n";
}

// ---------------------------------------------------------------------
// Edge list TSV

EdgeList read_edge_list(const fs::path& path) {
    auto in = open_in(path);
    EdgeList el;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            parse_fail(path, lineno, "expected 'source<TAB>target'");
        std::string src = line.substr(0, tab);
        std::string dst = line.substr(tab + 1);
        if (src.empty() || dst.empty() ||
            dst.find('\t') != std::string::npos)
            parse_fail(path, lineno, "expected exactly two non-empty fields");
        el.edges.emplace_back(std::move(src), std::move(dst));
    }
    return el;
}

void write_edge_list(const EdgeList& el, const fs::path& path) {
    auto out = open_out(path);
    for (const auto& [src, dst] : el.edges) out << src << "\t" << dst << "\n";
}

std::pair<DegreeHistogram, DegreeHistogram>
histograms_from_edges(const EdgeList& el) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> deg;
    for (const auto& [src, dst] : el.edges) {
        deg[src].first += 1;
        deg[dst].second += 1;
    }
    DegreeHistogram out, in;
    for (const auto& [node, d] : deg) {
        out.add(d.first, 1);
        in.add(d.second, 1);
    }
    return {out, in};
}

// ---------------------------------------------------------------------
// CCDF

void CcdfTable::check() const {
    std::int64_t prev_deg = 0;
    double prev_frac = 1.0 + 1e-12;
    for (const auto& [deg, frac] : points) {
        if (deg <= prev_deg) throw std::logic_error("ccdf degrees not increasing");
        if (frac > prev_frac || frac <= 0.0)
            throw std::logic_error("ccdf fractions not non-increasing in (0,1]");
        prev_deg = deg;
        prev_frac = frac;
    }
    if (!points.empty() && points.front().second > 1.0)
        throw std::logic_error("ccdf first fraction exceeds 1");
}

CcdfTable ccdf(const DegreeHistogram& hist) {
    CcdfTable table;
    const auto k = static_cast<double>(hist.k());
    std::int64_t at_least = hist.k();
    for (const auto& [deg, cnt] : hist.bins()) {
        table.points.emplace_back(deg, static_cast<double>(at_least) / k);
        at_least -= cnt;
    }
    table.check();
    return table;
}

void write_ccdf(const CcdfTable& table, const fs::path& path) {
    table.check();
    auto out = open_out(path);
    out << "degree,ccdf\n";
    for (const auto& [deg, frac] : table.points)
        out << deg << "," << format_double(frac) << "\n";
}

// ---------------------------------------------------------------------
// Java import-graph extraction (lexical)

namespace {

// Comments become spaces and literal bodies are blanked, so the token
// scan below never trips on braces or keywords inside them.
std::string strip_comments_and_literals(const std::string& src) {
    std::string out;
    out.reserve(src.size());
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
        } else if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
            i = std::min(n, i + 2);
            out.push_back(' ');
        } else if (c == '"' || c == '\'') {
            const char quote = c;
            ++i;
            while (i < n && src[i] != quote) {
                if (src[i] == '\\') ++i;
                ++i;
            }
            ++i;
            out.push_back(quote == '"' ? 's' : 'c');  // placeholder token
        } else {
            out.push_back(c);
            ++i;
        }
    }
    return out;
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

struct FileScan {
    std::string package_name;
    std::vector<std::string> types;  // top-level, declaration order
    struct Import {
        std::string target;  // fully qualified
        bool wildcard = false;
        bool is_static = false;
    };
    std::vector<Import> imports;
};

FileScan scan_java_source(const std::string& raw) {
    const std::string code = strip_comments_and_literals(raw);
    FileScan scan;
    int depth = 0;
    std::size_t i = 0;
    const std::size_t n = code.size();

    auto read_word = [&]() {
        std::size_t start = i;
        while (i < n && ident_char(code[i])) ++i;
        return code.substr(start, i - start);
    };
    auto read_dotted = [&]() {  // identifier chain a.b.c, possibly a.b.*
        std::string name;
        for (;;) {
            while (i < n && std::isspace(static_cast<unsigned char>(code[i])))
                ++i;
            if (i < n && code[i] == '*') {
                name += '*';
                ++i;
                break;
            }
            std::string word = read_word();
            if (word.empty()) break;
            name += word;
            while (i < n && std::isspace(static_cast<unsigned char>(code[i])))
                ++i;
            if (i < n && code[i] == '.') {
                name += '.';
                ++i;
            } else {
                break;
            }
        }
        return name;
    };

    while (i < n) {
        char c = code[i];
        if (c == '{') {
            ++depth;
            ++i;
        } else if (c == '}') {
            --depth;
            ++i;
        } else if (ident_char(c)) {
            std::string word = read_word();
            if (depth != 0) continue;
            if (word == "package") {
                scan.package_name = read_dotted();
            } else if (word == "import") {
                FileScan::Import imp;
                std::size_t save = i;
                while (i < n && std::isspace(static_cast<unsigned char>(code[i])))
                    ++i;
                std::size_t word_start = i;
                std::string next = read_word();
                if (next == "static") {
                    imp.is_static = true;
                } else {
                    i = save;
                    (void)word_start;
                }
                imp.target = read_dotted();
                if (!imp.target.empty() && imp.target.back() == '*') {
                    imp.wildcard = true;
                    imp.target.pop_back();
                    if (!imp.target.empty() && imp.target.back() == '.')
                        imp.target.pop_back();
                }
                scan.imports.push_back(std::move(imp));
            } else if (word == "class" || word == "interface" ||
                       word == "enum" || word == "record") {
                while (i < n && std::isspace(static_cast<unsigned char>(code[i])))
                    ++i;
                std::string name = read_word();
                if (!name.empty()) scan.types.push_back(name);
            }
        } else {
            ++i;
        }
    }
    return scan;
}

std::string qualify(const std::string& pkg, const std::string& type) {
    return pkg.empty() ? type : pkg + "." + type;
}

}  // namespace

ImportGraph extract_import_graph(const fs::path& root) {
    if (!fs::is_directory(root))
        throw std::runtime_error("not a directory: " + root.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    ImportGraph graph;
    std::set<std::string> declared;
    // (owner type, imports) per file; the first declared top-level type
    // owns the file's imports.
    std::vector<std::pair<std::string, std::vector<FileScan::Import>>> owners;

    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            graph.skipped.unreadable_files += 1;
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        FileScan scan = scan_java_source(buf.str());
        for (const auto& type : scan.types)
            declared.insert(qualify(scan.package_name, type));
        if (!scan.types.empty())
            owners.emplace_back(qualify(scan.package_name, scan.types.front()),
                                std::move(scan.imports));
    }

    for (const auto& [owner, imports] : owners) {
        for (const auto& imp : imports) {
            if (imp.wildcard)
                graph.skipped.wildcard_imports += 1;
            else if (imp.is_static)
                graph.skipped.static_imports += 1;
            else if (declared.count(imp.target))
                graph.edges.edges.emplace_back(owner, imp.target);
            else
                graph.skipped.unresolved_imports += 1;
        }
    }
    std::sort(graph.edges.edges.begin(), graph.edges.edges.end());
    return graph;
}

std::string skip_report_text(const SkipReport& r) {
    std::ostringstream os;
    os << "wildcard_imports=" << r.wildcard_imports << "\n"
       << "static_imports=" << r.static_imports << "\n"
       << "unresolved_imports=" << r.unresolved_imports << "\n"
       << "unreadable_files=" << r.unreadable_files << "\n";
    return os.str();
}

}  // namespace splitgraph

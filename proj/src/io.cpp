/*
   Copyright 2026 The GRIL Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gril/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gril/error.hpp"

namespace gril::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view doc) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= doc.size()) {
        std::size_t end = doc.find('\n', start);
        if (end == std::string_view::npos) end = doc.size();
        std::string_view line = doc.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back(line);
        start = end + 1;
    }
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t end = s.find(sep, start);
        out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) return out;
        start = end + 1;
    }
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <class T>
std::optional<T> to_number(std::string_view s) {
    s = trim(s);
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    std::string tmp(s);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size()) return std::nullopt;
    return v;
}

std::string format_value(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

BiFiltration parse_bifiltration(std::string_view doc) {
    auto lines = split_lines(doc);
    std::size_t ln = 0;
    std::optional<GridSpec> grid;
    SimplicialComplex cx;
    std::vector<GridPoint> vals;
    for (std::string_view raw : lines) {
        ++ln;
        std::string_view line = raw.substr(0, raw.find('#'));
        if (trim(line).empty()) continue;
        if (!grid) {
            auto t = tokens(line);
            if (t.size() != 3 || t[0] != "bifil" || t[1] != "2") throw ParseError(ln, "expected header 'bifil 2 <M>'");
            auto m = to_number<int>(t[2]);
            if (!m || *m < 1) throw ParseError(ln, "grid size must be a positive integer");
            grid = GridSpec{*m};
            continue;
        }
        auto halves = split(line, ';');
        if (halves.size() != 2) throw ParseError(ln, "expected '<dim> <vertices> ; <i> <j>'");
        auto lhs = tokens(halves[0]);
        auto rhs = tokens(halves[1]);
        if (lhs.empty()) throw ParseError(ln, "missing dimension");
        auto dim = to_number<int>(lhs[0]);
        if (!dim || *dim < 0 || *dim > 2) throw ParseError(ln, "dimension must be 0, 1 or 2");
        if (lhs.size() != static_cast<std::size_t>(*dim) + 2) throw ParseError(ln, "vertex count does not match dimension");
        std::vector<VertexId> vs;
        for (std::size_t k = 1; k < lhs.size(); ++k) {
            auto v = to_number<VertexId>(lhs[k]);
            if (!v) throw ParseError(ln, "bad vertex id '" + std::string(lhs[k]) + "'");
            vs.push_back(*v);
        }
        if (rhs.size() != 2) throw ParseError(ln, "expected two grid coordinates");
        auto i = to_number<int>(rhs[0]);
        auto j = to_number<int>(rhs[1]);
        if (!i || !j) throw ParseError(ln, "grid coordinates must be integers");
        if (*i < 0 || *j < 0 || *i > grid->M || *j > grid->M) throw ParseError(ln, "grid coordinate outside [0, M]");
        try {
            Simplex s{std::span<const VertexId>(vs)};
            if (cx.contains(s)) throw ParseError(ln, "duplicate simplex " + s.to_string());
            cx.add(s);
        } catch (const InvalidArgument& e) {
            throw ParseError(ln, e.what());
        }
        vals.push_back({*i, *j});
    }
    if (!grid) throw ParseError("missing 'bifil 2 <M>' header");
    auto bad = validate(cx, std::span<const GridPoint>(vals));
    if (!bad.empty()) {
        const auto& v = bad.front();
        throw ValidationError("value of " + cx.simplex(v.face).to_string() + " is not below its coface " +
                              cx.simplex(v.coface).to_string());
    }
    return BiFiltration(std::move(cx), *grid, std::move(vals));
}

std::string serialize_bifiltration(const BiFiltration& f) {
    std::ostringstream os;
    os << "bifil 2 " << f.grid().M << '\n';
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Simplex& s = f.complex().simplex(k);
        os << s.dimension();
        for (VertexId v : s.vertices()) os << ' ' << v;
        os << " ; " << f.value(k).i << ' ' << f.value(k).j << '\n';
    }
    return os.str();
}

std::string read_text(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& file, std::string_view text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + file.string());
    out << text;
}

BiFiltration read_bifiltration(const std::filesystem::path& file) { return parse_bifiltration(read_text(file)); }

std::vector<AttributedGraph> read_tudataset(const std::filesystem::path& dir, const std::string& name) {
    auto file = [&](const char* suffix) { return dir / (name + suffix); };
    auto need = [&](const char* suffix) {
        auto p = file(suffix);
        if (!std::filesystem::exists(p)) throw ParseError("missing file " + p.string());
        return read_text(p);
    };

    std::vector<std::size_t> indicator;  // per node, 0-based graph id
    {
        const std::string text = need("_graph_indicator.txt");
        std::size_t ln = 0;
        for (auto line : split_lines(text)) {
            ++ln;
            if (trim(line).empty()) continue;
            auto g = to_number<std::size_t>(line);
            if (!g || *g < 1) throw ParseError(ln, "bad graph id in indicator");
            if (!indicator.empty() && *g - 1 < indicator.back()) throw ParseError(ln, "graph indicator is not sorted");
            indicator.push_back(*g - 1);
        }
    }
    const std::size_t ngraphs = indicator.empty() ? 0 : indicator.back() + 1;
    std::vector<AttributedGraph> graphs(ngraphs);
    std::vector<std::size_t> local(indicator.size());
    for (std::size_t v = 0; v < indicator.size(); ++v) local[v] = graphs[indicator[v]].n++;

    std::vector<int> labels;
    {
        const std::string text = need("_graph_labels.txt");
        std::size_t ln = 0;
        for (auto line : split_lines(text)) {
            ++ln;
            if (trim(line).empty()) continue;
            auto l = to_number<int>(line);
            if (!l) throw ParseError(ln, "bad graph label");
            labels.push_back(*l);
        }
    }
    if (labels.size() != ngraphs) {
        throw ParseError("graph label count " + std::to_string(labels.size()) + " differs from graph count " +
                         std::to_string(ngraphs));
    }
    for (std::size_t g = 0; g < ngraphs; ++g) graphs[g].label = labels[g];

    {
        const std::string text = need("_A.txt");
        std::size_t ln = 0;
        for (auto line : split_lines(text)) {
            ++ln;
            if (trim(line).empty()) continue;
            auto parts = split(line, ',');
            if (parts.size() != 2) throw ParseError(ln, "expected 'u, v' in adjacency file");
            auto a = to_number<std::size_t>(parts[0]);
            auto b = to_number<std::size_t>(parts[1]);
            if (!a || !b || *a < 1 || *b < 1 || *a > indicator.size() || *b > indicator.size()) {
                throw ParseError(ln, "dangling vertex reference in adjacency file");
            }
            const std::size_t u = *a - 1, v = *b - 1;
            if (indicator[u] != indicator[v]) throw ParseError(ln, "edge crosses graph boundary");
            if (u == v) continue;
            graphs[indicator[u]].edges.emplace_back(static_cast<VertexId>(local[u]), static_cast<VertexId>(local[v]));
        }
    }

    for (const char* suffix : {"_node_attributes.txt", "_node_labels.txt"}) {
        auto p = file(suffix);
        if (!std::filesystem::exists(p)) continue;
        std::size_t ln = 0, v = 0;
        for (auto& g : graphs) g.attributes.assign(g.n, 0.0);
        const std::string text = read_text(p);
        for (auto line : split_lines(text)) {
            ++ln;
            if (trim(line).empty()) continue;
            auto x = to_double(split(line, ',')[0]);
            if (!x) throw ParseError(ln, "bad node attribute");
            if (v >= indicator.size()) throw ParseError(ln, "more node attributes than nodes");
            graphs[indicator[v]].attributes[local[v]] = *x;
            ++v;
        }
        if (v != indicator.size()) throw ParseError("node attribute count differs from node count");
        break;
    }
    for (auto& g : graphs) g.canonicalize();
    return graphs;
}

void write_tudataset(const std::filesystem::path& dir, const std::string& name,
                     const std::vector<AttributedGraph>& graphs) {
    std::filesystem::create_directories(dir);
    std::ostringstream a, ind, lab, attr;
    std::size_t base = 0;
    bool has_attr = !graphs.empty();
    for (const auto& g : graphs) has_attr = has_attr && g.attributes.size() == g.n;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        const auto& g = graphs[k];
        for (std::size_t v = 0; v < g.n; ++v) {
            ind << k + 1 << '\n';
            if (has_attr) attr << format_value(g.attributes[v]) << '\n';
        }
        for (const auto& [u, v] : g.edges) {
            a << base + u + 1 << ", " << base + v + 1 << '\n';
            a << base + v + 1 << ", " << base + u + 1 << '\n';
        }
        lab << g.label.value_or(0) << '\n';
        base += g.n;
    }
    write_text(dir / (name + "_A.txt"), a.str());
    write_text(dir / (name + "_graph_indicator.txt"), ind.str());
    write_text(dir / (name + "_graph_labels.txt"), lab.str());
    if (has_attr) write_text(dir / (name + "_node_attributes.txt"), attr.str());
}

std::string emit_features(const std::vector<GrilVector>& vectors, const std::vector<std::string>& ids,
                          const std::vector<int>& labels) {
    if (vectors.size() != ids.size() || vectors.size() != labels.size()) {
        throw InvalidArgument("vectors, ids and labels differ in length");
    }
    std::ostringstream os;
    os << "graph_id,label";
    if (!vectors.empty()) {
        const GrilVector& v0 = vectors.front();
        for (const auto& v : vectors) {
            if (!v.same_index_set(v0)) throw InvalidArgument("GRIL vectors have different index sets");
        }
        for (int dim : v0.dims()) {
            for (std::size_t p = 0; p < v0.centers().size(); ++p) {
                for (int k = 1; k <= v0.kmax(); ++k) {
                    for (int ell : v0.ells()) os << ",h" << dim << "_p" << p << "_k" << k << "_l" << ell;
                }
            }
        }
    }
    os << '\n';
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (ids[r].find_first_of(",\n") != std::string::npos) throw InvalidArgument("id contains a separator");
        os << ids[r] << ',' << labels[r];
        for (int s : vectors[r].flat_steps()) os << ',' << format_value(s * vectors[r].grid().rho());
        os << '\n';
    }
    return os.str();
}

FeatureTable parse_features(std::string_view doc) {
    auto lines = split_lines(doc);
    if (lines.empty()) throw ParseError("empty feature file");
    FeatureTable t;
    auto head = split(lines[0], ',');
    if (head.size() < 2 || head[0] != "graph_id" || head[1] != "label") {
        throw ParseError(1, "header must start with 'graph_id,label'");
    }
    for (std::size_t c = 2; c < head.size(); ++c) t.columns.emplace_back(head[c]);
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (trim(lines[ln]).empty()) continue;
        auto cells = split(lines[ln], ',');
        if (cells.size() != head.size()) throw ParseError(ln + 1, "row has a different column count than the header");
        t.ids.emplace_back(cells[0]);
        auto lab = to_number<int>(cells[1]);
        if (!lab) throw ParseError(ln + 1, "bad label");
        t.labels.push_back(*lab);
        std::vector<double> row;
        for (std::size_t c = 2; c < cells.size(); ++c) {
            auto x = to_double(cells[c]);
            if (!x) throw ParseError(ln + 1, "bad feature value");
            row.push_back(*x);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string emit_heatmap(const GrilVector& v, int k, int ell, int dim) {
    auto li = v.ell_index(ell);
    auto di = v.dim_index(dim);
    if (!li || !di || k < 1 || k > v.kmax()) throw InvalidArgument("heatmap slice outside the vector's index set");
    std::set<int> xs, ys;
    for (GridPoint p : v.centers()) {
        xs.insert(p.i);
        ys.insert(p.j);
    }
    std::set<GridPoint> all(v.centers().begin(), v.centers().end());
    if (all.size() != v.centers().size() || xs.size() * ys.size() != all.size()) {
        throw InvalidArgument("centres do not form a full rectangular grid");
    }
    std::ostringstream os;
    os << "P2\n" << xs.size() << ' ' << ys.size() << "\n255\n";
    for (auto y = ys.rbegin(); y != ys.rend(); ++y) {
        bool first = true;
        for (int x : xs) {
            const std::size_t ci = *v.center_index({x, *y});
            const double val = v.value(*di, ci, k, *li);
            os << (first ? "" : " ") << static_cast<int>(std::lround(255.0 * val));
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace gril::io

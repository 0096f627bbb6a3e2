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

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gril/error.hpp"
#include "gril/filtrations.hpp"
#include "gril/io.hpp"
#include "gril/landscape.hpp"
#include "gril/rank.hpp"

namespace fs = std::filesystem;
using namespace gril;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string shortest(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, end};
}

struct Item {
    std::string id;
    int label = -1;
    BiFiltration f;
};

std::vector<Item> load_bifil(const fs::path& input) {
    std::vector<fs::path> files;
    if (fs::is_directory(input)) {
        for (const auto& e : fs::directory_iterator(input)) {
            if (e.is_regular_file() && e.path().extension() == ".bifil") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) throw ParseError("no .bifil files in " + input.string());
    } else {
        files.push_back(input);
    }
    std::vector<Item> items;
    for (const auto& p : files) items.push_back({p.stem().string(), -1, io::read_bifiltration(p)});
    return items;
}

std::string tudataset_name(const fs::path& dir, const std::string& given) {
    if (!given.empty()) return given;
    std::vector<std::string> names;
    if (fs::is_directory(dir)) {
        for (const auto& e : fs::directory_iterator(dir)) {
            const std::string n = e.path().filename().string();
            if (n.size() > 6 && n.ends_with("_A.txt")) names.push_back(n.substr(0, n.size() - 6));
        }
    }
    if (names.size() != 1) throw UsageError("cannot infer the dataset name in " + dir.string() + "; pass --name");
    return names.front();
}

std::vector<Item> load_tudataset(const fs::path& dir, const std::string& name, int M) {
    std::vector<Item> items;
    const auto graphs = io::read_tudataset(dir, name);
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        const auto& graph = graphs[g];
        // Attributed graphs use (attribute, curvature); plain ones fall back to HKS-RC.
        BiFiltration f = graph.attributes.size() == graph.n && graph.n > 0 ? hourglass_bifiltration(graph, GridSpec{M})
                                                                          : hks_rc_bifiltration(graph, GridSpec{M});
        items.push_back({"g" + std::to_string(g + 1), graph.label.value_or(-1), std::move(f)});
    }
    return items;
}

// Random monotone bifiltration on at most max_simplices simplices.
BiFiltration random_bifiltration(std::mt19937_64& rng, int max_simplices, int M) {
    auto uni = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int nverts = uni(1, std::min(5, max_simplices));
    std::vector<Simplex> cand;
    for (int a = 0; a < nverts; ++a) {
        for (int b = a + 1; b < nverts; ++b) {
            cand.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
            for (int c = b + 1; c < nverts; ++c) {
                cand.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
            }
        }
    }
    std::shuffle(cand.begin(), cand.end(), rng);
    std::stable_sort(cand.begin(), cand.end(), [](const Simplex& x, const Simplex& y) { return x.dimension() < y.dimension(); });
    SimplicialComplex cx;
    for (int a = 0; a < nverts; ++a) cx.add(Simplex{static_cast<VertexId>(a)});
    for (const auto& s : cand) {
        if (static_cast<int>(cx.size()) >= max_simplices) break;
        auto fs = s.facets();
        if (std::all_of(fs.begin(), fs.end(), [&](const Simplex& x) { return cx.contains(x); }) && uni(0, 9) < 7) cx.add(s);
    }
    std::vector<GridPoint> vals;
    for (std::size_t i = 0; i < cx.size(); ++i) {
        GridPoint lo{0, 0};
        for (auto fc : cx.boundary(i)) lo = join(lo, vals[fc]);
        vals.push_back({uni(lo.i, M), uni(lo.j, M)});
    }
    return BiFiltration(cx, GridSpec{M}, vals);
}

// The worm as a plain union of d-squares around its grid centres, cut one step
// below the unit square (enough to expose the zero module) and at M above.
Region square_union(const DiscreteWorm& w) {
    const int M = w.grid.M, d = w.width_steps, reach = (w.ell - 1) * d;
    std::vector<GridPoint> pts;
    for (int a = -reach; a <= reach; ++a) {
        const GridPoint q{w.center.i + a, w.center.j - a};
        if (q.i < 0 || q.i > M || q.j < 0 || q.j > M) continue;
        for (int x = std::max(-1, q.i - d); x <= std::min(M, q.i + d); ++x) {
            for (int y = std::max(-1, q.j - d); y <= std::min(M, q.j + d); ++y) pts.push_back({x, y});
        }
    }
    return Region(std::move(pts));
}

struct ComputeArgs {
    std::string input, format = "bifil", name, out, heatmaps;
    int grid = 0, step = 1, kmax = 2;
    std::vector<int> ells{2}, dims{0, 1};
    unsigned workers = 0;
};

int run_compute(const ComputeArgs& a) {
    std::vector<Item> items;
    if (a.format == "bifil") {
        items = load_bifil(a.input);
        for (const auto& it : items) {
            if (a.grid != 0 && it.f.grid().M != a.grid) {
                throw ValidationError(it.id + ": grid " + std::to_string(it.f.grid().M) + " differs from --grid");
            }
        }
        if (items.size() > 1) {
            for (const auto& it : items) {
                if (it.f.grid() != items.front().f.grid()) throw ValidationError("inputs use different grids");
            }
        }
    } else {
        if (a.grid < 1) throw UsageError("--grid is required for tudataset input");
        items = load_tudataset(a.input, tudataset_name(a.input, a.name), a.grid);
    }
    GrilVectorOptions opts;
    opts.kmax = a.kmax;
    opts.ells = a.ells;
    opts.dims = a.dims;
    opts.workers = a.workers == 0 ? default_workers() : a.workers;

    std::vector<GrilVector> vecs;
    std::vector<std::string> ids;
    std::vector<int> labels;
    for (const auto& it : items) {
        const auto centers = center_subgrid(it.f.grid(), a.step);
        vecs.push_back(compute_gril_vector(it.f, centers.points, opts));
        ids.push_back(it.id);
        labels.push_back(it.label);
    }
    const std::string csv = io::emit_features(vecs, ids, labels);
    if (a.out == "-") {
        std::cout << csv;
    } else {
        io::write_text(a.out, csv);
    }
    if (!a.heatmaps.empty()) {
        fs::create_directories(a.heatmaps);
        for (std::size_t r = 0; r < vecs.size(); ++r) {
            for (int dim : a.dims) {
                for (int k = 1; k <= a.kmax; ++k) {
                    for (int ell : a.ells) {
                        const std::string file = ids[r] + "_h" + std::to_string(dim) + "_k" + std::to_string(k) + "_l" +
                                                 std::to_string(ell) + ".pgm";
                        io::write_text(fs::path(a.heatmaps) / file, io::emit_heatmap(vecs[r], k, ell, dim));
                    }
                }
            }
        }
    }
    return kOk;
}

int run_hourglass(std::size_t lo, std::size_t hi, std::size_t count, std::uint64_t seed, const std::string& out) {
    const auto graphs = hourglass_dataset(lo, hi, count, seed);
    const std::string name = "HourGlass_" + std::to_string(lo) + "_" + std::to_string(hi);
    io::write_tudataset(out, name, graphs);
    std::cout << "wrote " << graphs.size() << " graphs as " << (fs::path(out) / name).string() << '\n';
    return kOk;
}

int run_rank(const std::string& input, const std::vector<int>& center, int width, int ell, int dim) {
    const BiFiltration f = io::read_bifiltration(input);
    const DiscreteWorm w{{center[0], center[1]}, width, ell, f.grid()};
    w.check();
    std::cout << compute_rank(f, w, dim) << '\n';
    return kOk;
}

int run_check_oracle(int trials, int max_simplices, int M, std::uint64_t seed) {
    if (trials < 0 || max_simplices < 1 || M < 1) throw UsageError("trials, max-simplices and grid must be positive");
    std::mt19937_64 rng(seed);
    auto uni = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        const BiFiltration f = random_bifiltration(rng, max_simplices, M);
        const DiscreteWorm w{{uni(0, M), uni(0, M)}, uni(1, M), uni(1, 3), f.grid()};
        const auto fast = compute_ranks(f, w, 1);
        const IntervalRegion region(square_union(w));
        for (int dim = 0; dim <= 1; ++dim) {
            const std::size_t slow = rank_oracle(f, region, dim);
            if (fast[static_cast<std::size_t>(dim)] == slow) continue;
            ++mismatches;
            std::cerr << "mismatch in trial " << t << " dim " << dim << ": zigzag " << fast[static_cast<std::size_t>(dim)]
                      << ", oracle " << slow << "; worm center (" << w.center.i << "," << w.center.j << ") d "
                      << w.width_steps << " l " << w.ell << "\n"
                      << io::serialize_bifiltration(f);
        }
    }
    std::cout << trials << " trials, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kOk : kMismatch;
}

int run_distance(const std::string& a_path, const std::string& b_path) {
    const auto a = io::parse_features(io::read_text(a_path));
    const auto b = io::parse_features(io::read_text(b_path));
    if (a.columns != b.columns) throw ValidationError("feature columns differ");
    if (a.rows.size() != b.rows.size()) throw ValidationError("row counts differ");
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        double d = 0.0;
        for (std::size_t c = 0; c < a.rows[r].size(); ++c) d = std::max(d, std::abs(a.rows[r][c] - b.rows[r][c]));
        std::cout << a.ids[r] << ',' << b.ids[r] << ',' << shortest(d) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gril: generalized rank invariant landscapes of bifiltrations"};
    app.require_subcommand(1);
    std::function<int()> action;

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "GRIL feature vectors for bifiltration files or a TUDataset");
    compute->add_option("--input", ca.input, "bifiltration file, directory of .bifil files, or TUDataset directory")
        ->required();
    compute->add_option("--format", ca.format)->check(CLI::IsMember({"bifil", "tudataset"}));
    compute->add_option("--name", ca.name, "TUDataset name, inferred when the directory holds one");
    compute->add_option("--grid", ca.grid, "grid subdivisions M")->check(CLI::PositiveNumber);
    compute->add_option("--subgrid-step", ca.step, "centre spacing in grid steps")->check(CLI::PositiveNumber);
    compute->add_option("--kmax", ca.kmax)->check(CLI::PositiveNumber);
    compute->add_option("--ell", ca.ells)->delimiter(',');
    compute->add_option("--dims", ca.dims)->delimiter(',');
    compute->add_option("--out", ca.out, "CSV path, - for stdout")->required();
    compute->add_option("--heatmaps", ca.heatmaps, "directory for PGM heatmaps");
    compute->add_option("--workers", ca.workers)->check(CLI::PositiveNumber);
    compute->callback([&] { action = [&] { return run_compute(ca); }; });

    std::size_t hg_min = 10, hg_max = 20, hg_count = 100;
    std::uint64_t hg_seed = 0;
    std::string hg_out;
    auto* hourglass = app.add_subcommand("hourglass", "write an HourGlass[a,b] dataset in TUDataset layout");
    hourglass->add_option("--min", hg_min)->required();
    hourglass->add_option("--max", hg_max)->required();
    hourglass->add_option("--count", hg_count)->required();
    hourglass->add_option("--seed", hg_seed);
    hourglass->add_option("--out", hg_out)->required();
    hourglass->callback([&] { action = [&] { return run_hourglass(hg_min, hg_max, hg_count, hg_seed, hg_out); }; });

    std::string rk_input;
    std::vector<int> rk_center;
    int rk_width = 1, rk_ell = 1, rk_dim = 0;
    auto* rank = app.add_subcommand("rank", "generalized rank over one worm");
    rank->add_option("--input", rk_input)->required();
    rank->add_option("--center", rk_center, "i,j in grid steps")->delimiter(',')->expected(2)->required();
    rank->add_option("--width", rk_width, "d in grid steps")->required();
    rank->add_option("--ell", rk_ell)->required();
    rank->add_option("--dim", rk_dim)->required();
    rank->callback([&] { action = [&] { return run_rank(rk_input, rk_center, rk_width, rk_ell, rk_dim); }; });

    int co_trials = 1000, co_max = 10, co_grid = 8;
    std::uint64_t co_seed = 1;
    auto* oracle = app.add_subcommand("check-oracle", "compare zigzag ranks with the brute-force oracle");
    oracle->add_option("--trials", co_trials);
    oracle->add_option("--max-simplices", co_max);
    oracle->add_option("--grid", co_grid);
    oracle->add_option("--seed", co_seed);
    oracle->callback([&] { action = [&] { return run_check_oracle(co_trials, co_max, co_grid, co_seed); }; });

    std::string da, db;
    auto* distance = app.add_subcommand("distance", "sup-norm distance between rows of two feature CSVs");
    distance->add_option("--a", da)->required();
    distance->add_option("--b", db)->required();
    distance->callback([&] { action = [&] { return run_distance(da, db); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "gril: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "gril: " << e.what() << '\n';
        return kInput;
    }
}

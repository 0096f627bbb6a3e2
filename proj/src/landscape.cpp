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

#include "gril/landscape.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "gril/error.hpp"
#include "gril/rank.hpp"

namespace gril {

void GrilQuery::check(const GridSpec& grid) const {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    if (ell < 1) throw InvalidArgument("ell must be >= 1");
    if (dim < 0) throw InvalidArgument("dim must be >= 0");
    if (!on_grid(center, grid)) throw InvalidArgument("centre is off the grid");
}

namespace {

// Binary search over d in [lo, hi] for the largest d with pred(d); pred is
// assumed antitone. Returns 0 if none.
template <class Pred>
int search_width(int lo, int hi, Pred pred) {
    int best = 0;
    while (lo <= hi) {
        const int d = (lo + hi) / 2;
        if (pred(d)) {
            best = d;
            lo = d + 1;
        } else {
            hi = d - 1;
        }
    }
    return best;
}

}  // namespace

int compute_gril_steps(const BiFiltration& f, const GrilQuery& q) {
    q.check(f.grid());
    const GridSpec& g = f.grid();
    return search_width(1, g.M, [&](int d) {
        DiscreteWorm w{q.center, d, q.ell, g};
        return compute_rank(f, w, q.dim) >= static_cast<std::size_t>(q.k);
    });
}

double compute_gril(const BiFiltration& f, const GrilQuery& q) { return compute_gril_steps(f, q) * f.grid().rho(); }

CenterGrid center_subgrid(const GridSpec& grid, int step) {
    grid.check();
    if (step < 1) throw InvalidArgument("subgrid step must be >= 1");
    CenterGrid cg;
    cg.width = grid.M / step + 1;
    cg.height = cg.width;
    for (int b = 0; b < cg.height; ++b) {
        for (int a = 0; a < cg.width; ++a) cg.points.push_back({a * step, b * step});
    }
    return cg;
}

GrilVector::GrilVector(GridSpec grid, std::vector<GridPoint> centers, int kmax, std::vector<int> ells,
                       std::vector<int> dims)
    : grid_(grid), centers_(std::move(centers)), kmax_(kmax), ells_(std::move(ells)), dims_(std::move(dims)) {
    grid_.check();
    if (kmax_ < 1) throw InvalidArgument("kmax must be >= 1");
    if (ells_.empty() || dims_.empty()) throw InvalidArgument("ells and dims must be nonempty");
    for (int l : ells_) {
        if (l < 1) throw InvalidArgument("ell must be >= 1");
    }
    for (int d : dims_) {
        if (d < 0) throw InvalidArgument("dim must be >= 0");
    }
    for (GridPoint p : centers_) {
        if (!on_grid(p, grid_)) throw InvalidArgument("centre is off the grid");
    }
    steps_.assign(dims_.size() * centers_.size() * static_cast<std::size_t>(kmax_) * ells_.size(), 0);
}

std::size_t GrilVector::flat_index(std::size_t dim_idx, std::size_t center_idx, int k, std::size_t ell_idx) const {
    if (dim_idx >= dims_.size() || center_idx >= centers_.size() || k < 1 || k > kmax_ || ell_idx >= ells_.size()) {
        throw InvalidArgument("GRIL index out of range");
    }
    const std::size_t nk = static_cast<std::size_t>(kmax_);
    return ((dim_idx * centers_.size() + center_idx) * nk + static_cast<std::size_t>(k - 1)) * ells_.size() + ell_idx;
}

std::optional<std::size_t> GrilVector::center_index(GridPoint p) const {
    auto it = std::find(centers_.begin(), centers_.end(), p);
    if (it == centers_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - centers_.begin());
}

std::optional<std::size_t> GrilVector::ell_index(int ell) const {
    auto it = std::find(ells_.begin(), ells_.end(), ell);
    if (it == ells_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ells_.begin());
}

std::optional<std::size_t> GrilVector::dim_index(int dim) const {
    auto it = std::find(dims_.begin(), dims_.end(), dim);
    if (it == dims_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - dims_.begin());
}

bool GrilVector::same_index_set(const GrilVector& o) const {
    return grid_ == o.grid_ && centers_ == o.centers_ && kmax_ == o.kmax_ && ells_ == o.ells_ && dims_ == o.dims_;
}

GrilVector compute_gril_vector(const BiFiltration& f, std::vector<GridPoint> centers, const GrilVectorOptions& opts) {
    GrilVector out(f.grid(), std::move(centers), opts.kmax, opts.ells, opts.dims);
    const int max_dim = *std::max_element(opts.dims.begin(), opts.dims.end());
    const int M = f.grid().M;
    const std::size_t ntask = out.centers().size() * opts.ells.size();

    // One task per (centre, ell); tasks write disjoint entries.
    auto run_task = [&](std::size_t t) {
        const std::size_t ci = t / opts.ells.size(), li = t % opts.ells.size();
        const GridPoint p = out.centers()[ci];
        const int ell = opts.ells[li];
        std::map<int, std::vector<std::size_t>> memo;
        auto ranks = [&](int d) -> const std::vector<std::size_t>& {
            auto it = memo.find(d);
            if (it == memo.end()) it = memo.emplace(d, compute_ranks(f, DiscreteWorm{p, d, ell, f.grid()}, max_dim)).first;
            return it->second;
        };
        for (std::size_t di = 0; di < opts.dims.size(); ++di) {
            const auto dim = static_cast<std::size_t>(opts.dims[di]);
            int bound = M;
            for (int k = 1; k <= opts.kmax; ++k) {
                int d = bound > 0 ? search_width(1, bound, [&](int w) { return ranks(w)[dim] >= static_cast<std::size_t>(k); })
                                  : 0;
                out.set_steps(di, ci, k, li, d);
                bound = d;
            }
        }
    };

    unsigned workers = std::max(1U, opts.workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(ntask, 1)));
    if (workers == 1) {
        for (std::size_t t = 0; t < ntask; ++t) run_task(t);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < ntask; t = next++) {
                try {
                    run_task(t);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::size_t reconstruct_rank(const GrilVector& v, GridPoint p, int width_steps, int ell, int dim) {
    auto ci = v.center_index(p);
    auto li = v.ell_index(ell);
    auto di = v.dim_index(dim);
    if (!ci || !li || !di) throw InvalidArgument("reconstruct_rank query outside the vector's index set");
    std::size_t best = 0;
    for (int k = 1; k <= v.kmax(); ++k) {
        if (v.steps(*di, *ci, k, *li) >= width_steps) best = static_cast<std::size_t>(k);
    }
    return best;
}

double gril_distance(const GrilVector& a, const GrilVector& b) {
    if (!a.same_index_set(b)) throw InvalidArgument("GRIL vectors have different index sets");
    int worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.flat_steps()[i] - b.flat_steps()[i]));
    return worst * a.grid().rho();
}

unsigned default_workers() {
    if (const char* env = std::getenv("GRIL_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace gril

#include "rainbow_forge/oracle.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rainbow_forge/bounds.hpp"

namespace rainbow_forge::oracle {

int resolve_threads(const SearchBudget& budget) {
    if (budget.threads > 0) return budget.threads;
    if (const char* env = std::getenv("RAINBOW_FORGE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

using Clock = std::chrono::steady_clock;

// Triangle a<b<c becomes fully colored exactly when its lex-largest edge
// (b,c) is assigned; group triangles by that edge position.
struct TriangleHook {
    int e_ab;
    int e_ac;
    std::uint64_t vmask;
};

std::vector<std::vector<TriangleHook>> triangle_hooks(int n) {
    std::vector<std::vector<TriangleHook>> hooks(static_cast<std::size_t>(edge_slots(n)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                hooks[static_cast<std::size_t>(edge_index(n, b, c))].push_back(
                    {edge_index(n, a, b), edge_index(n, a, c),
                     vertex_bit(a) | vertex_bit(b) | vertex_bit(c)});
    return hooks;
}

struct RainbowTriangle {
    std::uint64_t vmask;
    std::uint64_t cmask;
};

struct Shared {
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<int> best_shard{INT_MAX};
    std::mutex witness_mu;
    std::vector<int> witness;
    Clock::time_point deadline;
    long long node_limit;
};

struct Searcher {
    int m, k;
    long long c;
    const std::vector<std::vector<TriangleHook>>* hooks;
    Shared* shared;
    int shard_id;
    std::vector<int> colors;
    std::vector<RainbowTriangle> rainbow;
    long long local_nodes = 0;
    bool aborted = false;

    bool has_rainbow_packing(std::size_t i, int depth, std::uint64_t vmask,
                             std::uint64_t cmask) const {
        if (depth == k) return true;
        for (; i + static_cast<std::size_t>(k - depth) <= rainbow.size(); ++i) {
            const auto& t = rainbow[i];
            if ((t.vmask & vmask) || (t.cmask & cmask)) continue;
            if (has_rainbow_packing(i + 1, depth + 1, vmask | t.vmask, cmask | t.cmask))
                return true;
        }
        return false;
    }

    bool tick() {
        if (++local_nodes >= 1024) {
            long long total = shared->nodes.fetch_add(local_nodes) + local_nodes;
            local_nodes = 0;
            if (total >= shared->node_limit || Clock::now() >= shared->deadline) {
                shared->exhausted.store(true);
                aborted = true;
            } else if (shared->best_shard.load(std::memory_order_relaxed) < shard_id) {
                aborted = true;
            }
        }
        return !aborted;
    }

    // DFS over restricted-growth extensions from edge position `pos`.
    // Returns true when a full surjective coloring with no rainbow k-packing
    // is reached.
    bool dfs(int pos, int max_used) {
        if (!tick()) return false;
        if (pos == m) return max_used == c;
        if (max_used + (m - pos) < c) return false;
        long long limit = std::min<long long>(max_used + 1, c);
        for (int col = 1; col <= limit; ++col) {
            colors[static_cast<std::size_t>(pos)] = col;
            std::size_t mark = rainbow.size();
            bool pruned = false;
            for (const auto& hook : (*hooks)[static_cast<std::size_t>(pos)]) {
                int c1 = colors[static_cast<std::size_t>(hook.e_ab)];
                int c2 = colors[static_cast<std::size_t>(hook.e_ac)];
                if (c1 == c2 || c1 == col || c2 == col) continue;
                rainbow.push_back({hook.vmask, (1ULL << (c1 - 1)) | (1ULL << (c2 - 1)) |
                                                   (1ULL << (col - 1))});
            }
            if (rainbow.size() > mark && static_cast<int>(rainbow.size()) >= k &&
                has_rainbow_packing(0, 0, 0, 0))
                pruned = true;
            if (!pruned && dfs(pos + 1, std::max<int>(max_used, col))) return true;
            rainbow.resize(mark);
            if (aborted) return false;
        }
        return false;
    }
};

// Shards are the restricted-growth prefixes of the first `depth` edges.
std::vector<std::vector<int>> enumerate_shards(int m, long long c, int depth) {
    std::vector<std::vector<int>> shards;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == depth) {
            shards.push_back(prefix);
            return;
        }
        long long limit = std::min<long long>(max_used + 1, c);
        for (int col = 1; col <= limit; ++col) {
            prefix.push_back(col);
            self(self, pos + 1, std::max<int>(max_used, col));
            prefix.pop_back();
        }
    };
    rec(rec, 0, 0);
    return shards;
}

}  // namespace

ExistsResult exists_coloring_without_rainbow(int n, int k, long long c,
                                             const SearchBudget& budget) {
    if (n < 3 || k < 2 || c < 1 || c > edge_slots(n))
        throw std::domain_error("exists_coloring_without_rainbow: requires n >= 3, k >= 2, "
                                "1 <= c <= C(n,2)");
    if (edge_slots(n) > 64)
        throw std::domain_error("exists_coloring_without_rainbow: color bitmasks cap C(n,2) at 64");

    int m = edge_slots(n);
    auto hooks = triangle_hooks(n);
    Shared shared;
    shared.deadline = Clock::now() + budget.time_limit;
    shared.node_limit = budget.node_limit;

    int depth = std::min(budget.shard_depth, m);
    auto shards = enumerate_shards(m, c, depth);
    int threads = std::min<int>(resolve_threads(budget), static_cast<int>(shards.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= shards.size()) return;
            if (static_cast<int>(i) > shared.best_shard.load()) continue;
            if (shared.exhausted.load()) return;

            Searcher s;
            s.m = m;
            s.k = k;
            s.c = c;
            s.hooks = &hooks;
            s.shared = &shared;
            s.shard_id = static_cast<int>(i);
            s.colors.assign(static_cast<std::size_t>(m), 0);

            // replay the shard prefix, rebuilding the rainbow-triangle state
            int max_used = 0;
            bool viable = true;
            for (int pos = 0; pos < depth && viable; ++pos) {
                int col = shards[i][static_cast<std::size_t>(pos)];
                s.colors[static_cast<std::size_t>(pos)] = col;
                max_used = std::max(max_used, col);
                for (const auto& hook : hooks[static_cast<std::size_t>(pos)]) {
                    int c1 = s.colors[static_cast<std::size_t>(hook.e_ab)];
                    int c2 = s.colors[static_cast<std::size_t>(hook.e_ac)];
                    if (c1 == c2 || c1 == col || c2 == col) continue;
                    s.rainbow.push_back({hook.vmask, (1ULL << (c1 - 1)) | (1ULL << (c2 - 1)) |
                                                         (1ULL << (col - 1))});
                }
                if (static_cast<int>(s.rainbow.size()) >= k && s.has_rainbow_packing(0, 0, 0, 0))
                    viable = false;
            }
            if (viable && s.dfs(depth, max_used)) {
                std::lock_guard<std::mutex> lock(shared.witness_mu);
                int prev = shared.best_shard.load();
                if (static_cast<int>(i) < prev) {
                    shared.best_shard.store(static_cast<int>(i));
                    shared.witness = s.colors;
                }
            }
            shared.nodes.fetch_add(s.local_nodes);
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExistsResult result;
    result.nodes = shared.nodes.load();
    if (shared.best_shard.load() != INT_MAX) {
        result.verdict = ExistsResult::Verdict::yes;
        result.witness = EdgeColoring(n, shared.witness);
        result.outcome = Outcome::certified;
    } else if (shared.exhausted.load()) {
        result.verdict = ExistsResult::Verdict::unknown;
        result.outcome = Outcome::exhausted_budget;
    } else {
        result.verdict = ExistsResult::Verdict::no;
        result.outcome = Outcome::certified;
    }
    return result;
}

ExactResult exact_anti_ramsey(int n, int k, const SearchBudget& budget) {
    if (n < 3 || k < 2) throw std::domain_error("exact_anti_ramsey: requires n >= 3, k >= 2");
    long long m = edge_slots(n);
    ExactResult result;
    result.upper = m;
    auto deadline = Clock::now() + budget.time_limit;

    for (long long c = m; c >= 1; --c) {
        SearchBudget slice = budget;
        slice.node_limit = budget.node_limit - result.nodes;
        slice.time_limit =
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        if (slice.node_limit <= 0 || slice.time_limit.count() <= 0) break;

        auto res = exists_coloring_without_rainbow(n, k, c, slice);
        result.nodes += res.nodes;
        if (res.verdict == ExistsResult::Verdict::no) {
            result.upper = c - 1;
        } else if (res.verdict == ExistsResult::Verdict::yes) {
            result.lower = c;
            result.certified = (result.upper == c);
            if (result.certified) result.value = c;
            return result;
        } else {
            break;  // budget gone; fall back to the constructive lower bound
        }
    }
    result.lower = bounds::lower_bound(n, k);
    result.certified = false;
    return result;
}

ConjectureReport test_conjecture(int n, int k, const SearchBudget& budget) {
    if (n < 3 * k) throw std::domain_error("test_conjecture: requires n >= 3k");
    ConjectureReport report;
    report.predicted = bounds::lower_bound(n, k);
    report.exact = exact_anti_ramsey(n, k, budget);

    // Combine the oracle interval with the proven bounds before judging.
    long long lo = std::max(report.exact.lower, bounds::lower_bound(n, k));
    long long hi = std::min(report.exact.upper, bounds::upper_bound(n, k));
    if (report.exact.certified && *report.exact.value != report.predicted)
        report.verdict = ConjectureVerdict::inconsistent;
    else if (report.predicted < lo || report.predicted > hi)
        report.verdict = ConjectureVerdict::inconsistent;
    else if (lo == hi)
        report.verdict = ConjectureVerdict::consistent;
    else
        report.verdict = ConjectureVerdict::inconclusive;
    return report;
}

const char* conjecture_verdict_name(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::consistent: return "consistent";
        case ConjectureVerdict::inconsistent: return "inconsistent";
        case ConjectureVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

unsigned long long count_partitions_rgs(int n, long long c) {
    if (n < 2 || c < 1) throw std::domain_error("count_partitions_rgs: requires n >= 2, c >= 1");
    int m = edge_slots(n);
    unsigned long long count = 0;
    auto rec = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == m) {
            if (max_used == c) ++count;
            return;
        }
        if (max_used + (m - pos) < c) return;
        long long limit = std::min<long long>(max_used + 1, c);
        for (int col = 1; col <= limit; ++col) self(self, pos + 1, std::max<int>(max_used, col));
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace rainbow_forge::oracle

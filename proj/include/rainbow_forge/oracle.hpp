#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "rainbow_forge/coloring.hpp"

namespace rainbow_forge::oracle {

struct SearchBudget {
    long long node_limit = 200'000'000;
    std::chrono::milliseconds time_limit{600'000};
    int threads = 0;      // 0: RAINBOW_FORGE_THREADS env var, else hardware concurrency
    int shard_depth = 7;  // parallel sharding on the first d edge decisions
};

// Resolved thread count for a budget (env var override, then hardware).
int resolve_threads(const SearchBudget& budget);

enum class Outcome { certified, exhausted_budget };

struct ExistsResult {
    enum class Verdict { yes, no, unknown };
    Verdict verdict;
    std::optional<EdgeColoring> witness;  // surjective, present iff verdict == yes
    long long nodes = 0;
    Outcome outcome = Outcome::certified;
};

// Is there an edge-coloring of K_n with exactly c colors and no rainbow
// k-packing of triangles?  Colorings are enumerated in lexicographic edge
// order as restricted-growth strings, so each partition into color classes
// is visited once.
ExistsResult exists_coloring_without_rainbow(int n, int k, long long c,
                                             const SearchBudget& budget = {});

struct ExactResult {
    std::optional<long long> value;  // present iff certified
    long long lower = 0;             // certified bounds in either case
    long long upper = 0;
    long long nodes = 0;
    bool certified = false;
};

// Descending search from C(n,2): merging two classes of a witness cannot
// create a rainbow copy, so the predicate is monotone and the first `yes`
// from above is the exact value.
ExactResult exact_anti_ramsey(int n, int k, const SearchBudget& budget = {});

enum class ConjectureVerdict { consistent, inconsistent, inconclusive };

struct ConjectureReport {
    ConjectureVerdict verdict;
    long long predicted = 0;  // the max-formula lower bound
    ExactResult exact;
};

ConjectureReport test_conjecture(int n, int k, const SearchBudget& budget = {});

const char* conjecture_verdict_name(ConjectureVerdict v);

// Enumeration self-test: with the rainbow pruning disabled, the search visits
// exactly the set partitions of the C(n,2) edge slots into c blocks, i.e. the
// Stirling number S(C(n,2), c).
unsigned long long count_partitions_rgs(int n, long long c);

}  // namespace rainbow_forge::oracle

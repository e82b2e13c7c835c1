#ifndef RAINBOW_FORGE_BOUNDS_HPP
#define RAINBOW_FORGE_BOUNDS_HPP

#include <optional>
#include <string>

namespace rainbow_forge::bounds {

long long binom2(long long x);  // C(x,2), 0 when x < 2

enum class Region { trivial, base, mid, stable };

std::string region_name(Region r);

/// Region of the (n, k) plane: trivial n < 3k, base n = 3k,
/// stable n >= 2k^2 - k + 2, mid in between.
Region classify(long long n, long long k);

/// Larger of the two extremal-construction color counts:
/// C(3k-1,2)+n-3k+1 (rainbow clique plus pendant colors) and
/// floor((n-k+2)^2/4)+(k-2)(n-k+2)+C(k-2,2)+1 (bipartite join plus one).
/// Requires k >= 2 and n >= 3k.
long long lower_bound(long long n, long long k);

// The two lower-bound expressions individually (used by tests and reports).
long long clique_construction_value(long long n, long long k);
long long join_construction_value(long long n, long long k);

/// Best proven upper bound. Mid region: the half-integral expression
/// floor'd (valid since the anti-Ramsey number is an integer); stable
/// region: the exact value. Requires k >= 2 and n >= 3k.
long long upper_bound(long long n, long long k);

/// Exact anti-Ramsey value where known: k=1 (n-1), n<3k (C(n,2)),
/// n=3k (C(3k-1,2)+1), stable region, or a closed mid-region sandwich.
std::optional<long long> exact_value(long long n, long long k);

/// The conjectured exact value (the lower-bound maximum), surfaced as
/// metadata only.
std::optional<long long> conjectured_value(long long n, long long k);

struct BoundsReport {
    long long n = 0;
    long long k = 0;
    Region region = Region::trivial;
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    std::optional<long long> conjectured;
    std::string lower_provenance;
    std::string upper_provenance;
    std::string exact_provenance;
};

/// Assembles region, bounds, exact-if-known and provenance tags.
/// Requires n >= 1 and k >= 1.
BoundsReport report(long long n, long long k);

std::string report_to_json(const BoundsReport& r);

}  // namespace rainbow_forge::bounds

#endif

#include "rainbow_forge/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace rainbow_forge::bounds {

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::string region_name(Region r) {
    switch (r) {
        case Region::trivial: return "trivial";
        case Region::base: return "base";
        case Region::mid: return "mid";
        case Region::stable: return "stable";
    }
    return "?";
}

Region classify(long long n, long long k) {
    if (n < 3 * k) return Region::trivial;
    if (n == 3 * k) return Region::base;
    if (n >= 2 * k * k - k + 2) return Region::stable;
    return Region::mid;
}

namespace {

void require_bound_domain(long long n, long long k) {
    if (k < 2) throw std::domain_error("bounds: requires k >= 2");
    if (n < 3 * k) throw std::domain_error("bounds: requires n >= 3k");
}

}  // namespace

long long clique_construction_value(long long n, long long k) {
    return binom2(3 * k - 1) + n - 3 * k + 1;
}

long long join_construction_value(long long n, long long k) {
    long long m = n - k + 2;
    return m * m / 4 + (k - 2) * m + binom2(k - 2) + 1;
}

long long lower_bound(long long n, long long k) {
    require_bound_domain(n, k);
    return std::max(clique_construction_value(n, k), join_construction_value(n, k));
}

long long upper_bound(long long n, long long k) {
    require_bound_domain(n, k);
    if (classify(n, k) == Region::stable) return join_construction_value(n, k);
    // Half-integral when n-3k is odd: evaluate in doubled units, then floor.
    long long doubled = 2 * (join_construction_value(n, k) + (k - 1) * (k - 1)) - (n - 3 * k);
    return doubled >= 0 ? doubled / 2 : (doubled - 1) / 2;
}

std::optional<long long> exact_value(long long n, long long k) {
    if (n < 1 || k < 1) throw std::domain_error("bounds: requires n >= 1 and k >= 1");
    if (k == 1) return n - 1;
    switch (classify(n, k)) {
        case Region::trivial: return binom2(n);
        case Region::base: return binom2(3 * k - 1) + 1;
        case Region::stable: return join_construction_value(n, k);
        case Region::mid: {
            long long lo = lower_bound(n, k), hi = upper_bound(n, k);
            if (lo == hi) return lo;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<long long> conjectured_value(long long n, long long k) {
    if (k < 2 || n < 3 * k) return std::nullopt;
    return lower_bound(n, k);
}

BoundsReport report(long long n, long long k) {
    if (n < 1 || k < 1) throw std::domain_error("bounds: requires n >= 1 and k >= 1");
    BoundsReport r;
    r.n = n;
    r.k = k;
    r.region = classify(n, k);
    if (k == 1) {
        r.lower = r.upper = n - 1;
        r.exact = n - 1;
        r.lower_provenance = r.upper_provenance = r.exact_provenance = "single-triangle";
        return r;
    }
    switch (r.region) {
        case Region::trivial:
            r.lower = r.upper = binom2(n);
            r.exact = binom2(n);
            r.lower_provenance = r.upper_provenance = r.exact_provenance = "too-few-vertices";
            break;
        case Region::base:
            r.lower = r.upper = binom2(3 * k - 1) + 1;
            r.exact = r.lower;
            r.lower_provenance = "clique-pendant-construction";
            r.upper_provenance = r.exact_provenance = "base-case-exact";
            break;
        case Region::mid:
            r.lower = lower_bound(n, k);
            r.upper = upper_bound(n, k);
            r.lower_provenance = clique_construction_value(n, k) >= join_construction_value(n, k)
                                     ? "clique-pendant-construction"
                                     : "bipartite-join-construction";
            r.upper_provenance = "midrange-upper-bound";
            if (r.lower == r.upper) {
                r.exact = r.lower;
                r.exact_provenance = "bound-sandwich";
            }
            break;
        case Region::stable:
            r.lower = lower_bound(n, k);
            r.upper = upper_bound(n, k);
            r.exact = join_construction_value(n, k);
            r.lower_provenance = "bipartite-join-construction";
            r.upper_provenance = r.exact_provenance = "stable-range-exact";
            break;
    }
    r.conjectured = conjectured_value(n, k);
    return r;
}

std::string report_to_json(const BoundsReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["region"] = region_name(r.region);
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    if (r.exact)
        j["exact"] = *r.exact;
    else
        j["exact"] = nullptr;
    if (r.conjectured)
        j["conjectured"] = *r.conjectured;
    else
        j["conjectured"] = nullptr;
    j["provenance"] = {{"lower", r.lower_provenance}, {"upper", r.upper_provenance}};
    if (r.exact_provenance.empty())
        j["provenance"]["exact"] = nullptr;
    else
        j["provenance"]["exact"] = r.exact_provenance;
    return j.dump();
}

}  // namespace rainbow_forge::bounds

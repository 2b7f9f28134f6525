#pragma once

#include <array>
#include <optional>
#include <string>

#include "spn/oracle.hpp"
#include "spn/vertex_set.hpp"

namespace spn {

/// The eight set varieties: mutual-visibility and general position, each in
/// plain, outer, dual, and total form. The variety fixes which vertex pairs
/// are tested and whether the pair predicate is existential (some geodesic
/// avoids X) or universal (every geodesic avoids X).
enum class Variant {
    mv,
    mv_outer,
    mv_dual,
    mv_total,
    gp,
    gp_outer,
    gp_dual,
    gp_total,
};

inline constexpr std::array<Variant, 8> all_variants = {
    Variant::mv,      Variant::mv_outer, Variant::mv_dual, Variant::mv_total,
    Variant::gp,      Variant::gp_outer, Variant::gp_dual, Variant::gp_total,
};

inline bool is_general_position(Variant v) {
    return v == Variant::gp || v == Variant::gp_outer || v == Variant::gp_dual ||
           v == Variant::gp_total;
}

/// mv for the mv family, gp for the gp family.
inline Variant base_variant(Variant v) {
    return is_general_position(v) ? Variant::gp : Variant::mv;
}

enum class PairFamily { inside, outer, dual, total };

inline PairFamily pair_family(Variant v) {
    switch (v) {
        case Variant::mv:
        case Variant::gp: return PairFamily::inside;
        case Variant::mv_outer:
        case Variant::gp_outer: return PairFamily::outer;
        case Variant::mv_dual:
        case Variant::gp_dual: return PairFamily::dual;
        default: return PairFamily::total;
    }
}

/// Variants whose sets stay valid under taking subsets. Outer and dual are
/// not hereditary: removing a vertex moves it to the complement side and can
/// add failing pairs.
inline bool is_hereditary(Variant v) {
    PairFamily f = pair_family(v);
    return f == PairFamily::inside || f == PairFamily::total;
}

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::mv: return "mv";
        case Variant::mv_outer: return "mv_outer";
        case Variant::mv_dual: return "mv_dual";
        case Variant::mv_total: return "mv_total";
        case Variant::gp: return "gp";
        case Variant::gp_outer: return "gp_outer";
        case Variant::gp_dual: return "gp_dual";
        default: return "gp_total";
    }
}

inline std::optional<Variant> variant_from_name(const std::string& name) {
    for (Variant v : all_variants)
        if (name == variant_name(v)) return v;
    return std::nullopt;
}

inline bool is_visible_pair(const GeodesicOracle& oracle, const VertexSet& x, VertexId u,
                            VertexId v) {
    return oracle.exists_geodesic_avoiding(u, v, x);
}

inline bool is_positionable_pair(const GeodesicOracle& oracle, const VertexSet& x, VertexId u,
                                 VertexId v) {
    return !oracle.some_blocker_on_any_geodesic(u, v, x);
}

inline bool pair_passes(const GeodesicOracle& oracle, Variant variant, const VertexSet& x,
                        VertexId u, VertexId v) {
    return is_general_position(variant) ? is_positionable_pair(oracle, x, u, v)
                                        : is_visible_pair(oracle, x, u, v);
}

namespace detail {

/// Visits the variant's pair family in lexicographic (min id, max id) order,
/// base pairs before the outer/dual extension. Stops when fn returns false.
template <class Fn>
bool for_each_family_pair(PairFamily family, const VertexSet& x, VertexId universe, Fn&& fn) {
    if (family == PairFamily::total) {
        for (VertexId u = 0; u < universe; ++u)
            for (VertexId v = u + 1; v < universe; ++v)
                if (!fn(u, v)) return false;
        return true;
    }
    auto inside = x.to_vector();
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            if (!fn(inside[i], inside[j])) return false;
    if (family == PairFamily::outer) {
        for (VertexId u = 0; u < universe; ++u)
            for (VertexId v = u + 1; v < universe; ++v)
                if (x.contains(u) != x.contains(v) && !fn(u, v)) return false;
    } else if (family == PairFamily::dual) {
        for (VertexId u = 0; u < universe; ++u) {
            if (x.contains(u)) continue;
            for (VertexId v = u + 1; v < universe; ++v)
                if (!x.contains(v) && !fn(u, v)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Definition-based check: every pair of the variant's family passes the
/// variant's pair predicate.
inline bool check_set_definition(const GeodesicOracle& oracle, Variant variant,
                                 const VertexSet& x) {
    return detail::for_each_family_pair(
        pair_family(variant), x, oracle.vertex_count(),
        [&](VertexId u, VertexId v) { return pair_passes(oracle, variant, x, u, v); });
}

/// Check with the theorem shortcuts: total mutual-visibility needs only the
/// pairs at distance two; total general position is X being simplicial;
/// dual general position is general position plus a convex complement.
inline bool check_set(const GeodesicOracle& oracle, Variant variant, const VertexSet& x) {
    const SierpinskiGraph& g = oracle.graph();
    switch (variant) {
        case Variant::mv_total: {
            const VertexId count = oracle.vertex_count();
            for (VertexId u = 0; u < count; ++u)
                for (VertexId v = u + 1; v < count; ++v)
                    if (oracle.dist(u, v) == 2 && !is_visible_pair(oracle, x, u, v))
                        return false;
            return true;
        }
        case Variant::gp_total:
            return x.is_subset_of(g.simplicial_vertices());
        case Variant::gp_dual:
            return check_set(oracle, Variant::gp, x) && oracle.is_convex(x.complement());
        default:
            return check_set_definition(oracle, variant, x);
    }
}

/// Evidence for one failing pair. For a general position failure the blocker
/// sits on some geodesic; for a visibility failure every geodesic carries a
/// blocker and one per geodesic is recorded.
struct Witness {
    VertexId u = 0;
    VertexId v = 0;
    bool positionability = false;
    std::vector<VertexId> blockers;
    std::vector<std::vector<VertexId>> blocked_geodesics;
};

/// First failing pair of the definition-based check in (min id, max id)
/// order, or nullopt when the set is valid.
inline std::optional<Witness> witness_failure(const GeodesicOracle& oracle, Variant variant,
                                              const VertexSet& x) {
    std::optional<Witness> witness;
    detail::for_each_family_pair(
        pair_family(variant), x, oracle.vertex_count(), [&](VertexId u, VertexId v) {
            if (pair_passes(oracle, variant, x, u, v)) return true;
            Witness w;
            w.u = u;
            w.v = v;
            w.positionability = is_general_position(variant);
            if (w.positionability) {
                x.for_each([&](VertexId b) {
                    if (b != u && b != v && oracle.on_some_geodesic(u, v, b))
                        w.blockers.push_back(b);
                });
            } else {
                for (const auto& path : oracle.enumerate_geodesics(u, v)) {
                    w.blocked_geodesics.push_back(path);
                    for (std::size_t i = 1; i + 1 < path.size(); ++i)
                        if (x.contains(path[i])) {
                            w.blockers.push_back(path[i]);
                            break;
                        }
                }
            }
            witness = std::move(w);
            return false;
        });
    return witness;
}

}  // namespace spn

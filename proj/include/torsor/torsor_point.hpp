#pragma once

#include "torsor/relations.hpp"

namespace torsor {

// Coordinates of a point of the affine cone over the torsor: the exceptional
// coordinates are 1 and every other coordinate is the realized section
// evaluated at a plane point q. Throws if q lies on one of the realized
// curves (a coordinate would vanish).
inline std::map<CurveLabel, ParamElement> torsor_point(
    const PointConfig& cfg, const std::array<ParamElement, 3>& q,
    const std::map<CurveLabel, PlanePoly>& sections) {
    std::map<CurveLabel, ParamElement> out;
    ParamElement one = ParamElement::constant(cfg.params, 1);
    std::span<const ParamElement> vals(q.data(), 3);
    for (const auto& [label, poly] : sections) {
        ParamElement v = label.kind == CurveKind::E ? one : poly.evaluate(vals, one);
        require_nondegenerate(!v.is_zero(), "sample point lies on the curve " + label.str());
        out[label] = v;
    }
    return out;
}

// Exact check that a coordinate vector satisfies an anchored relation.
inline bool relation_holds(const CoxRelation& rel, const Ruling& rl,
                           const std::map<CurveLabel, ParamElement>& point) {
    auto prod = [&](std::size_t i) {
        return point.at(rl.pairs[i].first) * point.at(rl.pairs[i].second);
    };
    ParamElement v = prod(rel.j_pair) + rel.alpha * prod(rel.anchor1) + rel.beta * prod(rel.anchor2);
    return v.is_zero();
}

} // namespace torsor

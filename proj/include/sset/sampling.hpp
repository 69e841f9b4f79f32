#pragma once

#include <random>
#include <vector>

#include "sset/core.hpp"
#include "sset/pro.hpp"

namespace sset::sample {

/// Small finite simplicial sets used as random building blocks.
std::vector<SSetPtr> finitePool();

SSetPtr randomFinite(std::mt19937& rng);
/// A uniformly chosen map a -> b; nullopt when there is none.
std::optional<SimplicialMap> randomMap(std::mt19937& rng, const SSetPtr& a, const SSetPtr& b);
/// Random finite source with a map into x.
SimplicialMap randomMapInto(std::mt19937& rng, const SSetPtr& x);

/// Tower of finite levels with `length` elements and random bonds.
ProPtr randomTower(std::mt19937& rng, int length);
/// Random tower of finite sets (degree 0 only).
ProPtr randomSetTower(std::mt19937& rng, int length);
/// A random pro-map between random towers of length <= maxLength.
ProMap randomProMap(std::mt19937& rng, int maxLength, bool setsOnly = false);
/// A monomorphism presented as a level map whose levels above the least one
/// are not injective (an extra vertex is glued in).
ProMap randomProMono(std::mt19937& rng, int maxLength);

}  // namespace sset::sample

#include "sset/sampling.hpp"

#include <functional>

#include "sset/builders.hpp"
#include "sset/lifting.hpp"
#include "sset/ops.hpp"

namespace sset::sample {

std::vector<SSetPtr> finitePool() {
  return {point(), discreteSet(2), delta(1), boundary(1), boundary(2), horn(2, 0), spine(2), delta(2)};
}

SSetPtr randomFinite(std::mt19937& rng) {
  static const auto pool = finitePool();
  return pool[rng() % pool.size()];
}

std::optional<SimplicialMap> randomMap(std::mt19937& rng, const SSetPtr& a, const SSetPtr& b) {
  auto maps = homSet(a, b);
  if (maps.empty()) return std::nullopt;
  return maps[rng() % maps.size()];
}

SimplicialMap randomMapInto(std::mt19937& rng, const SSetPtr& x) {
  for (;;) {
    if (auto f = randomMap(rng, randomFinite(rng), x)) return *f;
  }
}

namespace {

ProPtr towerFrom(std::mt19937& rng, int length, const std::function<SSetPtr()>& pick) {
  std::vector<SSetPtr> levels{pick()};
  std::vector<SimplicialMap> down;
  while (static_cast<int>(levels.size()) < length) {
    auto next = pick();
    if (auto b = randomMap(rng, next, levels.back())) {
      levels.push_back(next);
      down.push_back(*b);
    }
  }
  return towerPro(levels, down);
}

}  // namespace

ProPtr randomTower(std::mt19937& rng, int length) {
  return towerFrom(rng, length, [&] { return randomFinite(rng); });
}

ProPtr randomSetTower(std::mt19937& rng, int length) {
  return towerFrom(rng, length, [&] { return discreteSet(1 + static_cast<int>(rng() % 4)); });
}

ProMap randomProMap(std::mt19937& rng, int maxLength, bool setsOnly) {
  for (;;) {
    const int lc = 1 + static_cast<int>(rng() % maxLength), ld = 1 + static_cast<int>(rng() % maxLength);
    auto C = setsOnly ? randomSetTower(rng, lc) : randomTower(rng, lc);
    auto D = setsOnly ? randomSetTower(rng, ld) : randomTower(rng, ld);
    if (auto g = randomMap(rng, C->bottomLevel(), D->bottomLevel())) return ProMap::fromBottom(C, D, *g);
  }
}

ProMap randomProMono(std::mt19937& rng, int maxLength) {
  const int len = 1 + static_cast<int>(rng() % maxLength);
  auto D = randomTower(rng, len);
  const int bot = len - 1;
  auto sub = image(randomMapInto(rng, D->bottomLevel()));
  auto S = sub.object;
  if (len == 1) return ProMap::level(constantPro(S), D, {sub.inclusion});
  auto glued = coproduct({S, point()});
  std::vector<SSetPtr> levels(len, glued.object);
  levels[bot] = S;
  std::vector<SimplicialMap> down;
  for (int k = 1; k < len; ++k) down.push_back(k == bot ? glued.injections[0] : identity(glued.object));
  auto C = towerPro(levels, down);
  std::vector<int> extra(len);
  extra[bot - 1] = static_cast<int>(rng() % D->level(bot - 1)->size(0));
  for (int k = bot - 1; k > 0; --k) extra[k - 1] = D->bond(k, k - 1)(0, extra[k]);
  std::vector<SimplicialMap> comps(len);
  comps[bot] = sub.inclusion;
  for (int k = 0; k < bot; ++k) {
    auto onS = compose(D->bond(bot, k), sub.inclusion);
    comps[k] = copairing(glued, {onS, constantMap(point(), D->level(k), extra[k])}, D->level(k));
  }
  return ProMap::level(C, D, std::move(comps));
}

}  // namespace sset::sample

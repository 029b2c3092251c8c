#include "degmc/instance.hpp"

#include <numeric>

namespace degmc {

std::vector<int> BipartiteInstance::degrees() const {
  std::vector<int> out = r;
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool PamInstance::jdm() const {
  for (int v = 1; v < order(); ++v)
    if (cls(v) == cls(v - 1) && d[v] != d[v - 1]) return false;
  return true;
}

void validate(const DegreeInstance& inst) {
  for (int x : inst.d)
    if (x < 1) throw Error(ErrorKind::Input, "degree sequence components must be positive");
}

void validate(const BipartiteInstance& inst) {
  for (int x : inst.r)
    if (x < 0) throw Error(ErrorKind::Input, "negative degree");
  for (int x : inst.c)
    if (x < 0) throw Error(ErrorKind::Input, "negative degree");
  if (std::accumulate(inst.r.begin(), inst.r.end(), 0L) != std::accumulate(inst.c.begin(), inst.c.end(), 0L))
    throw Error(ErrorKind::Input, "side degree sums differ");
}

void validate(const PamInstance& inst) {
  if (inst.n1 < 1 || inst.n2 < 1) throw Error(ErrorKind::Input, "both classes must be non-empty");
  if (static_cast<int>(inst.d.size()) != inst.order())
    throw Error(ErrorKind::Input, "degree list length does not match class sizes");
  for (int x : inst.d)
    if (x < 0) throw Error(ErrorKind::Input, "negative degree");
  if (inst.c11 < 0 || inst.c12 < 0 || inst.c22 < 0) throw Error(ErrorKind::Input, "negative matrix entry");
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  for (int v = 0; v < inst.order(); ++v) (inst.cls(v) == 0 ? s1 : s2) += inst.d[v];
  if (s1 != 2 * inst.c11 + inst.c12 || s2 != 2 * inst.c22 + inst.c12)
    throw Error(ErrorKind::Input, "degree sums violate class conservation");
  const std::int64_t full = static_cast<std::int64_t>(inst.n1) * inst.n2;
  if (inst.c12 < 1 || inst.c12 > full - 1)
    throw Error(ErrorKind::Input, "cut count must lie in [1, |V1||V2|-1]");
}

void validate(const Instance& inst) {
  std::visit([](const auto& x) { validate(x); }, inst);
}

int order(const Instance& inst) {
  return std::visit([](const auto& x) { return x.order(); }, inst);
}

std::vector<int> target_degrees(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> std::vector<int> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BipartiteInstance>) {
          return x.degrees();
        } else {
          return x.d;
        }
      },
      inst);
}

}  // namespace degmc

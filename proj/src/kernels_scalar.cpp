#include <bit>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

namespace {

std::uint64_t gains_scalar(const std::uint64_t* closed, int n, std::uint64_t dominated,
                           std::uint64_t* gain, std::uint8_t* count) {
  std::uint64_t legal = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t g = closed[i] & ~dominated;
    gain[i] = g;
    count[i] = static_cast<std::uint8_t>(std::popcount(g));
    legal |= static_cast<std::uint64_t>(g != 0) << i;
  }
  return legal;
}

Relation relate_scalar(const std::uint64_t* sets, int count, std::uint64_t probe) {
  Relation r;
  for (int i = 0; i < count && i < 64; ++i) {
    r.subset |= static_cast<std::uint64_t>((sets[i] & ~probe) == 0) << i;
    r.superset |= static_cast<std::uint64_t>((probe & ~sets[i]) == 0) << i;
  }
  return r;
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, &gains_scalar, &relate_scalar};
  return table;
}

}  // namespace domgame::kernels

#pragma once

// Word-parallel move kernels used in the inner loop of the game search.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant that processes four closed neighborhoods per instruction. The
// variant is picked once at startup from CPUID; tests pin each table
// explicitly and check them against each other.

#include <cstdint>
#include <span>

namespace domgame::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

/// subset bit i set iff sets[i] is a subset of probe; superset bit i set iff
/// sets[i] contains probe. Only the first 64 sets are considered.
struct Relation {
  std::uint64_t subset = 0;
  std::uint64_t superset = 0;
};

struct KernelTable {
  Isa isa;
  /// gain[i] = closed[i] & ~dominated; count[i] = popcount(gain[i]).
  /// Returns the mask of indices with a nonzero gain.
  std::uint64_t (*gains)(const std::uint64_t* closed, int n, std::uint64_t dominated,
                         std::uint64_t* gain, std::uint8_t* count);
  Relation (*relate)(const std::uint64_t* sets, int count, std::uint64_t probe);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

/// The table selected for this process (best supported ISA unless
/// DOMGAME_FORCE_SCALAR is set in the environment).
const KernelTable& active();

}  // namespace domgame::kernels

#include <bit>
#include <cstdlib>

#include "domgame/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define DOMGAME_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace domgame::kernels {

#ifdef DOMGAME_HAVE_AVX2_KERNELS

namespace {

#define DOMGAME_AVX2 __attribute__((target("avx2")))

// Per-lane popcount of four 64-bit words (nibble lookup, then SAD).
DOMGAME_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

DOMGAME_AVX2 inline std::uint64_t zero_lanes(__m256i v) {
  const __m256i eq = _mm256_cmpeq_epi64(v, _mm256_setzero_si256());
  return static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
}

DOMGAME_AVX2 std::uint64_t gains_avx2(const std::uint64_t* closed, int n, std::uint64_t dominated,
                                      std::uint64_t* gain, std::uint8_t* count) {
  const __m256i dom = _mm256_set1_epi64x(static_cast<long long>(dominated));
  std::uint64_t legal = 0;
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i nb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(closed + i));
    const __m256i g = _mm256_andnot_si256(dom, nb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(gain + i), g);
    alignas(32) std::uint64_t c[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(c), popcount_epi64(g));
    for (int k = 0; k < 4; ++k) count[i + k] = static_cast<std::uint8_t>(c[k]);
    legal |= (~zero_lanes(g) & 0xfu) << i;
  }
  for (; i < n; ++i) {
    const std::uint64_t g = closed[i] & ~dominated;
    gain[i] = g;
    count[i] = static_cast<std::uint8_t>(std::popcount(g));
    legal |= static_cast<std::uint64_t>(g != 0) << i;
  }
  return legal;
}

DOMGAME_AVX2 Relation relate_avx2(const std::uint64_t* sets, int count, std::uint64_t probe) {
  if (count > 64) count = 64;
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(probe));
  Relation r;
  int i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
    r.subset |= zero_lanes(_mm256_andnot_si256(p, s)) << i;
    r.superset |= zero_lanes(_mm256_andnot_si256(s, p)) << i;
  }
  for (; i < count; ++i) {
    r.subset |= static_cast<std::uint64_t>((sets[i] & ~probe) == 0) << i;
    r.superset |= static_cast<std::uint64_t>((probe & ~sets[i]) == 0) << i;
  }
  return r;
}

#undef DOMGAME_AVX2

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::Avx2, &gains_avx2, &relate_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (std::getenv("DOMGAME_FORCE_SCALAR") == nullptr)
      if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace domgame::kernels

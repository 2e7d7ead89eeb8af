#include <doctest.h>

#include <bit>
#include <random>

#include "domgame/kernels.hpp"

using namespace domgame::kernels;

namespace {

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (avx2_table()) out.push_back(avx2_table());
  return out;
}

}  // namespace

TEST_CASE("active table is one of the built tables") {
  const KernelTable& a = active();
  CHECK((&a == &scalar_table() || &a == avx2_table()));
  MESSAGE("active kernels: " << to_string(a.isa));
}

TEST_CASE("gains kernel matches the definition") {
  std::mt19937_64 rng(11);
  for (const KernelTable* t : tables()) {
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = static_cast<int>(rng() % 65);
      std::vector<std::uint64_t> closed(n);
      for (auto& w : closed) w = rng() & rng();
      const std::uint64_t dominated = rng() | rng();
      std::vector<std::uint64_t> gain(64, 0xdead);
      std::vector<std::uint8_t> count(64, 0xff);
      const std::uint64_t legal = t->gains(closed.data(), n, dominated, gain.data(), count.data());
      std::uint64_t want_legal = 0;
      for (int i = 0; i < n; ++i) {
        const std::uint64_t g = closed[i] & ~dominated;
        REQUIRE(gain[i] == g);
        REQUIRE(count[i] == std::popcount(g));
        if (g) want_legal |= std::uint64_t{1} << i;
      }
      REQUIRE(legal == want_legal);
    }
  }
}

TEST_CASE("relate kernel matches the definition") {
  std::mt19937_64 rng(12);
  for (const KernelTable* t : tables()) {
    for (int trial = 0; trial < 2000; ++trial) {
      const int count = static_cast<int>(rng() % 65);
      std::vector<std::uint64_t> sets(count);
      const std::uint64_t probe = rng() & rng();
      for (auto& s : sets) {
        switch (rng() % 4) {
          case 0: s = probe & rng(); break;
          case 1: s = probe | (rng() & rng()); break;
          case 2: s = probe; break;
          default: s = rng() & rng(); break;
        }
      }
      const Relation r = t->relate(sets.data(), count, probe);
      for (int i = 0; i < count; ++i) {
        REQUIRE(((r.subset >> i) & 1) == ((sets[i] & ~probe) == 0));
        REQUIRE(((r.superset >> i) & 1) == ((probe & ~sets[i]) == 0));
      }
      if (count < 64) {
        CHECK((r.subset >> count) == 0);
        CHECK((r.superset >> count) == 0);
      }
    }
  }
}

TEST_CASE("scalar and avx2 tables agree") {
  if (!avx2_table()) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    std::vector<std::uint64_t> closed(n);
    for (auto& w : closed) w = rng() & rng();
    const std::uint64_t dominated = rng() & rng();
    std::vector<std::uint64_t> g1(64, 0), g2(64, 0);
    std::vector<std::uint8_t> c1(64, 0), c2(64, 0);
    const auto l1 = scalar_table().gains(closed.data(), n, dominated, g1.data(), c1.data());
    const auto l2 = avx2_table()->gains(closed.data(), n, dominated, g2.data(), c2.data());
    REQUIRE(l1 == l2);
    for (int i = 0; i < n; ++i) {
      REQUIRE(g1[i] == g2[i]);
      REQUIRE(c1[i] == c2[i]);
    }
    const std::uint64_t probe = n ? g1[rng() % n] : rng();
    const Relation a = scalar_table().relate(g1.data(), n, probe);
    const Relation b = avx2_table()->relate(g1.data(), n, probe);
    REQUIRE(a.subset == b.subset);
    REQUIRE(a.superset == b.superset);
  }
}

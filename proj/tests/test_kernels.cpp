#include "doctest.h"

#include <limits>
#include <random>
#include <vector>

#include "partsat/kernels.hpp"

using namespace partsat;

namespace {

struct Input {
  std::vector<std::int32_t> a, b;
  std::vector<std::int8_t> sign;
};

Input random_input(std::mt19937_64& rng, std::size_t n, bool extreme_values) {
  Input in;
  in.a.resize(n);
  in.b.resize(n);
  in.sign.resize(n);
  std::uniform_int_distribution<std::int32_t> dist(
      extreme_values ? std::numeric_limits<std::int32_t>::min() : 0,
      extreme_values ? std::numeric_limits<std::int32_t>::max() : 1000000);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    in.a[i] = dist(rng);
    in.b[i] = dist(rng);
    in.sign[i] = coin(rng) ? 1 : -1;
  }
  return in;
}

} // namespace

TEST_CASE("all backends agree") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 17u, 64u, 1000u}) {
    for (bool extreme : {false, true}) {
      Input in = random_input(rng, n, extreme);
      std::uint64_t ref_min = kernels::scalar::sum_min(in.a.data(), in.b.data(), n);
      std::uint64_t ref_max = kernels::scalar::sum_max(in.a.data(), in.b.data(), n);
      std::uint64_t ref_abs = kernels::scalar::sum_absdiff(in.a.data(), in.b.data(), n);
      std::uint64_t ref_sel =
          kernels::scalar::select_sum(in.a.data(), in.b.data(), in.sign.data(), n);

      CHECK(kernels::sum_min(in.a.data(), in.b.data(), n) == ref_min);
      CHECK(kernels::sum_max(in.a.data(), in.b.data(), n) == ref_max);
      CHECK(kernels::sum_absdiff(in.a.data(), in.b.data(), n) == ref_abs);
      CHECK(kernels::select_sum(in.a.data(), in.b.data(), in.sign.data(), n) == ref_sel);

#ifdef PARTSAT_HAVE_AVX2_KERNELS
      if (kernels::avx2_supported()) {
        CHECK(kernels::avx2::sum_min(in.a.data(), in.b.data(), n) == ref_min);
        CHECK(kernels::avx2::sum_max(in.a.data(), in.b.data(), n) == ref_max);
        CHECK(kernels::avx2::sum_absdiff(in.a.data(), in.b.data(), n) == ref_abs);
        CHECK(kernels::avx2::select_sum(in.a.data(), in.b.data(), in.sign.data(), n) ==
              ref_sel);
      }
#endif
    }
  }
}

TEST_CASE("reduction identities") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    Input in = random_input(rng, 253, false);
    std::size_t n = in.a.size();
    std::uint64_t lo = kernels::sum_min(in.a.data(), in.b.data(), n);
    std::uint64_t hi = kernels::sum_max(in.a.data(), in.b.data(), n);
    std::uint64_t spread = kernels::sum_absdiff(in.a.data(), in.b.data(), n);
    // min + |a-b| = max elementwise
    CHECK(lo + spread == hi);
    std::uint64_t both = 0;
    for (std::size_t i = 0; i < n; ++i)
      both += static_cast<std::uint64_t>(in.a[i]) + static_cast<std::uint64_t>(in.b[i]);
    CHECK(lo + hi == both);
    // select_sum is bracketed by the extremes
    std::uint64_t sel = kernels::select_sum(in.a.data(), in.b.data(), in.sign.data(), n);
    CHECK(lo <= sel);
    CHECK(sel <= hi);
  }
}

TEST_CASE("backend is reported") {
  const char* name = kernels::active_backend();
  CHECK((std::string(name) == "avx2" || std::string(name) == "scalar"));
}

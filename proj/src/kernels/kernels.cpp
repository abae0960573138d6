#include "partsat/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace partsat::kernels {

namespace scalar {

std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<std::uint64_t>(std::min(a[i], b[i]));
  return acc;
}

std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<std::uint64_t>(std::max(a[i], b[i]));
  return acc;
}

std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    acc += static_cast<std::uint64_t>(d < 0 ? -d : d);
  }
  return acc;
}

std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<std::uint64_t>(sign[i] > 0 ? a[i] : b[i]);
  return acc;
}

} // namespace scalar

namespace {

struct Backend {
  std::uint64_t (*sum_min)(const std::int32_t*, const std::int32_t*, std::size_t);
  std::uint64_t (*sum_max)(const std::int32_t*, const std::int32_t*, std::size_t);
  std::uint64_t (*sum_absdiff)(const std::int32_t*, const std::int32_t*, std::size_t);
  std::uint64_t (*select_sum)(const std::int32_t*, const std::int32_t*,
                              const std::int8_t*, std::size_t);
  const char* name;
};

constexpr Backend kScalar = {&scalar::sum_min, &scalar::sum_max,
                             &scalar::sum_absdiff, &scalar::select_sum, "scalar"};

#ifdef PARTSAT_HAVE_AVX2_KERNELS
constexpr Backend kAvx2 = {&avx2::sum_min, &avx2::sum_max,
                           &avx2::sum_absdiff, &avx2::select_sum, "avx2"};
#endif

const Backend& pick_backend() {
  static const Backend backend = [] {
    const char* force = std::getenv("PARTSAT_SIMD");
    if (force != nullptr && std::strcmp(force, "scalar") == 0)
      return kScalar;
#ifdef PARTSAT_HAVE_AVX2_KERNELS
    if (avx2_supported())
      return kAvx2;
#endif
    return kScalar;
  }();
  return backend;
}

} // namespace

#ifdef PARTSAT_HAVE_AVX2_KERNELS
bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }
#endif

std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return pick_backend().sum_min(a, b, n);
}

std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return pick_backend().sum_max(a, b, n);
}

std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return pick_backend().sum_absdiff(a, b, n);
}

std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n) {
  return pick_backend().select_sum(a, b, sign, n);
}

const char* active_backend() { return pick_backend().name; }

} // namespace partsat::kernels

#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel reductions over per-variable occurrence counts. The
// dispatched entry points pick the best backend for the running CPU once at
// startup; set PARTSAT_SIMD=scalar in the environment to force the scalar
// reference kernels. Every backend computes bit-identical results.

namespace partsat::kernels {

/// sum_i min(a[i], b[i])
std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n);
/// sum_i max(a[i], b[i])
std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n);
/// sum_i |a[i] - b[i]|
std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n);
/// sum_i (sign[i] > 0 ? a[i] : b[i]), sign entries are +1/-1
std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n);

/// Backend used by the dispatched entry points: "avx2" or "scalar".
const char* active_backend();

namespace scalar {
std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PARTSAT_HAVE_AVX2_KERNELS 1

/// True when the running CPU supports AVX2.
bool avx2_supported();

namespace avx2 {
std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n);
} // namespace avx2
#endif

} // namespace partsat::kernels

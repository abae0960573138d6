#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "partsat/formula.hpp"

namespace partsat {

/// Names accepted by fixture().
std::vector<std::string_view> fixture_names();

/// Built-in reference instances: example6, F1, F2, F3, lopsided5x4,
/// two_two_four_a, two_two_four_b. Throws std::invalid_argument on an
/// unknown name.
Formula fixture(std::string_view name);

/// Square completely mixed exact READ-3 instance: n clauses of width 3 over
/// n variables, every variable with degree 3 split 2/1 or 1/2 between the
/// polarities. Built with a configuration model (random stub matching,
/// rejection of clauses with repeated variables). Requires n >= 4.
/// Deterministic in (n, seed).
Formula gen_square_mixed_read3(std::int32_t n, std::uint64_t seed);

/// m clauses of exactly k distinct variables each, polarities uniform.
Formula gen_random_cnf(std::int64_t m, std::int32_t n, std::int32_t k,
                       std::uint64_t seed);

/// m clauses with widths uniform in 1..k_max, obeying a per-variable degree
/// cap p_max. Throws GenerationError when the caps make the draw infeasible
/// within the retry bound.
Formula gen_random_class(std::int64_t m, std::int32_t n, std::int32_t k_max,
                         std::int32_t p_max, std::uint64_t seed);

} // namespace partsat

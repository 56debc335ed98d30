#pragma once

// Map samples over [U]^k with the interlaced graph metric as source, for the
// embeddings this library knows about.

#include <cstddef>
#include <span>

#include "jamesgeo/james_tree.hpp"
#include "jamesgeo/moduli.hpp"

namespace jamesgeo {

/// n -> sum_i s_{n_i} in c_0 with the sup norm.
MapSample summing_sample(std::size_t k, std::span<const int> universe);

/// n -> g_sigma^k(n) in JT; target distances by the exact spider solver.
MapSample g_sample(const Branch& sigma, std::size_t k, std::span<const int> universe);

/// Every point to the same image.
MapSample constant_sample(std::size_t k, std::span<const int> universe);

/// ||f_k(n) - f_k(m)||_inf for the summing embedding.
double summing_distance(const InterlacedTuple& n, const InterlacedTuple& m);

}  // namespace jamesgeo

#pragma once

#include <cstddef>

#include "tsboot/chunks.hpp"
#include "tsboot/rng.hpp"

namespace tsboot {

/**
 * Layout of one circular block bootstrap draw: b = ceil(n_rows_out / ell)
 * blocks of ell consecutive circular chunks, concatenated and truncated at
 * the tail to exactly n_rows_out rows.
 */
struct CbbPlan {
  std::size_t ell = 1;                // block length
  std::size_t n_chunks_available = 0; // t, the circular chunk count
  std::size_t n_rows_out = 0;         // target resample rows
  std::size_t b = 0;                  // number of blocks

  static CbbPlan make(std::size_t ell, std::size_t n_chunks_available, std::size_t n_rows_out);
};

/**
 * Draw one circular block bootstrap resample: b block start indices uniform
 * on {1..t} (independent, with replacement), each block contributing ell
 * consecutive circular chunk rows, truncated to plan.n_rows_out rows.
 * Consumes exactly plan.b uniform draws from rng.
 */
ChunkMatrix cbb_resample(const ChunkMatrix& circular_chunks, const CbbPlan& plan, RngStream& rng);

}  // namespace tsboot

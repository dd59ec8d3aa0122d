#include "tsboot/cbb.hpp"

#include "tsboot/errors.hpp"

namespace tsboot {

CbbPlan CbbPlan::make(std::size_t ell, std::size_t n_chunks_available, std::size_t n_rows_out) {
  if (ell < 1) throw InputError("CbbPlan: block length must be at least 1");
  if (n_rows_out < 1) throw InputError("CbbPlan: resample row count must be at least 1");
  if (n_chunks_available < 1) throw InputError("CbbPlan: no chunks available");
  CbbPlan plan;
  plan.ell = ell;
  plan.n_chunks_available = n_chunks_available;
  plan.n_rows_out = n_rows_out;
  plan.b = (n_rows_out + ell - 1) / ell;
  return plan;
}

ChunkMatrix cbb_resample(const ChunkMatrix& circular_chunks, const CbbPlan& plan, RngStream& rng) {
  if (circular_chunks.mode() != EmbedMode::circular) {
    throw InputError("cbb_resample: chunks must be a circular embedding");
  }
  const std::size_t t = plan.n_chunks_available;
  if (circular_chunks.rows() != t) {
    throw InputError("cbb_resample: plan does not match the chunk matrix");
  }

  // Circular embeddings have starts 0..t-1, so chunk index == series start.
  std::vector<std::size_t> picked;
  picked.reserve(plan.n_rows_out);
  for (std::size_t j = 0; j < plan.b; ++j) {
    const std::size_t s = rng.uniform_below(t);
    for (std::size_t o = 0; o < plan.ell && picked.size() < plan.n_rows_out; ++o) {
      std::size_t k = s + o;
      while (k >= t) k -= t;
      picked.push_back(k);
    }
  }
  return circular_chunks.take_rows(picked);
}

}  // namespace tsboot

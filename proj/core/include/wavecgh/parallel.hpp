#pragma once

#include <cstddef>
#include <functional>

#include "wavecgh/field.hpp"

namespace wavecgh {

int default_worker_count();

// Runs fn(i) for every i in [begin, end) on up to `workers` threads using a
// static contiguous partition. Iterations must be independent.
void parallel_for(int begin, int end, int workers, const std::function<void(int)>& fn);

// Sums per-item contributions into `plane` with a reduction order that is a
// function of item_count alone. Items are grouped into contiguous chunks;
// each chunk is accumulated sequentially into a scratch plane and the chunk
// planes are merged into `plane` in chunk order. Workers only decide which
// chunks are computed concurrently, never the order of any floating-point
// addition, so the result is bitwise identical for every worker count.
void accumulate_deterministic(
    ComplexField& plane, std::size_t item_count, int workers,
    const std::function<void(std::size_t item, ComplexField& partial)>& apply_item);

}  // namespace wavecgh

#include "wavecgh/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "wavecgh/errors.hpp"

namespace wavecgh {

namespace {

constexpr int kMaxWorkers = 64;
constexpr std::size_t kMaxChunks = 64;

int clamp_workers(int workers) {
  if (workers <= 0) return default_worker_count();
  return std::min(workers, kMaxWorkers);
}

}  // namespace

int default_worker_count() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(std::min(hc, unsigned(kMaxWorkers)));
}

void parallel_for(int begin, int end, int workers, const std::function<void(int)>& fn) {
  if (end <= begin) return;
  workers = clamp_workers(workers);
  const int count = end - begin;
  workers = std::min(workers, count);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + int(std::size_t(count) * w / workers);
    const int hi = begin + int(std::size_t(count) * (w + 1) / workers);
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

void accumulate_deterministic(
    ComplexField& plane, std::size_t item_count, int workers,
    const std::function<void(std::size_t, ComplexField&)>& apply_item) {
  if (item_count == 0) return;
  workers = clamp_workers(workers);

  // Chunk boundaries depend only on the item count.
  const std::size_t chunk_count = std::min(item_count, kMaxChunks);
  const std::size_t chunk_size = (item_count + chunk_count - 1) / chunk_count;
  workers = int(std::min<std::size_t>(workers, chunk_count));

  auto run_chunk = [&](std::size_t chunk, ComplexField& partial) {
    partial.fill_zero();
    const std::size_t lo = chunk * chunk_size;
    const std::size_t hi = std::min(lo + chunk_size, item_count);
    for (std::size_t i = lo; i < hi; ++i) apply_item(i, partial);
  };

  auto merge = [&](const ComplexField& partial) {
    auto& dst = plane.data();
    const auto& src = partial.data();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  };

  if (workers == 1) {
    ComplexField partial(plane.width(), plane.height());
    for (std::size_t chunk = 0; chunk * chunk_size < item_count; ++chunk) {
      run_chunk(chunk, partial);
      merge(partial);
    }
    return;
  }

  std::vector<ComplexField> partials;
  partials.reserve(workers);
  for (int w = 0; w < workers; ++w) partials.emplace_back(plane.width(), plane.height());

  const std::size_t effective_chunks = (item_count + chunk_size - 1) / chunk_size;
  for (std::size_t batch = 0; batch < effective_chunks; batch += workers) {
    const std::size_t in_batch = std::min<std::size_t>(workers, effective_chunks - batch);
    std::vector<std::thread> pool;
    pool.reserve(in_batch);
    for (std::size_t w = 0; w < in_batch; ++w) {
      pool.emplace_back([&, w] { run_chunk(batch + w, partials[w]); });
    }
    for (auto& t : pool) t.join();
    // Merge in chunk order regardless of which worker computed what.
    for (std::size_t w = 0; w < in_batch; ++w) merge(partials[w]);
  }
}

}  // namespace wavecgh

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <vector>

namespace motifcount {

// 0 means "all hardware threads".
unsigned resolve_threads(unsigned requested);

// Runs worker(w) for w in [0, threads) and joins. threads == 1 runs inline.
void run_workers(unsigned threads, const std::function<void(unsigned)>& worker);

// Splits [0, n) into dynamically claimed chunks. Each worker owns one scratch
// object from make() and one Result; body(scratch, begin, end, result) adds
// its contribution. Partial results are summed in worker order, so integer
// results do not depend on the schedule.
template <class Result, class Make, class Body>
Result parallel_reduce(std::size_t n, unsigned threads, Make make, Body body, std::size_t chunk = 256) {
  threads = resolve_threads(threads);
  if (threads > 1 && n < 2 * chunk) threads = 1;
  std::vector<Result> partial(threads);
  std::atomic<std::size_t> next{0};
  run_workers(threads, [&](unsigned w) {
    auto scratch = make();
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) break;
      body(scratch, begin, std::min(n, begin + chunk), partial[w]);
    }
  });
  Result total{};
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace motifcount

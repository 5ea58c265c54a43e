#ifndef OSCINT_PARALLEL_HPP
#define OSCINT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace oscint {

// Concurrency cap: OSCINT_THREADS when set (clamped to [1, 64]), otherwise
// hardware concurrency clamped to 8.
int thread_cap();

// Runs fn(i) for i in [0, n). Work items must be independent; callers that
// need determinism write to distinct slots and reduce in index order
// afterwards, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace oscint

#endif

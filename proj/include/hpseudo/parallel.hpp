#pragma once

#include <functional>

namespace hp {

void set_threads(int n);
int threads();
// Runs fn(i) for i in [0, n); results must be written to per-index slots.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace hp

#pragma once

// Global-new instrumentation for the no-allocation iteration checks.
// The replacement operators live in test_main.cpp.

#include <cstddef>

extern bool g_count_allocations;
extern std::size_t g_allocation_count;

struct AllocationCounterScope {
  AllocationCounterScope() {
    g_allocation_count = 0;
    g_count_allocations = true;
  }
  ~AllocationCounterScope() { g_count_allocations = false; }
  std::size_t count() const { return g_allocation_count; }
};

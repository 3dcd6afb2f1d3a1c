#include "skein/caps.hpp"

#include <atomic>

namespace skein::caps {

namespace {
std::atomic<std::size_t> g_term_cap{1000000};
std::atomic<std::size_t> g_depth_cap{10000};
}  // namespace

std::size_t term_cap() { return g_term_cap.load(std::memory_order_relaxed); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap, std::memory_order_relaxed); }

std::size_t depth_cap() { return g_depth_cap.load(std::memory_order_relaxed); }
void set_depth_cap(std::size_t cap) { g_depth_cap.store(cap, std::memory_order_relaxed); }

}  // namespace skein::caps

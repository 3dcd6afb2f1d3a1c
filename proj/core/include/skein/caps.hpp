#pragma once

#include <cstddef>

namespace skein {

// Global safety limits. Lemma sweeps can explode combinatorially; both caps
// fail loudly (TermCapExceeded / DepthCapExceeded) instead of truncating.
namespace caps {

// Maximum number of stored terms in a single AlgebraElement.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

// Maximum number of rewrite steps per reduction call.
std::size_t depth_cap();
void set_depth_cap(std::size_t cap);

}  // namespace caps
}  // namespace skein

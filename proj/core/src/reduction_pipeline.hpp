#pragma once

// Internal worklist driving gap regularization and tail elimination. Shared by
// gaps.cpp and tails.cpp; not installed.

#include <vector>

#include "skein/caps.hpp"
#include "skein/convert.hpp"
#include "skein/order.hpp"
#include "skein/rewrite_trace.hpp"

namespace skein::detail {

class Pipeline {
 public:
  // gaps_only: stop once every loop monomial is gap-free (braid tails remain,
  // strand counts are kept so the branches stay summable).
  Pipeline(AlgebraElement input, bool canonical, bool gaps_only)
      : canonical_(canonical), gaps_only_(gaps_only) {
    trace_.input = input;
    branches_.push_back({CoeffPoly(1), std::move(input)});
    done_.push_back(false);
  }

  void run();

  const RewriteTrace& trace() const { return trace_; }
  const std::vector<TraceBranch>& branches() const { return branches_; }
  RewriteTrace take_trace() { return std::move(trace_); }

  ModuleElement module_result() const { return branches_to_module(branches_); }

  // Sum of the branches as a single element (gaps_only mode: all branches stay
  // on the input strand count and the weights never leave Z[q^{±1}]).
  AlgebraElement algebra_result() const;

 private:
  void emit(TraceStep step);
  bool step_branch(int b);  // one move; false when the branch is finished
  void gap_move(int b, const LoopMonomial& tau);
  void case_top_braid(int b, const Permutation& w);  // loops below the top letter
  void case_top_loop(int b, const LoopMonomial& tau, const Permutation& w);
  void canonicalize(int b, const LoopMonomial& tau);

  RewriteTrace trace_;
  std::vector<TraceBranch> branches_;
  std::vector<char> done_;
  // Rewrite steps taken along each branch lineage (children inherit the
  // parent's count); the depth cap applies per term, not per call.
  std::vector<std::size_t> branch_steps_{0};
  bool canonical_;
  bool gaps_only_;
};

}  // namespace skein::detail

#pragma once

#include <string>
#include <vector>

#include "skein/algebra_element.hpp"
#include "skein/engine.hpp"
#include "skein/module_element.hpp"
#include "skein/word.hpp"

namespace skein {

// A replayable witness for computations up to conjugation and stabilization.
// The state is a list of weighted branches; the quantity
//     sum_b weight_b * [elem_b]
// is invariant (in the skein module) under every step. Steps address a branch:
//
//   ExactRewrite  branch := parts (replay checks sum(parts) equals the branch
//                 element exactly in the algebra; a one-part step with a bare
//                 coefficient factors scalars into the branch weight)
//   Conjugate     elem := normal_form(u * elem * u^{-1})
//   Stabilize     elem = a * g_{n-1}^{±1} becomes a on n-1 strands; the branch
//                 weight picks up z (sign +) or q^{-1}z + q^{-1}-1 (sign -)
//   ClosurePermute swaps the exponents of adjacent loop indices of a braid-free
//                 monomial (equal closures)
//   Resize        re-embeds the element on a different strand count (exact)
struct TracePart {
  LaurentPoly coeff;
  AlgebraElement elem{1};
};

struct TraceStep {
  enum class Kind { ExactRewrite, Conjugate, Stabilize, ClosurePermute, Resize };

  Kind kind = Kind::ExactRewrite;
  int branch = 0;
  std::vector<TracePart> parts;  // ExactRewrite
  Word conjugate_by;             // Conjugate
  int stab_sign = 0;             // Stabilize
  int permute_index = -1;        // ClosurePermute
  int resize_n = 0;              // Resize
  // Element state of the affected branch after the step (parts carry their own
  // states for ExactRewrite).
  AlgebraElement after{1};
};

struct RewriteTrace {
  AlgebraElement input{1};
  std::vector<TraceStep> steps;
};

struct TraceBranch {
  CoeffPoly weight;
  AlgebraElement elem{1};
};

// Applies one step. With verify=true every soundness condition is checked and
// a failure is reported through `error` (returning false); with verify=false
// the step is trusted and applied as recorded.
bool apply_step(std::vector<TraceBranch>& branches, const TraceStep& step,
                bool verify, std::string* error);

struct ReplayReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<TraceBranch> final_branches;
};

// Replays a trace from its input, verifying every step.
ReplayReport replay(const RewriteTrace& trace);

// Collapses finished branches (single braid-free terms) into a ModuleElement.
ModuleElement branches_to_module(const std::vector<TraceBranch>& branches);

}  // namespace skein

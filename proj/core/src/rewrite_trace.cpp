#include "skein/rewrite_trace.hpp"

#include <sstream>

namespace skein {

namespace {

CoeffPoly stabilization_weight(int sign) {
  if (sign > 0) return cp_z(1);  // tr(a g_n) = z tr(a)
  // g^{-1} = q^{-1} g + (q^{-1} - 1)
  return CoeffPoly::monomial({-1, 1}) + cp_q(-1) - CoeffPoly(1);
}

bool fail(std::string* error, const std::string& msg) {
  if (error) *error = msg;
  return false;
}

}  // namespace

bool apply_step(std::vector<TraceBranch>& branches, const TraceStep& step,
                bool verify, std::string* error) {
  if (step.branch < 0 || step.branch >= static_cast<int>(branches.size()))
    return fail(error, "step addresses a missing branch");
  TraceBranch& br = branches[step.branch];

  switch (step.kind) {
    case TraceStep::Kind::ExactRewrite: {
      if (step.parts.empty()) return fail(error, "ExactRewrite with no parts");
      if (verify) {
        AlgebraElement sum(br.elem.n());
        for (const TracePart& p : step.parts) {
          if (p.elem.n() != br.elem.n())
            return fail(error, "ExactRewrite part on wrong strand count");
          sum += p.elem.scaled(p.coeff);
        }
        if (!equal(sum, br.elem))
          return fail(error, "ExactRewrite parts do not sum to the branch element");
      }
      CoeffPoly w = br.weight;
      br.weight = w * to_coeff(step.parts[0].coeff);
      br.elem = step.parts[0].elem;
      for (std::size_t p = 1; p < step.parts.size(); ++p)
        branches.push_back({w * to_coeff(step.parts[p].coeff), step.parts[p].elem});
      return true;
    }
    case TraceStep::Kind::Conjugate: {
      if (verify) {
        AlgebraElement val = conjugate_by(step.conjugate_by, br.elem);
        if (!equal(val, step.after))
          return fail(error, "Conjugate result differs from recorded state");
      }
      br.elem = step.after;
      return true;
    }
    case TraceStep::Kind::Stabilize: {
      int n = br.elem.n();
      if (n < 2) return fail(error, "Stabilize on a single strand");
      AlgebraElement a_full = append_braid(br.elem, n - 1, -step.stab_sign);
      if (used_strands(a_full) > n - 1)
        return fail(error, "Stabilize: element does not factor through g_{n-1}");
      AlgebraElement a = shrink(a_full, n - 1);
      if (verify && !(a == step.after))
        return fail(error, "Stabilize result differs from recorded state");
      br.weight = br.weight * stabilization_weight(step.stab_sign);
      br.elem = a;
      return true;
    }
    case TraceStep::Kind::ClosurePermute: {
      if (br.elem.term_count() != 1)
        return fail(error, "ClosurePermute on a non-monomial element");
      const auto& [key, c] = *br.elem.terms().begin();
      if (!key.perm.is_identity())
        return fail(error, "ClosurePermute on an element with a braid part");
      int i = step.permute_index;
      if (i < 0) return fail(error, "ClosurePermute: bad index");
      LoopMonomial swapped = key.loops;
      int a = swapped.exponent(i), b = swapped.exponent(i + 1);
      swapped.set(i, b);
      swapped.set(i + 1, a);
      AlgebraElement next =
          AlgebraElement::monomial(br.elem.n(), swapped, key.perm, c);
      if (verify && !(next == step.after))
        return fail(error, "ClosurePermute result differs from recorded state");
      br.elem = next;
      return true;
    }
    case TraceStep::Kind::Resize: {
      int n2 = step.resize_n;
      if (n2 < 1) return fail(error, "Resize: bad strand count");
      AlgebraElement next =
          n2 >= br.elem.n() ? embed(br.elem, n2) : shrink(br.elem, n2);
      if (verify && !(next == step.after))
        return fail(error, "Resize result differs from recorded state");
      br.elem = next;
      return true;
    }
  }
  return fail(error, "unknown step kind");
}

ReplayReport replay(const RewriteTrace& trace) {
  ReplayReport report;
  report.final_branches.push_back({CoeffPoly(1), trace.input});
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    std::string err;
    if (!apply_step(report.final_branches, trace.steps[s], /*verify=*/true, &err)) {
      std::ostringstream os;
      os << "step " << s << ": " << err;
      report.errors.push_back(os.str());
      report.ok = false;
      // Apply without verification so the remaining steps stay meaningful.
      apply_step(report.final_branches, trace.steps[s], /*verify=*/false, nullptr);
    }
  }
  return report;
}

ModuleElement branches_to_module(const std::vector<TraceBranch>& branches) {
  ModuleElement out;
  for (const TraceBranch& br : branches) {
    if (br.elem.is_zero() || br.weight.is_zero()) continue;
    if (br.elem.term_count() != 1)
      throw Error("branches_to_module: branch not reduced to a monomial");
    const auto& [key, c] = *br.elem.terms().begin();
    if (!key.perm.is_identity())
      throw Error("branches_to_module: branch still carries a braid part");
    out.add_term(key.loops, br.weight * to_coeff(c));
  }
  return out;
}

}  // namespace skein

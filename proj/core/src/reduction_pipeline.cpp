#include "reduction_pipeline.hpp"

namespace skein::detail {

namespace {
const LaurentPoly kQm1 = lp_q(1) - lp_q(0);
}

void Pipeline::emit(TraceStep step) {
  std::size_t lineage = ++branch_steps_[step.branch];
  if (lineage > caps::depth_cap())
    throw DepthCapExceeded("reduction exceeded the per-term rewrite-step cap");
  std::string err;
  if (!apply_step(branches_, step, /*verify=*/false, &err))
    throw Error("pipeline step failed: " + err);
  done_.resize(branches_.size(), false);
  branch_steps_.resize(branches_.size(), lineage);
  trace_.steps.push_back(std::move(step));
}

void Pipeline::run() {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int b = 0; b < static_cast<int>(branches_.size()); ++b) {
      if (done_[b]) continue;
      progressed = true;
      while (!done_[b] && step_branch(b)) {
      }
    }
  }
}

bool Pipeline::step_branch(int b) {
  TraceBranch& br = branches_[b];
  if (br.elem.is_zero() || br.weight.is_zero()) {
    done_[b] = true;
    return false;
  }
  const auto& terms = br.elem.terms();
  // Keep working branches single-term with coefficient 1.
  if (terms.size() > 1 || !terms.begin()->second.is_one()) {
    TraceStep st;
    st.kind = TraceStep::Kind::ExactRewrite;
    st.branch = b;
    for (const auto& [key, c] : terms)
      st.parts.push_back({c, AlgebraElement::monomial(br.elem.n(), key.loops, key.perm)});
    emit(std::move(st));
    return true;
  }
  const LoopMonomial tau = terms.begin()->first.loops;
  const Permutation w = terms.begin()->first.perm;
  const int n = br.elem.n();

  if (!gaps_only_) {
    int used = used_strands(br.elem);
    if (used < n) {
      TraceStep st;
      st.kind = TraceStep::Kind::Resize;
      st.branch = b;
      st.resize_n = used;
      st.after = shrink(br.elem, used);
      emit(std::move(st));
      return true;
    }
  }

  if (gaps_only_) {
    if (!tau.gap_free()) {
      gap_move(b, tau);
      return true;
    }
    done_[b] = true;
    return false;
  }

  if (w.is_identity()) {
    if (!tau.gap_free()) {
      gap_move(b, tau);
      return true;
    }
    if (canonical_ && !canonical_exponents(tau)) {
      canonicalize(b, tau);
      return true;
    }
    done_[b] = true;
    return false;
  }

  const int r = w.top_moved() - 1;  // top braid letter index
  const int m = tau.max_index();
  if (m < r) {
    case_top_braid(b, w);
  } else if (tau.exponent(r) != 0) {
    case_top_loop(b, tau, w);
  } else {
    gap_move(b, tau);
  }
  return true;
}

// Leftmost gap: conjugate by the inverse of the block carrying t_j^{eps} down,
// which lands one exponent unit at the first hole and leaves the returning
// block to interact with the remaining loops.
void Pipeline::gap_move(int b, const LoopMonomial& tau) {
  int ell = 0;
  while (tau.exponent(ell) != 0) ++ell;
  int j = -1;
  for (const auto& [idx, e] : tau.exponents())
    if (idx > ell) {
      j = idx;
      break;
    }
  if (j < 0) throw NotAGap("gap_move: no loop index above the hole");
  int eps = tau.exponent(j) > 0 ? +1 : -1;
  const int n = branches_[b].elem.n();
  Word u(n);
  for (int idx = ell + 1; idx <= j; ++idx) u.append(Letter::g(idx, -eps));
  TraceStep st;
  st.kind = TraceStep::Kind::Conjugate;
  st.branch = b;
  st.conjugate_by = u;
  st.after = conjugate_by(u, branches_[b].elem);
  emit(std::move(st));
}

// The top strand is touched only by the braid part: rotate the Jones block's
// tail to the front so the single g_r letter ends the word, then stabilize.
void Pipeline::case_top_braid(int b, const Permutation& w) {
  const int n = branches_[b].elem.n();
  const int r = n - 1;
  const int d = w.preimage(n);
  if (d == r) {
    TraceStep st;
    st.kind = TraceStep::Kind::Stabilize;
    st.branch = b;
    st.stab_sign = +1;
    st.after = shrink(append_braid(branches_[b].elem, r, -1), n - 1);
    emit(std::move(st));
    return;
  }
  Word u(n);
  for (int idx = r - 1; idx >= d; --idx) u.append(Letter::g(idx, +1));
  TraceStep st;
  st.kind = TraceStep::Kind::Conjugate;
  st.branch = b;
  st.conjugate_by = u;
  st.after = conjugate_by(u, branches_[b].elem);
  emit(std::move(st));
}

// The loop part reaches the top braid letter r: peel one unit of t_r^{±1} and
// interact it with the Jones block T_w = T_{w'} g_r g_{r-1} ... g_d.
void Pipeline::case_top_loop(int b, const LoopMonomial& tau, const Permutation& w) {
  const int n = branches_[b].elem.n();
  const int rr = w.top_moved();
  const int r = rr - 1;
  const int d = w.preimage(rr);
  const int eps = tau.exponent(r) > 0 ? +1 : -1;

  Permutation wp = w;
  for (int idx = d; idx <= r; ++idx) wp = wp.times_s(idx);  // w' = w * delta^{-1}
  LoopMonomial tau2 = tau;
  tau2.bump(r, -eps);

  if (eps < 0) {
    // t_r^{-1} (g_r ... g_d) = prod_j (q^{-1} g_j + (q^{-1}-1)) * t_{d-1}^{-1};
    // conjugating by the shared trailing letter merges it into the loop part.
    Word u(n);
    u.append(Letter::t_i(d - 1, -1));
    TraceStep st;
    st.kind = TraceStep::Kind::Conjugate;
    st.branch = b;
    st.conjugate_by = u;
    st.after = conjugate_by(u, branches_[b].elem);
    emit(std::move(st));
    return;
  }

  // t_r d_{r,d} = sum_i q^i (q-1) d_{r,^{r-i},d} t_{r-i} + q^{r-d+1} d_{r,d} t_{d-1}
  struct Piece {
    LaurentPoly coeff;
    std::vector<Letter> word;
    int trailing;
  };
  std::vector<Piece> pieces;
  for (int i = 0; i <= r - d; ++i)
    pieces.push_back({lp_q(i) * kQm1,
                      DeltaWord{r, d, r - i}.letters(), r - i});
  pieces.push_back({lp_q(r - d + 1), DeltaWord{r, d, std::nullopt}.letters(), d - 1});

  TraceStep split;
  split.kind = TraceStep::Kind::ExactRewrite;
  split.branch = b;
  for (const Piece& p : pieces) {
    AlgebraElement e = AlgebraElement::monomial(n, tau2, wp);
    for (const Letter& l : p.word) e = append_braid(e, l.index, l.sign);
    e = append_loop(e, p.trailing, +1);
    split.parts.push_back({p.coeff, std::move(e)});
  }
  emit(std::move(split));

  // Branch ids after the split: piece 0 stays at b, the rest were appended.
  std::vector<int> ids{b};
  for (std::size_t p = 1; p < pieces.size(); ++p)
    ids.push_back(static_cast<int>(branches_.size() - pieces.size() + p));
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    Word u(n);
    u.append(Letter::t_i(pieces[p].trailing, +1));
    TraceStep st;
    st.kind = TraceStep::Kind::Conjugate;
    st.branch = ids[p];
    st.conjugate_by = u;
    st.after = conjugate_by(u, branches_[ids[p]].elem);
    emit(std::move(st));
  }
}

void Pipeline::canonicalize(int b, const LoopMonomial& tau) {
  std::vector<int> exps;
  for (const auto& [i, e] : tau.exponents()) exps.push_back(e);
  LoopMonomial cur = tau;
  for (std::size_t pass = 0; pass + 1 < exps.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
      if (exps[i] <= exps[i + 1]) continue;
      std::swap(exps[i], exps[i + 1]);
      LoopMonomial next = cur;
      next.set(static_cast<int>(i), exps[i]);
      next.set(static_cast<int>(i) + 1, exps[i + 1]);
      TraceStep st;
      st.kind = TraceStep::Kind::ClosurePermute;
      st.branch = b;
      st.permute_index = static_cast<int>(i);
      st.after = AlgebraElement::monomial(branches_[b].elem.n(), next,
                                          Permutation::identity(branches_[b].elem.n()));
      emit(std::move(st));
      cur = next;
    }
  }
}

AlgebraElement Pipeline::algebra_result() const {
  int n = trace_.input.n();
  AlgebraElement out(n);
  for (const TraceBranch& br : branches_) {
    if (br.elem.is_zero()) continue;
    if (br.elem.n() != n) throw Error("algebra_result: branches on mixed strand counts");
    out += br.elem.scaled(to_laurent(br.weight));
  }
  return out;
}

}  // namespace skein::detail

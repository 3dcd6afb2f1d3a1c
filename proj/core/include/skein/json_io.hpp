#pragma once

#include <json.hpp>

#include "skein/block_matrix.hpp"
#include "skein/rewrite_trace.hpp"
#include "skein/trace.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

// Term-list schemas:
//   LaurentPoly  [{"q": e, "c": coeff}, ...]
//   CoeffPoly    [{"q": e, "z": e, "c": coeff}, ...]
//   TraceValue   [{"q": e, "z": e, "L": e, "s": [k, k, ...], "c": coeff}, ...]
// Coefficients are JSON integers when they fit in 64 bits, decimal strings
// otherwise. Loop monomials are sorted [[index, exponent], ...] pairs and
// permutations are 1-based image lists.

Json to_json(const LaurentPoly& p);
Json to_json(const CoeffPoly& p);
Json to_json(const TraceValue& p);
Json to_json(const LoopMonomial& m);
Json to_json(const AlgebraElement& e);
Json to_json(const ModuleElement& e);
Json to_json(const Word& w);
Json to_json(const RewriteTrace& t);
Json to_json(const BlockMatrix& b);
Json to_json(const NormalizedInvariant& x);
Json to_json(const TriangularReport& r);

LaurentPoly laurent_from_json(const Json& j);
CoeffPoly coeff_from_json(const Json& j);
TraceValue trace_value_from_json(const Json& j);
LoopMonomial loop_monomial_from_json(const Json& j);
AlgebraElement algebra_from_json(const Json& j);
ModuleElement module_from_json(const Json& j);
Word word_from_json(const Json& j);

// The q^0 coefficient slice of a block, as CSV text for quick inspection.
std::string block_csv_slice(const BlockMatrix& b);

}  // namespace skein

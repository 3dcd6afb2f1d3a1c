#include "skein/json_io.hpp"

#include <limits>
#include <sstream>

namespace skein {

namespace {

Json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error("expected an integer coefficient");
}

Json word_letters(const Word& w) {
  Json out = Json::array();
  for (const Letter& l : w.letters) {
    const char* kind = l.kind == Letter::Kind::BraidG
                           ? "g"
                           : (l.kind == Letter::Kind::LoopT ? "t" : "t'");
    out.push_back(Json{{"kind", kind}, {"i", l.index}, {"sign", l.sign}});
  }
  return out;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back(Json{{"q", k.q}, {"c", int_to_json(c)}});
  return out;
}

Json to_json(const CoeffPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back(Json{{"q", k.q}, {"z", k.z}, {"c", int_to_json(c)}});
  return out;
}

Json to_json(const TraceValue& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json term{{"q", k.q}, {"z", k.z}, {"L", k.L}};
    Json s = Json::array();
    for (int v : k.s.flatten()) s.push_back(v);
    term["s"] = std::move(s);
    term["c"] = int_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const LoopMonomial& m) {
  Json out = Json::array();
  for (const auto& [i, e] : m.exponents()) out.push_back(Json::array({i, e}));
  return out;
}

Json to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [key, c] : e.terms()) {
    Json perm = Json::array();
    for (int v : key.perm.images()) perm.push_back(v);
    terms.push_back(Json{{"loops", to_json(key.loops)},
                         {"perm", std::move(perm)},
                         {"coeff", to_json(c)}});
  }
  return Json{{"n", e.n()}, {"terms", std::move(terms)}};
}

Json to_json(const ModuleElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back(Json{{"loops", to_json(m)}, {"coeff", to_json(c)}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const Word& w) {
  return Json{{"n", w.n}, {"letters", word_letters(w)}};
}

Json to_json(const RewriteTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& st : t.steps) {
    Json j;
    switch (st.kind) {
      case TraceStep::Kind::ExactRewrite: {
        j["kind"] = "exact";
        j["branch"] = st.branch;
        Json parts = Json::array();
        for (const TracePart& p : st.parts)
          parts.push_back(Json{{"coeff", to_json(p.coeff)}, {"elem", to_json(p.elem)}});
        j["parts"] = std::move(parts);
        break;
      }
      case TraceStep::Kind::Conjugate:
        j["kind"] = "conjugate";
        j["branch"] = st.branch;
        j["by"] = to_json(st.conjugate_by);
        j["after"] = to_json(st.after);
        break;
      case TraceStep::Kind::Stabilize:
        j["kind"] = "stabilize";
        j["branch"] = st.branch;
        j["sign"] = st.stab_sign;
        j["after"] = to_json(st.after);
        break;
      case TraceStep::Kind::ClosurePermute:
        j["kind"] = "closure_permute";
        j["branch"] = st.branch;
        j["i"] = st.permute_index;
        j["after"] = to_json(st.after);
        break;
      case TraceStep::Kind::Resize:
        j["kind"] = "resize";
        j["branch"] = st.branch;
        j["n"] = st.resize_n;
        j["after"] = to_json(st.after);
        break;
    }
    steps.push_back(std::move(j));
  }
  return Json{{"input", to_json(t.input)}, {"steps", std::move(steps)}};
}

Json to_json(const BlockMatrix& b) {
  Json rows = Json::array();
  for (const LoopMonomial& m : b.rows) rows.push_back(to_json(m));
  Json cols = Json::array();
  for (const LoopMonomial& m : b.cols) cols.push_back(to_json(m));
  Json entries = Json::array();
  for (const auto& [rc, c] : b.entries)
    entries.push_back(
        Json{{"r", rc.first}, {"c", rc.second}, {"coeff", to_json(c)}});
  return Json{{"level", b.level},
              {"canonical", b.canonical},
              {"rows", std::move(rows)},
              {"cols", std::move(cols)},
              {"entries", std::move(entries)}};
}

Json to_json(const NormalizedInvariant& x) {
  return Json{{"numerator", to_json(x.numerator)},
              {"denom_L_exp", x.denom_L_exp},
              {"denom_one_minus_q_exp", x.denom_one_minus_q_exp}};
}

Json to_json(const TriangularReport& r) {
  Json v = Json::array();
  for (const std::string& s : r.violations) v.push_back(s);
  return Json{{"ok", r.ok}, {"violations", std::move(v)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly out;
  for (const Json& t : j) out.add_term({t.at("q").get<int>()}, int_from_json(t.at("c")));
  return out;
}

CoeffPoly coeff_from_json(const Json& j) {
  CoeffPoly out;
  for (const Json& t : j)
    out.add_term({t.at("q").get<int>(), t.value("z", 0)}, int_from_json(t.at("c")));
  return out;
}

TraceValue trace_value_from_json(const Json& j) {
  TraceValue out;
  for (const Json& t : j) {
    TraceKey key{t.value("q", 0), t.value("z", 0), t.value("L", 0), {}};
    if (t.contains("s"))
      for (const Json& v : t.at("s")) key.s.add(v.get<int>());
    out.add_term(std::move(key), int_from_json(t.at("c")));
  }
  return out;
}

LoopMonomial loop_monomial_from_json(const Json& j) {
  LoopMonomial out;
  for (const Json& p : j) out.bump(p.at(0).get<int>(), p.at(1).get<int>());
  return out;
}

AlgebraElement algebra_from_json(const Json& j) {
  AlgebraElement out(j.at("n").get<int>());
  for (const Json& t : j.at("terms")) {
    std::vector<int> images;
    for (const Json& v : t.at("perm")) images.push_back(v.get<int>());
    out.add_term(loop_monomial_from_json(t.at("loops")),
                 Permutation::from_images(std::move(images)),
                 laurent_from_json(t.at("coeff")));
  }
  return out;
}

ModuleElement module_from_json(const Json& j) {
  ModuleElement out;
  for (const Json& t : j.at("terms"))
    out.add_term(loop_monomial_from_json(t.at("loops")),
                 coeff_from_json(t.at("coeff")));
  return out;
}

Word word_from_json(const Json& j) {
  Word out(j.at("n").get<int>());
  for (const Json& l : j.at("letters")) {
    std::string kind = l.at("kind").get<std::string>();
    Letter letter;
    letter.kind = kind == "g" ? Letter::Kind::BraidG
                              : (kind == "t" ? Letter::Kind::LoopT
                                             : Letter::Kind::LoopTPrime);
    letter.index = l.at("i").get<int>();
    letter.sign = l.at("sign").get<int>();
    out.append(letter);
  }
  return out;
}

std::string block_csv_slice(const BlockMatrix& b) {
  std::ostringstream os;
  auto q0 = [](const CoeffPoly* p) -> std::string {
    if (p == nullptr) return "0";
    Int acc = 0;
    for (const auto& [k, c] : p->terms())
      if (k.q == 0 && k.z == 0) acc += c;
    return acc.str();
  };
  os << "row\\col";
  for (std::size_t j = 0; j < b.cols.size(); ++j) os << ",c" << j;
  os << "\n";
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    os << "r" << i;
    for (std::size_t j = 0; j < b.cols.size(); ++j)
      os << "," << q0(b.entry(static_cast<int>(i), static_cast<int>(j)));
    os << "\n";
  }
  return os.str();
}

}  // namespace skein

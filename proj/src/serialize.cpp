#include "toricflow/serialize.hpp"

#include <limits>

namespace toricflow {

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const UniPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const MultiPoly& f) {
  Json a = Json::array();
  for (const auto& [e, c] : f.terms()) a.push_back(Json{{"exponent", e}, {"coeff", to_json(c)}});
  return a;
}

Json to_json(const LiftedCurve& c) {
  Json a = Json::array();
  for (const auto& x : c.coords()) a.push_back(to_json(x));
  return a;
}

Json to_json(const ValidityCertificate& cert) {
  Json emb = Json::array();
  for (auto d : cert.embedding_ok) emb.push_back(to_string(d));
  Json bir = Json::array();
  for (const auto& [face, ok] : cert.birational_ok)
    bir.push_back(Json{{"face", Json::array({face[0] + 1, face[1] + 1})}, {"ok", ok}});
  return Json{{"in_regular_locus", cert.in_regular_locus},
              {"in_regular_part", cert.in_regular_part},
              {"embedding_ok", emb},
              {"birational_ok", bir},
              {"immersion", cert.immersion},
              {"passes", cert.passes()},
              {"diagnostics", cert.diagnostics}};
}

Json to_json(const StepRecord& rec) {
  Json terms = Json::array();
  for (const auto& t : rec.terms) {
    Json words = Json::array();
    for (std::size_t w = 0; w < t.words.size(); ++w)
      words.push_back(Json{{"word", t.words[w]}, {"coeff", to_json(t.coefficients[w])}});
    terms.push_back(Json{{"root", to_json(t.root.e)},
                         {"lifted_exponent", t.root.lifted_exponent},
                         {"bezout", to_json(t.bezout)},
                         {"method", t.method},
                         {"extension", words},
                         {"kernel", to_json(t.kernel)}});
  }
  return Json{{"ray", rec.ray + 1},
              {"target", Json::array({to_json(rec.c), to_json(rec.d)})},
              {"root_bound", rec.root_bound},
              {"roots_considered", rec.roots_considered},
              {"resamples", rec.resamples},
              {"terms", terms}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) throw InputError(where, "zero denominator");
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    throw InputError(where, "not a rational \"p/q\"");
  }
  throw InputError(where, "expected a rational string \"p/q\" or an integer");
}

Integer integer_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError(where, "not an integer");
  }
  throw InputError(where, "expected an integer");
}

LatticeVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an integer array");
  std::vector<Integer> v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(integer_from_json(j[k], where + "/" + std::to_string(k)));
  return LatticeVector(std::move(v));
}

UniPoly unipoly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected a coefficient array");
  std::vector<Rational> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from_json(j[k], where + "/" + std::to_string(k)));
  return UniPoly(std::move(c));
}

MultiPoly multipoly_from_json(const Json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected a term array");
  MultiPoly p(nvars);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!j[k].is_object() || !j[k].contains("exponent") || !j[k].contains("coeff"))
      throw InputError(at, "term needs \"exponent\" and \"coeff\"");
    const Json& e = j[k]["exponent"];
    if (!e.is_array() || e.size() != nvars) throw InputError(at + "/exponent", "wrong exponent length");
    Exponent ex;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) throw InputError(at + "/exponent", "exponents must be nonnegative integers");
      ex.push_back(x.get<std::uint32_t>());
    }
    p.add_term(ex, rational_from_json(j[k]["coeff"], at + "/coeff"));
  }
  return p;
}

LiftedCurve curve_from_json(const Json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array() || j.size() != rank)
    throw InputError(where, "curve needs " + std::to_string(rank) + " coordinate arrays");
  std::vector<UniPoly> coords;
  for (std::size_t k = 0; k < j.size(); ++k) coords.push_back(unipoly_from_json(j[k], where + "/" + std::to_string(k)));
  try {
    return LiftedCurve(std::move(coords));
  } catch (const DomainError& e) {
    throw InputError(where, e.what());
  }
}

Json word_to_json(const AutomorphismWord& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps)
    steps.push_back(Json{{"ray", s.field.root.ray_index + 1},
                         {"root", to_json(s.field.root.e)},
                         {"coefficient", to_json(s.field.coefficient)},
                         {"time", to_json(s.time)}});
  return steps;
}

AutomorphismWord word_from_json(const Json& j, const QuotientPresentation& p, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected a step array");
  AutomorphismWord w;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const Json& s = j[k];
    if (!s.is_object()) throw InputError(at, "expected a step object");
    for (const char* key : {"ray", "root", "coefficient", "time"})
      if (!s.contains(key)) throw InputError(at, std::string("missing \"") + key + "\"");
    if (!s["ray"].is_number_unsigned() || s["ray"].get<std::size_t>() < 1 || s["ray"].get<std::size_t>() > p.rank())
      throw InputError(at + "/ray", "ray index out of range");
    std::size_t ray = s["ray"].get<std::size_t>() - 1;
    try {
      DemazureRoot root = make_root(p.cone(), ray, vector_from_json(s["root"], at + "/root"));
      MultiPoly g = multipoly_from_json(s["coefficient"], p.rank(), at + "/coefficient");
      w.steps.push_back({lift_field(p, root, g), rational_from_json(s["time"], at + "/time")});
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError(at, e.what());
    }
  }
  return w;
}

Json word_file_to_json(const WordFile& f) {
  return Json{{"format", "toricflow-word/1"},
              {"rank", f.source.rank()},
              {"source", to_json(f.source)},
              {"image", to_json(f.image)},
              {"steps", word_to_json(f.word)}};
}

WordFile word_file_from_json(const Json& j, const QuotientPresentation& p) {
  if (!j.is_object()) throw InputError("", "word file must be an object");
  if (j.value("format", "") != "toricflow-word/1") throw InputError("/format", "unknown word file format");
  for (const char* key : {"source", "image", "steps"})
    if (!j.contains(key)) throw InputError("", std::string("missing \"") + key + "\"");
  return {word_from_json(j["steps"], p, "/steps"), curve_from_json(j["source"], p.rank(), "/source"),
          curve_from_json(j["image"], p.rank(), "/image")};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace toricflow

#include "toricflow/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "toricflow/cone.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/straighten.hpp"

namespace toricflow::cli {

namespace {

struct Job {
  std::vector<LatticeVector> rays;
  std::string task;
  std::map<std::string, Json> curves;  // raw, parsed once the rank is known
  Json options = Json::object();
};

Job parse_job(const Json& j) {
  if (!j.is_object()) throw InputError("", "job must be an object");
  Job job;
  if (!j.contains("cone")) throw InputError("", "missing \"cone\"");
  const Json& cone = j["cone"];
  if (!cone.is_array() || cone.empty()) throw InputError("/cone", "expected a nonempty array of rays");
  for (std::size_t k = 0; k < cone.size(); ++k) job.rays.push_back(vector_from_json(cone[k], "/cone/" + std::to_string(k)));
  job.task = j.value("task", "analyze");
  if (j.contains("curves")) {
    if (!j["curves"].is_object()) throw InputError("/curves", "expected an object of named curves");
    for (const auto& [name, c] : j["curves"].items()) job.curves.emplace(name, c);
  }
  if (j.contains("options")) {
    if (!j["options"].is_object()) throw InputError("/options", "expected an object");
    job.options = j["options"];
  }
  return job;
}

unsigned option_uint(const Job& job, const char* key, unsigned fallback, const std::optional<unsigned>& over) {
  if (over) return *over;
  if (!job.options.contains(key)) return fallback;
  const Json& v = job.options[key];
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<unsigned long long>() > 0xffffffffULL)
    throw InputError(std::string("/options/") + key, "expected a nonnegative integer");
  return v.get<unsigned>();
}

StraighteningOptions straightening_options(const Job& job, const Overrides& o) {
  StraighteningOptions s;
  s.root_bound = option_uint(job, "root_bound", s.root_bound, o.root_bound);
  s.ext_bound = option_uint(job, "ext_bound", s.ext_bound, o.ext_bound);
  s.max_retries = option_uint(job, "max_retries", s.max_retries, o.max_retries);
  s.coefficient_range = option_uint(job, "coefficient_range", static_cast<unsigned>(s.coefficient_range), std::nullopt);
  s.limits.max_words = option_uint(job, "max_words", static_cast<unsigned>(s.limits.max_words), std::nullopt);
  if (s.root_bound < 1 || s.ext_bound < 1 || s.coefficient_range < 1)
    throw InputError("/options", "bounds must be at least 1");
  return s;
}

std::uint64_t seed_of(const Job& job, const Overrides& o) {
  if (o.seed) return *o.seed;
  if (!job.options.contains("seed")) return 42;
  const Json& v = job.options["seed"];
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
    throw InputError("/options/seed", "expected a nonnegative integer");
  return job.options["seed"].get<std::uint64_t>();
}

LiftedCurve named_curve(const Job& job, const std::string& name, std::size_t rank) {
  auto it = job.curves.find(name);
  if (it == job.curves.end()) throw InputError("/curves", "no curve named \"" + name + "\"");
  return curve_from_json(it->second, rank, "/curves/" + name);
}

std::string option_string(const Job& job, const char* key, const std::string& fallback) {
  if (!job.options.contains(key)) return fallback;
  if (!job.options[key].is_string()) throw InputError(std::string("/options/") + key, "expected a string");
  return job.options[key].get<std::string>();
}

std::string first_curve(const Job& job) {
  if (job.curves.empty()) throw InputError("/curves", "task needs at least one curve");
  return job.curves.begin()->first;
}

std::string face_string(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k] + 1);
  return s + "}";
}

int cmd_analyze(const QuotientPresentation& p, std::ostream& out) {
  const auto& c = p.cone();
  out << "rank " << c.rank() << "\n";
  out << "det " << c.det_abs().get_str() << "\n";
  out << "group order " << p.group_order().get_str() << ", smooth in codim " << smooth_in_codim(c) << "\n";
  for (const auto& g : p.characters()) {
    out << "character weights (";
    for (std::size_t j = 0; j < g.weights.size(); ++j) out << (j ? "," : "") << g.weights[j].get_str();
    out << ") mod " << g.order.get_str() << "\n";
  }
  out << "special linear " << (p.special_linear() ? "yes" : "no") << "\n";
  out << "dual rays";
  for (const auto& v : p.dual().dual_rays) out << " " << v;
  out << "\ndual Hilbert basis";
  for (const auto& v : p.dual().hilbert_basis) out << " " << v;
  out << "\n";
  for (std::size_t i = 0; i < c.rank(); ++i) {
    out << "facet " << i + 1 << " Hilbert basis";
    for (const auto& g : p.facet_generators(i)) out << " " << g.m;
    out << "\n";
  }
  if (c.rank() >= 2) {
    std::string regular, irregular;
    for (const auto& f : faces(c, 2)) (is_face_regular(c, f) ? regular : irregular) += " " + face_string(f);
    out << "regular 2-faces" << regular << "\n";
    out << "irregular 2-faces" << (irregular.empty() ? " none" : irregular) << "\n";
  }
  return kSuccess;
}

int cmd_roots(const QuotientPresentation& p, unsigned bound, std::ostream& out) {
  for (std::size_t i = 0; i < p.rank(); ++i) {
    auto roots = enumerate_roots(p.cone(), i, bound);
    out << "ray " << i + 1 << " (" << roots.size() << " roots with height bound " << bound << ")\n";
    for (const auto& r : roots) {
      out << "  e=" << r.e << " lifted=(";
      for (std::size_t j = 0; j < r.lifted_exponent.size(); ++j) out << (j ? "," : "") << r.lifted_exponent[j];
      out << ")\n";
    }
  }
  return kSuccess;
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::success: return kSuccess;
    case Outcome::hypothesis_violation: return kHypothesisViolation;
    case Outcome::bound_exhausted: return kBoundExhausted;
  }
  return kBoundExhausted;
}

Json transcript_json(const ExtensionResult& r) {
  Json steps = Json::array();
  for (const auto& rec : r.transcript) steps.push_back(to_json(rec));
  Json target = Json::array();
  for (const auto& [c, d] : r.target.constants) target.push_back(Json::array({to_json(c), to_json(d)}));
  return Json{{"outcome", to_string(r.outcome)},
              {"diagnostic", r.diagnostic},
              {"warnings", r.warnings},
              {"target", target},
              {"seed", r.target.seed},
              {"records", steps},
              {"word_length", r.word.size()},
              {"straightened", to_json(r.straightened)}};
}

void emit_word(const Overrides& o, const WordFile& f) {
  if (!o.emit) return;
  std::ofstream os(*o.emit, std::ios::binary);
  if (!os) throw InputError("--emit", "cannot open " + *o.emit + " for writing");
  os << canonical_dump(word_file_to_json(f));
}

std::optional<StraighteningTarget> fixed_target(const Job& job, std::size_t n, std::uint64_t seed) {
  if (!job.options.contains("targets")) return std::nullopt;
  const Json& t = job.options["targets"];
  if (!t.is_array() || t.size() != n) throw InputError("/options/targets", "expected one [c, d] pair per coordinate");
  StraighteningTarget out;
  out.seed = seed;
  for (std::size_t k = 0; k < n; ++k) {
    const std::string at = "/options/targets/" + std::to_string(k);
    if (!t[k].is_array() || t[k].size() != 2) throw InputError(at, "expected [c, d]");
    Rational c = rational_from_json(t[k][0], at + "/0");
    if (c == 0) throw InputError(at + "/0", "c must be nonzero");
    out.constants.emplace_back(c, rational_from_json(t[k][1], at + "/1"));
  }
  return out;
}

int cmd_straighten(const Job& job, const QuotientPresentation& p, const Overrides& o, std::ostream& out) {
  auto opts = straightening_options(job, o);
  auto seed = seed_of(job, o);
  auto name = option_string(job, "curve", first_curve(job));
  LiftedCurve c = named_curve(job, name, p.rank());
  TargetSampler sampler(seed, opts.coefficient_range);
  auto result = straighten_curve(p, c, sampler, opts, fixed_target(job, p.rank(), seed));

  Json report = transcript_json(result);
  report["curve"] = name;
  bool verified = false;
  if (result.ok()) {
    verified = verify_extension(p, result.word, c, result.straightened) && result.straightened.max_degree() <= 1;
    emit_word(o, {result.word, c, result.straightened});
  }
  report["verified"] = verified;
  report["word"] = word_to_json(result.word);
  out << canonical_dump(report);
  if (!result.ok()) return outcome_code(result.outcome);
  return verified ? kSuccess : kHypothesisViolation;
}

int cmd_extend(const Job& job, const QuotientPresentation& p, const Overrides& o, std::ostream& out) {
  auto opts = straightening_options(job, o);
  auto seed = seed_of(job, o);
  auto src_name = option_string(job, "source", "c1");
  auto dst_name = option_string(job, "target", "c2");
  LiftedCurve c1 = named_curve(job, src_name, p.rank());
  LiftedCurve c2 = named_curve(job, dst_name, p.rank());
  Rational a = 1, b = 0;
  if (job.options.contains("reparam")) {
    const Json& r = job.options["reparam"];
    if (!r.is_array() || r.size() != 2) throw InputError("/options/reparam", "expected [a, b]");
    a = rational_from_json(r[0], "/options/reparam/0");
    b = rational_from_json(r[1], "/options/reparam/1");
    if (a == 0) throw InputError("/options/reparam/0", "a must be nonzero");
  }
  auto result = extend_isomorphism(p, c1, c2, a, b, seed, opts);
  LiftedCurve image = c2.reparameterized(a, b);

  Json report{{"outcome", to_string(result.outcome)},
              {"diagnostic", result.diagnostic},
              {"source", src_name},
              {"target", dst_name},
              {"reparam", Json::array({to_json(a), to_json(b)})},
              {"first", transcript_json(result.first)},
              {"second", transcript_json(result.second)}};
  bool verified = false;
  if (result.ok()) {
    verified = verify_extension(p, result.word, c1, image);
    report["upstairs_exact"] = result.upstairs_exact;
    report["word"] = word_to_json(result.word);
    report["word_length"] = result.word.size();
    emit_word(o, {result.word, c1, image});
  }
  report["verified"] = verified;
  out << canonical_dump(report);
  if (!result.ok()) return outcome_code(result.outcome);
  return verified ? kSuccess : kHypothesisViolation;
}

int cmd_certify(const Job& job, const QuotientPresentation& p, const Overrides& o, std::ostream& out) {
  auto opts = straightening_options(job, o);
  Json report = Json::object();
  bool all_pass = true, any_undecided = false;
  for (const auto& [name, raw] : job.curves) {
    LiftedCurve c = curve_from_json(raw, p.rank(), "/curves/" + name);
    auto cert = full_certificate(p, c, opts.certificate());
    report[name] = to_json(cert);
    all_pass = all_pass && cert.passes();
    any_undecided = any_undecided || (cert.undecided() && !cert.passes());
  }
  out << canonical_dump(report);
  if (all_pass) return kSuccess;
  return any_undecided ? kBoundExhausted : kHypothesisViolation;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error at " << e.what() << "\n";
    return kInputError;
  } catch (const NotSimplicialError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kHypothesisViolation;
  }
}

}  // namespace

int run_job(const Json& j, const Overrides& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Job job = parse_job(j);
    if (o.task) job.task = *o.task;
    auto p = QuotientPresentation::build(SimplicialCone::build(job.rays));
    if (job.task == "analyze") return cmd_analyze(p, out);
    if (job.task == "roots") return cmd_roots(p, straightening_options(job, o).root_bound, out);
    if (job.task == "certify") return cmd_certify(job, p, o, out);
    if (job.task == "straighten") return cmd_straighten(job, p, o, out);
    if (job.task == "extend") return cmd_extend(job, p, o, out);
    throw InputError("/task", "unknown task \"" + job.task + "\"");
  });
}

int run_verify(const Json& j, const Json& word_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Job job = parse_job(j);
    auto p = QuotientPresentation::build(SimplicialCone::build(job.rays));
    WordFile f = word_file_from_json(word_file, p);
    bool ok = verify_extension(p, f.word, f.source, f.image);
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kSuccess : kHypothesisViolation;
  });
}

}  // namespace toricflow::cli

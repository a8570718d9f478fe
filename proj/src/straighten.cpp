#include "toricflow/straighten.hpp"

#include <map>
#include <stdexcept>

#include "toricflow/errors.hpp"

namespace toricflow {

TargetSampler::TargetSampler(std::uint64_t seed, long range) : seed_(seed), range_(range), engine_(seed) {
  if (range < 1) throw DomainError("sampling range must be positive");
}

Rational TargetSampler::draw(bool nonzero) {
  const auto span = static_cast<std::uint64_t>(2 * range_ + 1);
  for (;;) {
    long num = static_cast<long>(engine_() % span) - range_;
    long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(range_)) + 1;
    if (nonzero && num == 0) continue;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

std::pair<Rational, Rational> TargetSampler::draw_pair() {
  Rational c = draw(true);
  Rational d = draw(false);
  return {c, d};
}

StraighteningTarget TargetSampler::draw_target(std::size_t n) {
  StraighteningTarget t;
  t.seed = seed_;
  for (std::size_t i = 0; i < n; ++i) t.constants.push_back(draw_pair());
  return t;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::success: return "success";
    case Outcome::hypothesis_violation: return "hypothesis_violation";
    case Outcome::bound_exhausted: return "bound_exhausted";
  }
  return "bound_exhausted";
}

namespace {

MultiPoly words_to_poly(const std::vector<InvariantMonomial>& gens, const std::vector<Exponent>& words,
                        const std::vector<Rational>& coeffs, std::size_t n) {
  MultiPoly out(n);
  for (std::size_t w = 0; w < words.size(); ++w) {
    Exponent e(n, 0);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) e[k] += words[w][j] * gens[j].exponents[k];
    out.add_term(e, coeffs[w]);
  }
  return out;
}

std::vector<UniPoly> restricted(const std::vector<InvariantMonomial>& gens, const LiftedCurve& c) {
  std::vector<UniPoly> out;
  for (const auto& g : gens) out.push_back(evaluate_on_curve(MultiPoly::monomial(g.exponents), c.coords()));
  return out;
}

BetaResult beta_failure(Outcome o, std::string msg, StepRecord rec) { return {o, {}, std::move(rec), std::move(msg)}; }

}  // namespace

BetaResult build_beta(const QuotientPresentation& p, const LiftedCurve& c, std::size_t i, const UniPoly& h,
                      const StraighteningOptions& opts) {
  const std::size_t n = p.rank();
  if (i >= n) throw DomainError("ray index out of range");
  if (c.rank() != n) throw DimensionError("curve rank differs from cone rank");

  StepRecord rec;
  rec.ray = i;
  rec.c = h.coeff(1);
  rec.d = h.coeff(0);
  const UniPoly target = h - c.coord(i);
  if (target.is_zero()) return {Outcome::success, {}, rec, {}};

  // Roots whose lifted monomials restrict to coprime polynomials on the curve.
  std::vector<DemazureRoot> roots;
  BezoutResult bez;
  for (unsigned rb = opts.root_bound, attempt = 0; attempt < 3; ++attempt, rb *= 2) {
    rec.root_bound = rb;
    roots = enumerate_roots(p.cone(), i, rb);
    if (roots.empty()) continue;
    std::vector<UniPoly> fs;
    for (const auto& r : roots) fs.push_back(evaluate_on_curve(MultiPoly::monomial(r.lifted_exponent), c.coords()));
    bez = bezout_combination(fs, target);
    if (bez.solved) break;
  }
  rec.roots_considered = roots.size();
  if (!bez.solved) {
    std::string why = roots.empty() ? "no Demazure roots for this ray within the height bound"
                                    : "lifted root monomials along the curve have common factor " + bez.gcd.to_string() +
                                          " not dividing the target (field vanishes on the curve)";
    return beta_failure(Outcome::hypothesis_violation, "ray " + std::to_string(i + 1) + ": " + why, rec);
  }

  const auto& gens = p.facet_generators(i);
  const auto values = restricted(gens, c);
  std::optional<EmbeddingCheck> t_expr;
  std::vector<FlowStep> steps;

  for (std::size_t r = 0; r < roots.size(); ++r) {
    const UniPoly& a = bez.coefficients[r];
    if (a.is_zero()) continue;
    KernelTerm term{roots[r], a, "words", {}, {}, MultiPoly(n)};
    auto ext = extend_with_retry(values, a, opts.ext_bound, opts.limits);
    if (ext.status == ExtensionStatus::solved) {
      term.words = ext.words;
      term.coefficients = ext.coefficients;
      term.kernel = words_to_poly(gens, ext.words, ext.coefficients, n);
    } else {
      // Fall back to a(T) where T restricts to t on the curve.
      if (!t_expr) t_expr = check_kappa_embedding(p, c, i, opts.certificate());
      if (t_expr->decision != Decision::yes) {
        Outcome o = t_expr->decision == Decision::no ? Outcome::hypothesis_violation : Outcome::bound_exhausted;
        return beta_failure(o,
                            "ray " + std::to_string(i + 1) + ": kernel coefficient not extendable from the curve (" +
                                t_expr->note + ")",
                            rec);
      }
      term.method = "composed";
      term.words = t_expr->witness.words;
      term.coefficients = t_expr->witness.coefficients;
      term.kernel = compose(a, words_to_poly(gens, term.words, term.coefficients, n));
    }
    steps.push_back({lift_field(p, roots[r], term.kernel), 1});
    rec.terms.push_back(std::move(term));
  }

  LiftedCurve moved = apply_word(AutomorphismWord{steps}, c);
  for (std::size_t j = 0; j < n; ++j) {
    const UniPoly& want = j == i ? h : c.coord(j);
    if (moved.coord(j) != want) throw std::logic_error("prescribed-coordinate flow missed its target");
  }
  return {Outcome::success, std::move(steps), std::move(rec), {}};
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

namespace {

// Input gate. Sharing zeros is repairable (each step moves one coordinate to
// a general line), but the curve must avoid the singular locus and meet the
// embedding and birationality conditions.
Outcome gate(const ValidityCertificate& cert) {
  if (!cert.in_regular_part) return Outcome::hypothesis_violation;
  for (const auto& [face, ok] : cert.birational_ok)
    if (!ok) return Outcome::hypothesis_violation;
  for (auto d : cert.embedding_ok)
    if (d == Decision::no) return Outcome::hypothesis_violation;
  return cert.undecided() ? Outcome::bound_exhausted : Outcome::success;
}

// Conditions that held before a step must survive it.
bool preserved(const ValidityCertificate& before, const ValidityCertificate& after) {
  if (!after.in_regular_part) return false;
  if (before.in_regular_locus && !after.in_regular_locus) return false;
  for (std::size_t l = 0; l < before.embedding_ok.size(); ++l)
    if (before.embedding_ok[l] == Decision::yes && after.embedding_ok[l] != Decision::yes) return false;
  for (std::size_t f = 0; f < before.birational_ok.size(); ++f)
    if (before.birational_ok[f].second && !after.birational_ok[f].second) return false;
  return true;
}

}  // namespace

ExtensionResult straighten_curve(const QuotientPresentation& p, const LiftedCurve& c, TargetSampler& sampler,
                                 const StraighteningOptions& opts, const std::optional<StraighteningTarget>& fixed) {
  const std::size_t n = p.rank();
  ExtensionResult out;
  out.straightened = c;
  if (n < 4) out.warnings.push_back("rank below 4: extension is not guaranteed");

  auto cert = full_certificate(p, c, opts.certificate());
  if (Outcome o = gate(cert); o != Outcome::success) {
    out.outcome = o;
    out.diagnostic = "input curve certificate failed: " + join(cert.diagnostics);
    return out;
  }
  if (!cert.in_regular_locus) out.warnings.push_back("input coordinates share zeros; relying on the steps to separate them");

  if (fixed) {
    if (fixed->constants.size() != n) throw DimensionError("target has wrong number of constants");
    out.target = *fixed;
  } else {
    out.target = sampler.draw_target(n);
  }

  LiftedCurve current = c;
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned attempt = 0;; ++attempt) {
      auto [ci, di] = out.target.constants[i];
      UniPoly h(std::vector<Rational>{di, ci});
      auto beta = build_beta(p, current, i, h, opts);
      Outcome failed = beta.outcome;
      std::string diag = beta.diagnostic;
      if (beta.outcome == Outcome::success) {
        LiftedCurve next = apply_word(AutomorphismWord{beta.steps}, current);
        auto next_cert = full_certificate(p, next, opts.certificate());
        bool last = i + 1 == n;
        if (last ? next_cert.passes() : preserved(cert, next_cert)) {
          beta.record.resamples = attempt;
          current = std::move(next);
          cert = std::move(next_cert);
          out.word.steps.insert(out.word.steps.end(), beta.steps.begin(), beta.steps.end());
          out.transcript.push_back(std::move(beta.record));
          break;
        }
        failed = next_cert.undecided() && next_cert.in_regular_part ? Outcome::bound_exhausted
                                                                     : Outcome::hypothesis_violation;
        diag = "certificate lost after straightening ray " + std::to_string(i + 1) + ": " + join(next_cert.diagnostics);
      }
      if (fixed || attempt >= opts.max_retries) {
        out.outcome = failed;
        out.diagnostic = diag;
        out.straightened = current;
        return out;
      }
      out.target.constants[i] = sampler.draw_pair();
    }
  }
  out.straightened = current;
  return out;
}

IsomorphismExtension extend_isomorphism(const QuotientPresentation& p, const LiftedCurve& c1, const LiftedCurve& c2,
                                        const Rational& a, const Rational& b, std::uint64_t seed,
                                        const StraighteningOptions& opts) {
  IsomorphismExtension out;
  const LiftedCurve target_curve = c2.reparameterized(a, b);
  TargetSampler sampler(seed, opts.coefficient_range);
  for (unsigned attempt = 0;; ++attempt) {
    out.first = straighten_curve(p, c1, sampler, opts);
    if (!out.first.ok()) {
      out.outcome = out.first.outcome;
      out.diagnostic = "first curve: " + out.first.diagnostic;
      return out;
    }
    out.second = straighten_curve(p, target_curve, sampler, opts, out.first.target);
    if (out.second.ok()) break;
    if (attempt >= opts.max_retries) {
      out.outcome = out.second.outcome;
      out.diagnostic = "second curve: " + out.second.diagnostic;
      return out;
    }
  }
  out.word = concatenate(out.first.word, word_inverse(out.second.word));
  out.upstairs_exact = apply_word(out.word, c1) == target_curve;
  if (auto deck = rational_deck_transformation(p, c1, target_curve); deck && c1 != target_curve) {
    std::string signs;
    for (int s : *deck) signs += (signs.empty() ? "" : ",") + std::to_string(s);
    out.diagnostic = "the two lifts differ by the deck transformation with signs (" + signs + ")";
  }
  if (!verify_extension(p, out.word, c1, target_curve)) throw std::logic_error("extension failed verification");
  return out;
}

std::optional<std::vector<int>> rational_deck_transformation(const QuotientPresentation& p, const LiftedCurve& c1,
                                                             const LiftedCurve& c2) {
  const std::size_t n = p.rank();
  if (c1.rank() != n || c2.rank() != n) return std::nullopt;
  const auto& gens = p.characters();
  if (p.group_order() > 100000) return std::nullopt;
  // Odometer over k_g in [0, order_g); the element acts on x_j by
  // exp(2 pi i sum_g k_g w_gj / order_g).
  std::vector<Integer> k(gens.size(), 0);
  for (;;) {
    std::vector<int> signs(n, 1);
    bool rational = true;
    for (std::size_t j = 0; j < n && rational; ++j) {
      Rational f = 0;
      for (std::size_t g = 0; g < gens.size(); ++g) f += Rational(Integer(k[g] * gens[g].weights[j]), gens[g].order);
      f.canonicalize();
      Rational frac = f - Rational(f.get_num() / f.get_den());
      if (frac < 0) frac += 1;
      if (frac == Rational(1, 2)) signs[j] = -1;
      else if (frac != 0) rational = false;
    }
    if (rational) {
      bool match = true;
      for (std::size_t j = 0; j < n && match; ++j)
        match = c2.coord(j) == (signs[j] < 0 ? -c1.coord(j) : c1.coord(j));
      if (match) return signs;
    }
    std::size_t g = 0;
    while (g < gens.size() && k[g] + 1 == gens[g].order) k[g++] = 0;
    if (g == gens.size()) return std::nullopt;
    ++k[g];
  }
}

bool verify_extension(const QuotientPresentation& p, const AutomorphismWord& word, const LiftedCurve& c1,
                      const LiftedCurve& c2) {
  if (c1.rank() != p.rank() || c2.rank() != p.rank()) return false;
  LiftedCurve moved = apply_word(word, c1);
  for (const auto& g : p.invariant_generators()) {
    MultiPoly m = MultiPoly::monomial(g.exponents);
    if (evaluate_on_curve(m, moved.coords()) != evaluate_on_curve(m, c2.coords())) return false;
  }
  return true;
}

bool verify_extension_symbolic(const QuotientPresentation& p, const AutomorphismWord& word, const LiftedCurve& c1,
                               const LiftedCurve& c2) {
  if (c1.rank() != p.rank() || c2.rank() != p.rank()) return false;
  for (const auto& g : p.invariant_generators()) {
    MultiPoly m = MultiPoly::monomial(g.exponents);
    if (evaluate_on_curve(word_apply(word, m), c1.coords()) != evaluate_on_curve(m, c2.coords())) return false;
  }
  return true;
}

}  // namespace toricflow

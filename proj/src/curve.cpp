#include "toricflow/curve.hpp"

#include <algorithm>

#include "toricflow/errors.hpp"

namespace toricflow {

LiftedCurve::LiftedCurve(std::vector<UniPoly> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const UniPoly& x) { return x.is_constant(); }))
    throw DomainError("degenerate curve: every coordinate is constant");
}

long LiftedCurve::max_degree() const {
  long d = -1;
  for (const auto& x : coords_) d = std::max(d, x.degree());
  return d;
}

LiftedCurve LiftedCurve::reparameterized(const Rational& a, const Rational& b) const {
  if (a == 0) throw DomainError("reparameterization must have a != 0");
  UniPoly sub(std::vector<Rational>{b, a});
  std::vector<UniPoly> out;
  for (const auto& x : coords_) out.push_back(x.compose(sub));
  return LiftedCurve(std::move(out));
}

LiftedCurve apply_step(const FlowStep& step, const LiftedCurve& c) {
  const std::size_t i = step.field.root.ray_index;
  std::vector<UniPoly> coords = c.coords();
  UniPoly shift = evaluate_on_curve(step.field.multiplier(), c.coords());
  coords[i] += step.time * shift;
  return LiftedCurve(std::move(coords));
}

LiftedCurve apply_word(const AutomorphismWord& word, const LiftedCurve& c) {
  LiftedCurve out = c;
  for (const auto& s : word.steps) out = apply_step(s, out);
  return out;
}

bool check_regular_locus(const LiftedCurve& c) {
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = i + 1; j < c.rank(); ++j)
      if (gcd(c.coord(i), c.coord(j)) != UniPoly::constant(1)) return false;
  return true;
}

namespace {

// Extends `face` by indices >= next while the coordinates keep a common zero.
bool zero_sets_regular(const QuotientPresentation& p, const LiftedCurve& c, Face& face, const UniPoly& g,
                       std::size_t next) {
  if (face.size() >= 2 && !is_face_regular(p.cone(), face)) return false;
  for (std::size_t j = next; j < c.rank(); ++j) {
    UniPoly h = face.empty() ? c.coord(j) : gcd(g, c.coord(j));
    if (h.is_constant() && !h.is_zero()) continue;
    face.push_back(j);
    bool ok = zero_sets_regular(p, c, face, h, j + 1);
    face.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool check_regular_part(const QuotientPresentation& p, const LiftedCurve& c) {
  if (c.rank() != p.rank()) throw DimensionError("curve rank differs from cone rank");
  Face face;
  return zero_sets_regular(p, c, face, UniPoly(), 0);
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

std::vector<UniPoly> restricted(const std::vector<InvariantMonomial>& gens, const LiftedCurve& c) {
  std::vector<UniPoly> out;
  for (const auto& g : gens) out.push_back(evaluate_on_curve(MultiPoly::monomial(g.exponents), c.coords()));
  return out;
}

bool proportional(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return false;
  return a == (a.lead() / b.lead()) * b;
}

}  // namespace

EmbeddingCheck check_kappa_embedding(const QuotientPresentation& p, const LiftedCurve& c, std::size_t l,
                                     const CertificateOptions& opts) {
  if (l >= p.rank()) throw DomainError("ray index out of range");
  auto values = restricted(p.facet_generators(l), c);
  EmbeddingCheck out;
  if (std::all_of(values.begin(), values.end(), [](const UniPoly& v) { return v.is_constant(); })) {
    out.decision = Decision::no;
    out.note = "image of the curve in the divisor is a point";
    return out;
  }
  UniPoly critical;
  for (const auto& v : values) critical = gcd(critical, v.derivative());
  if (critical.degree() > 0) {
    out.decision = Decision::no;
    out.note = "restrictions share a critical point: " + critical.to_string();
    return out;
  }
  out.witness = extend_with_retry(values, UniPoly::t(), opts.ext_bound, opts.limits);
  switch (out.witness.status) {
    case ExtensionStatus::solved:
      out.decision = Decision::yes;
      break;
    case ExtensionStatus::unsolvable:
      out.note = "t not reached up to word length " + std::to_string(out.witness.bound);
      break;
    case ExtensionStatus::too_large:
      out.note = "word set too large at length " + std::to_string(out.witness.bound);
      break;
  }
  return out;
}

bool check_psi_birational(const QuotientPresentation& p, const LiftedCurve& c, const Face& face) {
  if (!is_face_regular(p.cone(), face)) throw HypothesisError("face is not regular");
  auto values = restricted(p.face_generators(face), c);
  std::vector<UniPoly> nonconst;
  for (const auto& v : values)
    if (!v.is_constant()) nonconst.push_back(v);

  bool pair_found = false;
  for (std::size_t a = 0; a < nonconst.size() && !pair_found; ++a)
    for (std::size_t b = a + 1; b < nonconst.size(); ++b)
      if (!proportional(nonconst[a], nonconst[b])) {
        pair_found = true;
        break;
      }
  if (!pair_found) return false;

  // k(f_1, ..., f_k) = k(t) iff gcd_j (f_j(T) - f_j(t)) has degree 1 in T
  // over k(t). A specialization t = t0 can only raise that degree, so
  // degree 1 at any t0 certifies birationality.
  for (long t0 = 0; t0 < 16; ++t0) {
    UniPoly g;
    for (const auto& f : nonconst) g = gcd(g, f - UniPoly::constant(f(Rational(t0))));
    if (g.degree() == 1) return true;
  }
  return false;
}

bool ValidityCertificate::passes() const {
  return in_regular_locus && std::all_of(embedding_ok.begin(), embedding_ok.end(), [](Decision d) { return d == Decision::yes; }) &&
         std::all_of(birational_ok.begin(), birational_ok.end(), [](const auto& f) { return f.second; });
}

bool ValidityCertificate::undecided() const {
  return std::any_of(embedding_ok.begin(), embedding_ok.end(), [](Decision d) { return d == Decision::undecided; });
}

ValidityCertificate full_certificate(const QuotientPresentation& p, const LiftedCurve& c,
                                     const CertificateOptions& opts) {
  if (smooth_in_codim(p.cone()) < 2) throw HypothesisError("cone is not smooth in codimension 2");
  if (c.rank() != p.rank()) throw HypothesisError("curve rank differs from cone rank");
  ValidityCertificate cert;
  cert.in_regular_locus = check_regular_locus(c);
  if (!cert.in_regular_locus) cert.diagnostics.push_back("two coordinates share a zero");
  cert.in_regular_part = cert.in_regular_locus || check_regular_part(p, c);
  if (!cert.in_regular_part) cert.diagnostics.push_back("curve meets the singular locus");

  UniPoly d;
  for (const auto& x : c.coords()) d = gcd(d, x.derivative());
  cert.immersion = d == UniPoly::constant(1);
  if (!cert.immersion) cert.diagnostics.push_back("curve is not an immersion");

  for (std::size_t l = 0; l < p.rank(); ++l) {
    auto check = check_kappa_embedding(p, c, l, opts);
    cert.embedding_ok.push_back(check.decision);
    if (check.decision != Decision::yes)
      cert.diagnostics.push_back("ray " + std::to_string(l + 1) + " embedding " + to_string(check.decision) + ": " + check.note);
  }
  for (const auto& face : faces(p.cone(), 2)) {
    bool ok = check_psi_birational(p, c, face);
    cert.birational_ok.emplace_back(face, ok);
    if (!ok)
      cert.diagnostics.push_back("face {" + std::to_string(face[0] + 1) + "," + std::to_string(face[1] + 1) +
                                 "} projection not birational");
  }
  return cert;
}

}  // namespace toricflow

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricflow/cone.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/quotient.hpp"
#include "toricflow/solvers.hpp"
#include "toricflow/unipoly.hpp"

namespace toricflow {

/// Parameterization t -> (x_1(t), ..., x_n(t)) of a lift of a curve to A^n.
class LiftedCurve {
 public:
  LiftedCurve() = default;
  /// Throws DomainError when every coordinate is constant.
  explicit LiftedCurve(std::vector<UniPoly> coords);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<UniPoly>& coords() const { return coords_; }
  const UniPoly& coord(std::size_t i) const { return coords_.at(i); }
  long max_degree() const;

  /// t -> a t + b substituted into every coordinate.
  LiftedCurve reparameterized(const Rational& a, const Rational& b) const;

  friend bool operator==(const LiftedCurve&, const LiftedCurve&) = default;

 private:
  std::vector<UniPoly> coords_;
};

/// The curve after the flow step's point map.
LiftedCurve apply_step(const FlowStep& step, const LiftedCurve& c);
/// The curve after the word's point map (steps in order).
LiftedCurve apply_word(const AutomorphismWord& word, const LiftedCurve& c);

/// gcd(x_i(t), x_j(t)) = 1 for all i != j: no parameter value zeroes two
/// coordinates.
bool check_regular_locus(const LiftedCurve& c);

/// Every set of coordinates with a common zero spans a regular face, so the
/// image avoids the singular locus. Weaker than check_regular_locus.
bool check_regular_part(const QuotientPresentation& p, const LiftedCurve& c);

enum class Decision { yes, no, undecided };
const char* to_string(Decision d);

struct EmbeddingCheck {
  Decision decision = Decision::undecided;
  CurveExtension witness;  // expression of t over the facet generator values
  std::string note;
};

struct CertificateOptions {
  unsigned ext_bound = 16;
  ExtensionLimits limits;
};

/// Whether k[D_l] -> k[t] is onto, certified by writing t in the facet
/// generators restricted to the curve. `no` is returned only when the image is
/// a point or the restrictions share a critical point.
EmbeddingCheck check_kappa_embedding(const QuotientPresentation& p, const LiftedCurve& c, std::size_t l,
                                     const CertificateOptions& opts = {});

/// Some two generators of the face semigroup restrict to nonconstant,
/// nonproportional polynomials, and the restrictions generate k(t).
/// Throws HypothesisError for an irregular face.
bool check_psi_birational(const QuotientPresentation& p, const LiftedCurve& c, const Face& face);

struct ValidityCertificate {
  bool in_regular_locus = false;
  bool in_regular_part = false;                       // image avoids the singular locus
  std::vector<Decision> embedding_ok;                 // per ray
  std::vector<std::pair<Face, bool>> birational_ok;  // per 2-face
  bool immersion = false;                             // gcd of x_i'(t) is 1 (diagnostic)
  std::vector<std::string> diagnostics;

  bool passes() const;
  bool undecided() const;
};

/// All checks over all rays and 2-faces. Throws HypothesisError when the
/// cone is not smooth in codimension 2 or the curve rank mismatches.
ValidityCertificate full_certificate(const QuotientPresentation& p, const LiftedCurve& c,
                                     const CertificateOptions& opts = {});

}  // namespace toricflow

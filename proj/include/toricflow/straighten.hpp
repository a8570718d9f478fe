#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toricflow/curve.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/quotient.hpp"
#include "toricflow/solvers.hpp"

namespace toricflow {

struct StraighteningOptions {
  unsigned root_bound = 2;
  unsigned ext_bound = 16;
  unsigned max_retries = 8;
  long coefficient_range = 97;  // numerators in [-N, N], denominators in [1, N]
  ExtensionLimits limits;

  CertificateOptions certificate() const { return {ext_bound, limits}; }
};

/// Coordinates are driven to x_i(t) = c_i t + d_i.
struct StraighteningTarget {
  std::vector<std::pair<Rational, Rational>> constants;
  std::uint64_t seed = 0;
};

/// Seeded stream of "general" rational constants. The mapping from engine
/// output to rationals is fixed here, so streams agree across platforms.
class TargetSampler {
 public:
  explicit TargetSampler(std::uint64_t seed, long range = 97);

  Rational draw(bool nonzero);
  std::pair<Rational, Rational> draw_pair();
  StraighteningTarget draw_target(std::size_t n);
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  long range_;
  std::mt19937_64 engine_;
};

enum class Outcome { success, hypothesis_violation, bound_exhausted };
const char* to_string(Outcome o);

/// One root's contribution to a prescribed-coordinate flow.
struct KernelTerm {
  DemazureRoot root;
  UniPoly bezout;               // a_e(t)
  std::string method;           // "words" or "composed"
  std::vector<Exponent> words;  // over the facet generators
  std::vector<Rational> coefficients;
  MultiPoly kernel;             // lift of a_e to k[D_i]
};

struct StepRecord {
  std::size_t ray = 0;
  Rational c, d;
  unsigned root_bound = 0;
  std::size_t roots_considered = 0;
  std::vector<KernelTerm> terms;
  unsigned resamples = 0;
};

struct BetaResult {
  Outcome outcome = Outcome::success;
  std::vector<FlowStep> steps;
  StepRecord record;
  std::string diagnostic;
};

/// Replicas of Demazure fields for ray i, each flowing for time 1, whose
/// composition turns x_i(t) into h(t) along the curve and fixes every other
/// coordinate.
BetaResult build_beta(const QuotientPresentation& p, const LiftedCurve& c, std::size_t i, const UniPoly& h,
                      const StraighteningOptions& opts = {});

struct ExtensionResult {
  Outcome outcome = Outcome::success;
  AutomorphismWord word;
  LiftedCurve straightened;
  std::vector<StepRecord> transcript;
  StraighteningTarget target;
  std::string diagnostic;
  std::vector<std::string> warnings;

  bool ok() const { return outcome == Outcome::success; }
};

/// Straightens every coordinate in turn. Without a fixed target the
/// constants come from the sampler, and a coordinate whose step fails (or
/// breaks the certificate) is resampled up to max_retries times.
ExtensionResult straighten_curve(const QuotientPresentation& p, const LiftedCurve& c, TargetSampler& sampler,
                                 const StraighteningOptions& opts = {},
                                 const std::optional<StraighteningTarget>& fixed = std::nullopt);

struct IsomorphismExtension {
  Outcome outcome = Outcome::success;
  AutomorphismWord word;  // maps c1(t) to c2(a t + b)
  ExtensionResult first;
  ExtensionResult second;
  bool upstairs_exact = false;
  std::string diagnostic;

  bool ok() const { return outcome == Outcome::success; }
};

/// Straightens c1 and the reparameterized c2 to one common line and
/// returns the first word followed by the inverse of the second.
IsomorphismExtension extend_isomorphism(const QuotientPresentation& p, const LiftedCurve& c1, const LiftedCurve& c2,
                                        const Rational& a, const Rational& b, std::uint64_t seed,
                                        const StraighteningOptions& opts = {});

/// A group element acting by a sign on every coordinate (the only elements
/// defined over the rationals) that maps c1 to c2, as its sign vector.
std::optional<std::vector<int>> rational_deck_transformation(const QuotientPresentation& p, const LiftedCurve& c1,
                                                             const LiftedCurve& c2);

/// For every invariant generator, its pullback composed with the word and
/// restricted to c1 equals its restriction to c2. The word is applied to the
/// curve pointwise.
bool verify_extension(const QuotientPresentation& p, const AutomorphismWord& word, const LiftedCurve& c1,
                      const LiftedCurve& c2);

/// Same check with the word composed symbolically into each pullback first.
bool verify_extension_symbolic(const QuotientPresentation& p, const AutomorphismWord& word, const LiftedCurve& c1,
                               const LiftedCurve& c2);

}  // namespace toricflow

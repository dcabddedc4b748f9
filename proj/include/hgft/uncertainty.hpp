#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgft/gabor.hpp"
#include "hgft/grids.hpp"

namespace hgft {

enum class ClaimClass { Verified, Empirical };

std::string to_string(ClaimClass c);

/// One checked statement. relation is "<=", ">=" or "==" between lhs and rhs;
/// pass records whether that comparison holds within tolerance (relative to rhs,
/// or to the larger side for "=="). measured is the claim's headline number.
struct ClaimReport {
  std::string claim;
  ClaimClass cls = ClaimClass::Verified;
  std::string relation = "<=";
  double lhs = 0;
  double rhs = 0;
  double measured = 0;
  double tolerance = 0;
  std::string grid;
  bool pass = false;
  std::string note;
};

/// Builds a report and sets pass from the relation.
ClaimReport make_claim(std::string claim, ClaimClass cls, std::string relation, double lhs, double rhs,
                       double measured, double tolerance, std::string grid, std::string note = {});

/// A set of Gabor-domain cells with its product measure.
class Region {
 public:
  using Mask = Eigen::Array<bool, Eigen::Dynamic, 1>;

  Region(SpectralGridPtr sg, TranslationGridPtr tg, Mask mask);

  static Region empty(const SpectralGridPtr& sg, const TranslationGridPtr& tg);
  static Region full(const SpectralGridPtr& sg, const TranslationGridPtr& tg);
  /// Cells with k in [k0, k1), j in [j0, j1), m in [m0, m1).
  static Region product(const SpectralGridPtr& sg, const TranslationGridPtr& tg, int k0, int k1, int j0, int j1,
                        int m0, int m1);
  /// The product region [0, K) x [0, J) x [0, T) whose measure is closest to target.
  static Region product_with_measure(const SpectralGridPtr& sg, const TranslationGridPtr& tg, double target);
  /// Cells with |G| >= level * max|G|.
  static Region superlevel(const GaborField& G, double level);
  /// Cells taken in descending |G| while the measure stays within target.
  static Region superlevel_with_measure(const GaborField& G, double target);
  /// Cells taken in a seeded random order while the measure stays within target.
  static Region random(const SpectralGridPtr& sg, const TranslationGridPtr& tg, double target, std::uint64_t seed);

  Region complement() const;
  double measure() const { return measure_; }
  /// Measure of the whole grid.
  double total_measure() const;
  const Mask& mask() const { return mask_; }
  std::size_t cell_count() const;
  const SpectralGridPtr& spectral() const { return spectral_; }
  const TranslationGridPtr& translations() const { return translations_; }

 private:
  SpectralGridPtr spectral_;
  TranslationGridPtr translations_;
  Mask mask_;
  double measure_;
};

/// Weighted sum of |G|^2 over the cells of the region.
double masked_energy(const GaborField& G, const Region& region);

/// max|G| <= sqrt(norm2 f norm2 phi) (1 + 1e-6).
ClaimReport sup_bound_check(const GaborField& G, double norm2_f, double norm2_phi);
ClaimReport sup_bound_check(const SampledFunction& f, const Window& phi, const SpectralGridPtr& sg,
                            const TranslationGridPtr& tg);

struct ConcentrationReports {
  /// masked_energy(G, S) <= m(S) norm2 f norm2 phi.
  ClaimReport chain;
  /// masked_energy(G, S^c) >= gabor_norm2(G) - m(S) norm2 f norm2 phi.
  ClaimReport complement;
  /// ||f|| ||phi|| <= (1 - m(S)^2)^{-1/2} ||G chi_{S^c}||, as stated.
  ClaimReport stated_form;
  /// ||G - chi_S G|| >= ||phi|| ||f|| (1 - m(S)), as stated.
  ClaimReport small_set;
};

ConcentrationReports concentration_check(const GaborField& G, double norm2_f, double norm2_phi, const Region& region);

/// M_s = sum (lambda^2 + t^2)^s |G|^2 w and the realized constant sqrt(norm2 f norm2 phi / M_s).
/// Throws std::invalid_argument for s <= 0.
double moment(const GaborField& G, double s);
ClaimReport moment_bound_check(const GaborField& G, double norm2_f, double norm2_phi, double s);

struct PowerIteration {
  double value = 0;
  int iterations = 0;
  bool converged = false;
  /// Rayleigh quotient after each step.
  std::vector<double> history;
};

/// Largest eigenvalue of a Hermitian positive semidefinite operator of size n
/// from a fixed pseudo-random start. Stops when successive Rayleigh quotients
/// differ by less than tol.
PowerIteration power_iteration(const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& op, Eigen::Index n,
                               double tol = 1e-8, int max_iterations = 500);

struct BenedicksResult {
  ClaimReport sigma_report;
  ClaimReport idempotence_report;
  double sigma = 0;
  PowerIteration iteration;
  double idempotence = 0;
  Eigen::Index rank = 0;
};

/// Norm of P_S P_phi on the dense Gabor matrix of phi, with P_phi the orthogonal
/// projector onto its range in the weighted cell inner product.
BenedicksResult benedicks_probe(const Window& phi, const Region& region, const DiskGridPtr& dg);

}  // namespace hgft

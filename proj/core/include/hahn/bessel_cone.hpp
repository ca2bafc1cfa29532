#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hahn/log_cover.hpp"
#include "hahn/series.hpp"
#include "hahn/special.hpp"

namespace hahn {

/// Order nu >= 0 of the Bessel operator: an exact rational or a generator enclosure.
class Order {
 public:
  static Order rational(Rational value);
  /// Exact enclosures collapse to rationals.
  static Order enclosure(GeneratorEnclosure g);
  /// "1/2", "2.5", "pi", or "sqrt(q)"; enclosures use `digits` decimals.
  static Order parse(std::string_view text, int digits = 30);

  double value() const;
  bool is_integer() const;
  int integer_value() const;
  const std::optional<Rational>& rational_value() const { return rational_; }
  const std::optional<GeneratorEnclosure>& generator() const { return generator_; }
  /// sin(nu pi) with the argument reduced exactly for rational orders.
  double sin_pi() const;
  std::string to_string() const;

 private:
  Order() = default;
  std::optional<Rational> rational_;
  std::optional<GeneratorEnclosure> generator_;
};

enum class KernelBranch { NonInteger, Integer, NuZeroMeromorphic };
std::string_view to_string(KernelBranch branch);

/// Raw expansion data of r_lambda(x, y) for x <= y, indices k = 0..K-1.
/// Non-integer: `regular` at lambda^{2k}, `shifted` at lambda^{2nu+2k}.
/// Integer: `regular` at e_{(2k,0)}, `logarithmic` at e_{(2k,-1)}.
struct KernelCoefficients {
  KernelBranch branch = KernelBranch::NonInteger;
  std::vector<Complex> regular;
  std::vector<Complex> shifted;
  std::vector<Complex> logarithmic;
};

KernelCoefficients kernel_coefficients(const Order& nu, double x, double y, int K);

struct KernelExpansion {
  Order nu;
  double x = 0;  // min of the two points
  double y = 0;  // max of the two points
  KernelBranch branch = KernelBranch::NonInteger;
  int terms = 0;
  Series<Complex> series;
};

/// Series of the resolvent kernel in lambda, valid below 2K (non-integer)
/// or (2K, -1) (integer orders, in lexicographic pairs).
KernelExpansion resolvent_kernel_series(const Order& nu, double x, double y, int K);

/// (i pi / 2) sqrt(xy) J_nu(lambda min) H_nu(lambda max) from the oracles.
Complex resolvent_kernel_direct(const Order& nu, const LogPoint& lambda, double x, double y);

enum class BoundPart { A1, A2, B1, B2 };
std::string_view to_string(BoundPart part);

struct BoundParams {
  double c = 1.0;
  double r0 = 0.5;
};

struct BoundReport {
  BoundPart part = BoundPart::A1;
  int k = 0;
  double R = 1.0;
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
};

/// Compares the stored coefficient of index k against its Cauchy-type bound.
/// A1/A2 are the coefficients of -(2i/pi) r for non-integer orders; B1/B2
/// those of log(lambda) and of the regular part for integer orders.
BoundReport coeff_bound_check(const Order& nu, double x, double y, int k, double R, BoundPart part,
                              BoundParams params = {});

struct SphereMode {
  int k = 0;
  Rational nu;
  std::int64_t multiplicity = 0;
};

/// nu_k = (n-1)/2 + k with multiplicity C(n+k, n) - C(n+k-2, n).
std::vector<SphereMode> sphere_spectrum(int n, int k_max);

struct FamilyMember {
  Order nu;
  std::int64_t multiplicity = 1;
};

struct ExplicitList {
  std::vector<FamilyMember> members;
};
struct SphereSpectrum {
  int n = 1;
  int k_max = 0;
};
struct SqrtIntegers {
  std::int64_t q_max = 0;
};

struct OrderFamily {
  std::variant<ExplicitList, SphereSpectrum, SqrtIntegers> generator;

  /// Finite list of orders; square roots use `digits` decimal enclosures.
  std::vector<FamilyMember> materialize(int digits = 18) const;
};

struct SuitabilityWitness {
  std::string order;
  double nu = 0;
  double value = 0;
};

struct SuitabilityReport {
  double sup_observed = 0;
  bool pass = false;
  std::vector<SuitabilityWitness> witnesses;  // top 5, largest first
  std::int64_t non_integer_count = 0;
  std::int64_t gap_checked = 0;
  std::int64_t gap_violations = 0;
  std::int64_t bound_one_violations = 0;        // 1/((nu+1)|sin nu pi|) >= 1
  std::int64_t bound_three_halves_violations = 0;  // 1/(nu |sin nu pi|) >= 3/2
};

/// sup over non-integer members of 1/|(2 kappa)^nu sin(nu pi) Gamma(nu+1)|.
SuitabilityReport kappa_suitable(const OrderFamily& family, double kappa, double bound = 1.0);

struct ConeMode {
  Order nu;
  std::int64_t multiplicity = 1;
  KernelExpansion expansion;
};

struct SupportReport {
  std::vector<std::string> negative_exponents;
  bool contains_nu_zero = false;
  bool holomorphic = true;
  /// Negative exponents are exactly {(0,-1)} when nu = 0 is present, none otherwise.
  bool structure_ok = true;
  std::size_t total_terms = 0;
};

struct ConeKernel {
  std::vector<ConeMode> modes;
  SupportReport report;
  /// Multiplicity-weighted sum in lexicographic pairs (all orders rational only).
  std::optional<Series<Complex>> combined;
};

ConeKernel cone_kernel_modes(const OrderFamily& family, double x, double y, int K);

/// S^1 kernel at angles (theta_p, theta_q): modes nu = |k| with
/// eigenfunctions e^{ik theta}/sqrt(2 pi), both signs of k for nu > 0.
Complex s1_assemble(const ConeKernel& kernel, const LogPoint& lambda, double theta_p, double theta_q);

enum class HsWeight { Exponential, Gaussian };
std::string_view to_string(HsWeight weight);

struct HsParams {
  double kappa = 3.0;
  double c = 1.0;
  int k = 0;
  double R = 1.0;
  int part = 1;  // j in {1, 2}
  double cutoff = 40.0;
  HsWeight weight = HsWeight::Exponential;
  std::int64_t node_budget = 4'000'000;
  double rel_tol = 1e-9;
};

struct HsReport {
  double quadrature = 0;  // integral over the cut square [c, L]^2
  double tail = 0;        // bound for the region beyond L
  double lhs = 0;         // quadrature + tail
  double constant = 0;    // C(nu, kappa)
  double rhs = 0;         // (R^{-2k} C)^2
  bool pass = false;
  std::int64_t nodes = 0;
  std::string assembly;
};

/// Weighted Hilbert-Schmidt norm of the k-th coefficient kernel (sharp
/// cutoff at c) against its constant built from separable majorants.
HsReport hs_bound_check(const Order& nu, const HsParams& params);

struct MomentCheck {
  double quadrature = 0;
  double bound = 0;
  bool pass = false;
};

/// int_c^inf x^{2nu+1} e^{2Rx - kappa x^2} dx against Gamma(nu+1)/(2 (kappa/2)^{nu+1}).
MomentCheck gaussian_moment_check(double nu, double kappa, double c, double R);

}  // namespace hahn

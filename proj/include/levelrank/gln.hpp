#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levelrank/abacus.hpp"
#include "levelrank/affine.hpp"
#include "levelrank/blocks.hpp"
#include "levelrank/limits.hpp"

namespace levelrank {

/// A Phi_m-cuspidal datum for GL_n: an m-core mu with |mu| <= n and
/// |mu| = n mod m. The relative Weyl group is S_{N,m} with N = (n - |mu|)/m.
class CuspidalDatum {
 public:
  /// Throws PreconditionError for an invalid datum.
  CuspidalDatum(int n, int m, Partition mu);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] const Partition& mu() const noexcept { return mu_; }
  [[nodiscard]] int weyl_rank() const noexcept { return (n_ - mu_.size()) / m_; }

 private:
  int n_;
  int m_;
  Partition mu_;
};

/// Cyclotomic Hecke parameters x_sigma -> x^m, x_{tau,j} -> x^{exponents[j]}.
struct HeckeSpec {
  int m = 1;
  std::vector<int> b;          // b_m(mu), b[0] == 0
  int sigma_exponent = 1;      // == m
  std::vector<int> exponents;  // m*b[j] + j
};

/// Partitions rho of n with m-core mu, reverse lexicographic.
std::vector<Partition> hc_series(int n, int m, const Partition& mu, const Limits& limits = {});

/// The shifted m-quotient big_upsilon(m, rho, length(mu)). Throws
/// PreconditionError if rho does not have m-core mu.
ChargedMultipartition chi(const Partition& rho, int m, const Partition& mu);

/// Charge vector of big_upsilon(m, mu, length(mu)) for an m-core mu.
std::vector<int> b_vector(int m, const Partition& mu);
HeckeSpec hecke_spec(int m, const Partition& mu);

/// The m-charge s mod l with m*s = m*b_m(mu) + (0, 1, .., m-1) (mod l), each
/// entry in [0, l). Requires gcd(l, m) == 1.
std::vector<int> effective_charge(int l, int m, const Partition& mu);

std::vector<Partition> series_intersection(int n, int l, const Partition& lambda, int m,
                                           const Partition& mu, const Limits& limits = {});

enum class WitnessSource { kNone, kSupplied, kSearched, kSearchExhausted };

struct SideReport {
  int level = 1;               // number of components (l on the left, m on the right)
  int modulus = 1;             // block modulus (m on the left, l on the right)
  std::vector<int> b;          // charges of chi images
  std::vector<int> effective;  // block charge, entries in [0, modulus)
  std::vector<ChargedMultipartition> images;
  std::optional<BlockKey> block;
  std::size_t block_size = 0;  // members of the full block, 0 when no single block
  bool single_block = false;
  std::vector<int> twisted;    // w . b, when a witness is known
  bool congruence_componentwise = false;
  bool congruence_multiset = false;
};

struct DualityReport {
  int n = 0;
  int l = 1;
  Partition lambda;
  int m = 1;
  Partition mu;
  int shift_bound = 0;
  std::vector<Partition> intersection;
  SideReport left;   // l-multipartitions, blocks at modulus m
  SideReport right;  // m-multipartitions, blocks at modulus l
  std::optional<AffinePermutation> w_l;
  std::optional<AffinePermutation> w_m;
  WitnessSource witness_source = WitnessSource::kNone;
  bool diagram_ok = false;
  bool single_block_ok = false;
  bool congruence_componentwise = false;
  bool congruence_multiset = false;
  std::int64_t elapsed_us = 0;

  /// Single blocks on both sides, a commuting diagram, and the multiset
  /// congruence on both sides.
  [[nodiscard]] bool pass() const noexcept {
    return diagram_ok && single_block_ok && congruence_multiset;
  }
};

/// Checks the GL_n level-rank statements for one pair of cuspidal data:
/// single blocks on each side, a commuting square
///   big_upsilon_ml(l, m, w_l . chi_l(rho)) == w_m . chi_m(rho)
/// for every rho in the intersection, and the charge congruence for the
/// witnesses. Supplied witnesses are verified as given; otherwise pairs are
/// searched in order of (max shift of w_l, perm index of w_l, shifts of w_l),
/// and for each w_l the smallest matching w_m by (max shift, perm index,
/// shifts). Witnesses that also satisfy the multiset congruence on both sides
/// are preferred. Requires gcd(l, m) == 1.
DualityReport verify_duality(
    int n, int l, const Partition& lambda, int m, const Partition& mu, int shift_bound,
    const std::optional<std::pair<AffinePermutation, AffinePermutation>>& witnesses = std::nullopt,
    const Limits& limits = {});

/// Every valid (lambda, mu) for every n in [1, n_max]; reports ordered by
/// (n, lambda, mu) in reverse lexicographic order.
std::vector<DualityReport> duality_sweep(int n_max, int l, int m, int shift_bound,
                                         const Limits& limits = {}, unsigned threads = 0);

/// All m-cores of size <= n congruent to n mod m.
std::vector<Partition> cuspidal_cores(int n, int m, const Limits& limits = {});

int gcd_int(int a, int b);

}  // namespace levelrank

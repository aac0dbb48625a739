#ifndef CONFSPACE_SPECSEQ_HPP
#define CONFSPACE_SPECSEQ_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "confspace/gcalg.hpp"
#include "confspace/invariants.hpp"
#include "confspace/series.hpp"

namespace confspace {

struct SpectralOptions {
  int workers = 1;
  bool modular_prescreen = false;
};

/// Dimensions attached to one bidegree (p, q) of the invariant E2 page.
struct BidegreeDims {
  std::size_t e2_inv = 0;
  std::size_t ker = 0;    // kernel of d leaving (p, q)
  std::size_t im_in = 0;  // image of d arriving at (p, q)
  std::size_t e3 = 0;
};

using Bidegree = std::pair<int, int>;

struct SpectralReport {
  int n = 0;
  std::map<Bidegree, BidegreeDims> dims;
  /// (p, q, a) -> dim of the E3 invariants of Hodge type (a, p + 2q - a).
  std::map<std::tuple<int, int, int>, std::size_t> e3_hodge;
  std::vector<std::int64_t> betti;
  HodgeTable hodge;
  bool purity_ok = false;
  std::vector<Bidegree> violations;
  std::optional<bool> series_match;

  std::size_t e3(int p, int q) const;
};

/// Raised when ranks or weights are inconsistent; always a bug.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant E2 dimensions, kernels, images and E3 dimensions for every
/// bidegree with a nonempty quotient.
SpectralReport e3_dims(int n, const SpectralOptions& opts = {});

/// Same, reusing an existing E2 algebra.
SpectralReport e3_dims(const QuotientAlgebra& algebra, const SpectralOptions& opts = {});

/// Sets purity_ok and violations: nonzero E3 only at p - q in {0, 1}.
bool purity_check(SpectralReport& report);

/// Fills betti and hodge; throws ConsistencyError if a surviving bidegree
/// fails p + 2q = w(p + q) or a Hodge type fails a + b = w(i).
void betti_and_hodge(SpectralReport& report);

/// Every d_r with r >= 3 leaving a nonzero E3 bidegree lands in a zero one.
bool higher_differentials_vanish(const SpectralReport& report);

struct SeriesVerdict {
  bool match = true;
  std::vector<std::string> mismatches;
};

/// Compares report.betti with the decoded t^n coefficient of the closed form,
/// and (when with_hodge) report.hodge with the four-variable decoding.
SeriesVerdict verify_against_series(const SpectralReport& report, bool with_hodge = true);

/// Betti numbers and Hodge table read off the closed-form series alone.
std::vector<std::int64_t> series_betti(int n);
HodgeTable series_hodge(int n);

/// Full pipeline: e3_dims, purity_check, betti_and_hodge, verify_against_series.
SpectralReport spectral_report(int n, const SpectralOptions& opts = {});

}  // namespace confspace

#endif  // CONFSPACE_SPECSEQ_HPP

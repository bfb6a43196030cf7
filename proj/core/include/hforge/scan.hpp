#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hforge/core.hpp"
#include "hforge/orbits.hpp"

/// Parameter-space exploration: defect maps over the zeta lens, the 6^4
/// Butson census of the order-9 Fourier orbit, and the Backelin suborbit /
/// intersection machinery.
namespace hforge::scan {

/// Rectangular grid over the zeta plane. Points outside the lens and the two
/// degenerate points +1/-1 are skipped, not recorded.
struct GridSpec {
  double re_min = -3.2;
  double re_max = 3.2;
  double im_min = -3.2;
  double im_max = 3.2;
  std::size_t resolution = 401;  // points per axis
  double tol = kRankTol;         // rank threshold for the defect engine
  std::vector<std::pair<int, int>> branches = {{+1, +1}};
};

struct ScanRecord {
  cplx zeta;
  std::pair<int, int> branch;
  long defect = 0;
  bool reliable = true;
};

struct CensusResult {
  std::map<long, long> histogram;  // defect value -> count
  long total = 0;
};

/// Defect at every in-lens grid point, for every requested branch, emitted in
/// row-major grid order (im outer, re inner). Grid rows are processed in
/// parallel; the output order is deterministic regardless of thread count.
/// threads = 0 picks the hardware concurrency.
std::vector<ScanRecord> zeta_defect_scan(const GridSpec& g, unsigned threads = 0);

/// CSV with header re_zeta,im_zeta,branch_xy,branch_uw,defect,reliable and
/// 12 significant digits on the reals.
void scan_to_csv(const std::vector<ScanRecord>& records, std::ostream& out);
std::string scan_to_csv(const std::vector<ScanRecord>& records);

/// Grid points whose defect reaches min_defect: the raw-data mask for the
/// anomalous-defect loci. No curve fitting is attempted on it.
std::vector<cplx> defect_mask(const std::vector<ScanRecord>& records, long min_defect);

/// Defect histogram over all 6^4 = 1296 sixth-root enphasings of the order-9
/// Fourier orbit. Any unreliable rank decision aborts with UnreliableRankError
/// (the census is meant to be exact).
CensusResult fourier_butson_census();
std::string census_to_json(const CensusResult& c);

/// The three one-parameter Backelin suborbit families with generic defect 6,
/// indexed by n = 0, 1, 2:
///   VFromUSquared:  v = w9^e(n) * u^2
///   UFromVSquared:  u = w9^e(n) * v^2
///   Product:        u * v = w9^e(n)
/// where e(n) = (8 - 3n) mod 9 = -(1 + 3n) mod 9.
enum class BackelinFamily { VFromUSquared, UFromVSquared, Product };

/// Exponent e(n) of the family constraint.
int backelin_family_exponent(int n);

/// `count` random points on the chosen suborbit (the free parameter sampled
/// uniformly on the unit circle, the partner derived from the constraint),
/// with their defects.
std::vector<std::pair<orbits::BackelinParams, long>> backelin_suborbit_samples(
    int n, BackelinFamily family, int count, unsigned long seed = 0x9e3779b9u);

/// A pairwise intersection point of the nine suborbit loci. Both coordinates
/// are ninth roots of unity, stored as exponents of w9.
struct BackelinIntersection {
  int u_exp = 0;
  int v_exp = 0;
  orbits::BackelinParams params;
  long defect = 0;
};

/// All pairwise intersections of the nine loci, solved exactly in ninth-root
/// exponent arithmetic and deduplicated. The result has exactly 27 points
/// (every one a triple point, one locus from each family) or an internal
/// consistency error is thrown; each point has defect 10.
std::vector<BackelinIntersection> backelin_intersections();

}  // namespace hforge::scan

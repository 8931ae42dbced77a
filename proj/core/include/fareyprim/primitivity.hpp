#ifndef FAREYPRIM_PRIMITIVITY_HPP_
#define FAREYPRIM_PRIMITIVITY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/fsequence.hpp"

namespace fareyprim {

/// Rows are the two words, columns the exponent sums of a and b.
struct AbelianMatrix {
  std::array<std::array<std::int64_t, 2>, 2> rows{};

  std::int64_t determinant() const noexcept {
    return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  }
};

AbelianMatrix abelianization(const GenPair& pair);

enum class Verdict { Basis, ProperSubgroup };

/// Elementary Nielsen moves on a pair (x, y), named by their effect.
enum class NielsenMove : std::uint8_t {
  XtoXY,
  XtoXYinv,
  XtoYX,
  XtoYinvX,
  YtoYX,
  YtoYXinv,
  YtoXY,
  YtoXinvY,
  // length-preserving; applied only once reduction stops
  InvertX,
  InvertY,
  Swap,
};

struct BasisCertificate {
  Verdict verdict = Verdict::ProperSubgroup;
  /// Vertices of the folded core graph (0 when produced by Nielsen reduction).
  std::size_t folding_vertex_count = 0;
  /// Edges of the folded core graph (0 when produced by Nielsen reduction).
  std::size_t folding_edge_count = 0;
  /// Nielsen moves in application order (empty when produced by folding).
  std::vector<NielsenMove> nielsen_trace;
  /// Pair where Nielsen reduction stopped.
  GenPair terminal;
};

/// Folds the wedge of the two labelled loops into the based core graph of
/// the subgroup they generate. Basis iff that graph is the two-petal rose.
/// Both words must be nonempty (throws std::invalid_argument otherwise).
BasisCertificate stallings_basis_check(const GenPair& pair);

/// Greedy first-improvement Nielsen reduction in the fixed order of
/// NielsenMove, accepting a product move only if total length drops. Basis
/// iff it ends at two single letters on distinct generators; the trace then
/// closes with the inversions and swap that reach (a, b).
BasisCertificate nielsen_reduce(const GenPair& pair);

struct PairFailure {
  Rational left;
  Rational right;
  std::string reason;
};

struct NeighborPairReport {
  std::size_t pairs_checked = 0;
  std::size_t basis_count = 0;
  std::vector<PairFailure> failures;
};

/// Every unordered same-sign neighbour pair (0/1 and 1/0 included, with the
/// scheme's own base words) with both levels <= max_level: both oracles
/// must say Basis and |det| must be 1. Work is sharded across `threads`
/// workers (0 = default); the report does not depend on the thread count.
NeighborPairReport verify_neighbor_pairs(std::int64_t max_level, SignFilter sign,
                                         unsigned threads = 0);

/// JSON: {"pairs_checked": n, "basis_count": n, "failures": [...]}.
std::string to_json(const NeighborPairReport& report);

std::string to_string(Verdict v);
std::string to_string(NielsenMove m);

}  // namespace fareyprim

#endif  // FAREYPRIM_PRIMITIVITY_HPP_

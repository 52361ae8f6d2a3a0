#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "quivar/rational.hpp"
#include "quivar/rep.hpp"

namespace quivar {

/// A path in the doubled quiver as the sequence of arrow ids traversed,
/// first arrow first. Words are composable: head of each arrow equals the
/// tail of the next.
using Word = std::vector<int>;

struct IncompatibleRecords : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInAttractingSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The closed-orbit separating functions of a representation, evaluated on
/// all words up to a length cap:
///   traces[word]  = tr(B_word) for closed words,
///   hub0[i]       = b_i a_i (the empty word based at vertex i),
///   hubs[word]    = b_end * B_word * a_start, a W_start -> W_end matrix.
struct InvariantRecord {
  int cap = 0;
  DimVec w;
  std::map<Word, std::complex<double>> traces;
  std::vector<CMat> hub0;
  std::map<Word, CMat> hubs;
};

/// Evaluate the record. cap < 0 selects the default (sum v)^2, which is
/// enough to separate closed orbits at these sizes. Beware: work grows like
/// (max out-degree)^cap.
InvariantRecord invariantRecord(const Rep& r, int cap = -1);

/// Entrywise comparison within tol (tol = 0 demands exact equality).
/// Records over different framings, caps or key sets cannot be compared and
/// throw IncompatibleRecords.
bool recordsEqual(const InvariantRecord& x, const InvariantRecord& y, double tol);

struct Membership {
  bool inT0 = false;       // the t -> 0 limit under the framing subgroup exists
  bool inT0Tilde = false;  // ... and lands in the W^2-only locus
  bool inT0Minus = false;  // the t -> infinity limit exists
};

/// Saturation-based membership: grow the smallest B-invariant graded
/// subspace containing a(W^2) (resp. a(W), a(W^1)) and test where b sends
/// it. Rank cuts use tol * sigma_max.
Membership membership(const Rep& r, const FramingSplit& s, double tol = 1e-9);

/// A representation with exact Gaussian-rational entries, for tolerance-free
/// membership decisions. Shapes follow the same conventions as Rep.
struct ExactRep {
  Quiver quiver;
  DimVec v, w;
  std::vector<RatCMat> B;
  std::vector<RatCMat> a, b;
};

/// Exact copy of a floating-point representation (doubles are dyadic
/// rationals, so this is lossless).
ExactRep exactify(const Rep& r);

/// Same decisions as membership(), but over the Gaussian rationals; no
/// tolerance is involved.
Membership membershipExact(const ExactRep& r, const FramingSplit& s);

/// Record of the t -> 0 limit point for r in the attracting set: traces are
/// unchanged and every hub keeps only its W^1 -> W^1 and W^2 -> W^2 blocks.
/// Throws NotInAttractingSet when membership says the limit does not exist.
InvariantRecord limitInvariants(const Rep& r, const FramingSplit& s, int cap = -1,
                                double tol = 1e-9);

}  // namespace quivar

#pragma once

#include "staircase/graph.hpp"
#include "staircase/numeric.hpp"

#include <string>

namespace staircase {

/// Which text of the theorem table to evaluate.
enum class Transcription { Printed, Corrected };

/// Kernel roots fed into the closed forms. t2 is unused for KG.
struct TheoremRoots {
  BigFloat t1;
  BigFloat t2;
};

/// The printed root branches that pass the residual gate: KG uses its single
/// printed branch, Grid and RT the two largest distinct verified roots.
TheoremRoots theorem_roots(Family family, const BigFloat& x);

/// S_k(x) from the closed form at explicit roots, at working precision.
/// Throws std::domain_error naming the vanishing denominator factor.
BigFloat theorem_eval_at(Family family, int k, const BigFloat& x, const TheoremRoots& roots,
                         Transcription form = Transcription::Corrected);

/// S_k(x) with roots from theorem_roots. When |t|^k exceeds 1e20 for a root
/// the whole evaluation is repeated at twice the working precision.
BigFloat theorem_eval(Family family, int k, const BigFloat& x, Transcription form = Transcription::Corrected);

/// Same, with x exact so that a raised precision also refines x.
BigFloat theorem_eval(Family family, int k, const Rational& x, Transcription form = Transcription::Corrected);

/// Digits actually used by theorem_eval for these arguments.
unsigned theorem_precision(Family family, int k, const BigFloat& x);

}  // namespace staircase

// Closed-form product formulas, returned as exact QPoly / QRat values so
// they can be compared with engine output.
#pragma once

#include "tilinglab/regions.hpp"

namespace tilinglab {

// Number of plane partitions in an a x b x c box.
mpq_class macmahon(int a, int b, int c);

// Dent sets use doubled labels as in the region constructors. All return 0
// on the wrong cardinality.
QPoly lemma41_S(int x, int y, const LabelSet& Z);
QPoly lemma42_R_even(int x, int y, const LabelSet& Z);
QPoly lemma42_R_odd(int x, int y, const LabelSet& Z);
// Trapezoid with (X q^n + Y q^-n)/2 weights, axis at line i = k.
QPoly thmA1_S(int x, int y, const std::set<int>& W, int k);
// Weighted hexagon, symbolic X and Y.
QPoly corA3_hex(int a, int b, int c, int k);

// M(flipped) / M(original) for odd and even diagonals. The arguments are
// the original (m, n, a, b) and both label pairs.
QRat thm31_rhs(int m, int n, int a, int b, const LabelSet& L1, const LabelSet& R1, const LabelSet& L2,
               const LabelSet& R2);
QRat thm32_rhs(int m, int n, int a, int b, const LabelSet& L1, const LabelSet& R1, const LabelSet& L2,
               const LabelSet& R2);
// Dispatches on s.prime; `to` must be a flip of `from`.
QRat flip_ratio(const HSpec& from, const HSpec& to);

// Closed-form right side of the fern identity: M(num) / M(den).
QRat thm34_rhs(const FamilySpec& fs, Thm34Variant v = Thm34Variant::Statement);
// Engine-computed left side: [M(region)/M(collapsed)] * [wt(fern)/wt(collapsed fern)].
QRat thm34_lhs(const FamilySpec& fs);

}  // namespace tilinglab

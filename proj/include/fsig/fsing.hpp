// Copyright 2026 The fsigtool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSIG_FSING_HPP
#define FSIG_FSING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/groebner.hpp"
#include "fsig/rational.hpp"

namespace fsig {

/// Graded affine model of a local ring: an ambient polynomial ring, an
/// optional hypersurface equation f (absent = regular), and the dimension.
/// Normality of S/f is a documented precondition, not a computed check.
struct RingPresentation {
    RingPtr ambient;
    std::optional<Polynomial> hypersurface;
    int dimension = 0;
};

/// Builds a presentation. The dimension defaults to the Krull dimension of
/// (f) (number of variables when regular); a user-supplied value is
/// validated against it.
RingPresentation make_presentation(RingPtr ambient, std::optional<Polynomial> hypersurface,
                                   std::optional<int> dimension = std::nullopt);

/// Effective Q-divisor as a formal sum of rational multiples of principal
/// divisors. A Q-Cartier divisor of index m appears as (x, 1/m).
struct QDivisorComponent {
    Polynomial g;
    Rational coeff;  // >= 0
};
struct QDivisor {
    std::vector<QDivisorComponent> components;

    bool empty() const { return components.empty(); }
};

/// Exponent policy for finite-level colon factors: ceil(t(p^e-1)) is the
/// default; ceil(t p^e) is the variant. Both have the same limit.
enum class Rounding { ceil_qm1, ceil_q };

struct PairSpec {
    RingPresentation ring;
    QDivisor delta;
    Rounding rounding = Rounding::ceil_qm1;
};

/// One Frobenius level of splitting data.
struct SplittingRecord {
    int e = 0;
    long long q = 0;
    Ideal ideal;  // ambient preimage of the degeneracy ideal
    unsigned long long length = 0;
    Rational s_e;  // length / p^(e d)
};

struct FSignatureEstimate {
    std::vector<SplittingRecord> records;
    Rational extrapolated;  // model s_e = s + c p^{-e} fit to the last two records
};

struct CurveSample {
    Rational t;
    unsigned long long length = 0;
    Rational value;
};

struct SignatureCurve {
    int e = 0;
    long long q = 0;
    std::vector<CurveSample> samples;  // ascending in t; always non-increasing in value
};

/// The divisor of the induced p^{-e}-linear map on a coordinate divisor,
/// read along coordinate hyperplanes of the base.
struct DifferentResult {
    int e = 0;
    long long q = 0;
    Polynomial h;  // in the base ring
    std::vector<std::pair<std::string, Rational>> coefficients;  // (base var, ord_v(h)/(q-1))
    Polynomial residual;                                         // h with coordinate content removed
    bool residual_is_unit = false;
    bool coefficients_in_unit_range = false;
    bool reconstruction_ok = false;
};

/// Coordinate description of the divisor ring O_D: a polynomial ring on a
/// subset of the ambient variables together with the reduction map sending
/// each ambient variable to its image in the base.
struct BasePresentation {
    RingPtr base_ring;
    std::vector<int> base_var_in_ambient;   // ambient index of each base variable
    std::vector<Polynomial> ambient_image;  // image of each ambient variable, in base ring
};

BasePresentation make_base_presentation(const RingPresentation& pres,
                                        const std::vector<std::string>& base_vars,
                                        const std::vector<Polynomial>& ambient_images);

/// Substitution along the reduction map.
Polynomial reduce_to_base(const BasePresentation& base, const Polynomial& ambient_poly);

struct AdjunctionLevel {
    int e = 0;
    long long q = 0;
    bool admissible = false;  // m | p^e - 1
    Rational s_pair;          // s_e(R, Delta)
    std::optional<Rational> slope;  // left-derivative estimate at this e (r = e_max)
    std::optional<Rational> rhs_direct;   // s_e(O_D, Diff) on the base presentation
    std::optional<Rational> rhs_formula;  // l(R/(I_e : x^((q-1)/m))) / p^(e(d-1))
    bool rhs_agree = true;        // exact equality when both routes are defined
    bool corollary_ok = true;     // s_e(R,Delta) >= rhs - tolerance
    bool equality_case = false;   // |s_e - rhs| within tolerance: the linear case
};

struct AdjunctionReport {
    DifferentResult different;
    std::vector<AdjunctionLevel> levels;
    bool all_ok = true;
};

struct LevelValue {
    int e = 0;
    long long q = 0;
    unsigned long long length = 0;
    Rational value;
};

struct HKEstimate {
    std::vector<LevelValue> records;
    Rational extrapolated;
};

struct FptRecord {
    int e = 0;
    long long q = 0;
    long long nu = -1;  // -1 when no admissible exponent exists at this level
    Rational ratio;
};

// Tolerance table: calibration choices for the finite-level checks, all in
// one place.
namespace tolerances {
/// Max curve deviation from the predicted line: 5 / p^e.
inline Rational curve_deviation(long long q) { return Rational(5, q); }
/// Slope estimate vs. the limit value.
inline Rational slope() { return Rational(1, 20); }
/// Corollary inequality slack: 2 / p^e.
inline Rational corollary(long long q) { return Rational(2, q); }
/// Extrapolated F-signature vs. closed-form target.
inline Rational fsig_extrapolation() { return Rational(1, 100); }
/// Raw final-level s_e vs. closed-form target; also Hilbert-Kunz extrapolation.
inline Rational raw_value() { return Rational(1, 20); }
/// Cyclic-cover gap bound at the final level.
inline Rational cover_gap() { return Rational(1, 10); }
}  // namespace tolerances

/// Ambient preimage of the degeneracy ideal: (m^[q] : f^(q-1) * prod g_i^k_i)
/// with k_i from the rounding mode, times an optional ad-hoc factor g^k.
/// Computed level by level: the hypersurface part satisfies
/// I_{e+1} = (I_e^[p] : f^(p-1)) since Frobenius powers distribute over
/// colons in the ambient polynomial ring; divisor factors are individual
/// colons on top.
Ideal degeneracy_ideal(const PairSpec& pair, int e,
                       std::optional<std::pair<Polynomial, long long>> extra = std::nullopt);

SplittingRecord splitting_length(const PairSpec& pair, int e);

FSignatureEstimate fsignature_estimate(const PairSpec& pair, int e_max);

/// Exact samples of t -> s_e(R, Delta + tD) for a single-component D = (x, 1/m).
SignatureCurve signature_curve(const PairSpec& pair, const QDivisor& D, int e,
                               std::vector<Rational> grid);

/// Difference-quotient estimate of the left derivative of s(R, Delta + tD)
/// at t = 1, from the two samples t = 1 - p^{-e} and t = 1 at level r.
/// Sampling uses the ceil(t p^e) exponents, matching the exponent sequence
/// p^r - p^{r-e} that realizes these t-values exactly. Requires m | p^e - 1.
Rational left_derivative_at_one(const PairSpec& pair, const QDivisor& D, int e, int r);

DifferentResult different_hypersurface(const PairSpec& pair, const QDivisor& D, int e,
                                       const BasePresentation& base);

/// Reads the computed different as a Q-divisor on the base ring.
QDivisor different_as_divisor(const DifferentResult& diff, const BasePresentation& base);

AdjunctionReport adjunction_check(const PairSpec& pair, const QDivisor& D,
                                  const BasePresentation& base, int e_max);

HKEstimate hilbert_kunz(const RingPresentation& pres, const Ideal& I, int e_max);
LevelValue hilbert_kunz_level(const RingPresentation& pres, const Ideal& I, int e);

std::vector<FptRecord> fpt_estimate(const RingPresentation& pres, const Polynomial& g, int e_max);
FptRecord fpt_level(const RingPresentation& pres, const Polynomial& g, int e);

std::vector<LevelValue> splitting_ratio_estimate(const PairSpec& pair, int splitting_dimension,
                                                 int e_max);

// Shared helpers.
long long pow_ll(long long base, int exp);
/// Fit s_e = s + c p^{-e} through the last two samples; used by every
/// e-indexed estimate. Raw sequences are always reported alongside.
Rational extrapolate_last_two(const std::vector<Rational>& values, std::uint32_t p);
/// ceil(c * s) for a non-negative rational c and non-negative integer s.
long long ceil_scaled(const Rational& c, long long s);
long long rounded_exponent(const Rational& coeff, long long q, Rounding mode);
/// Quotient-ring length of R/J as staircase count; errors when not Artinian.
unsigned long long quotient_length(const Ideal& J);

}  // namespace fsig

#endif

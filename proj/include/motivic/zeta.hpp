#pragma once

#include <vector>

#include "motivic/motivic_class.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Kapranov zeta function (1 + T + T^2 + ...)^c mod T^(order+1); the T^k
/// coefficient is the class of the k-th symmetric power. c must lie in
/// Z[L, 1/L].
TruncatedSeries kapranov_zeta(const MotivicClass& c, int order);

/// [S^m X] for [X] = c.
MotivicClass symmetric_power_class(const MotivicClass& c, int m);

/// Coefficients of zeta_{L^n} are L^{i n} for i <= order.
VerificationReport verify_theorem1(int n, int order);

/// zeta_{L c}(T) = zeta_c(L T).
VerificationReport verify_scaling(const MotivicClass& c, int order);

/// (A(L^s T))^M = (A(T)^M)|_{T -> L^s T}.
VerificationReport verify_lemma(const TruncatedSeries& a, const MotivicClass& m, int s);

/// [S^m P^N] = [Gr(m, m + N)] = gaussian_binomial(m + N, m), together with
/// the L = 1 specialization C(m + N, m) and the level-by-level matching of
/// strata of S^m P^N with Schubert cells of Gr(m, m + N).
VerificationReport verify_theorem2_finite(int m, int n);

/// Strata of S^m CP^inf against Schubert cells of Gr(m, inf) in every
/// dimension n <= max_dim: equal counts by both conjugate indexings, a
/// dimension-preserving bijection, and filtration levels that line up.
VerificationReport verify_strata(int m, int max_dim);

/// [BGL(m)] = 1 / ((L^m - L^{m-1}) ... (L^m - 1)).
MotivicClass bgl_class(int m);

/// c_0..c_order of the zeta function of BC*, c_m = L^{m^2-m} / prod_{i<m} (L^m - L^i).
std::vector<MotivicClass> stack_zeta_bcstar(int order);

/// Displayed c_1, c_2; c_m = L^{m^2-m} [BGL(m)]; c_m (L^m - 1) = c_{m-1} L^{m-1};
/// c_m = L^{m(m-1)/2} / prod_{i=1..m} (L^i - 1).
VerificationReport verify_bcstar(int order);

}  // namespace motivic

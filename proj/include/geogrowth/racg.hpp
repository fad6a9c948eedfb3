#pragma once

// Geodesic growth of right-angled Coxeter groups on link-regular graphs,
// computed from the link-size vector ell = (ell_0, ..., ell_d) alone.
//
//   N_{m,k}  number of ordered m-cliques extending a fixed ordered k-clique
//            whose extra vertices all miss a fixed vertex u (independent of
//            the choices by link-regularity)
//   b_{m,k}  = C(m,k) N_{m,k}
//   a_m      = ell_0 ... ell_{m-1}, the number of ordered m-cliques
//   M_{i,j}  signed sum over chains j <= s1 < t1 <= s2 < t2 <= ... <= tn <= d
//            of total weight sum(t - s) = i - j of (-1)^n prod b_{t,s}
//
//   G(z) = sum_i (sum_{j<=i} a_j M_{i,j}) z^i / sum_i M_{i,0} z^i

#include <cstddef>
#include <vector>

#include "geogrowth/algebra.hpp"
#include "geogrowth/graph.hpp"

namespace geogrowth {

/// Lower-triangular table t[m][k], 0 <= k <= m <= d.
using TriangularTable = std::vector<std::vector<BigInt>>;

/// Throws PreconditionError unless ell is nonempty, nonnegative, has
/// ell.size() == d + 1 and ell[d] == 0 (maximal cliques have empty links).
void validate(const LinkProfile& profile);

/// Builds a profile from a raw ell-vector (d = ell.size() - 1) and validates it.
LinkProfile make_link_profile(std::vector<long> ell);

TriangularTable n_table_closed(const LinkProfile& profile);
TriangularTable n_table_recurrence(const LinkProfile& profile);

struct RacgCoefficients {
  std::size_t d = 0;
  LinkProfile profile;
  TriangularTable n_table;
  TriangularTable b_table;
  TriangularTable m_table;  // M_{i,j}
  std::vector<BigInt> a;    // a_0 .. a_d
};

RacgCoefficients racg_coefficients(const LinkProfile& profile);

/// Closed form via the M_{i,j} chain sums.
RationalFunction racg_growth(const LinkProfile& profile);

/// Same series via the polynomial recurrences p_m, q_m; G = q_{d+1} / p_{d+1}.
RationalFunction racg_growth_via_pq(const LinkProfile& profile);

struct PqPolynomials {
  std::vector<Polynomial> p;  // p[1] .. p[d+1]; index 0 unused
  std::vector<Polynomial> q;
};

PqPolynomials pq_polynomials(const LinkProfile& profile);

/// Explicit formula for d = 4 in terms of ell_0..ell_3.  Throws
/// PreconditionError for any other d.
RationalFunction corollary_d4(const LinkProfile& profile);

}  // namespace geogrowth

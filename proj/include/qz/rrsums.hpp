#ifndef QZ_RRSUMS_HPP
#define QZ_RRSUMS_HPP

#include "qz/cyclotomic.hpp"
#include "qz/partitions.hpp"
#include "qz/qfraction.hpp"

namespace qz {

// Rogers-Ramanujan type multisum families. Every finite sum is exact: the
// symbolic ones return fractions over factored Pochhammer denominators, the
// series ones return truncated q-expansions with monomial parameters.
//
// `base` is the Pochhammer base variable (q in the q-theoretic sections,
// z in the zeta normalizations); `t_assign` substitutes the deformation
// parameter (symbol, rational, or signed monomial).

// m-fold Andrews-Gordon sum with t^{2 sum n_i}; a Laurent polynomial.
QFraction ag_finite(int m, int n, const Term& t_assign = Term::var(Var::t), Var base = Var::q);

// natural single-power deformation t^{sum n_i} (the dagger variant).
QFraction ag_dagger(int m, int n, const Term& t_assign = Term::var(Var::t), Var base = Var::q);

enum class BrVariant { Plain, Dagger, DoubleDagger };

QFraction br_finite(BrVariant v, int m, int n, const Term& t_assign = Term::var(Var::t),
                    Var base = Var::q);

enum class SingleSumVariant { AGSingle, BrDaggerSingle };

// Bailey-type one-fold forms of the dagger sums.
QFraction single_sum(SingleSumVariant v, int m, int n);

// 2m-fold ghost-parameter sum X_N^{(m)}(a, t, base).
QFraction x_multisum(int m, int N, const Term& a_assign, const Term& t_assign, Var base = Var::q);

// a-free m-fold form of the same quantity.
QFraction x_closed(int m, int N, const Term& t_assign = Term::var(Var::t), Var base = Var::q);

// ---- series regime ----------------------------------------------------------
// Parameters must be monomials c*q^e with e >= 1 (e >= 0 tolerated where the
// formula stays a power series).

// reformulated 2m-fold u/v sum with its infinite-product prefactor
QSeries x_new_series(int m, int N, const Term& a_q, const Term& t_q, int Q);

// auxiliary series V_N^{(m)}
QSeries v_multisum_series(int m, int N, const Term& a_q, const Term& t_q, int Q);
// its m-fold evaluation with the (atq)_inf/(aq)_inf prefactor
QSeries v_expression_series(int m, int N, const Term& a_q, const Term& t_q, int Q);
// one-step recursion right-hand side (m >= 2)
QSeries v_recursion_rhs_series(int m, int N, const Term& a_q, const Term& t_q, int Q);

// a-independent expression with the (t^2q)_inf/(tq)_inf prefactor (m >= 2)
QSeries x_exp2_series(int m, int N, const Term& t_q, int Q);

// companion sum with the single (t^2 q)_{N+n_1} Pochhammer; equals
// (tq)_inf (q)_N / (t^2 q)_inf times the a-free m-fold sum (m >= 2).
QSeries x_exp2_companion_lhs_series(int m, int N, const Term& t_q, int Q);

// two-parameter transformation lemma, both sides as series
QSeries trans2_lhs_series(int M, int N, const Term& a_q, const Term& t_q, int Q);
QSeries trans2_rhs_series(int M, int N, const Term& a_q, const Term& t_q, int Q);

// n -> infinity sum sides of the central identities at t = 1, and their
// product sides.
QSeries ag_infinite_sum_series(int m, int Q);
QSeries ag_infinite_product_series(int m, int Q);
QSeries br_infinite_sum_series(int m, int Q);
QSeries br_infinite_product_series(int m, int Q);

// ---- finite key identities (symbolic, exact) ---------------------------------

QFraction x1_key_lhs(int N);                      // collapses to x_closed(1, N)
QFraction induction_key_lhs(int N, int l1);
QFraction induction_key_rhs(int N, int l1);
QFraction a_indep_key_lhs(int N, int l1);
QFraction a_indep_key_rhs(int N, int l1);
QFraction z1z2_lhs(int L, int M);                 // b plays the role of the a symbol
QFraction z1z2_rhs(int L, int M);

// ---- master polynomial --------------------------------------------------------

// Z~_{m,n}(u, t, z), an exact element of Z[u, t, z^{-1}] (integrality and
// exponent signs asserted; cached).
const LaurentPoly& master_poly(int m, int n);

// Z~_{m,n}(u,t,z) = u^{mn} z^{-mn^2} Z~_{m,n}(u^{-1}z^{2n}, u^{-1}t z^n, z)
bool master_reflection_holds(int m, int n);

// Z~ evaluated at z = zeta_r (r | n) against the closed rational form
// ((1 - t^r + u^{mr} t^r - u^{(m+1)r}) / (1 - u^r))^{n/r}.
bool sieve_closed_form_holds(int m, int n, int r, std::string* witness = nullptr);
LaurentPoly sieve_closed_form(int m, int n, int r);

// The five parametrization relations tying the deformed sums to Z~ (base q).
// ids: ag, ag-dagger, br, br-dagger, br-ddagger
bool master_parametrization_holds(const std::string& which, int m, int n);

} // namespace qz

#endif

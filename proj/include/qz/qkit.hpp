#ifndef QZ_QKIT_HPP
#define QZ_QKIT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qz/qfraction.hpp"
#include "qz/qseries.hpp"

namespace qz {

// ---- q-Pochhammer symbols -------------------------------------------------

// (A; step)_len, len >= 0, expanded: prod_{j=0}^{len-1} (1 - A*step^j).
LaurentPoly poch_poly(const Term& A, const Term& step, int len);

// General length with the fixed convention
//   (a; q)_{-n} := 1 / ((a q^{-n}; q)_n),
// so 1/(q^c;q^c)_{-n} = 0 for n >= 1. `reciprocal_zero` is set when the value
// is 1/0 under that convention (a vanishing factor ends up downstairs).
struct PochValue {
    bool reciprocal_zero = false;
    QFraction value;
};
PochValue pochhammer(const Term& A, const Term& step, int len);

// ---- q-binomial / q-multinomial -------------------------------------------

// Gaussian binomial [N M] in the given monomial base (q, q^2, z, t^{-1}, ...);
// 0 outside 0 <= M <= N. Computed by the q-Pascal recurrence, so no division.
LaurentPoly qbinom(int N, int M, const Monomial& step = mono(Var::q));

// (x;x)_N / prod (x;x)_{N_i}; InvalidComposition unless parts sum to N.
LaurentPoly qmultinom(int N, const std::vector<int>& parts, const Monomial& step = mono(Var::q));

// q-multinomial at a primitive r-th root of unity (r | N): the ordinary
// multinomial of the r-divided parts if r divides every part, else 0.
Rational qmultinom_at_root(int N, const std::vector<int>& parts, int r);

// ---- basic hypergeometric series ------------------------------------------

// {}_r phi_s with the ((-1)^n q^C(n,2))^{s-r+1} convention. Parameters and
// argument are monomials in q; an upper parameter q^{-N} truncates the sum.
struct PhiSeriesSpec {
    std::vector<Term> upper;
    std::vector<Term> lower;
    Term argument;
};

QSeries phi_eval(const PhiSeriesSpec& spec, int Q);

// ---- Bailey pairs ----------------------------------------------------------

// Pair (alpha, beta) relative to (a, q):  beta_n = sum_{k=0}^{n}
// alpha_k / ((q;q)_{n-k} (aq;q)_{n+k}). The defining relation is verified
// symbolically in (t, q).
struct BaileyPair {
    std::string name;
    Term rel_param; // the "a"
    std::function<QFraction(int)> alpha;
    std::function<QFraction(int)> beta;
};

BaileyPair bailey_pair_andrews_gordon(); // alpha with (1-tq^{2k})(t)_k/(1-t), beta = delta_{k,0}
BaileyPair bailey_pair_bressoud_dagger(); // base q^2 alpha, beta_k = 1/(q^2;q^2)_k
BaileyPair bailey_pair_trivial();        // relative to (-t, q)

// true iff the defining relation holds for 0 <= n <= n_max.
bool bailey_relation_holds(const BaileyPair& pair, int n_max, std::string* detail = nullptr);

// ---- classical identity suite ----------------------------------------------

// One named point check of a classical identity; lhs/rhs are the two series.
struct SeriesComparison {
    bool pass;
    QSeries lhs;
    QSeries rhs;
};

// ids: q-binomial-theorem, q-gauss, q-chu-vandermonde-1, q-chu-vandermonde-2,
// heine-1, heine-2, heine-3, 3phi2-iii9
std::vector<std::string> classical_identity_ids();

// Run identity `id` at the k-th deterministic parameter point (k >= 0),
// truncation Q. UnknownIdentity for bad ids.
SeriesComparison verify_classical(const std::string& id, int point_index, int Q);

// Number of built-in parameter points per classical identity.
int classical_point_count(const std::string& id);

} // namespace qz

#endif

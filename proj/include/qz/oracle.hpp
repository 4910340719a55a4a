#ifndef QZ_ORACLE_HPP
#define QZ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qz/partitions.hpp"

namespace qz {

// Brute-force ground truth over tiny finite fields. Everything here is
// enumeration: no formula from the rest of the library is trusted.

// F_{p^k} with full operation tables, elements indexed 0..q-1 as a + b*x
// (index a + b*p); x is the adjoined root for k = 2.
struct SmallField {
    int p = 2, k = 1, q = 2;
    std::vector<uint8_t> add_table, mul_table, neg_table, inv_table;

    int add(int a, int b) const { return add_table[static_cast<std::size_t>(a) * q + b]; }
    int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * q + b]; }
    int neg(int a) const { return neg_table[static_cast<std::size_t>(a)]; }
    int inv(int a) const { return inv_table[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
};

// (p, k) in {(2,1),(2,2),(3,1),(3,2)}; UnsupportedField otherwise.
// F_4 = F_2[x]/(x^2+x+1), F_9 = F_3[x]/(x^2+1).
const SmallField& build_field(int p, int k);

using Row = std::vector<uint8_t>;
using Mat = std::vector<Row>;

// dim-cap guards: enumeration refuses anything past these (TooLarge).
int oracle_dim_cap(int q);

// F_q-module with a nilpotent operator T, and optionally the scalar action
// of the quadratic extension (multiplication by the adjoined root Theta).
struct FqModule {
    const SmallField* F = nullptr;
    int dim = 0;
    Mat T;
    std::optional<Mat> theta;
};

// M_V(lambda) = direct sum of F[T]/T^{lambda_i}.
FqModule module_of_type(const SmallField& F, const Partition& la);

// Module of type la over the quadratic extension, realized over F_q with
// the Theta-action. theta_choice 0 picks x, 1 picks a second element of
// l \ k (for Theta-independence runs).
FqModule inert_module_of_type(const SmallField& F, const Partition& la, int theta_choice = 0);

// Ambient inert module A~^n over F_q: dimension 2mn (type (m^n)).
FqModule inert_ambient(const SmallField& F, int m, int n, int theta_choice = 0);
// the standard real A^n inside inert_ambient (basis rows)
Mat inert_real_part(const FqModule& ambient, int m, int n);

// Canonical subspace = RREF basis rows (possibly 0 rows).
struct SubmoduleBasis {
    Mat rows;
    int dim() const { return static_cast<int>(rows.size()); }
    bool operator<(const SubmoduleBasis& o) const { return rows < o.rows; }
    bool operator==(const SubmoduleBasis& o) const { return rows == o.rows; }
};

Mat rref(const SmallField& F, Mat m);
int rank_of(const SmallField& F, Mat m);
bool in_row_space(const SmallField& F, const Mat& basis, const Row& v);
Mat mat_mul(const SmallField& F, const Mat& a, const Mat& b);
Row apply(const SmallField& F, const Mat& op, const Row& v);
Mat subspace_intersection(const SmallField& F, const Mat& a, const Mat& b, int dim);
Mat subspace_sum(const SmallField& F, const Mat& a, const Mat& b);

// All subspaces of F^dim in RREF form.
std::vector<SubmoduleBasis> enumerate_subspaces(const SmallField& F, int dim);

// T-invariant subspaces of M (and Theta-invariant too when require_theta).
std::vector<SubmoduleBasis> enumerate_submodules(const FqModule& M, bool require_theta = false);

bool is_t_invariant(const FqModule& M, const SubmoduleBasis& W);

// type of the submodule W (conjugate parts dim T^{j-1}W - dim T^j W);
// NotTInvariant if T does not stabilize W.
Partition module_type(const FqModule& M, const SubmoduleBasis& W);
// type of M itself
Partition module_type(const FqModule& M);
// type of M/W
Partition cotype(const FqModule& M, const SubmoduleBasis& W);
// type of U/W for nested T-invariant subspaces W <= U
Partition quotient_type(const FqModule& M, const Mat& U, const Mat& W);
// type over the quadratic extension (W must be T- and Theta-invariant)
Partition type_over_extension(const FqModule& M, const Mat& W);

// # T-invariant subspaces of type mu / of cotype mu
long count_by_type(const FqModule& M, const Partition& mu);
long count_by_cotype(const FqModule& M, const Partition& mu);
// submodules with (type, cotype) = (mu, nu)
long count_by_type_cotype(const FqModule& M, const Partition& mu, const Partition& nu);

// invertible F_q-endomorphisms commuting with T (and Theta when present)
long count_automorphisms(const FqModule& M);

// totally real: W intersect Theta W = 0; spanning (cTR): W + Theta W = M.
bool is_totally_real(const FqModule& M, const SubmoduleBasis& W);
bool is_ctr(const FqModule& M, const SubmoduleBasis& W);

long count_tr_grassmannian(const FqModule& ambient, const Partition& la);
long count_ctr_grassmannian(const FqModule& ambient, const Partition& cotype_la);

enum class FlagSide { Pr1, Pr2 };

// TR flags W1 <= W2 with types (mu, la): fibers of pr1 (over W1) or pr2
// (over W2); cTR flags W2 <= W1 with cotypes (la, mu), same projections.
std::map<SubmoduleBasis, long> tr_flag_fibers(const FqModule& ambient, const Partition& la,
                                              const Partition& mu, FlagSide side);
std::map<SubmoduleBasis, long> ctr_flag_fibers(const FqModule& ambient, const Partition& la,
                                               const Partition& mu, FlagSide side);

// boundary-lattice invariants for W_b <= A^n inside A~^n with A-cotype la:
// (a) A~ W_b \cap A^n = W_b, (b) type_A(A~W_b / W_b) = (m^n) - la,
// (c) type_{A~}(A~W_b) = (m^n) - la with extension rank n - la'_m.
struct BoundaryCheck {
    bool part_a = false, part_b = false, part_c = false;
};
BoundaryCheck boundary_invariants_check(const FqModule& ambient, int m, int n,
                                        const SubmoduleBasis& Wb);

// orbit count of Aut_{A~}(A~^n) on extension submodules of a fixed type.
long extension_orbit_count(const FqModule& ambient, const Partition& type);

} // namespace qz

#endif

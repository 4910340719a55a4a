#ifndef QZ_PARTITIONS_HPP
#define QZ_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "qz/qkit.hpp"

namespace qz {

// Integer partition: weakly decreasing positive parts, empty allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int m, int n); // (m^n)

    const std::vector<int>& parts() const { return parts_; }
    int size() const;               // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;          // 1-based; 0 beyond the length
    int conj_part(int i) const;     // lambda'_i without materializing lambda'

    Partition conjugate() const;
    bool contains(const Partition& mu) const;         // mu subseteq lambda
    bool fits_in_rectangle(int m, int n) const;

    std::string str() const;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& la);

// nu_i = m - mu_{n+1-i}; involutive. NotInRectangle unless mu fits in (m^n).
Partition complement_in_rectangle(const Partition& mu, int m, int n);

// Every mu subseteq (m^n), each exactly once, lexicographically ascending by
// part vector.
std::vector<Partition> partitions_in_rectangle(int m, int n);

// All partitions of total size n (for oracle sweeps).
std::vector<Partition> partitions_of_size(int n);

// Coarse Hall polynomial g^lambda_mu: submodules of type mu (equivalently
// cotype mu) of a module of type lambda. 0 when mu is not contained in
// lambda. The base is the given monomial (q, q^2, z, ...).
LaurentPoly hall_g(const Partition& la, const Partition& mu, const Monomial& step = mono(Var::q));

// |Aut| of the module of type lambda: a_lambda = x^{sum lambda'_i^2}
// prod (x^{-1}; x^{-1})_{lambda'_i - lambda'_{i+1}} cleared to a polynomial.
LaurentPoly aut_count(const Partition& la, const Monomial& step = mono(Var::q));

// a_lambda(q^2) / a_lambda(q), an exact polynomial quotient: the number of
// real structures of a module of type lambda over the quadratic extension.
LaurentPoly real_structure_count(const Partition& la);

// Flag-fiber count for rectangular ambient type (m^n). Computed both from
// the Grassmannian-ratio formula and from the product simplification; the
// two must agree (FormMismatch) and the result lies in N[q].
LaurentPoly B_count(int m, int n, const Partition& la, const Partition& mu);

} // namespace qz

#endif

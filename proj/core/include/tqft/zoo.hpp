#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tqft/frobenius.hpp"

namespace tqft {

// Finite group given by its Cayley table over elements 0..order-1.
class GroupTable {
 public:
  // Throws InputError unless the table is a group law (closure, identity, inverses, associativity).
  GroupTable(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool abelian() const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// Classes are sorted by smallest element; the identity class is first.
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);

// "Z/n" or "cyclic(n)", "S3", "dihedral(n)" or "Dn" (order 2n).
GroupTable preset_group(std::string_view name);

enum class CenterCounit {
  kDijkgraafWitten,  // eps(g) = delta_{g,1} / |G|; surface invariants count homomorphisms
  kRestricted,       // eps(g) = delta_{g,1}
};

FrobeniusAlgebra semisimple(int n);
// Mat_n(Q) with elementary matrices E_ij (basis index i*n+j) and the trace counit.
FrobeniusAlgebra matrix_algebra(int n);
// C[G] with eps(g) = delta_{g,1}; commutative iff G is abelian.
FrobeniusAlgebra group_algebra(const GroupTable& g);
FrobeniusAlgebra center_of_group_algebra(const GroupTable& g,
                                         CenterCounit counit = CenterCounit::kDijkgraafWitten);

// |Hom(pi_1(Sigma_g), G)| / |G| by enumerating 2g-tuples with prod [a_i, b_i] = 1.
// Refuses (GuardError) above max_tuples tuples.
Scalar hom_count_oracle(const GroupTable& g, int genus, double max_tuples = 1.7e7);

// "K^n", "Mat<n>", "ZC[<group>]", "C[<group>]".
FrobeniusAlgebra preset_algebra(std::string_view name);
std::vector<std::string> preset_algebra_names();

}  // namespace tqft

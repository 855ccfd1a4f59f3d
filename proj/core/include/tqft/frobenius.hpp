#pragma once

#include <span>
#include <string>
#include <vector>

#include "tqft/linalg.hpp"
#include "tqft/rational.hpp"

namespace tqft {

// Coordinates with respect to the algebra's basis.
using Vector = std::vector<Scalar>;

// An element of A^{(x) order}, stored row-major over basis multi-indices.
// Order 0 holds a single scalar.
class Tensor {
 public:
  Tensor(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  size_t size() const { return data_.size(); }

  Scalar& operator[](size_t flat) { return data_[flat]; }
  const Scalar& operator[](size_t flat) const { return data_[flat]; }
  Scalar& at(std::span<const int> index);
  const Scalar& at(std::span<const int> index) const;

  const std::vector<Scalar>& data() const { return data_; }
  bool operator==(const Tensor& other) const = default;

 private:
  int dim_;
  int order_;
  std::vector<Scalar> data_;
};

struct ValidationReport {
  bool associative = false;
  bool has_unit = false;
  bool commutativity_asserted = false;
  bool commutative = false;
  bool nondegenerate = false;
  Vector unit;
  Matrix eta;
  Matrix eta_inverse;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// A finite-dimensional algebra with structure constants c_ij^k and a counit.
// Validation runs once at construction; the result is available via report().
class FrobeniusAlgebra {
 public:
  // mult has dim^3 entries, index (i*dim + j)*dim + k for e_i e_j = sum_k c_ij^k e_k.
  // Throws InputError when the sizes do not fit together.
  FrobeniusAlgebra(std::vector<std::string> basis, std::vector<Scalar> mult, Vector counit,
                   bool commutative);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const Scalar& c(int i, int j, int k) const {
    return mult_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return mult_; }
  const Vector& counit_values() const { return counit_; }
  bool commutative_flag() const { return commutative_; }
  const ValidationReport& report() const { return report_; }

  // These throw AlgebraError unless report().ok().
  const Vector& unit() const;
  const Matrix& eta() const;
  const Matrix& eta_inverse() const;

  Vector basis_vector(int i) const;
  Vector zero() const { return Vector(dim_); }

 private:
  void require_valid() const;

  int dim_;
  std::vector<std::string> basis_;
  std::vector<Scalar> mult_;
  Vector counit_;
  bool commutative_;
  ValidationReport report_;
};

ValidationReport validate(const FrobeniusAlgebra& alg);

Vector multiply(const FrobeniusAlgebra& alg, const Vector& u, const Vector& v);
Scalar counit(const FrobeniusAlgebra& alg, const Vector& v);
Scalar pairing_eta(const FrobeniusAlgebra& alg, const Vector& u, const Vector& v);

// The covector eta(u, .) and its inverse.
Vector lambda(const FrobeniusAlgebra& alg, const Vector& u);
Vector lambda_inverse(const FrobeniusAlgebra& alg, const Vector& covector);

// delta(v) = sum_ab (v e_a) (x) eta^{ab} e_b.
Tensor comultiply(const FrobeniusAlgebra& alg, const Vector& v);
Tensor comultiply_unit(const FrobeniusAlgebra& alg);

Vector euler_element(const FrobeniusAlgebra& alg);

// TQFT operations; these refuse non-commutative algebras with AlgebraError.
Scalar omega(const FrobeniusAlgebra& alg, int genus, std::span<const Vector> vectors);
Scalar surface_invariant(const FrobeniusAlgebra& alg, int genus);

// The linear map A^{(x)m} -> A^{(x)n} of a genus-g cobordism.
// data is indexed by (inputs..., outputs...) row-major.
class CobordismTensor {
 public:
  CobordismTensor(int genus, int inputs, int outputs, int dim);

  int genus() const { return genus_; }
  int inputs() const { return inputs_; }
  int outputs() const { return outputs_; }
  int dim() const { return dim_; }
  size_t size() const { return data_.size(); }

  Scalar& operator[](size_t flat) { return data_[flat]; }
  const Scalar& operator[](size_t flat) const { return data_[flat]; }
  const Scalar& at(std::span<const int> index) const;

  // Feed one vector per input slot; returns an order-`outputs` tensor.
  Tensor apply(std::span<const Vector> in) const;

  bool operator==(const CobordismTensor& other) const = default;

 private:
  int genus_;
  int inputs_;
  int outputs_;
  int dim_;
  std::vector<Scalar> data_;
};

CobordismTensor cobordism_tensor(const FrobeniusAlgebra& alg, int genus, int inputs, int outputs);

// Glue the last j outputs of `second` to the first j inputs of `first`.
// Inputs of the result: inputs of `second`, then the remaining inputs of `first`.
// Outputs of the result: outputs of `first`, then the remaining outputs of `second`.
// Genus is g1 + g2 + j - 1.
CobordismTensor sew(const CobordismTensor& first, const CobordismTensor& second, int j);

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);
FrobeniusAlgebra tensor_product(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

}  // namespace tqft

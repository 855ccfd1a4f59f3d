#include "tqft/frobenius.hpp"

#include <functional>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

size_t ipow(int base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
  return r;
}

size_t flatten(std::span<const int> index, int dim) {
  size_t flat = 0;
  for (int i : index) flat = flat * dim + static_cast<size_t>(i);
  return flat;
}

void require_tqft(const FrobeniusAlgebra& alg) {
  if (!alg.report().ok()) throw AlgebraError("algebra failed validation: " + alg.report().failures.front());
  if (!alg.commutative_flag()) {
    throw AlgebraError("TQFT operations need a commutative Frobenius algebra");
  }
}

// Applies `m` (dim x dim) to one axis of a row-major tensor: t'[..b..] = sum_a t[..a..] m(a,b).
void transform_axis(std::vector<Scalar>& data, int dim, int order, int axis, const Matrix& m) {
  size_t inner = ipow(dim, order - axis - 1);
  size_t outer = ipow(dim, axis);
  std::vector<Scalar> fiber(dim);
  for (size_t o = 0; o < outer; ++o) {
    for (size_t in = 0; in < inner; ++in) {
      size_t base = o * dim * inner + in;
      for (int b = 0; b < dim; ++b) {
        fiber[b] = 0;
        for (int a = 0; a < dim; ++a) {
          const Scalar& x = data[base + a * inner];
          if (x != 0 && m(a, b) != 0) fiber[b] += x * m(a, b);
        }
      }
      for (int b = 0; b < dim; ++b) data[base + b * inner] = fiber[b];
    }
  }
}

}  // namespace

Tensor::Tensor(int dim, int order) : dim_(dim), order_(order), data_(ipow(dim, order)) {}

Scalar& Tensor::at(std::span<const int> index) { return data_[flatten(index, dim_)]; }
const Scalar& Tensor::at(std::span<const int> index) const { return data_[flatten(index, dim_)]; }

FrobeniusAlgebra::FrobeniusAlgebra(std::vector<std::string> basis, std::vector<Scalar> mult,
                                   Vector counit, bool commutative)
    : dim_(static_cast<int>(basis.size())),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      counit_(std::move(counit)),
      commutative_(commutative) {
  if (dim_ == 0) throw InputError("algebra must have at least one basis element");
  if (mult_.size() != ipow(dim_, 3)) {
    throw InputError("structure constants must have dim^3 = " + std::to_string(ipow(dim_, 3)) +
                     " entries");
  }
  if (static_cast<int>(counit_.size()) != dim_) throw InputError("counit must have dim entries");
  report_ = validate(*this);
}

void FrobeniusAlgebra::require_valid() const {
  if (!report_.ok()) throw AlgebraError("algebra failed validation: " + report_.failures.front());
}

const Vector& FrobeniusAlgebra::unit() const {
  require_valid();
  return report_.unit;
}

const Matrix& FrobeniusAlgebra::eta() const {
  require_valid();
  return report_.eta;
}

const Matrix& FrobeniusAlgebra::eta_inverse() const {
  require_valid();
  return report_.eta_inverse;
}

Vector FrobeniusAlgebra::basis_vector(int i) const {
  Vector v(dim_);
  v[i] = 1;
  return v;
}

ValidationReport validate(const FrobeniusAlgebra& alg) {
  const int r = alg.dim();
  ValidationReport rep;

  rep.associative = true;
  for (int i = 0; i < r && rep.associative; ++i) {
    for (int j = 0; j < r && rep.associative; ++j) {
      for (int k = 0; k < r && rep.associative; ++k) {
        for (int l = 0; l < r; ++l) {
          Scalar lhs, rhs;
          for (int m = 0; m < r; ++m) {
            lhs += alg.c(i, j, m) * alg.c(m, k, l);
            rhs += alg.c(j, k, m) * alg.c(i, m, l);
          }
          if (lhs != rhs) {
            rep.associative = false;
            break;
          }
        }
      }
    }
  }
  if (!rep.associative) rep.failures.push_back("multiplication is not associative");

  // u e_i = e_i and e_i u = e_i, linear in u.
  Matrix sys(2 * r * r, r);
  std::vector<Scalar> rhs(2 * r * r);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) {
      int row = i * r + k;
      for (int a = 0; a < r; ++a) {
        sys(row, a) = alg.c(a, i, k);
        sys(r * r + row, a) = alg.c(i, a, k);
      }
      rhs[row] = rhs[r * r + row] = (i == k) ? 1 : 0;
    }
  }
  if (auto u = solve(sys, rhs)) {
    rep.has_unit = true;
    rep.unit = *u;
  } else {
    rep.failures.push_back("no two-sided unit");
  }

  rep.commutativity_asserted = alg.commutative_flag();
  rep.commutative = true;
  for (int i = 0; i < r && rep.commutative; ++i) {
    for (int j = i + 1; j < r && rep.commutative; ++j) {
      for (int k = 0; k < r; ++k) {
        if (alg.c(i, j, k) != alg.c(j, i, k)) {
          rep.commutative = false;
          break;
        }
      }
    }
  }
  if (rep.commutativity_asserted && !rep.commutative) {
    rep.failures.push_back("declared commutative but e_i e_j != e_j e_i");
  }

  rep.eta = Matrix(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) rep.eta(i, j) += alg.c(i, j, k) * alg.counit_values()[k];
    }
  }
  if (auto inv = inverse(rep.eta)) {
    rep.nondegenerate = true;
    rep.eta_inverse = *inv;
  } else {
    rep.failures.push_back("pairing eta is degenerate");
  }
  return rep;
}

Vector multiply(const FrobeniusAlgebra& alg, const Vector& u, const Vector& v) {
  const int r = alg.dim();
  Vector w(r);
  for (int i = 0; i < r; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (v[j] == 0) continue;
      Scalar f = u[i] * v[j];
      for (int k = 0; k < r; ++k) {
        const Scalar& c = alg.c(i, j, k);
        if (c != 0) w[k] += f * c;
      }
    }
  }
  return w;
}

Scalar counit(const FrobeniusAlgebra& alg, const Vector& v) {
  Scalar s;
  for (int i = 0; i < alg.dim(); ++i) s += v[i] * alg.counit_values()[i];
  return s;
}

Scalar pairing_eta(const FrobeniusAlgebra& alg, const Vector& u, const Vector& v) {
  return counit(alg, multiply(alg, u, v));
}

Vector lambda(const FrobeniusAlgebra& alg, const Vector& u) {
  const Matrix& eta = alg.eta();
  Vector cov(alg.dim());
  for (int j = 0; j < alg.dim(); ++j) {
    for (int i = 0; i < alg.dim(); ++i) cov[j] += u[i] * eta(i, j);
  }
  return cov;
}

Vector lambda_inverse(const FrobeniusAlgebra& alg, const Vector& covector) {
  const Matrix& inv = alg.eta_inverse();
  Vector u(alg.dim());
  for (int j = 0; j < alg.dim(); ++j) {
    for (int i = 0; i < alg.dim(); ++i) u[j] += covector[i] * inv(i, j);
  }
  return u;
}

Tensor comultiply(const FrobeniusAlgebra& alg, const Vector& v) {
  const int r = alg.dim();
  const Matrix& inv = alg.eta_inverse();
  Tensor t(r, 2);
  for (int a = 0; a < r; ++a) {
    Vector vea = multiply(alg, v, alg.basis_vector(a));
    for (int b = 0; b < r; ++b) {
      if (inv(a, b) == 0) continue;
      for (int p = 0; p < r; ++p) t[static_cast<size_t>(p) * r + b] += vea[p] * inv(a, b);
    }
  }
  return t;
}

Tensor comultiply_unit(const FrobeniusAlgebra& alg) { return comultiply(alg, alg.unit()); }

Vector euler_element(const FrobeniusAlgebra& alg) {
  const int r = alg.dim();
  const Matrix& inv = alg.eta_inverse();
  Vector e(r);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      if (inv(a, b) == 0) continue;
      for (int k = 0; k < r; ++k) e[k] += inv(a, b) * alg.c(a, b, k);
    }
  }
  return e;
}

Scalar omega(const FrobeniusAlgebra& alg, int genus, std::span<const Vector> vectors) {
  require_tqft(alg);
  if (genus < 0) throw InputError("genus must be non-negative");
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != alg.dim()) throw InputError("vector has wrong dimension");
  }
  Vector prod = alg.unit();
  for (const auto& v : vectors) prod = multiply(alg, prod, v);
  if (genus > 0) {
    Vector e = euler_element(alg);
    for (int i = 0; i < genus; ++i) prod = multiply(alg, prod, e);
  }
  return counit(alg, prod);
}

Scalar surface_invariant(const FrobeniusAlgebra& alg, int genus) {
  return omega(alg, genus, std::span<const Vector>{});
}

CobordismTensor::CobordismTensor(int genus, int inputs, int outputs, int dim)
    : genus_(genus), inputs_(inputs), outputs_(outputs), dim_(dim), data_(ipow(dim, inputs + outputs)) {}

const Scalar& CobordismTensor::at(std::span<const int> index) const {
  return data_[flatten(index, dim_)];
}

Tensor CobordismTensor::apply(std::span<const Vector> in) const {
  if (static_cast<int>(in.size()) != inputs_) throw InputError("wrong number of inputs");
  Tensor out(dim_, outputs_);
  const size_t out_size = out.size();
  std::vector<int> idx(inputs_, 0);
  for (size_t block = 0; block < ipow(dim_, inputs_); ++block) {
    Scalar w = 1;
    for (int s = 0; s < inputs_ && w != 0; ++s) w *= in[s][idx[s]];
    if (w != 0) {
      for (size_t o = 0; o < out_size; ++o) out[o] += w * data_[block * out_size + o];
    }
    for (int s = inputs_ - 1; s >= 0; --s) {
      if (++idx[s] < dim_) break;
      idx[s] = 0;
    }
  }
  return out;
}

CobordismTensor cobordism_tensor(const FrobeniusAlgebra& alg, int genus, int inputs, int outputs) {
  require_tqft(alg);
  if (genus < 0 || inputs < 0 || outputs < 0) throw InputError("negative cobordism data");
  if (inputs + outputs == 0) throw InputError("cobordism needs at least one boundary circle");
  const int r = alg.dim();
  const int total = inputs + outputs;
  CobordismTensor t(genus, inputs, outputs, r);

  Vector eg = alg.unit();
  if (genus > 0) {
    Vector e = euler_element(alg);
    for (int i = 0; i < genus; ++i) eg = multiply(alg, eg, e);
  }
  // omega_{g,m+n} on basis tuples, built by extending partial products.
  std::vector<Scalar> values(ipow(r, total));
  std::function<void(int, size_t, const Vector&)> fill = [&](int depth, size_t prefix, const Vector& p) {
    if (depth == total) {
      values[prefix] = counit(alg, p);
      return;
    }
    for (int i = 0; i < r; ++i) fill(depth + 1, prefix * r + i, multiply(alg, p, alg.basis_vector(i)));
  };
  fill(0, 0, eg);
  for (int axis = inputs; axis < total; ++axis) transform_axis(values, r, total, axis, alg.eta_inverse());
  for (size_t i = 0; i < values.size(); ++i) t[i] = values[i];
  return t;
}

CobordismTensor sew(const CobordismTensor& first, const CobordismTensor& second, int j) {
  if (first.dim() != second.dim()) throw InputError("sewing tensors over different algebras");
  if (j < 1 || j > second.outputs() || j > first.inputs()) {
    throw InputError("sewing needs 1 <= j <= min(outputs of second, inputs of first)");
  }
  const int r = first.dim();
  const int k2 = second.inputs();
  const int l2 = second.outputs() - j;
  const int m1 = first.inputs() - j;
  const int n1 = first.outputs();
  CobordismTensor res(first.genus() + second.genus() + j - 1, k2 + m1, n1 + l2, r);

  const size_t in2 = ipow(r, k2), rest2 = ipow(r, l2), sewn = ipow(r, j);
  const size_t rest1 = ipow(r, m1), out1 = ipow(r, n1);
  for (size_t a = 0; a < in2; ++a) {
    for (size_t b = 0; b < rest2; ++b) {
      for (size_t s = 0; s < sewn; ++s) {
        const Scalar& w = second[(a * rest2 + b) * sewn + s];
        if (w == 0) continue;
        for (size_t c = 0; c < rest1; ++c) {
          for (size_t o = 0; o < out1; ++o) {
            const Scalar& v = first[(s * rest1 + c) * out1 + o];
            if (v == 0) continue;
            res[((a * rest1 + c) * out1 + o) * rest2 + b] += w * v;
          }
        }
      }
    }
  }
  return res;
}

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  const int ra = a.dim(), rb = b.dim(), r = ra + rb;
  std::vector<std::string> basis = a.basis();
  for (const auto& s : b.basis()) basis.push_back(s + "'");
  std::vector<Scalar> mult(ipow(r, 3));
  auto at = [&](int i, int j, int k) -> Scalar& { return mult[(static_cast<size_t>(i) * r + j) * r + k]; };
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j)
      for (int k = 0; k < ra; ++k) at(i, j, k) = a.c(i, j, k);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rb; ++j)
      for (int k = 0; k < rb; ++k) at(ra + i, ra + j, ra + k) = b.c(i, j, k);
  Vector eps = a.counit_values();
  eps.insert(eps.end(), b.counit_values().begin(), b.counit_values().end());
  return FrobeniusAlgebra(std::move(basis), std::move(mult), std::move(eps),
                          a.commutative_flag() && b.commutative_flag());
}

FrobeniusAlgebra tensor_product(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  const int ra = a.dim(), rb = b.dim(), r = ra * rb;
  std::vector<std::string> basis;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) basis.push_back(x + "*" + y);
  std::vector<Scalar> mult(ipow(r, 3));
  for (int i = 0; i < ra; ++i)
    for (int k = 0; k < ra; ++k)
      for (int p = 0; p < ra; ++p) {
        if (a.c(i, k, p) == 0) continue;
        for (int j = 0; j < rb; ++j)
          for (int l = 0; l < rb; ++l)
            for (int q = 0; q < rb; ++q) {
              size_t x = static_cast<size_t>(i) * rb + j, y = static_cast<size_t>(k) * rb + l,
                     z = static_cast<size_t>(p) * rb + q;
              mult[(x * r + y) * r + z] = a.c(i, k, p) * b.c(j, l, q);
            }
      }
  Vector eps(r);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) eps[i * rb + j] = a.counit_values()[i] * b.counit_values()[j];
  return FrobeniusAlgebra(std::move(basis), std::move(mult), std::move(eps),
                          a.commutative_flag() && b.commutative_flag());
}

}  // namespace tqft

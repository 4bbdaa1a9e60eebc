#pragma once

#include <complex>

#include <Eigen/Dense>

#include "manyworlds/config.hpp"
#include "manyworlds/errors.hpp"

namespace manyworlds {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// A vector of probability amplitudes. Not necessarily normalized;
/// basis vectors and state vectors are unit norm within eps.
class Ket {
public:
    explicit Ket(Vector amplitudes);

    Index dim() const { return amp_.size(); }
    const Vector& amplitudes() const { return amp_; }
    double norm() const { return amp_.norm(); }
    bool is_normalized(double eps = default_eps()) const;

    /// n-th standard basis vector of the given dimension.
    static Ket standard_basis_vector(Index dim, Index n);

private:
    Vector amp_;
};

/// A square complex matrix with finite entries.
class Operator {
public:
    explicit Operator(Matrix entries);

    Index dim() const { return m_.rows(); }
    const Matrix& entries() const { return m_; }

    static Operator identity(Index dim);

private:
    Matrix m_;
};

/// Operator equal to its conjugate transpose within eps.
class HermitianOperator : public Operator {
public:
    explicit HermitianOperator(Matrix entries, double eps = default_eps());
};

/// Operator whose conjugate transpose is its inverse within eps.
class UnitaryOperator : public Operator {
public:
    explicit UnitaryOperator(Matrix entries, double eps = default_eps());
};

/// Hermitian pairing, conjugate-linear in the first argument.
Complex inner(const Ket& a, const Ket& b);

/// Largest singular value, computed as sqrt(lambda_max(M^H M)).
double operator_norm(const Operator& m);

/// exp(i t A) for self-adjoint A, via spectral decomposition.
UnitaryOperator mat_exp_hermitian(const HermitianOperator& a, double t);

/// Kronecker products with index convention (n, k) -> n * dimB + k.
Operator tensor_op(const Operator& m, const Operator& n);
Ket tensor_ket(const Ket& a, const Ket& b);

/// Applies an operator to a ket.
Ket apply(const Operator& m, const Ket& v);

}  // namespace manyworlds

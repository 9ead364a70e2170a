// Copyright 2026 The ubound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file linalg.hpp
/// \brief Small dense complex linear algebra: kets, Hermitian observables,
/// inner products, orthogonal complements and seeded random generation.
///
/// Storage is Eigen; the wrappers exist to carry the dimension and
/// Hermiticity invariants through the rest of the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ubound/errors.hpp"

namespace ubound {

using Complex = std::complex<double>;

/// Numerical tolerances shared by every module.
struct Tolerances {
    double herm = 1e-9;        ///< max |M - M†| entry for Hermiticity
    double orth = 1e-9;        ///< max |⟨ψ|ψ⊥⟩| for orthogonality
    double norm = 1e-9;        ///< max |‖ψ‖² - 1| for normalization
    double gap = 1e-8;         ///< most negative gap accepted as roundoff
    double trivial = 1e-10;    ///< both sides below this -> trivial bound
    double deficit = 1e-9;     ///< deficits in [-deficit, 0) clamp to 0
    double degenerate = 1e-10; ///< quadratic coefficient treated as zero
    double null = 1e-12;       ///< norm below which φ counts as zero
};

/// Explicit seed for every random draw in the library.
struct RngSeed {
    std::uint64_t value = 0;

    friend bool operator==(RngSeed, RngSeed) = default;
};

/// Mixes (seed, index) into an independent child seed (splitmix64 finalizer).
/// Used for per-trial and per-restart streams so parallel and sequential
/// execution draw identical numbers.
inline RngSeed derive_seed(RngSeed parent, std::uint64_t index) {
    std::uint64_t z = parent.value + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return RngSeed{z ^ (z >> 31)};
}

/// A ket of dimension ≥ 2. Not necessarily normalized.
class ComplexVector {
   public:
    explicit ComplexVector(Eigen::VectorXcd values) : values_(std::move(values)) {
        if (values_.size() < 2) {
            throw DimensionMismatch("vector dimension must be at least 2, got " +
                                    std::to_string(values_.size()));
        }
    }

    ComplexVector(std::initializer_list<Complex> values)
        : ComplexVector(to_eigen(values)) {}

    static ComplexVector zero(int dim) {
        return ComplexVector(Eigen::VectorXcd::Zero(dim));
    }

    /// Basis vector |k⟩ in dimension dim.
    static ComplexVector basis(int dim, int k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(k) = 1.0;
        return ComplexVector(std::move(v));
    }

    int dim() const { return static_cast<int>(values_.size()); }
    const Eigen::VectorXcd& values() const { return values_; }
    Complex operator[](int k) const { return values_(k); }

    double norm() const { return values_.norm(); }
    double squared_norm() const { return values_.squaredNorm(); }

    ComplexVector normalized() const {
        double n = norm();
        if (!(n > 0.0)) {
            throw ZeroVector("cannot normalize a zero vector");
        }
        return ComplexVector(values_ / n);
    }

    ComplexVector scaled(Complex factor) const { return ComplexVector(values_ * factor); }

    friend ComplexVector operator+(const ComplexVector& u, const ComplexVector& v) {
        check_same_dim(u.dim(), v.dim());
        return ComplexVector(u.values_ + v.values_);
    }
    friend ComplexVector operator-(const ComplexVector& u, const ComplexVector& v) {
        check_same_dim(u.dim(), v.dim());
        return ComplexVector(u.values_ - v.values_);
    }

    static void check_same_dim(int a, int b) {
        if (a != b) {
            throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
        }
    }

   private:
    static Eigen::VectorXcd to_eigen(std::initializer_list<Complex> values) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
        std::copy(values.begin(), values.end(), v.data());
        return v;
    }

    Eigen::VectorXcd values_;
};

/// Max entrywise |M - M†|; M must be square.
inline double hermiticity_defect(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("matrix is not square");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    return hermiticity_defect(m) <= tol;
}

/// A d×d Hermitian observable. Construction validates Hermiticity.
class HermitianMatrix {
   public:
    explicit HermitianMatrix(Eigen::MatrixXcd entries, double tol = Tolerances{}.herm)
        : entries_(std::move(entries)) {
        if (entries_.rows() < 2) {
            throw DimensionMismatch("matrix dimension must be at least 2");
        }
        double defect = hermiticity_defect(entries_);
        if (!(defect <= tol)) {
            std::ostringstream msg;
            msg << "matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
            throw NotHermitian(msg.str());
        }
    }

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    Complex operator()(int r, int c) const { return entries_(r, c); }

    ComplexVector apply(const ComplexVector& v) const {
        ComplexVector::check_same_dim(dim(), v.dim());
        return ComplexVector(entries_ * v.values());
    }

    /// A + shift·I, still Hermitian.
    HermitianMatrix shifted(double shift) const {
        Eigen::MatrixXcd m = entries_;
        m.diagonal().array() += shift;
        return HermitianMatrix(std::move(m));
    }

   private:
    Eigen::MatrixXcd entries_;
};

/// ⟨u|v⟩, conjugate-linear in u.
inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
    ComplexVector::check_same_dim(u.dim(), v.dim());
    return u.values().dot(v.values());
}

/// Orthonormal basis of the complement of span{ψ}: d-1 vectors.
///
/// Classical Gram-Schmidt with one re-orthogonalization pass, seeded with
/// ψ/‖ψ‖ and then the standard basis vectors ordered by increasing |ψ_k| so
/// the most orthogonal candidates are consumed first.
inline std::vector<ComplexVector> complement_basis(const ComplexVector& psi) {
    const double n = psi.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw ZeroVector("complement_basis requires a nonzero vector");
    }
    const int d = psi.dim();
    std::vector<Eigen::VectorXcd> basis;
    basis.reserve(d);
    basis.push_back(psi.values() / n);

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(psi[a]) < std::abs(psi[b]);
    });

    for (int k : order) {
        if (static_cast<int>(basis.size()) == d) {
            break;
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
        v(k) = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : basis) {
                v -= e.dot(v) * e;
            }
        }
        double r = v.norm();
        // The residual of a unit candidate is ≥ 1/√d for at least d-1 of them.
        if (r > 1e-6) {
            basis.push_back(v / r);
        }
    }

    std::vector<ComplexVector> out;
    out.reserve(d - 1);
    for (std::size_t i = 1; i < basis.size(); ++i) {
        out.emplace_back(std::move(basis[i]));
    }
    return out;
}

namespace detail {

/// n independent standard complex normals (re, im each N(0,1)), normalized.
/// Accepts n = 1, which yields a uniformly random phase.
inline Eigen::VectorXcd gaussian_unit(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(n);
    double sq = 0.0;
    do {
        for (int k = 0; k < n; ++k) {
            double re = normal(rng);
            double im = normal(rng);
            v(k) = Complex(re, im);
        }
        sq = v.squaredNorm();
    } while (!(sq > 0.0));
    return v / std::sqrt(sq);
}

}  // namespace detail

/// Haar-distributed unit vector in C^d.
inline ComplexVector random_unit_vector(int d, RngSeed seed) {
    if (d < 2) {
        throw DimensionMismatch("random_unit_vector requires d >= 2");
    }
    std::mt19937_64 rng(seed.value);
    return ComplexVector(detail::gaussian_unit(d, rng));
}

/// (G + G†)/2 with G having independent standard complex normal entries.
inline HermitianMatrix random_hermitian(int d, RngSeed seed) {
    if (d < 2) {
        throw DimensionMismatch("random_hermitian requires d >= 2");
    }
    std::mt19937_64 rng(seed.value);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
    // Make the diagonal exactly real and the matrix exactly self-adjoint.
    for (int r = 0; r < d; ++r) {
        h(r, r) = h(r, r).real();
        for (int c = r + 1; c < d; ++c) {
            h(c, r) = std::conj(h(r, c));
        }
    }
    return HermitianMatrix(std::move(h));
}

/// Random unit vector orthogonal to ψ: Haar coefficients over complement_basis(ψ).
inline ComplexVector random_orthogonal_unit_vector(const ComplexVector& psi, RngSeed seed) {
    auto basis = complement_basis(psi);
    std::mt19937_64 rng(seed.value);
    Eigen::VectorXcd w = detail::gaussian_unit(static_cast<int>(basis.size()), rng);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(psi.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        v += w(static_cast<Eigen::Index>(k)) * basis[k].values();
    }
    return ComplexVector(std::move(v));
}

inline void require_normalized(const ComplexVector& v, double tol, const char* what) {
    double dev = std::abs(v.squared_norm() - 1.0);
    if (!(dev <= tol)) {
        std::ostringstream msg;
        msg << what << " is not normalized (|norm^2 - 1| = " << dev << ")";
        throw NotNormalized(msg.str());
    }
}

}  // namespace ubound

/**
 * @file module_algebra.cpp
 * @brief Implementation of the twisted algebras, module inner products,
 *        block inner products, module norms, and idempotent residuals.
 */
#include "gdl/module_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gdl {

namespace {

/// Shared validation for binary algebra operations.
void require_compatible(const TwistedCoefficients& F1, const TwistedCoefficients& F2) {
    F1.validate();
    F2.validate();
    if (F1.side != F2.side || !(F1.lattice.ambient == F2.lattice.ambient) ||
        F1.lattice.elements != F2.lattice.elements ||
        F1.lattice.weight != F2.lattice.weight) {
        throw InvalidInputError("twisted coefficients must share lattice and side");
    }
}

/// π(μ)* as a matrix, via the adjoint of the shift matrix.
Eigen::MatrixXcd shift_adjoint(const GroupSpec& base, const PhasePoint& mu) {
    return tf_shift_matrix(base, mu).adjoint();
}

}  // namespace

void TwistedCoefficients::validate() const {
    if (values.size() != static_cast<Eigen::Index>(lattice.elements.size())) {
        throw InvalidInputError("coefficient vector length must match lattice size");
    }
    if (!values.allFinite()) {
        throw InvalidInputError("coefficient values must be finite");
    }
}

TwistedCoefficients twisted_convolve(const TwistedCoefficients& F1,
                                     const TwistedCoefficients& F2) {
    require_compatible(F1, F2);
    const Subgroup& lat = F1.lattice;
    const GroupSpec& plane = lat.ambient;
    const GroupSpec base = base_of(plane);
    const std::int64_t L = static_cast<std::int64_t>(lat.elements.size());
    TwistedCoefficients out{lat, Eigen::VectorXcd::Zero(L), F1.side};
    for (std::int64_t a = 0; a < L; ++a) {
        const PhasePoint& lam = lat.elements[static_cast<std::size_t>(a)];
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t b = 0; b < L; ++b) {
            const PhasePoint& mu = lat.elements[static_cast<std::size_t>(b)];
            const PhasePoint diff = add(plane, lam, negate(plane, mu));
            const std::int64_t di = lat.index_of(diff);
            std::complex<double> phase = cocycle(base, mu, diff);
            if (F1.side == AlgebraSide::B) {
                phase = std::conj(phase);
            }
            acc += F1.values[b] * F2.values[di] * phase;
        }
        out.values[a] = lat.weight * acc;
    }
    return out;
}

TwistedCoefficients twisted_involution(const TwistedCoefficients& F) {
    F.validate();
    const Subgroup& lat = F.lattice;
    const GroupSpec& plane = lat.ambient;
    const GroupSpec base = base_of(plane);
    const std::int64_t L = static_cast<std::int64_t>(lat.elements.size());
    TwistedCoefficients out{lat, Eigen::VectorXcd::Zero(L), F.side};
    for (std::int64_t a = 0; a < L; ++a) {
        const PhasePoint& lam = lat.elements[static_cast<std::size_t>(a)];
        const std::int64_t mi = lat.index_of(negate(plane, lam));
        const std::complex<double> c = cocycle(base, lam, lam);
        out.values[a] = F.side == AlgebraSide::A ? c * std::conj(F.values[mi])
                                                 : std::conj(c * F.values[mi]);
    }
    return out;
}

Eigen::MatrixXcd represent(const TwistedCoefficients& F) {
    F.validate();
    const Subgroup& lat = F.lattice;
    const GroupSpec base = base_of(lat.ambient);
    const std::int64_t N = base.size();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    for (std::size_t a = 0; a < lat.elements.size(); ++a) {
        const Eigen::MatrixXcd P = tf_shift_matrix(base, lat.elements[a]);
        M += F.values[static_cast<Eigen::Index>(a)] *
             (F.side == AlgebraSide::A ? P : Eigen::MatrixXcd(P.adjoint()));
    }
    return lat.weight * M;
}

TwistedCoefficients lhs_inner(const Signal& f, const Signal& g, const Subgroup& lattice) {
    const GroupSpec base = base_of(lattice.ambient);
    const std::int64_t N = base.size();
    if (f.size() != N || g.size() != N) {
        throw InvalidInputError("signal length does not match group size");
    }
    const std::int64_t L = static_cast<std::int64_t>(lattice.elements.size());
    TwistedCoefficients out{lattice, Eigen::VectorXcd(L), AlgebraSide::A};
    for (std::int64_t a = 0; a < L; ++a) {
        // ⟨f, π(λ)g⟩, linear in the first argument.
        out.values[a] = tf_shift(base, lattice.elements[static_cast<std::size_t>(a)], g).dot(f);
    }
    return out;
}

TwistedCoefficients rhs_inner(const Signal& f, const Signal& g,
                              const Subgroup& adjoint_lattice) {
    const GroupSpec base = base_of(adjoint_lattice.ambient);
    const std::int64_t N = base.size();
    if (f.size() != N || g.size() != N) {
        throw InvalidInputError("signal length does not match group size");
    }
    const std::int64_t L = static_cast<std::int64_t>(adjoint_lattice.elements.size());
    TwistedCoefficients out{adjoint_lattice, Eigen::VectorXcd(L), AlgebraSide::B};
    for (std::int64_t a = 0; a < L; ++a) {
        const Signal shifted =
            shift_adjoint(base, adjoint_lattice.elements[static_cast<std::size_t>(a)]) * f;
        // ⟨g, π(μ)* f⟩, linear in the first argument.
        out.values[a] = shifted.dot(g);
    }
    return out;
}

std::complex<double> trace_A(const TwistedCoefficients& F) {
    F.validate();
    const PhasePoint zero = zero_of(F.lattice.ambient);
    return F.values[F.lattice.index_of(zero)];
}

std::complex<double> trace_B(const TwistedCoefficients& F) { return trace_A(F); }

double associativity_residual(const Signal& f, const Signal& g, const Signal& h,
                              const Subgroup& lattice) {
    const GroupSpec base = base_of(lattice.ambient);
    const Subgroup adj = adjoint_subgroup(base, lattice);
    const Signal left = represent(lhs_inner(f, g, lattice)) * h;
    const Signal right = represent(rhs_inner(g, h, adj)) * f;
    return (left - right).norm();
}

BlockInnerProduct::BlockInnerProduct(std::int64_t d, std::int64_t n, AlgebraSide side,
                                     Subgroup lattice,
                                     std::vector<std::vector<Eigen::VectorXcd>> grid)
    : d_(d), n_(n), side_(side), lattice_(std::move(lattice)), grid_(std::move(grid)) {
    const std::size_t expected = static_cast<std::size_t>(side_ == AlgebraSide::A ? n_ : d_);
    if (grid_.size() != expected) {
        throw InvalidInputError("block grid has wrong number of rows for its side");
    }
    for (const auto& row : grid_) {
        if (row.size() != expected) {
            throw InvalidInputError("block grid has wrong number of columns for its side");
        }
        for (const auto& block : row) {
            if (block.size() != static_cast<Eigen::Index>(lattice_.elements.size())) {
                throw InvalidInputError("block coefficient length must match lattice size");
            }
        }
    }
}

TwistedCoefficients BlockInnerProduct::block(std::int64_t p, std::int64_t q) const {
    const std::int64_t extent = side_ == AlgebraSide::A ? n_ : d_;
    if (p < 0 || p >= extent || q < 0 || q >= extent) {
        throw InvalidInputError("block index out of range");
    }
    return TwistedCoefficients{lattice_,
                               grid_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)],
                               side_};
}

const Eigen::MatrixXcd& BlockInnerProduct::realized() const {
    if (realized_.has_value()) {
        return *realized_;
    }
    const GroupSpec base = base_of(lattice_.ambient);
    const std::int64_t N = base.size();
    const std::int64_t dim = d_ * n_ * N;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    if (side_ == AlgebraSide::A) {
        // Weighted represented blocks w Σ_λ A_{j,j'}(λ)π(λ), replicated over
        // the super index k.
        std::vector<std::vector<Eigen::MatrixXcd>> rep(
            static_cast<std::size_t>(n_),
            std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(n_),
                                          Eigen::MatrixXcd::Zero(N, N)));
        for (std::size_t a = 0; a < lattice_.elements.size(); ++a) {
            const Eigen::MatrixXcd P = tf_shift_matrix(base, lattice_.elements[a]);
            for (std::int64_t j = 0; j < n_; ++j) {
                for (std::int64_t jp = 0; jp < n_; ++jp) {
                    rep[static_cast<std::size_t>(j)][static_cast<std::size_t>(jp)] +=
                        lattice_.weight *
                        grid_[static_cast<std::size_t>(j)][static_cast<std::size_t>(jp)]
                             [static_cast<Eigen::Index>(a)] *
                        P;
                }
            }
        }
        for (std::int64_t k = 0; k < d_; ++k) {
            for (std::int64_t j = 0; j < n_; ++j) {
                for (std::int64_t jp = 0; jp < n_; ++jp) {
                    out.block((k * n_ + j) * N, (k * n_ + jp) * N, N, N) =
                        rep[static_cast<std::size_t>(j)][static_cast<std::size_t>(jp)];
                }
            }
        }
    } else {
        // Weighted represented blocks w Σ_μ B_{i,k}(μ)π(μ)*, placed
        // transposed (right action) and replicated over the window index j.
        std::vector<std::vector<Eigen::MatrixXcd>> rep(
            static_cast<std::size_t>(d_),
            std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(d_),
                                          Eigen::MatrixXcd::Zero(N, N)));
        for (std::size_t a = 0; a < lattice_.elements.size(); ++a) {
            const Eigen::MatrixXcd Ps = shift_adjoint(base, lattice_.elements[a]);
            for (std::int64_t i = 0; i < d_; ++i) {
                for (std::int64_t k = 0; k < d_; ++k) {
                    rep[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                        lattice_.weight *
                        grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                             [static_cast<Eigen::Index>(a)] *
                        Ps;
                }
            }
        }
        for (std::int64_t j = 0; j < n_; ++j) {
            for (std::int64_t k = 0; k < d_; ++k) {
                for (std::int64_t kp = 0; kp < d_; ++kp) {
                    out.block((k * n_ + j) * N, (kp * n_ + j) * N, N, N) =
                        rep[static_cast<std::size_t>(kp)][static_cast<std::size_t>(k)];
                }
            }
        }
    }
    realized_ = std::move(out);
    return *realized_;
}

std::complex<double> BlockInnerProduct::trace() const {
    const std::int64_t zero_index = lattice_.index_of(zero_of(lattice_.ambient));
    const std::int64_t extent = side_ == AlgebraSide::A ? n_ : d_;
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t p = 0; p < extent; ++p) {
        acc += grid_[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)]
                    [static_cast<Eigen::Index>(zero_index)];
    }
    return acc;
}

BlockInnerProduct matrix_lhs(const WindowFamily& f, const WindowFamily& g,
                             const Subgroup& lattice) {
    f.validate();
    g.validate();
    if (!(f.group == g.group) || f.d != g.d || f.n != g.n) {
        throw InvalidInputError("window families must have matching shapes");
    }
    if (!(lattice.ambient == plane_of(f.group))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    const GroupSpec& base = f.group;
    const std::int64_t L = static_cast<std::int64_t>(lattice.elements.size());
    std::vector<std::vector<Eigen::VectorXcd>> grid(
        static_cast<std::size_t>(f.n),
        std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(f.n),
                                      Eigen::VectorXcd::Zero(L)));
    for (std::int64_t a = 0; a < L; ++a) {
        const PhasePoint& lam = lattice.elements[static_cast<std::size_t>(a)];
        for (std::int64_t jp = 0; jp < f.n; ++jp) {
            std::vector<Signal> shifted(static_cast<std::size_t>(f.d));
            for (std::int64_t k = 0; k < f.d; ++k) {
                shifted[static_cast<std::size_t>(k)] =
                    tf_shift(base, lam,
                             g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(jp)]);
            }
            for (std::int64_t j = 0; j < f.n; ++j) {
                std::complex<double> acc{0.0, 0.0};
                for (std::int64_t k = 0; k < f.d; ++k) {
                    // Σ_k ⟨f_{k,j}, π(λ)g_{k,j'}⟩.
                    acc += shifted[static_cast<std::size_t>(k)].dot(
                        f.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                }
                grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(jp)][a] = acc;
            }
        }
    }
    return BlockInnerProduct(f.d, f.n, AlgebraSide::A, lattice, std::move(grid));
}

BlockInnerProduct matrix_rhs(const WindowFamily& f, const WindowFamily& g,
                             const Subgroup& lattice) {
    f.validate();
    g.validate();
    if (!(f.group == g.group) || f.d != g.d || f.n != g.n) {
        throw InvalidInputError("window families must have matching shapes");
    }
    if (!(lattice.ambient == plane_of(f.group))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    const GroupSpec& base = f.group;
    const Subgroup adj = adjoint_subgroup(base, lattice);
    const std::int64_t L = static_cast<std::int64_t>(adj.elements.size());
    std::vector<std::vector<Eigen::VectorXcd>> grid(
        static_cast<std::size_t>(f.d),
        std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(f.d),
                                      Eigen::VectorXcd::Zero(L)));
    for (std::int64_t a = 0; a < L; ++a) {
        const Eigen::MatrixXcd Ps = shift_adjoint(base, adj.elements[static_cast<std::size_t>(a)]);
        for (std::int64_t i = 0; i < f.d; ++i) {
            std::vector<Signal> shifted(static_cast<std::size_t>(f.n));
            for (std::int64_t j = 0; j < f.n; ++j) {
                shifted[static_cast<std::size_t>(j)] =
                    Ps * f.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            for (std::int64_t k = 0; k < f.d; ++k) {
                std::complex<double> acc{0.0, 0.0};
                for (std::int64_t j = 0; j < f.n; ++j) {
                    // Σ_j ⟨g_{k,j}, π(μ)*f_{i,j}⟩.
                    acc += shifted[static_cast<std::size_t>(j)].dot(
                        g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                }
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][a] = acc;
            }
        }
    }
    return BlockInnerProduct(f.d, f.n, AlgebraSide::B, adj, std::move(grid));
}

double idempotent_residual(const Eigen::MatrixXcd& P) {
    if (P.rows() != P.cols()) {
        throw InvalidInputError("idempotent residual needs a square operator");
    }
    const Eigen::MatrixXcd defect = P * P - P;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(defect);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double module_norm(const WindowFamily& g, const Subgroup& lattice) {
    const BlockInnerProduct P = matrix_lhs(g, g, lattice);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P.realized(), Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
    return std::sqrt(std::max(top, 0.0));
}

ModuleNormReport module_norm_check(const WindowFamily& g, const Subgroup& lattice) {
    ModuleNormReport report;
    report.norm_primal = module_norm(g, lattice);
    const BlockInnerProduct Q = matrix_rhs(g, g, lattice);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q.realized(), Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
    report.norm_adjoint = std::sqrt(std::max(top, 0.0));
    report.residual = std::abs(report.norm_primal - report.norm_adjoint);
    report.agrees = report.residual <= 1e-9 * std::max(1.0, report.norm_primal);
    return report;
}

}  // namespace gdl

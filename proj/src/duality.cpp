/**
 * @file duality.cpp
 * @brief Implementation of the duality verifiers.
 */
#include "gdl/duality.hpp"

#include <algorithm>
#include <cmath>

namespace gdl {

namespace {

/// Validates the common (f1, f2, g, h) quartet and returns the base group.
GroupSpec require_quartet(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                          const WindowFamily& g, const WindowFamily& h) {
    g.validate();
    h.validate();
    if (!(g.group == h.group) || g.d != h.d || g.n != h.n) {
        throw InvalidInputError("window families must have matching shapes");
    }
    const std::int64_t N = g.group.size();
    if (f1.size() != static_cast<std::size_t>(g.d) || f2.size() != static_cast<std::size_t>(g.d)) {
        throw InvalidInputError("signals must have d blocks");
    }
    for (const auto& block : f1) {
        if (block.size() != N) {
            throw InvalidInputError("signal block length does not match group size");
        }
    }
    for (const auto& block : f2) {
        if (block.size() != N) {
            throw InvalidInputError("signal block length does not match group size");
        }
    }
    return g.group;
}

}  // namespace

JanssenFunctions janssen_psi(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                             const WindowFamily& g, const WindowFamily& h) {
    const GroupSpec base = require_quartet(f1, f2, g, h);
    const GroupSpec plane = plane_of(base);
    const std::int64_t P = plane.size();
    JanssenFunctions out;
    out.psi.resize(P);
    out.f_s_psi.resize(P);
    for (std::int64_t r = 0; r < P; ++r) {
        const PhasePoint chi = unrank(plane, r);
        // Shifted windows at χ, reused by both evaluations.
        std::vector<std::vector<Signal>> sg(static_cast<std::size_t>(g.d));
        std::vector<std::vector<Signal>> sh(static_cast<std::size_t>(g.d));
        for (std::int64_t k = 0; k < g.d; ++k) {
            sg[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(g.n));
            sh[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(g.n));
            for (std::int64_t j = 0; j < g.n; ++j) {
                sg[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = tf_shift(
                    base, chi, g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                sh[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = tf_shift(
                    base, chi, h.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            }
        }
        // ψ(χ) = Σ_j (C_g f1)(χ,j) · conj((C_h f2)(χ,j)).
        std::complex<double> psi_val{0.0, 0.0};
        for (std::int64_t j = 0; j < g.n; ++j) {
            std::complex<double> a{0.0, 0.0};
            std::complex<double> b{0.0, 0.0};
            for (std::int64_t k = 0; k < g.d; ++k) {
                a += sg[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].dot(
                    f1[static_cast<std::size_t>(k)]);
                b += sh[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].dot(
                    f2[static_cast<std::size_t>(k)]);
            }
            psi_val += a * std::conj(b);
        }
        out.psi[r] = psi_val;
        // Closed form: Σ_{k,l} ⟨f1_k, π(χ)f2_l⟩ · Σ_j ⟨π(χ)h_{l,j}, g_{k,j}⟩.
        std::complex<double> closed{0.0, 0.0};
        for (std::int64_t l = 0; l < g.d; ++l) {
            const Signal sf2 = tf_shift(base, chi, f2[static_cast<std::size_t>(l)]);
            for (std::int64_t k = 0; k < g.d; ++k) {
                const std::complex<double> outer =
                    sf2.dot(f1[static_cast<std::size_t>(k)]);
                std::complex<double> inner{0.0, 0.0};
                for (std::int64_t j = 0; j < g.n; ++j) {
                    inner +=
                        g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].dot(
                            sh[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
                }
                closed += outer * inner;
            }
        }
        out.f_s_psi[r] = closed;
    }
    return out;
}

JanssenReport janssen_report(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                             const WindowFamily& g, const WindowFamily& h,
                             const Subgroup& lattice) {
    const GroupSpec base = require_quartet(f1, f2, g, h);
    const GroupSpec plane = plane_of(base);
    if (!(lattice.ambient == plane)) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    const JanssenFunctions jf = janssen_psi(f1, f2, g, h);
    const Eigen::VectorXcd direct = symplectic_fourier(base, jf.psi);

    JanssenReport report;
    report.closed_form_residual = (jf.f_s_psi - direct).cwiseAbs().maxCoeff();

    // Quotient route: periodize ψ over Λ, transform on the quotient with
    // measure μ_Q = 1/(|G|·w), evaluate on Λ°.
    const Subgroup adj = adjoint_subgroup(base, lattice);
    const std::vector<GroupElement> reps = coset_transversal(all_elements(plane), lattice);
    const double mu_q = 1.0 / (static_cast<double>(base.size()) * lattice.weight);
    for (const auto& mu : adj.elements) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& q : reps) {
            std::complex<double> per{0.0, 0.0};
            for (const auto& lam : lattice.elements) {
                per += jf.psi[rank_of(plane, add(plane, q, lam))];
            }
            per *= lattice.weight;
            acc += mu_q * per * symplectic_cocycle(base, q, mu);
        }
        const double dev = std::abs(acc - jf.f_s_psi[rank_of(plane, mu)]);
        report.periodization_residual = std::max(report.periodization_residual, dev);
    }
    return report;
}

FigaCheck figa_check(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                     const WindowFamily& g, const WindowFamily& h, const Subgroup& lattice) {
    const GroupSpec base = require_quartet(f1, f2, g, h);
    if (!(lattice.ambient == plane_of(base))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    FigaCheck check;
    // LHS: w Σ_{λ,j} (C_g f1)(λ,j) conj((C_h f2)(λ,j)).
    const GaborSystem sys_g{g, lattice};
    const GaborSystem sys_h{h, lattice};
    const Eigen::MatrixXcd cg = analysis(sys_g, f1);
    const Eigen::MatrixXcd ch = analysis(sys_h, f2);
    check.lhs = lattice.weight * (cg.array() * ch.array().conjugate()).sum();

    // RHS: (1/s) Σ_{λ°,k,l} ⟨π(λ°)f1_k, f2_l⟩ Σ_j ⟨h_{l,j}, π(λ°)g_{k,j}⟩.
    const Subgroup adj = adjoint_subgroup(base, lattice);
    const double s = covolume(lattice.ambient, lattice);
    std::complex<double> rhs{0.0, 0.0};
    for (const auto& mu : adj.elements) {
        for (std::int64_t k = 0; k < g.d; ++k) {
            const Signal sf1 = tf_shift(base, mu, f1[static_cast<std::size_t>(k)]);
            for (std::int64_t l = 0; l < g.d; ++l) {
                const std::complex<double> outer =
                    f2[static_cast<std::size_t>(l)].dot(sf1);
                std::complex<double> inner{0.0, 0.0};
                for (std::int64_t j = 0; j < g.n; ++j) {
                    const Signal sg = tf_shift(
                        base, mu, g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                    inner += sg.dot(h.data[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
                }
                rhs += outer * inner;
            }
        }
    }
    check.rhs = rhs / s;
    check.residual = std::abs(check.lhs - check.rhs);
    return check;
}

double figa_residual(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                     const WindowFamily& g, const WindowFamily& h, const Subgroup& lattice) {
    return figa_check(f1, f2, g, h, lattice).residual;
}

WexlerRazCheck wexler_raz_check(const WindowFamily& g, const WindowFamily& h,
                                const Subgroup& lattice) {
    g.validate();
    h.validate();
    if (!(g.group == h.group) || g.d != h.d || g.n != h.n) {
        throw InvalidInputError("window families must have matching shapes");
    }
    if (!(lattice.ambient == plane_of(g.group))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    const GroupSpec& base = g.group;
    const Subgroup adj = adjoint_subgroup(base, lattice);
    const double s = covolume(lattice.ambient, lattice);
    const PhasePoint zero = zero_of(lattice.ambient);
    WexlerRazCheck check;
    for (const auto& mu : adj.elements) {
        const bool at_zero = mu == zero;
        for (std::int64_t k = 0; k < g.d; ++k) {
            for (std::int64_t l = 0; l < g.d; ++l) {
                std::complex<double> val{0.0, 0.0};
                for (std::int64_t j = 0; j < g.n; ++j) {
                    const Signal sg = tf_shift(
                        base, mu, g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                    // ⟨h_{l,j}, π(λ°)g_{k,j}⟩.
                    val += sg.dot(h.data[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]);
                }
                const double target = (at_zero && k == l) ? s : 0.0;
                check.residual = std::max(check.residual, std::abs(val - target));
            }
        }
    }
    check.is_dual_pair = check.residual < 1e-9;
    return check;
}

DualityCertificate duality_certificate(const GaborSystem& sys) {
    sys.validate();
    DualityCertificate cert;
    cert.frame = frame_bounds(sys);
    const GroupSpec& base = sys.windows.group;
    const Subgroup adj = adjoint_subgroup(base, sys.lattice);
    cert.covolume = covolume(sys.lattice.ambient, sys.lattice);
    // The adjoint-side Riesz vectors are labeled by (λ°, k) and stacked over
    // j, which is exactly the orientation riesz_bounds gives the family as
    // passed — no index swap of the data.
    const GaborSystem adjoint_sys{sys.windows, adj};
    cert.riesz = riesz_bounds(adjoint_sys, cert.covolume);
    cert.max_deviation = std::max(std::abs(cert.riesz.lower - cert.frame.lower),
                                  std::abs(cert.riesz.upper - cert.frame.upper));
    cert.verdict =
        cert.max_deviation < 1e-8 * std::max(1.0, cert.frame.upper) ? "pass" : "fail";
    return cert;
}

BesselDuality bessel_duality_check(const WindowFamily& g, const Subgroup& lattice) {
    g.validate();
    if (!(lattice.ambient == plane_of(g.group))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    BesselDuality result;
    const GaborSystem primal{g, lattice};
    result.bound_primal = frame_bounds(primal).upper;
    const Subgroup adj = adjoint_subgroup(g.group, lattice);
    const GaborSystem adjoint_sys{g.transpose(), adj};
    result.bound_adjoint = frame_bounds(adjoint_sys).upper;
    result.residual = std::abs(result.bound_primal - result.bound_adjoint);
    return result;
}

}  // namespace gdl

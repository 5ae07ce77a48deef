/**
 * @file construction.cpp
 * @brief Implementation of the constructive frame-existence algorithms.
 */
#include "gdl/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gdl {

namespace {

/// Gram deviation from the identity, used to validate orthonormal seeds.
double gram_deviation(const std::vector<Signal>& vs) {
    double worst = 0.0;
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = 0; b < vs.size(); ++b) {
            const std::complex<double> ip = vs[b].dot(vs[a]);  // ⟨v_a, v_b⟩
            const double target = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(ip - target));
        }
    }
    return worst;
}

ConstructionCertificate certify(const GaborSystem& sys) {
    ConstructionCertificate cert;
    cert.bounds = frame_bounds(sys);
    for (double ev : cert.bounds.spectrum) {
        cert.neumann = std::max(cert.neumann, std::abs(1.0 - ev));
    }
    cert.is_frame = cert.bounds.is_frame();
    return cert;
}

/// One standard normal via Box-Muller on two 53-bit uniforms.
double next_normal(std::mt19937_64& rng) {
    const double u1 =
        std::max(static_cast<double>(rng() >> 11) * 0x1.0p-53, 0x1.0p-60);
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::vector<Signal> gram_schmidt(const std::vector<Signal>& windows) {
    std::vector<Signal> out;
    out.reserve(windows.size());
    for (const Signal& v : windows) {
        Signal w = v;
        for (const Signal& u : out) {
            w -= u.dot(w) / u.dot(u) * u;  // subtract ⟨w,u⟩/⟨u,u⟩ · u
        }
        const double nrm = w.norm();
        if (nrm <= 1e-12) {
            throw NumericError("Gram-Schmidt input is linearly dependent");
        }
        out.push_back(w / nrm);
    }
    return out;
}

FullPlaneTight full_plane_tight(const GroupSpec& group, std::int64_t d) {
    const std::int64_t N = group.size();
    if (d < 1) {
        throw InvalidInputError("window count d must be positive");
    }
    if (d > N) {
        throw InvalidInputError("full-plane construction needs d <= |G|");
    }
    std::vector<Signal> deltas;
    deltas.reserve(static_cast<std::size_t>(d));
    for (std::int64_t k = 0; k < d; ++k) {
        Signal e = Signal::Zero(N);
        e[k] = 1.0;
        deltas.push_back(e);
    }
    const std::vector<Signal> ortho = gram_schmidt(deltas);

    const GroupSpec plane = plane_of(group);
    std::vector<GroupElement> unit_gens;
    for (std::size_t i = 0; i < plane.orders.size(); ++i) {
        GroupElement e(plane.orders.size(), 0);
        e[i] = 1 % plane.orders[i];
        unit_gens.push_back(e);
    }
    const Subgroup full = subgroup_closure(plane, unit_gens, 1.0 / static_cast<double>(N));

    FullPlaneTight result;
    result.system.windows.group = group;
    result.system.windows.d = d;
    result.system.windows.n = 1;
    result.system.windows.data.resize(static_cast<std::size_t>(d));
    for (std::int64_t k = 0; k < d; ++k) {
        result.system.windows.data[static_cast<std::size_t>(k)] = {ortho[static_cast<std::size_t>(k)]};
    }
    result.system.lattice = full;
    result.certificate = certify(result.system);
    return result;
}

double overlap_criterion(const WindowFamily& seed, const Subgroup& adjoint_lattice) {
    seed.validate();
    if (seed.n != 1) {
        throw InvalidInputError("overlap criterion applies to single-column seed families");
    }
    if (!(adjoint_lattice.ambient == plane_of(seed.group))) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    const PhasePoint zero = zero_of(adjoint_lattice.ambient);
    double worst = 0.0;
    for (std::int64_t k = 0; k < seed.d; ++k) {
        for (std::int64_t kp = 0; kp < seed.d; ++kp) {
            double total = 0.0;
            for (const auto& mu : adjoint_lattice.elements) {
                if (mu == zero) {
                    continue;
                }
                const Signal shifted =
                    tf_shift(seed.group, mu, seed.data[static_cast<std::size_t>(kp)][0]);
                // |⟨g_k, π(μ)g_{k'}⟩|.
                total += std::abs(shifted.dot(seed.data[static_cast<std::size_t>(k)][0]));
            }
            worst = std::max(worst, total);
        }
    }
    return worst;
}

RefinementResult refine_until_frame(const WindowFamily& seed, const Subgroup& lattice,
                                    StopRule rule) {
    seed.validate();
    if (seed.n != 1) {
        throw InvalidInputError("refinement seed must have a single window column (n = 1)");
    }
    const GroupSpec& base = seed.group;
    const GroupSpec plane = plane_of(base);
    if (!(lattice.ambient == plane)) {
        throw InvalidInputError("lattice must live on the phase space of the window group");
    }
    std::vector<Signal> seeds;
    for (std::int64_t k = 0; k < seed.d; ++k) {
        seeds.push_back(seed.data[static_cast<std::size_t>(k)][0]);
    }
    if (gram_deviation(seeds) > 1e-9) {
        throw InvalidInputError("refinement seed windows must be orthonormal");
    }

    const std::vector<GroupElement> plane_points = all_elements(plane);
    Subgroup cur = lattice;
    std::vector<Subgroup> chain{cur};
    while (true) {
        const Subgroup adj_cur = adjoint_subgroup(base, cur);
        bool stop = false;
        if (rule == StopRule::Criterion) {
            stop = overlap_criterion(seed, adj_cur) < 1.0 / static_cast<double>(seed.d);
        } else {
            // Spectral mode: stop once the rescaled seed system over the
            // current chain member is already a frame.
            const double s_cur = covolume(plane, cur);
            WindowFamily scaled = seed;
            const double factor = std::sqrt(s_cur);
            for (auto& row : scaled.data) {
                row[0] *= factor;
            }
            stop = frame_bounds(GaborSystem{scaled, cur}).is_frame();
        }
        if (stop) {
            break;
        }
        // Adjoin one element: among all H_v = <cur, v>, take the minimum by
        // (size, element list, adjoined element) — deterministic.
        bool have_best = false;
        Subgroup best;
        GroupElement best_v;
        for (const auto& v : plane_points) {
            if (cur.contains(v)) {
                continue;
            }
            std::vector<GroupElement> gens = cur.elements;
            gens.push_back(v);
            Subgroup H = subgroup_closure(plane, gens, lattice.weight);
            const bool better =
                !have_best || H.elements.size() < best.elements.size() ||
                (H.elements.size() == best.elements.size() &&
                 (H.elements < best.elements ||
                  (H.elements == best.elements && v < best_v)));
            if (better) {
                best = std::move(H);
                best_v = v;
                have_best = true;
            }
        }
        if (!have_best) {
            throw NumericError("refinement failed to stop at the full phase space");
        }
        cur = std::move(best);
        chain.push_back(cur);
    }

    RefinementResult result;
    result.refined_lattice = cur;
    result.chain = std::move(chain);
    result.transversal = coset_transversal(cur.elements, lattice);
    result.n = static_cast<std::int64_t>(result.transversal.size());

    const double sN = covolume(plane, cur);
    const double scale = std::sqrt(sN);
    result.windows.group = base;
    result.windows.d = seed.d;
    result.windows.n = result.n;
    result.windows.data.resize(static_cast<std::size_t>(seed.d));
    for (std::int64_t k = 0; k < seed.d; ++k) {
        auto& row = result.windows.data[static_cast<std::size_t>(k)];
        row.reserve(static_cast<std::size_t>(result.n));
        for (const auto& chi : result.transversal) {
            row.push_back(scale * tf_shift(base, chi, seeds[static_cast<std::size_t>(k)]));
        }
    }
    result.certificate = certify(GaborSystem{result.windows, lattice});
    return result;
}

Signal window_generator(WindowKind kind, const GroupSpec& group, double sigma,
                        std::uint64_t seed) {
    const std::int64_t N = group.size();
    switch (kind) {
        case WindowKind::Delta: {
            Signal g = Signal::Zero(N);
            g[0] = 1.0;
            return g;
        }
        case WindowKind::Constant: {
            return Signal::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
        }
        case WindowKind::DiscreteGaussian: {
            if (!(sigma > 0.0)) {
                throw InvalidInputError("discrete Gaussian needs sigma > 0");
            }
            Signal g(N);
            for (std::int64_t t = 0; t < N; ++t) {
                double acc = 0.0;
                for (std::int64_t m = -64; m <= 64; ++m) {
                    const double x = static_cast<double>(t + m * N);
                    acc += std::exp(-std::numbers::pi * x * x / (sigma * sigma));
                }
                g[t] = acc;
            }
            return g / g.norm();
        }
        case WindowKind::Random: {
            std::mt19937_64 rng(seed);
            Signal g(N);
            for (std::int64_t t = 0; t < N; ++t) {
                const double re = next_normal(rng);
                const double im = next_normal(rng);
                g[t] = std::complex<double>(re, im);
            }
            const double nrm = g.norm();
            if (nrm == 0.0) {
                g[0] = 1.0;
                return g;
            }
            return g / nrm;
        }
    }
    throw InvalidInputError("unknown window kind");
}

MinimalWindowSearch minimal_window_search(const GroupSpec& group, const Subgroup& lattice,
                                          std::int64_t d, std::int64_t max_n,
                                          std::int64_t attempts, std::uint64_t seed) {
    if (d < 1 || max_n < 1 || attempts < 1) {
        throw InvalidInputError("search needs positive d, max_n, attempts");
    }
    if (!(lattice.ambient == plane_of(group))) {
        throw InvalidInputError("lattice must live on the phase space of the group");
    }
    const std::int64_t N = group.size();
    const std::int64_t L = static_cast<std::int64_t>(lattice.elements.size());
    // Density lower bound with the counting weight: n >= ceil(d·|G|/|Λ|).
    const std::int64_t n_min = std::max<std::int64_t>(1, (d * N + L - 1) / L);

    MinimalWindowSearch result;
    result.note = "heuristic search: failure to certify a window count does not prove "
                  "that no such frame exists";
    for (std::int64_t n = n_min; n <= max_n; ++n) {
        for (std::int64_t attempt = 0; attempt < attempts; ++attempt) {
            WindowFamily fam;
            fam.group = group;
            fam.d = d;
            fam.n = n;
            fam.data.resize(static_cast<std::size_t>(d));
            for (std::int64_t k = 0; k < d; ++k) {
                auto& row = fam.data[static_cast<std::size_t>(k)];
                for (std::int64_t j = 0; j < n; ++j) {
                    const std::uint64_t mixed =
                        seed + 0x9e3779b97f4a7c15ULL *
                                   static_cast<std::uint64_t>(((n * 131 + attempt) * 131 + k) * 131 + j + 1);
                    row.push_back(window_generator(WindowKind::Random, group, 1.0, mixed));
                }
            }
            const BoundsReport bounds = frame_bounds(GaborSystem{fam, lattice});
            if (bounds.is_frame()) {
                result.found = true;
                result.windows = std::move(fam);
                result.bounds = bounds;
                result.n = n;
                return result;
            }
        }
    }
    return result;
}

}  // namespace gdl

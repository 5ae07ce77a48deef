/**
 * @file io.hpp
 * @brief JSON problem/result documents, command dispatch, and spectrogram
 *        emission for the `gdl` command-line tool.
 *
 * The interchange format is JSON throughout: a ProblemDocument carries the
 * group, an optional weighted phase-space lattice, an optional d×n window
 * family (complex entries as [re, im] pairs, windows indexed data[k][j][t]
 * with t the lex group index), the task name, and a free-form task_params
 * object. Every command returns a ResultDocument {task, outputs,
 * tool_version, seed, wall_time_ms}; numeric values are serialized with
 * shortest round-trip precision so re-running on emitted output reproduces
 * results bitwise in serial mode.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdl/gabor.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

namespace gdl::io {

/// Version string echoed in every ResultDocument.
inline constexpr const char* kToolVersion = "1.0.0";

/// Parsed and validated problem input.
///
/// `lattice` and `windows` are optional in the JSON; commands that need a
/// missing section fail with InvalidInputError. Lattice generators are
/// stored reduced modulo the phase-space orders.
struct ProblemDocument {
    std::vector<std::int64_t> group_orders;

    bool has_lattice = false;
    std::vector<GroupElement> lattice_generators;  ///< Phase-space points (length 2k).
    double lattice_weight = 1.0;

    bool has_windows = false;
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::vector<std::vector<Signal>> window_data;  ///< [k][j], each of length |G|.

    std::string task;              ///< Optional echo; must match the command when set.
    nlohmann::json task_params;    ///< Always an object (defaults to {}).
};

/// Validates `doc` against the problem schema and returns the parsed
/// document. Rejects unknown top-level keys, non-finite numbers anywhere,
/// inconsistent window shapes, and instances beyond the desk-scale cap
/// |G|·max(d,1) ≤ 4096. @throws InvalidInputError
ProblemDocument parse_problem(const nlohmann::json& doc);

/// Inverse of parse_problem on canonical documents:
/// parse_problem(serialize_problem(p)) reproduces p field-for-field.
nlohmann::json serialize_problem(const ProblemDocument& problem);

/// Per-invocation knobs from the command line.
struct RunOptions {
    std::uint64_t seed = 0;   ///< Seeds deterministic default signals; echoed.
    double tolerance = 0.0;   ///< Overrides the per-command default when > 0.
};

/// Dispatches one command against a parsed problem and returns the
/// ResultDocument. Verdict-style commands (check-*) return exit-code-0
/// results even when the verdict is "fail"; invalid input raises
/// InvalidInputError and internal numeric failures (e.g. the canonical dual
/// of a non-frame) raise NumericError.
///
/// Commands: adjoint | covolume | bounds | riesz-bounds | dual | tight |
/// check-figa | check-wexler-raz | check-duality | check-associativity |
/// check-weil | construct | module-norm | spectrogram.
nlohmann::json run(const std::string& command, const ProblemDocument& problem,
                   const RunOptions& options = {});

/// Files written by emit_spectrogram plus the normalization constant.
struct SpectrogramFiles {
    std::string pgm_path;
    std::string csv_path;
    double max_magnitude = 0.0;  ///< max |V_g f|; 0 triggers the all-zero guard.
    std::int64_t width = 0;      ///< |G| (x axis).
    std::int64_t height = 0;     ///< |G| (ω axis).
};

/// Writes |V_g f| as a 16-bit binary PGM (P5): width = |G| along x, height
/// = |G| along ω (ω rank 0 is the top row), pixel = round(65535·|V_gf|/max)
/// with an all-zero guard when max = 0. A sibling CSV ("x,omega,magnitude",
/// lex ranks, x outer and ω inner) holds the raw magnitudes; its path is
/// `path` with a .pgm suffix replaced by .csv (appended otherwise).
/// @throws InvalidInputError on length mismatch or unwritable path.
SpectrogramFiles emit_spectrogram(const GroupSpec& base, const Signal& g, const Signal& f,
                                  const std::string& path);

}  // namespace gdl::io

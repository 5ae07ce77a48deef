/**
 * @file io.cpp
 * @brief JSON parsing/serialization and command dispatch for the CLI.
 */
#include "gdl/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>

#include "gdl/construction.hpp"
#include "gdl/duality.hpp"
#include "gdl/module_algebra.hpp"

namespace gdl::io {

using nlohmann::json;

namespace {

/// Desk-scale cap on |G|·max(d,1): documents beyond it are rejected up
/// front rather than allowed to exhaust memory in an eigensolver.
constexpr std::int64_t kDeskCap = 4096;

/// Golden-ratio mixing stride for deriving per-signal seeds from the CLI
/// seed; matches the stride used by the heuristic window search.
constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

[[noreturn]] void fail(const std::string& message) { throw InvalidInputError(message); }

void require(bool condition, const std::string& message) {
    if (!condition) fail(message);
}

/// Recursively rejects NaN/Inf anywhere in a JSON value.
void require_finite_numbers(const json& value, const std::string& where) {
    if (value.is_number_float()) {
        require(std::isfinite(value.get<double>()), where + ": non-finite number");
    } else if (value.is_array() || value.is_object()) {
        for (const auto& item : value) require_finite_numbers(item, where);
    }
}

double finite_number(const json& value, const std::string& where) {
    require(value.is_number(), where + ": expected a number");
    const double x = value.get<double>();
    require(std::isfinite(x), where + ": non-finite number");
    return x;
}

std::int64_t integer_number(const json& value, const std::string& where) {
    require(value.is_number_integer(), where + ": expected an integer");
    return value.get<std::int64_t>();
}

/// [re, im] pair → complex.
std::complex<double> parse_complex(const json& value, const std::string& where) {
    require(value.is_array() && value.size() == 2, where + ": expected an [re, im] pair");
    return {finite_number(value[0], where), finite_number(value[1], where)};
}

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

/// Array of [re, im] pairs of the given length → Signal.
Signal parse_signal(const json& value, std::int64_t length, const std::string& where) {
    require(value.is_array() && static_cast<std::int64_t>(value.size()) == length,
            where + ": expected an array of " + std::to_string(length) + " [re, im] pairs");
    Signal out(length);
    for (std::int64_t t = 0; t < length; ++t)
        out(t) = parse_complex(value[static_cast<std::size_t>(t)], where);
    return out;
}

json signal_to_json(const Signal& s) {
    json out = json::array();
    for (Eigen::Index t = 0; t < s.size(); ++t) out.push_back(complex_to_json(s(t)));
    return out;
}

json element_to_json(const GroupElement& e) {
    json out = json::array();
    for (std::int64_t c : e) out.push_back(c);
    return out;
}

json elements_to_json(const std::vector<GroupElement>& elements) {
    json out = json::array();
    for (const auto& e : elements) out.push_back(element_to_json(e));
    return out;
}

json window_data_to_json(const std::vector<std::vector<Signal>>& data) {
    json out = json::array();
    for (const auto& row : data) {
        json jrow = json::array();
        for (const auto& s : row) jrow.push_back(signal_to_json(s));
        out.push_back(jrow);
    }
    return out;
}

/// data[k][j][t] as nested [re, im] arrays → window grid.
std::vector<std::vector<Signal>> parse_window_data(const json& value, std::int64_t d,
                                                   std::int64_t n, std::int64_t length,
                                                   const std::string& where) {
    require(value.is_array() && static_cast<std::int64_t>(value.size()) == d,
            where + ": expected " + std::to_string(d) + " window rows");
    std::vector<std::vector<Signal>> data(static_cast<std::size_t>(d));
    for (std::int64_t k = 0; k < d; ++k) {
        const json& row = value[static_cast<std::size_t>(k)];
        require(row.is_array() && static_cast<std::int64_t>(row.size()) == n,
                where + ": expected " + std::to_string(n) + " windows per row");
        for (std::int64_t j = 0; j < n; ++j) {
            std::ostringstream tag;
            tag << where << "[" << k << "][" << j << "]";
            data[static_cast<std::size_t>(k)].push_back(
                parse_signal(row[static_cast<std::size_t>(j)], length, tag.str()));
        }
    }
    return data;
}

json bounds_to_json(const BoundsReport& report) {
    json spectrum = json::array();
    for (double x : report.spectrum) spectrum.push_back(x);
    return json{{"lower", report.lower},
                {"upper", report.upper},
                {"spectrum", spectrum},
                {"kind", report.kind}};
}

/// Deterministic normalized pseudo-random signal for defaults; `index`
/// separates the roles (f1 blocks, f2 blocks, ...) under one CLI seed.
Signal seeded_signal(const GroupSpec& group, std::uint64_t seed, std::uint64_t index) {
    return window_generator(WindowKind::Random, group, 1.0, seed + kSeedStride * index);
}

/// Everything a command needs, resolved once.
struct TaskContext {
    const ProblemDocument& problem;
    GroupSpec group;
    GroupSpec plane;
    RunOptions options;

    double tolerance_or(double fallback) const {
        return options.tolerance > 0.0 ? options.tolerance : fallback;
    }

    Subgroup lattice() const {
        require(problem.has_lattice, "this command requires a \"lattice\" section");
        return subgroup_closure(plane, problem.lattice_generators, problem.lattice_weight);
    }

    WindowFamily windows() const {
        require(problem.has_windows, "this command requires a \"windows\" section");
        WindowFamily family{group, problem.d, problem.n, problem.window_data};
        family.validate();
        return family;
    }

    GaborSystem system() const {
        GaborSystem sys{windows(), lattice()};
        sys.validate();
        return sys;
    }

    /// task_params[key] as a window grid with the shape of `like`,
    /// defaulting to `like` itself when the key is absent.
    WindowFamily family_param_or(const std::string& key, const WindowFamily& like) const {
        if (!problem.task_params.contains(key)) return like;
        WindowFamily family{like.group, like.d, like.n,
                            parse_window_data(problem.task_params.at(key), like.d, like.n,
                                              like.group.size(), "task_params." + key)};
        family.validate();
        return family;
    }

    /// task_params[key] as a d-block signal list, defaulting to seeded
    /// pseudo-random signals (block k uses seed index base_index + k).
    std::vector<Signal> signals_param_or(const std::string& key, std::int64_t blocks,
                                         std::uint64_t base_index) const {
        std::vector<Signal> out;
        if (problem.task_params.contains(key)) {
            const json& value = problem.task_params.at(key);
            require(value.is_array() && static_cast<std::int64_t>(value.size()) == blocks,
                    "task_params." + key + ": expected " + std::to_string(blocks) + " signals");
            for (std::int64_t k = 0; k < blocks; ++k)
                out.push_back(parse_signal(value[static_cast<std::size_t>(k)], group.size(),
                                           "task_params." + key));
        } else {
            for (std::int64_t k = 0; k < blocks; ++k)
                out.push_back(seeded_signal(group, options.seed,
                                            base_index + static_cast<std::uint64_t>(k)));
        }
        return out;
    }

    /// task_params[key] as a single signal on `on`, defaulting to a seeded
    /// pseudo-random signal.
    Signal signal_param_or(const std::string& key, const GroupSpec& on,
                           std::uint64_t index) const {
        if (problem.task_params.contains(key))
            return parse_signal(problem.task_params.at(key), on.size(), "task_params." + key);
        return seeded_signal(on, options.seed, index);
    }
};

json run_adjoint(const TaskContext& ctx) {
    const Subgroup lat = ctx.lattice();
    const Subgroup adj = adjoint_subgroup(ctx.group, lat);
    return json{{"elements", elements_to_json(adj.elements)},
                {"size", static_cast<std::int64_t>(adj.elements.size())},
                {"weight", adj.weight},
                {"covolume", covolume(ctx.plane, lat)},
                {"adjoint_covolume", covolume(ctx.plane, adj)}};
}

json run_covolume(const TaskContext& ctx) {
    const Subgroup lat = ctx.lattice();
    json out{{"covolume", covolume(ctx.plane, lat)},
             {"weight", lat.weight},
             {"lattice_size", static_cast<std::int64_t>(lat.elements.size())},
             {"group_mass", haar_mass(ctx.plane)}};
    if (lat.weight == 1.0) {
        const auto [num, den] = covolume_exact(ctx.plane, lat);
        out["covolume_num"] = num;
        out["covolume_den"] = den;
    }
    return out;
}

json run_bounds(const TaskContext& ctx) {
    const BoundsReport report = frame_bounds(ctx.system());
    json out = bounds_to_json(report);
    out["is_frame"] = report.is_frame();
    return out;
}

json run_riesz_bounds(const TaskContext& ctx) {
    const GaborSystem sys = ctx.system();
    const double s = covolume(ctx.plane, sys.lattice);
    const GaborSystem adjoint_sys{sys.windows, adjoint_subgroup(ctx.group, sys.lattice)};
    const BoundsReport report = riesz_bounds(adjoint_sys, s);
    json out = bounds_to_json(report);
    out["is_riesz"] = report.is_frame();
    out["reference_covolume"] = s;
    return out;
}

json run_dual(const TaskContext& ctx, bool tight) {
    const GaborSystem sys = ctx.system();
    const WindowFamily result = tight ? canonical_tight(sys) : canonical_dual(sys);
    return json{{"windows",
                 json{{"d", result.d}, {"n", result.n}, {"data", window_data_to_json(result.data)}}}};
}

json run_check_figa(const TaskContext& ctx) {
    const GaborSystem sys = ctx.system();
    const WindowFamily h = ctx.family_param_or("h", sys.windows);
    const std::vector<Signal> f1 = ctx.signals_param_or("f1", sys.windows.d, 1);
    const std::vector<Signal> f2 = ctx.signals_param_or(
        "f2", sys.windows.d, 1 + static_cast<std::uint64_t>(sys.windows.d));
    const FigaCheck check = figa_check(f1, f2, sys.windows, h, sys.lattice);
    const double tol = ctx.tolerance_or(1e-10);
    return json{{"lhs", complex_to_json(check.lhs)},
                {"rhs", complex_to_json(check.rhs)},
                {"residual", check.residual},
                {"tolerance", tol},
                {"pass", check.residual < tol}};
}

json run_check_wexler_raz(const TaskContext& ctx) {
    const GaborSystem sys = ctx.system();
    std::string h_source = "task_params";
    WindowFamily h = sys.windows;
    if (ctx.problem.task_params.contains("h")) {
        h = ctx.family_param_or("h", sys.windows);
    } else {
        h = canonical_dual(sys);  // NumericError when not a frame → exit 3.
        h_source = "canonical-dual";
    }
    const WexlerRazCheck check = wexler_raz_check(sys.windows, h, sys.lattice);
    const double tol = ctx.tolerance_or(1e-9);
    return json{{"residual", check.residual},
                {"is_dual_pair", check.residual < tol},
                {"tolerance", tol},
                {"covolume", covolume(ctx.plane, sys.lattice)},
                {"h_source", h_source}};
}

json run_check_duality(const TaskContext& ctx) {
    const DualityCertificate cert = duality_certificate(ctx.system());
    const double tol = ctx.tolerance_or(1e-8);
    const bool pass = cert.max_deviation < tol * std::max(1.0, cert.frame.upper);
    return json{{"frame", json{{"lower", cert.frame.lower}, {"upper", cert.frame.upper}}},
                {"riesz", json{{"lower", cert.riesz.lower}, {"upper", cert.riesz.upper}}},
                {"covolume", cert.covolume},
                {"max_deviation", cert.max_deviation},
                {"tolerance", tol},
                {"verdict", pass ? "pass" : "fail"}};
}

json run_check_associativity(const TaskContext& ctx) {
    const Subgroup lat = ctx.lattice();
    const Signal f = ctx.signal_param_or("f", ctx.group, 1);
    const Signal g = ctx.signal_param_or("g", ctx.group, 2);
    const Signal h = ctx.signal_param_or("h", ctx.group, 3);
    const double residual = associativity_residual(f, g, h, lat);
    const double tol = ctx.tolerance_or(1e-10);
    return json{{"residual", residual}, {"tolerance", tol}, {"pass", residual < tol}};
}

json run_check_weil(const TaskContext& ctx) {
    const Subgroup lat = ctx.lattice();
    const Signal F = ctx.signal_param_or("function", ctx.plane, 1);
    const double residual = weil_verify(ctx.plane, lat, F);
    const double tol = ctx.tolerance_or(1e-10);
    return json{{"residual", residual}, {"tolerance", tol}, {"pass", residual < tol}};
}

json run_construct(const TaskContext& ctx) {
    const Subgroup lat = ctx.lattice();
    WindowFamily seed{ctx.group, 0, 1, {}};
    if (ctx.problem.has_windows) {
        seed = ctx.windows();
    } else {
        std::int64_t d = 1;
        if (ctx.problem.task_params.contains("d"))
            d = integer_number(ctx.problem.task_params.at("d"), "task_params.d");
        require(d >= 1 && d <= ctx.group.size(),
                "task_params.d must lie in [1, |G|] for the default delta seeds");
        seed.d = d;
        seed.data.assign(static_cast<std::size_t>(d), {});
        for (std::int64_t k = 0; k < d; ++k) {
            Signal delta = Signal::Zero(ctx.group.size());
            delta(k) = 1.0;
            seed.data[static_cast<std::size_t>(k)].push_back(delta);
        }
    }
    StopRule rule = StopRule::Criterion;
    if (ctx.problem.task_params.contains("stop_rule")) {
        const json& value = ctx.problem.task_params.at("stop_rule");
        require(value.is_string(), "task_params.stop_rule: expected a string");
        const std::string name = value.get<std::string>();
        if (name == "criterion") rule = StopRule::Criterion;
        else if (name == "spectral") rule = StopRule::Spectral;
        else fail("task_params.stop_rule must be \"criterion\" or \"spectral\"");
    }
    const RefinementResult result = refine_until_frame(seed, lat, rule);
    json chain = json::array();
    json chain_sizes = json::array();
    for (const auto& member : result.chain) {
        chain.push_back(elements_to_json(member.elements));
        chain_sizes.push_back(static_cast<std::int64_t>(member.elements.size()));
    }
    return json{{"n", result.n},
                {"windows", json{{"d", result.windows.d},
                                 {"n", result.windows.n},
                                 {"data", window_data_to_json(result.windows.data)}}},
                {"chain", chain},
                {"chain_sizes", chain_sizes},
                {"refined_lattice", elements_to_json(result.refined_lattice.elements)},
                {"transversal", elements_to_json(result.transversal)},
                {"bounds", json{{"lower", result.certificate.bounds.lower},
                                {"upper", result.certificate.bounds.upper}}},
                {"neumann", result.certificate.neumann},
                {"is_frame", result.certificate.is_frame}};
}

json run_module_norm(const TaskContext& ctx) {
    const GaborSystem sys = ctx.system();
    const ModuleNormReport report = module_norm_check(sys.windows, sys.lattice);
    return json{{"norm_primal", report.norm_primal},
                {"norm_adjoint", report.norm_adjoint},
                {"residual", report.residual},
                {"agrees", report.agrees}};
}

json run_spectrogram(const TaskContext& ctx) {
    const WindowFamily windows = ctx.windows();
    const Signal& g = windows.data[0][0];
    const Signal f = ctx.signal_param_or("signal", ctx.group, 1);
    require(ctx.problem.task_params.contains("path"),
            "spectrogram requires task_params.path (output PGM file)");
    const json& path_value = ctx.problem.task_params.at("path");
    require(path_value.is_string(), "task_params.path: expected a string");
    const SpectrogramFiles files =
        emit_spectrogram(ctx.group, g, f, path_value.get<std::string>());
    return json{{"path", files.pgm_path},
                {"csv_path", files.csv_path},
                {"width", files.width},
                {"height", files.height},
                {"max_magnitude", files.max_magnitude}};
}

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands = {
        "adjoint",          "covolume",     "bounds",
        "riesz-bounds",     "dual",         "tight",
        "check-figa",       "check-wexler-raz", "check-duality",
        "check-associativity", "check-weil", "construct",
        "module-norm",      "spectrogram"};
    return commands;
}

}  // namespace

ProblemDocument parse_problem(const json& doc) {
    require(doc.is_object(), "problem document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        static_cast<void>(value);
        require(key == "group" || key == "lattice" || key == "windows" || key == "task" ||
                    key == "task_params",
                "unknown top-level key \"" + key + "\"");
    }
    require_finite_numbers(doc, "problem document");

    ProblemDocument out;
    require(doc.contains("group") && doc.at("group").is_object(),
            "missing required object \"group\"");
    const json& group = doc.at("group");
    require(group.contains("orders") && group.at("orders").is_array() &&
                !group.at("orders").empty(),
            "group.orders must be a non-empty array of integers");
    for (const auto& value : group.at("orders")) {
        const std::int64_t order = integer_number(value, "group.orders");
        require(order >= 1, "group.orders entries must be >= 1");
        out.group_orders.push_back(order);
    }
    const GroupSpec base = make_group(out.group_orders);
    require(base.size() <= kDeskCap, "group order exceeds the desk-scale cap of 4096");
    const std::size_t rank2 = 2 * base.rank();

    if (doc.contains("lattice")) {
        const json& lattice = doc.at("lattice");
        require(lattice.is_object(), "\"lattice\" must be an object");
        require(lattice.contains("generators") && lattice.at("generators").is_array(),
                "lattice.generators must be an array of phase-space points");
        for (const auto& gen : lattice.at("generators")) {
            require(gen.is_array() && gen.size() == rank2,
                    "each lattice generator must list 2·rank coordinates");
            GroupElement point;
            for (std::size_t i = 0; i < rank2; ++i) {
                const std::int64_t order = base.orders[i % base.rank()];
                std::int64_t coordinate = integer_number(gen[i], "lattice.generators");
                coordinate %= order;
                if (coordinate < 0) coordinate += order;
                point.push_back(coordinate);
            }
            out.lattice_generators.push_back(point);
        }
        if (lattice.contains("weight")) {
            out.lattice_weight = finite_number(lattice.at("weight"), "lattice.weight");
            require(out.lattice_weight > 0.0, "lattice.weight must be > 0");
        }
        out.has_lattice = true;
    }

    std::int64_t cap_d = 1;
    if (doc.contains("windows")) {
        const json& windows = doc.at("windows");
        require(windows.is_object(), "\"windows\" must be an object");
        require(windows.contains("d") && windows.contains("n") && windows.contains("data"),
                "windows requires fields d, n, data");
        out.d = integer_number(windows.at("d"), "windows.d");
        out.n = integer_number(windows.at("n"), "windows.n");
        require(out.d >= 1 && out.n >= 1, "windows.d and windows.n must be >= 1");
        out.window_data =
            parse_window_data(windows.at("data"), out.d, out.n, base.size(), "windows.data");
        out.has_windows = true;
        cap_d = out.d;
    }
    require(base.size() * cap_d <= kDeskCap,
            "|G|·d exceeds the desk-scale cap of 4096");

    if (doc.contains("task")) {
        require(doc.at("task").is_string(), "\"task\" must be a string");
        out.task = doc.at("task").get<std::string>();
        const auto& commands = known_commands();
        require(std::find(commands.begin(), commands.end(), out.task) != commands.end(),
                "unknown task \"" + out.task + "\"");
    }

    if (doc.contains("task_params")) {
        require(doc.at("task_params").is_object(), "\"task_params\" must be an object");
        out.task_params = doc.at("task_params");
    } else {
        out.task_params = json::object();
    }
    return out;
}

json serialize_problem(const ProblemDocument& problem) {
    json doc;
    doc["group"] = json{{"orders", problem.group_orders}};
    if (problem.has_lattice) {
        doc["lattice"] = json{{"generators", elements_to_json(problem.lattice_generators)},
                              {"weight", problem.lattice_weight}};
    }
    if (problem.has_windows) {
        doc["windows"] = json{{"d", problem.d},
                              {"n", problem.n},
                              {"data", window_data_to_json(problem.window_data)}};
    }
    if (!problem.task.empty()) doc["task"] = problem.task;
    doc["task_params"] = problem.task_params;
    return doc;
}

json run(const std::string& command, const ProblemDocument& problem, const RunOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const auto& commands = known_commands();
    require(std::find(commands.begin(), commands.end(), command) != commands.end(),
            "unknown command \"" + command + "\"");
    require(problem.task.empty() || problem.task == command,
            "problem task \"" + problem.task + "\" does not match command \"" + command + "\"");
    require(options.tolerance >= 0.0, "tolerance must be >= 0");

    const GroupSpec group = make_group(problem.group_orders);
    const TaskContext ctx{problem, group, plane_of(group), options};

    json outputs;
    if (command == "adjoint") outputs = run_adjoint(ctx);
    else if (command == "covolume") outputs = run_covolume(ctx);
    else if (command == "bounds") outputs = run_bounds(ctx);
    else if (command == "riesz-bounds") outputs = run_riesz_bounds(ctx);
    else if (command == "dual") outputs = run_dual(ctx, false);
    else if (command == "tight") outputs = run_dual(ctx, true);
    else if (command == "check-figa") outputs = run_check_figa(ctx);
    else if (command == "check-wexler-raz") outputs = run_check_wexler_raz(ctx);
    else if (command == "check-duality") outputs = run_check_duality(ctx);
    else if (command == "check-associativity") outputs = run_check_associativity(ctx);
    else if (command == "check-weil") outputs = run_check_weil(ctx);
    else if (command == "construct") outputs = run_construct(ctx);
    else if (command == "module-norm") outputs = run_module_norm(ctx);
    else outputs = run_spectrogram(ctx);

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return json{{"task", command},
                {"outputs", outputs},
                {"tool_version", kToolVersion},
                {"seed", options.seed},
                {"wall_time_ms", wall_ms}};
}

SpectrogramFiles emit_spectrogram(const GroupSpec& base, const Signal& g, const Signal& f,
                                  const std::string& path) {
    const std::int64_t mass = base.size();
    if (g.size() != mass || f.size() != mass)
        fail("spectrogram window/signal length must equal |G|");

    // Plane rank = x_rank·|G| + ω_rank, so the STFT table reads as a
    // row-major (x, ω) matrix of magnitudes.
    const Eigen::VectorXcd table = stft(base, g, f);
    Eigen::MatrixXd magnitude(mass, mass);
    for (std::int64_t xr = 0; xr < mass; ++xr)
        for (std::int64_t wr = 0; wr < mass; ++wr)
            magnitude(xr, wr) = std::abs(table(xr * mass + wr));
    const double max_magnitude = magnitude.maxCoeff();

    SpectrogramFiles files;
    files.pgm_path = path;
    files.max_magnitude = max_magnitude;
    files.width = mass;
    files.height = mass;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".pgm") == 0)
        files.csv_path = path.substr(0, path.size() - 4) + ".csv";
    else
        files.csv_path = path + ".csv";

    std::ofstream pgm(files.pgm_path, std::ios::binary);
    if (!pgm) fail("cannot open \"" + files.pgm_path + "\" for writing");
    pgm << "P5\n" << mass << " " << mass << "\n65535\n";
    // Rows are ω (rank 0 at the top), columns are x; 16-bit big-endian
    // samples per the PGM specification.
    for (std::int64_t wr = 0; wr < mass; ++wr) {
        for (std::int64_t xr = 0; xr < mass; ++xr) {
            std::uint16_t pixel = 0;
            if (max_magnitude > 0.0)
                pixel = static_cast<std::uint16_t>(
                    std::lround(65535.0 * magnitude(xr, wr) / max_magnitude));
            const unsigned char bytes[2] = {static_cast<unsigned char>(pixel >> 8),
                                            static_cast<unsigned char>(pixel & 0xff)};
            pgm.write(reinterpret_cast<const char*>(bytes), 2);
        }
    }
    pgm.close();
    if (!pgm) fail("failed to write \"" + files.pgm_path + "\"");

    std::ofstream csv(files.csv_path);
    if (!csv) fail("cannot open \"" + files.csv_path + "\" for writing");
    csv << "x,omega,magnitude\n";
    csv.precision(17);
    for (std::int64_t xr = 0; xr < mass; ++xr)
        for (std::int64_t wr = 0; wr < mass; ++wr)
            csv << xr << "," << wr << "," << magnitude(xr, wr) << "\n";
    csv.close();
    if (!csv) fail("failed to write \"" + files.csv_path + "\"");
    return files;
}

}  // namespace gdl::io

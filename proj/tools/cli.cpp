#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/asymptotics.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/energy.hpp"
#include "riesz/error.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/pointset.hpp"
#include "riesz/pointset_io.hpp"
#include "riesz/random.hpp"
#include "riesz/reports.hpp"
#include "riesz/special_functions.hpp"

namespace riesz::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;


std::size_t default_threads() {
    const char* env = std::getenv("TOOLKIT_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    std::size_t v = 0;
    const std::string_view sv(env);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size() || v == 0)
        throw ValidationError("TOOLKIT_THREADS must be a positive integer, got '" + std::string(sv) + "'");
    return v;
}

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// Options shared by the commands that read a point set and print a report.
struct Io {
    std::string in = "-";
    std::string out;
    std::string format = "json";
    bool renormalize = false;
    std::optional<int> d;
    std::size_t threads = 1;
};

void add_input(CLI::App* cmd, Io& io) {
    cmd->add_option("--in", io.in, "point set file (CSV or JSON); '-' reads stdin")->capture_default_str();
    cmd->add_flag("--renormalize", io.renormalize, "rescale rows that are not unit vectors");
    cmd->add_option("--d", io.d, "expected sphere dimension");
}

void add_output(CLI::App* cmd, Io& io) {
    cmd->add_option("--out", io.out, "output path (default stdout)");
    cmd->add_option("--format", io.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

void add_threads(CLI::App* cmd, Io& io) {
    cmd->add_option("--threads", io.threads, "worker threads (env TOOLKIT_THREADS)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

PointSet load(const Io& io, Streams& s) {
    io::ReadOptions opts;
    opts.d = io.d;
    opts.renormalize = io.renormalize;
    if (io.in == "-") return io::read_pointset(s.in, opts);
    return io::read_pointset(std::filesystem::path(io.in), opts);
}

void write_text(const std::string& path, const std::string& text, Streams& s) {
    if (path.empty() || path == "-") {
        s.out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open '" + path + "' for writing");
    f << text;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
    } else {
        os << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

// Wraps a result with the metadata every report carries and writes it.
void emit(const std::string& command, json params, json result, Clock::time_point start, const Io& io, Streams& s) {
    json doc = {{"version", kVersion},
                {"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"wall_time_s", std::chrono::duration<double>(Clock::now() - start).count()}};
    if (io.format == "csv") {
        std::ostringstream os;
        os << "field,value\n";
        flatten(doc, "", os);
        write_text(io.out, os.str(), s);
    } else {
        write_text(io.out, doc.dump(2) + "\n", s);
    }
}

std::string digits(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string kind;
    int d = 2;
    std::int64_t n = 0;
    int m = -1;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
};

int cmd_gen(const GenArgs& a, Streams& s) {
    PointSet ps = [&] {
        if (a.kind == "roots-of-unity") return points::roots_of_unity(a.n);
        if (a.kind == "random") return points::random_uniform(a.d, a.n, a.seed);
        if (a.kind == "fibonacci") return points::fibonacci_sphere(a.n);
        if (a.kind == "octahedron") return points::octahedron();
        if (a.kind == "tetrahedron") return points::tetrahedron();
        // hammersley: 2^m points lifted to S²
        int m = a.m;
        if (m < 0) {
            if (a.n < 1 || (a.n & (a.n - 1)) != 0) throw ValidationError("hammersley needs --m or a power-of-two --n");
            m = 0;
            while ((std::int64_t{1} << m) < a.n) ++m;
        }
        return points::lambert_lift(points::hammersley_square(m));
    }();
    std::ostringstream os;
    io::write_pointset(ps, os, io::parse_format(a.format));
    write_text(a.out, os.str(), s);
    return 0;
}

// ---------------------------------------------------------------- energy

struct EnergyArgs {
    Io io;
    double s = -1.0;
};

int cmd_energy(const EnergyArgs& a, Streams& s) {
    const auto start = Clock::now();
    const PointSet x = load(a.io, s);
    const ReductionPolicy policy{kReductionChunks, a.io.threads};
    const auto report = energy_report(x, a.s, policy);
    emit("energy", {{"s", a.s}, {"in", a.io.in}, {"threads", a.io.threads}, {"renormalize", a.io.renormalize}},
         report, start, a.io, s);
    return 0;
}

// ---------------------------------------------------------------- disc

struct DiscArgs {
    Io io;
    std::string kind = "l2";
    std::int64_t centers = 4096;
    std::uint64_t seed = 0;
    int degree = 8;
};

int cmd_disc(const DiscArgs& a, Streams& s) {
    const auto start = Clock::now();
    const PointSet x = load(a.io, s);
    const ReductionPolicy policy{kReductionChunks, a.io.threads};
    json params = {{"kind", a.kind}, {"in", a.io.in}, {"threads", a.io.threads}, {"renormalize", a.io.renormalize}};
    json result;
    if (a.kind == "l2") {
        result = l2_cap_discrepancy(x, policy);
    } else if (a.kind == "l2-direct") {
        params["centers"] = a.centers;
        params["seed"] = a.seed;
        result = l2_cap_discrepancy_direct(x, a.centers, a.seed, a.io.threads);
    } else if (a.kind == "cap-sup") {
        params["centers"] = a.centers;
        params["seed"] = a.seed;
        result = cap_sup_discrepancy_lower(x, a.centers, a.seed, a.io.threads);
    } else if (a.kind == "cui-freeden") {
        result = cui_freeden(x, policy);
    } else if (a.kind == "sum-distance") {
        result = sum_distance_discrepancy(x, policy);
    } else if (a.kind == "leveque") {
        params["degree"] = a.degree;
        const auto f = leveque_functionals(x, a.degree);
        DiscrepancyReport r;
        r.kind = DiscrepancyKind::LeVeque;
        r.d = x.dim();
        r.N = x.size();
        r.value = f.lower;
        r.degree = f.degree;
        r.lower_functional = f.lower;
        r.upper_functional = f.upper;
        result = r;
    } else {  // weyl
        params["degree"] = a.degree;
        result = {{"d", x.dim()}, {"N", x.size()}, {"degree", a.degree}, {"weyl_sums", weyl_sums(x, a.degree)}};
    }
    emit("disc", std::move(params), std::move(result), start, a.io, s);
    return 0;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
    std::string in;
    int d = 2;
    std::int64_t n = 0;
    double s = -1.0;
    std::uint64_t seed = 0;
    int restarts = 1;
    std::int64_t max_iters = 10000;
    double grad_tol = 1e-9;
    std::string out;
    std::string trace;
    std::string report;
    std::string format = "csv";
    std::size_t threads = 1;
};

int cmd_optimize(const OptimizeArgs& a, Streams& s) {
    const auto start = Clock::now();
    OptimizerConfig cfg;
    cfg.s = a.s;
    cfg.maximize = a.s < 0.0;
    cfg.max_iters = a.max_iters;
    cfg.grad_tol = a.grad_tol;
    cfg.restarts = a.restarts;
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    cfg.record_trace = !a.trace.empty();

    std::optional<PointSet> x0;
    if (!a.in.empty()) {
        Io io;
        io.in = a.in;
        io.d = a.d;
        x0 = load(io, s);
    } else {
        if (a.n < 2) throw ValidationError("optimize: --n >= 2 required when no --in is given");
        x0 = points::random_uniform(a.d, a.n, a.seed);
    }
    const auto result = optimize(*x0, cfg);

    if (!a.out.empty()) {
        std::ostringstream os;
        io::write_pointset(result.best, os, io::parse_format(a.format));
        write_text(a.out, os.str(), s);
    }
    if (!a.trace.empty()) {
        std::ostringstream os;
        os << "iter,objective,grad_norm,step\n";
        for (const auto& row : result.trace)
            os << row.iter << ',' << io::format_double(row.objective) << ',' << io::format_double(row.grad_norm) << ','
               << io::format_double(row.step) << '\n';
        write_text(a.trace, os.str(), s);
    }

    json params = cfg;
    params["d"] = x0->dim();
    params["N"] = x0->size();
    params["in"] = a.in;
    params["out"] = a.out;
    params["trace"] = a.trace;
    Io io;
    io.out = a.report;
    emit("optimize", std::move(params), result, start, io, s);
    return 0;
}

// ---------------------------------------------------------------- constants

struct ConstantsArgs {
    std::string name;
    int d = 2;
    double s = -1.0;
    Io io;
};

int cmd_constants(const ConstantsArgs& a, Streams& s) {
    const auto start = Clock::now();
    json params = {{"name", a.name}};
    double value = 0.0;
    json provenance;
    if (a.name == "A1" || a.name == "A2") {
        const int d = a.name == "A1" ? 1 : 2;
        value = asymptotics::conjectured_A(d);
        provenance = {{"formula", "A_d = sqrt(ratio(d) * (-C_{-1,d}) * area(S^d)^(1/d))"},
                      {"C", d == 1 ? "C_{-1,1} = 2 zeta(-1)" : "C_{-1,2} = (sqrt(3)/2)^(-1/2) zeta_Lambda(-1)"},
                      {"method", d == 1 ? "Riemann zeta by Euler-Maclaurin"
                                        : "zeta_Lambda(s) = 6 zeta(s/2) L_-3(s/2), Hurwitz zeta by Euler-Maclaurin"}};
        if (d == 2) {
            provenance["closed_form"] = "sqrt(3/2 * sqrt(8 pi/sqrt(3)) * (-zeta(-1/2)) * L_-3(-1/2))";
            provenance["closed_form_value"] = asymptotics::conjectured_A2_closed_form();
            provenance["reference_digits"] = "0.44679728350408";
        } else {
            provenance["exact"] = "1/sqrt(3)";
        }
    } else if (a.name == "V") {
        params["d"] = a.d;
        params["s"] = a.s;
        value = continuous_energy(a.d, a.s);
        provenance = {{"formula", "2^(d-s-1) Gamma((d+1)/2) Gamma((d-s)/2) / (sqrt(pi) Gamma(d-s/2))"}};
    } else if (a.name == "ratio") {
        params["d"] = a.d;
        value = ball_sphere_ratio(a.d);
        provenance = {{"formula", "Gamma((d+1)/2) / (d sqrt(pi) Gamma(d/2))"}};
    } else if (a.name == "C") {
        params["d"] = a.d;
        params["s"] = a.s;
        value = conjectured_C(a.d, a.s);
        provenance = {{"formula", a.d == 1 ? "2 zeta(s)" : "(sqrt(3)/2)^(s/2) zeta_Lambda(s)"}};
    } else if (a.name == "zeta") {
        params["s"] = a.s;
        value = special::riemann_zeta(a.s);
        provenance = {{"method", "Euler-Maclaurin; functional equation for s < 0"}};
    } else if (a.name == "L3") {
        params["s"] = a.s;
        value = special::dirichlet_L3(a.s);
        provenance = {{"formula", "3^(-s) (zeta(s,1/3) - zeta(s,2/3))"}};
    } else {  // zeta-lattice
        params["s"] = a.s;
        value = special::hex_lattice_zeta(a.s);
        provenance = {{"formula", "6 zeta(s/2) L_-3(s/2)"}};
    }
    emit("constants", std::move(params), {{"name", a.name}, {"value", value}, {"digits", digits(value)},
                                          {"provenance", provenance}},
         start, a.io, s);
    return 0;
}

// ---------------------------------------------------------------- predict

struct PredictArgs {
    int d = 1;
    std::vector<std::int64_t> n{32, 64, 128, 256};
    int p = 2;
    std::string out;
};

int cmd_predict(const PredictArgs& a, Streams& s) {
    if (a.d != 1 && a.d != 2) throw UnsupportedDimension("predict: d must be 1 or 2");
    std::ostringstream os;
    os << "N,predicted,measured\n";
    for (const auto n : a.n) {
        double predicted = 0.0;
        double measured = 0.0;
        if (a.d == 1) {
            predicted = asymptotics::predicted_l2_roots_of_unity(n, a.p);
            measured = asymptotics::exact_l2_roots_of_unity(n);
        } else {
            const double c = asymptotics::conjectured_A(2);
            predicted = c * c * std::pow(static_cast<double>(n), -1.5);
            const auto r = l2_cap_discrepancy(points::fibonacci_sphere(n));
            measured = *r.squared;
        }
        os << n << ',' << io::format_double(predicted) << ',' << io::format_double(measured) << '\n';
    }
    write_text(a.out, os.str(), s);
    return 0;
}

// ---------------------------------------------------------------- fit

struct FitArgs {
    Io io;
};

std::vector<std::pair<double, double>> read_samples(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'N,value'", lineno);
        auto parse = [&](std::string_view sv, double& v) {
            while (!sv.empty() && sv.front() == ' ') sv.remove_prefix(1);
            while (!sv.empty() && sv.back() == ' ') sv.remove_suffix(1);
            const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
            return ec == std::errc() && ptr == sv.data() + sv.size();
        };
        double n = 0.0;
        double v = 0.0;
        const std::string_view sv(line);
        const auto rest = sv.substr(comma + 1);
        // Only the first two columns are used; a header row is skipped.
        const auto second = rest.substr(0, rest.find(','));
        if (!parse(sv.substr(0, comma), n) || !parse(second, v)) {
            if (out.empty() && lineno == 1) continue;
            throw ParseError("non-numeric sample", lineno);
        }
        out.emplace_back(n, v);
    }
    return out;
}

int cmd_fit(const FitArgs& a, Streams& s) {
    const auto start = Clock::now();
    std::vector<std::pair<double, double>> samples;
    if (a.io.in == "-") {
        samples = read_samples(s.in);
    } else {
        std::ifstream f(a.io.in);
        if (!f) throw ValidationError("cannot open '" + a.io.in + "'");
        samples = read_samples(f);
    }
    emit("fit", {{"in", a.io.in}, {"samples", samples.size()}}, asymptotics::power_law_fit(samples), start, a.io, s);
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "stolarsky";
    int d = 2;
    std::int64_t n = 100;
    std::uint64_t seed = 0;
    int trials = 1;
    Io io;
};

int cmd_verify(const VerifyArgs& a, Streams& s) {
    const auto start = Clock::now();
    json params = {{"suite", a.suite}, {"d", a.d}, {"n", a.n}, {"seed", a.seed}, {"trials", a.trials}};
    if (a.trials < 1) throw ValidationError("verify: --trials must be >= 1");
    double worst = 0.0;
    double tolerance = 0.0;
    json details = json::array();
    const Rng root(a.seed);

    if (a.suite == "stolarsky") {
        tolerance = 1e-10;
        const double v = continuous_energy(a.d, -1.0);
        const double ratio = ball_sphere_ratio(a.d);
        for (int t = 0; t < a.trials; ++t) {
            const auto x = points::random_uniform(a.d, a.n, t == 0 ? a.seed : root.substream(t).next());
            const double d2 = *l2_cap_discrepancy(x).squared;
            // Mean distance recomputed pair by pair, independently of the energy module.
            NeumaierSum sum;
            for (std::size_t j = 0; j < x.size(); ++j)
                for (std::size_t k = 0; k < x.size(); ++k) sum.add(distance(x[j], x[k]));
            const double nn = static_cast<double>(x.size()) * static_cast<double>(x.size());
            const double residual = std::abs(sum.value() / nn + d2 / ratio - v);
            details.push_back({{"trial", t}, {"d2", d2}, {"residual", residual}});
            worst = std::max(worst, residual);
        }
    } else if (a.suite == "gradient") {
        tolerance = 1e-6;
        for (int t = 0; t < a.trials; ++t) {
            const auto x = points::random_uniform(a.d, a.n, t == 0 ? a.seed : root.substream(t).next());
            for (const double sv : {-1.0, 0.0, 1.0, 3.0}) {
                const auto g = riesz_gradient(x, RieszParam(sv));
                const auto fd = finite_diff_gradient(x, sv, 1e-5);
                double num = 0.0;
                double den = 0.0;
                for (std::size_t i = 0; i < g.values().size(); ++i) {
                    num = std::max(num, std::abs(g.values()[i] - fd.values()[i]));
                    den = std::max(den, std::abs(g.values()[i]));
                }
                const double rel = num / std::max(den, 1e-300);
                details.push_back({{"trial", t}, {"s", sv}, {"relative_error", rel}});
                worst = std::max(worst, rel);
            }
        }
    } else if (a.suite == "zeta") {
        tolerance = 1e-11;
        for (double sv = -6.0; sv <= 6.0; sv += 0.25) {
            if (sv == 1.0) continue;
            const double z = special::riemann_zeta(sv);
            const double h = special::hurwitz_zeta(sv, 1.0);
            const double r = std::abs(z - h) / std::max(1.0, std::abs(z));
            details.push_back({{"s", sv}, {"residual", r}});
            worst = std::max(worst, r);
        }
    } else {  // bernoulli
        tolerance = 1e-12;
        for (int k = 1; k <= 6; ++k) {
            const auto alpha = special::sinc_power_coeffs(-1.0, k);
            const double lhs = alpha.coeffs[static_cast<std::size_t>(k)] * special::riemann_zeta(-1.0 - 2.0 * k);
            const double rhs = static_cast<double>(asymptotics::bernoulli_correction(k));
            const double r = std::abs(lhs - rhs) / std::abs(rhs);
            details.push_back({{"n", k}, {"lhs", lhs}, {"rhs", rhs}, {"relative_error", r}});
            worst = std::max(worst, r);
        }
    }

    const bool passed = worst <= tolerance;
    emit("verify", std::move(params),
         {{"suite", a.suite}, {"max_residual", worst}, {"tolerance", tolerance}, {"passed", passed}, {"checks", details}},
         start, a.io, s);
    return passed ? 0 : 2;
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams streams{in, out, err};
    std::size_t threads = 1;
    try {
        threads = default_threads();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    CLI::App app{"Riesz energies, spherical cap discrepancies and their asymptotics", "riesz-cli"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "TOML/INI file supplying option values; unknown keys are rejected");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "generate a point set");
    c_gen->add_option("--kind", gen.kind, "generator")
        ->required()
        ->check(CLI::IsMember({"roots-of-unity", "random", "fibonacci", "hammersley", "octahedron", "tetrahedron"}));
    c_gen->add_option("--d", gen.d, "sphere dimension (random)")->capture_default_str();
    c_gen->add_option("--n", gen.n, "number of points");
    c_gen->add_option("--m", gen.m, "hammersley: 2^m points");
    c_gen->add_option("--seed", gen.seed, "random seed")->capture_default_str();
    c_gen->add_option("--out", gen.out, "output path (default stdout)");
    c_gen->add_option("--format", gen.format, "point set format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    EnergyArgs energy;
    energy.io.threads = threads;
    auto* c_energy = app.add_subcommand("energy", "Riesz s-energy of a point set");
    c_energy->add_option("--s", energy.s, "Riesz exponent (0 = logarithmic)")->required();
    add_input(c_energy, energy.io);
    add_output(c_energy, energy.io);
    add_threads(c_energy, energy.io);

    DiscArgs disc;
    disc.io.threads = threads;
    auto* c_disc = app.add_subcommand("disc", "discrepancy of a point set");
    c_disc->add_option("--kind", disc.kind, "discrepancy kind")
        ->check(CLI::IsMember({"l2", "l2-direct", "cap-sup", "cui-freeden", "sum-distance", "leveque", "weyl"}))
        ->capture_default_str();
    c_disc->add_option("--centers", disc.centers, "sampled cap centers")->capture_default_str();
    c_disc->add_option("--seed", disc.seed, "center sampling seed")->capture_default_str();
    c_disc->add_option("--degree", disc.degree, "harmonic truncation degree L")->capture_default_str();
    add_input(c_disc, disc.io);
    add_output(c_disc, disc.io);
    add_threads(c_disc, disc.io);

    OptimizeArgs opt;
    opt.threads = threads;
    auto* c_opt = app.add_subcommand("optimize", "optimize the Riesz s-energy");
    c_opt->add_option("--in", opt.in, "starting point set (default: random)");
    c_opt->add_option("--d", opt.d, "sphere dimension")->capture_default_str();
    c_opt->add_option("--n", opt.n, "number of points");
    c_opt->add_option("--s", opt.s, "Riesz exponent; s < 0 maximizes")->capture_default_str();
    c_opt->add_option("--seed", opt.seed, "seed for starts")->capture_default_str();
    c_opt->add_option("--restarts", opt.restarts, "number of restarts")->capture_default_str();
    c_opt->add_option("--max-iters", opt.max_iters, "iterations per restart")->capture_default_str();
    c_opt->add_option("--grad-tol", opt.grad_tol, "stopping gradient norm")->capture_default_str();
    c_opt->add_option("--out", opt.out, "write the best point set here");
    c_opt->add_option("--format", opt.format, "format of --out")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    c_opt->add_option("--trace", opt.trace, "write the iteration trace CSV here");
    c_opt->add_option("--report", opt.report, "write the JSON report here (default stdout)");
    c_opt->add_option("--threads", opt.threads, "restarts run in parallel")->check(CLI::PositiveNumber)->capture_default_str();

    ConstantsArgs constants;
    auto* c_const = app.add_subcommand("constants", "evaluate a named constant");
    c_const->add_option("--name", constants.name, "constant")
        ->required()
        ->check(CLI::IsMember({"A1", "A2", "V", "ratio", "C", "zeta", "L3", "zeta-lattice"}));
    c_const->add_option("--d", constants.d, "dimension")->capture_default_str();
    c_const->add_option("--s", constants.s, "exponent")->capture_default_str();
    add_output(c_const, constants.io);

    PredictArgs predict;
    auto* c_pred = app.add_subcommand("predict", "predicted vs measured L2 discrepancy squared, CSV");
    c_pred->add_option("--d", predict.d, "1: roots of unity; 2: Fibonacci sphere")->capture_default_str();
    c_pred->add_option("--n", predict.n, "N schedule")->capture_default_str();
    c_pred->add_option("--p", predict.p, "correction terms (d = 1)")->capture_default_str();
    c_pred->add_option("--out", predict.out, "output path (default stdout)");

    FitArgs fit;
    auto* c_fit = app.add_subcommand("fit", "power-law fit of (N, value) CSV rows");
    c_fit->add_option("--in", fit.io.in, "CSV file; '-' reads stdin")->capture_default_str();
    add_output(c_fit, fit.io);

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "run an identity check suite");
    c_verify->add_option("--suite", verify.suite, "suite")
        ->check(CLI::IsMember({"stolarsky", "gradient", "zeta", "bernoulli"}))
        ->capture_default_str();
    c_verify->add_option("--d", verify.d, "sphere dimension")->capture_default_str();
    c_verify->add_option("--n", verify.n, "number of points")->capture_default_str();
    c_verify->add_option("--seed", verify.seed, "seed")->capture_default_str();
    c_verify->add_option("--trials", verify.trials, "random configurations")->capture_default_str();
    add_output(c_verify, verify.io);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 1;
    }

    try {
        if (c_gen->parsed()) return cmd_gen(gen, streams);
        if (c_energy->parsed()) return cmd_energy(energy, streams);
        if (c_disc->parsed()) return cmd_disc(disc, streams);
        if (c_opt->parsed()) return cmd_optimize(opt, streams);
        if (c_const->parsed()) return cmd_constants(constants, streams);
        if (c_pred->parsed()) return cmd_predict(predict, streams);
        if (c_fit->parsed()) return cmd_fit(fit, streams);
        return cmd_verify(verify, streams);
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, char** argv) { return run(argc, argv, std::cin, std::cout, std::cerr); }

}  // namespace riesz::cli

#include "puc/cli_commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "puc/cov.hpp"
#include "puc/csv.hpp"
#include "puc/datasets.hpp"
#include "puc/driver.hpp"
#include "puc/errors.hpp"
#include "puc/gamma_copula.hpp"
#include "puc/power_copula.hpp"
#include "puc/rank_data.hpp"
#include "puc/risk.hpp"
#include "puc/tail.hpp"

namespace puc {
namespace {

using nlohmann::json;

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError(std::string(what) + ": cannot parse '" + text +
                          "' as an unsigned integer");
    }
    return value;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PUCOP_SEED")) {
        return parse_u64(env, "PUCOP_SEED");
    }
    return 42;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& text, const char* what) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError(std::string(what) + ": cannot parse '" + text +
                          "' as a number");
    }
    return value;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const char* what) {
    std::vector<double> out;
    for (const std::string& piece : split(text, ',')) {
        out.push_back(parse_double(piece, what));
    }
    return out;
}

/// Accepts "4", "1,3,7", or the range form "1..10".
std::vector<int> parse_int_list_or_range(const std::string& text,
                                         const char* what) {
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const auto lo =
            static_cast<int>(parse_u64(text.substr(0, dots), what));
        const auto hi =
            static_cast<int>(parse_u64(text.substr(dots + 2), what));
        if (hi < lo) {
            throw ConfigError(std::string(what) + ": empty range '" + text +
                              "'");
        }
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::vector<int> out;
    for (const std::string& piece : split(text, ',')) {
        out.push_back(static_cast<int>(parse_u64(piece, what)));
    }
    return out;
}

std::vector<double> broadcast(std::vector<double> values, int dim,
                              const char* what) {
    if (static_cast<int>(values.size()) == dim) return values;
    if (values.size() == 1) {
        return std::vector<double>(static_cast<std::size_t>(dim), values[0]);
    }
    throw ConfigError(std::string(what) + ": expected 1 or " +
                      std::to_string(dim) + " values, got " +
                      std::to_string(values.size()));
}

void write_text(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + out_path + "' for writing");
    }
    out << content;
    if (!out) {
        throw ConfigError("failed while writing '" + out_path + "'");
    }
}

struct LoadedData {
    std::string source;  // "A", "B", or the file path
    Table table;
};

LoadedData load_data(const std::string& dataset, const std::string& input,
                     const char* cmd) {
    if (!dataset.empty() && !input.empty()) {
        throw ConfigError(std::string(cmd) +
                          ": give either --dataset or --input, not both");
    }
    if (!dataset.empty()) {
        return LoadedData{dataset, bundled_dataset(dataset)};
    }
    if (!input.empty()) {
        return LoadedData{input, read_csv(input)};
    }
    throw ConfigError(std::string(cmd) + ": --dataset or --input is required");
}

/// Shared flag set for commands that build a dependence model.
struct ModelOptions {
    std::string copula;       // simulate: gamma|power|driver; var: gamma|gaussian|t
    std::string driver;       // rook|uf|lf|patchwork|gaussian|t
    std::string dataset;
    std::string input;
    std::string corr_scale = "log";  // gaussian/t calibration: log|raw
    std::string a_text;
    std::string beta_text;
    double rho = std::numeric_limits<double>::quiet_NaN();
    double dof = 2.0;
};

DriverSpec build_driver(const ModelOptions& opt, const Table& table) {
    const auto ranks = [&]() {
        RankData r = ranks_from_data(table.values);
        if (r.tie_count() > 0) {
            std::fprintf(stderr,
                         "warning: %d tied value pair(s) resolved by "
                         "first-occurrence order\n",
                         r.tie_count());
        }
        return r;
    };
    if (opt.driver == "rook") return DriverSpec::rook(ranks());
    if (opt.driver == "uf") return DriverSpec::upper_frechet(ranks());
    if (opt.driver == "lf") return DriverSpec::lower_frechet(ranks());
    if (opt.driver == "patchwork") {
        if (std::isnan(opt.rho)) {
            throw ConfigError("driver 'patchwork' requires --rho");
        }
        return DriverSpec::patchwork(ranks(), opt.rho);
    }
    if (opt.driver == "gaussian" || opt.driver == "t") {
        if (opt.corr_scale != "log" && opt.corr_scale != "raw") {
            throw ConfigError("--corr must be 'log' or 'raw'");
        }
        CovMatrix sigma =
            empirical_correlations(table.values, opt.corr_scale == "log");
        if (opt.driver == "t") {
            return DriverSpec::student_t(std::move(sigma), opt.dof);
        }
        return DriverSpec::gaussian(std::move(sigma));
    }
    throw ConfigError("unknown driver '" + opt.driver +
                      "' (expected rook, uf, lf, patchwork, gaussian, or t)");
}

json driver_meta(const ModelOptions& opt, const DriverSpec& spec) {
    json meta;
    meta["driver"] = spec.label();
    if (spec.kind() == DriverSpec::Kind::patchwork_rho) {
        meta["rho"] = opt.rho;
    }
    if (spec.kind() == DriverSpec::Kind::student_t) {
        meta["dof"] = opt.dof;
    }
    if (!spec.is_patchwork()) {
        meta["corr"] = opt.corr_scale;
    }
    return meta;
}

// ---------------------------------------------------------------- simulate

struct SimulateConfig {
    ModelOptions model;
    long sims = 0;
    bool latents = false;
    std::string out;
};

int cmd_simulate(const SimulateConfig& cfg, std::uint64_t seed,
                 std::uint64_t stream) {
    const LoadedData data =
        load_data(cfg.model.dataset, cfg.model.input, "simulate");
    if (cfg.sims <= 0) {
        throw ConfigError("simulate: --sims must be positive");
    }
    const DriverSpec spec = build_driver(cfg.model, data.table);
    const int d = spec.dim();

    SampleBatch batch;
    if (cfg.model.copula == "gamma") {
        if (cfg.model.a_text.empty()) {
            throw ConfigError("simulate: --copula gamma requires --a");
        }
        const GammaParams params(broadcast(
            parse_double_list(cfg.model.a_text, "--a"), d, "--a"));
        batch = gamma_sample(params, spec, cfg.sims, seed, stream);
    } else if (cfg.model.copula == "power") {
        if (cfg.model.beta_text.empty()) {
            throw ConfigError("simulate: --copula power requires --beta");
        }
        const PowerParams params(broadcast(
            parse_double_list(cfg.model.beta_text, "--beta"), d, "--beta"));
        batch = power_sample(params, spec, cfg.sims, seed, stream);
    } else if (cfg.model.copula == "driver") {
        if (cfg.latents) {
            throw ConfigError(
                "simulate: --latents needs a gamma or power copula (the "
                "raw driver has no latent locations)");
        }
        RandomSource rng(seed, stream);
        DriverSample ds = sample_driver(spec, cfg.sims, rng);
        batch.values = std::move(ds.u);
        batch.cells = std::move(ds.cells);
        batch.seed = seed;
        batch.stream = stream;
        batch.driver_label = spec.label();
        batch.family_label = "driver";
    } else {
        throw ConfigError("simulate: --copula must be gamma, power, or driver");
    }

    Table out_table;
    char name[32];
    for (int k = 0; k < d; ++k) {
        std::snprintf(name, sizeof name, "v_%d", k + 1);
        out_table.columns.emplace_back(name);
        out_table.values.push_back(batch.column(k));
    }
    if (cfg.latents) {
        for (int k = 0; k < d; ++k) {
            std::snprintf(name, sizeof name, "s_%d", k + 1);
            out_table.columns.emplace_back(name);
            std::vector<double> col(static_cast<std::size_t>(batch.rows()));
            for (long i = 0; i < batch.rows(); ++i) {
                col[static_cast<std::size_t>(i)] = batch.latents(i, k);
            }
            out_table.values.push_back(std::move(col));
        }
    }

    json meta = driver_meta(cfg.model, spec);
    meta["command"] = "simulate";
    meta["copula"] = batch.family_label;
    meta["columns"] = out_table.columns;
    meta["data"] = data.source;
    meta["seed"] = seed;
    meta["stream"] = stream;
    meta["sims"] = cfg.sims;

    write_text(cfg.out, format_csv(out_table));
    const std::string meta_text = meta.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::fputs(meta_text.c_str(), stderr);
    } else {
        write_text(cfg.out + ".meta.json", meta_text);
    }
    return 0;
}

// ----------------------------------------------------------------- density

struct DensityConfig {
    std::string kind = "closed";  // closed | quad | nb
    int a = 1;
    int grid = 9;
    double rel_tol = 1e-10;
    std::string out;
};

int cmd_density(const DensityConfig& cfg) {
    if (cfg.grid < 1) {
        throw ConfigError("density: --grid must be at least 1");
    }
    Table table;
    table.columns = {"u", "v", "density"};
    table.values.resize(3);
    const double step = 1.0 / static_cast<double>(cfg.grid + 1);
    for (int i = 1; i <= cfg.grid; ++i) {
        for (int j = 1; j <= cfg.grid; ++j) {
            const double u = step * i;
            const double v = step * j;
            double value = 0.0;
            if (cfg.kind == "closed") {
                value = gamma_density_singular_int(cfg.a, u, v);
            } else if (cfg.kind == "quad") {
                value = gamma_density_singular_quad(cfg.a, u, v, cfg.rel_tol);
            } else if (cfg.kind == "nb") {
                value = nb_density(cfg.a, u, v);
            } else {
                throw ConfigError(
                    "density: --kind must be closed, quad, or nb");
            }
            table.values[0].push_back(u);
            table.values[1].push_back(v);
            table.values[2].push_back(value);
        }
    }
    write_text(cfg.out, format_csv(table));
    return 0;
}

// ----------------------------------------------------------------- taildep

struct TaildepConfig {
    bool analytic = false;
    bool quadrature = false;
    std::string a_text;
    double rel_tol = 1e-9;
    std::string empirical;
    double threshold = 0.999;
    std::string side = "upper";
    std::string cols = "1,2";
    std::string out;
};

int cmd_taildep(const TaildepConfig& cfg) {
    if (!cfg.empirical.empty()) {
        const Table sample = read_csv(cfg.empirical);
        const std::vector<int> idx =
            parse_int_list_or_range(cfg.cols, "--cols");
        if (idx.size() != 2) {
            throw ConfigError("taildep: --cols needs exactly two columns");
        }
        SampleBatch batch;
        batch.values.resize(sample.rows(), sample.cols());
        for (int c = 0; c < sample.cols(); ++c) {
            for (int r = 0; r < sample.rows(); ++r) {
                batch.values(r, c) =
                    sample.values[static_cast<std::size_t>(c)]
                                 [static_cast<std::size_t>(r)];
            }
        }
        TailSide side;
        if (cfg.side == "upper") {
            side = TailSide::upper;
        } else if (cfg.side == "lower") {
            side = TailSide::lower;
        } else {
            throw ConfigError("taildep: --side must be upper or lower");
        }
        const TailEstimate est = empirical_tail(batch, idx[0] - 1, idx[1] - 1,
                                                cfg.threshold, side);
        json report;
        report["command"] = "taildep";
        report["columns"] = idx;
        report["joint_count"] = est.joint_count;
        report["low_count"] = est.low_count;
        report["sample_count"] = est.sample_count;
        report["side"] = cfg.side;
        report["std_err"] = est.std_err;
        report["threshold"] = est.threshold;
        report["value"] = est.value;
        if (est.low_count) {
            std::fprintf(stderr,
                         "warning: fewer than 50 expected tail points at "
                         "threshold %g; estimate is noisy\n",
                         est.threshold);
        }
        write_text(cfg.out, report.dump(2) + "\n");
        return 0;
    }

    if (!cfg.analytic && !cfg.quadrature) {
        throw ConfigError(
            "taildep: choose --analytic and/or --quadrature, or --empirical");
    }
    if (cfg.a_text.empty()) {
        throw ConfigError("taildep: --a is required (e.g. --a 1..5)");
    }
    Table table;
    table.columns = {"a"};
    if (cfg.analytic) table.columns.emplace_back("lambda");
    if (cfg.quadrature) table.columns.emplace_back("lambda_quad");
    table.values.resize(table.columns.size());
    for (int a : parse_int_list_or_range(cfg.a_text, "--a")) {
        std::size_t c = 0;
        table.values[c++].push_back(a);
        if (cfg.analytic) {
            table.values[c++].push_back(lambda_upper_gamma_analytic(a));
        }
        if (cfg.quadrature) {
            table.values[c++].push_back(
                lambda_upper_gamma_quadrature(a, cfg.rel_tol));
        }
    }
    write_text(cfg.out, format_csv(table));
    return 0;
}

// -------------------------------------------------------------------- corr

struct CorrConfig {
    std::string dataset;
    std::string input;
    bool log_scale = false;
    bool round2 = false;
    std::string out;
};

int cmd_corr(const CorrConfig& cfg) {
    const LoadedData data = load_data(cfg.dataset, cfg.input, "corr");
    const CovMatrix corr =
        empirical_correlations(data.table.values, cfg.log_scale);
    const int d = corr.dim();

    std::string text;
    for (int c = 0; c < d; ++c) {
        if (c) text += ",";
        text += data.table.columns[static_cast<std::size_t>(c)];
    }
    text += "\n";
    char buf[64];
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            if (c) text += ",";
            std::snprintf(buf, sizeof buf, cfg.round2 ? "%.2f" : "%.17g",
                          corr.matrix()(r, c));
            text += buf;
        }
        text += "\n";
    }
    write_text(cfg.out, text);
    return 0;
}

// --------------------------------------------------------------------- var

struct VarConfig {
    ModelOptions model;
    long sims = 0;
    std::string levels_text = "0.1,0.05,0.01,0.005";
    std::string out;
};

int cmd_var(const VarConfig& cfg, std::uint64_t seed, std::uint64_t stream) {
    const LoadedData data = load_data(cfg.model.dataset, cfg.model.input, "var");
    if (cfg.sims <= 0) {
        throw ConfigError("var: --sims must be positive");
    }
    const std::vector<double> levels =
        parse_double_list(cfg.levels_text, "--levels");
    const std::vector<LognormalMarginal> marginals =
        fit_lognormal_columns(data.table.values);
    const int d = static_cast<int>(marginals.size());

    VaRReport report;
    if (cfg.model.copula == "gamma") {
        if (cfg.model.driver.empty()) {
            throw ConfigError("var: --copula gamma requires --driver");
        }
        if (cfg.model.a_text.empty()) {
            throw ConfigError("var: --copula gamma requires --a");
        }
        const DriverSpec spec = build_driver(cfg.model, data.table);
        const GammaParams params(
            broadcast(parse_double_list(cfg.model.a_text, "--a"), d, "--a"));
        const std::vector<double> totals = simulate_totals_gamma(
            marginals, params, spec, cfg.sims, seed, stream);
        report = var_from_totals(totals, levels,
                                 spec.label() + "+" + params.label());
    } else if (cfg.model.copula == "gaussian" || cfg.model.copula == "t") {
        if (!cfg.model.driver.empty()) {
            throw ConfigError(
                "var: --driver applies only to --copula gamma (gaussian/t "
                "are themselves the dependence model)");
        }
        ModelOptions opt = cfg.model;
        opt.driver = cfg.model.copula;
        const DriverSpec spec = build_driver(opt, data.table);
        const std::vector<double> totals =
            simulate_totals_driver(marginals, spec, cfg.sims, seed, stream);
        report = var_from_totals(totals, levels, spec.label());
    } else {
        throw ConfigError("var: --copula must be gamma, gaussian, or t");
    }

    json out;
    out["command"] = "var";
    out["copula"] = report.copula_label;
    out["data"] = data.source;
    out["levels"] = report.levels;
    out["n_sims"] = report.n_sims;
    out["seed"] = seed;
    out["std_err"] = report.std_err;
    out["stream"] = stream;
    out["var"] = report.var;
    write_text(cfg.out, out.dump(2) + "\n");
    return 0;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::config:
            return 2;
        case ErrorKind::parse:
            return 3;
        case ErrorKind::numeric:
            return 4;
    }
    return 4;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "pucop: partition-of-unity copula sampling, densities, tail "
        "dependence, and VaR aggregation"};
    app.require_subcommand(1);

    std::string seed_text;
    std::string stream_text;
    app.add_option("--seed", seed_text,
                   "RNG seed (default: PUCOP_SEED env var, else 42)");
    app.add_option("--stream", stream_text, "RNG stream id (default 0)");

    SimulateConfig sim;
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Draw copula samples and write them as CSV");
    sim_cmd->fallthrough();
    sim_cmd->add_option("--copula", sim.model.copula,
                        "Family: gamma, power, or driver (raw driver sample)")
        ->required();
    sim_cmd->add_option("--driver", sim.model.driver,
                        "Driver: rook, uf, lf, patchwork, gaussian, t")
        ->required();
    sim_cmd->add_option("--dataset", sim.model.dataset, "Bundled dataset A|B");
    sim_cmd->add_option("--input", sim.model.input, "CSV file of observations");
    sim_cmd->add_option("--rho", sim.model.rho,
                        "Cell correlation for --driver patchwork");
    sim_cmd->add_option("--dof", sim.model.dof,
                        "Degrees of freedom for --driver t (default 2)");
    sim_cmd->add_option("--corr", sim.model.corr_scale,
                        "Correlation scale for gaussian/t: log|raw "
                        "(default log)");
    sim_cmd->add_option("--a", sim.model.a_text,
                        "Gamma shapes (single value broadcasts)");
    sim_cmd->add_option("--beta", sim.model.beta_text,
                        "Power exponents (single value broadcasts)");
    sim_cmd->add_option("--sims", sim.sims, "Number of samples")->required();
    sim_cmd->add_flag("--latents", sim.latents,
                      "Include latent location columns s_1..s_d");
    sim_cmd->add_option("--out", sim.out,
                        "Output CSV path (metadata sidecar <out>.meta.json); "
                        "stdout + stderr if omitted");

    DensityConfig dens;
    CLI::App* dens_cmd = app.add_subcommand(
        "density", "Evaluate pair densities on a regular (u,v) grid");
    dens_cmd->fallthrough();
    dens_cmd->add_option("--kind", dens.kind,
                         "closed | quad (gamma singular density) | nb");
    dens_cmd->add_option("--a", dens.a, "Integer shape parameter")->required();
    dens_cmd->add_option("--grid", dens.grid,
                         "Points per axis at i/(grid+1) (default 9)");
    dens_cmd->add_option("--rel-tol", dens.rel_tol,
                         "Quadrature relative tolerance (kind=quad)");
    dens_cmd->add_option("--out", dens.out, "Output CSV path (default stdout)");

    TaildepConfig tail;
    CLI::App* tail_cmd = app.add_subcommand(
        "taildep", "Upper tail-dependence: analytic, quadrature, empirical");
    tail_cmd->fallthrough();
    tail_cmd->add_flag("--analytic", tail.analytic,
                       "Tabulate the closed-form coefficient");
    tail_cmd->add_flag("--quadrature", tail.quadrature,
                       "Tabulate the integral-representation coefficient");
    tail_cmd->add_option("--a", tail.a_text,
                         "Integer shapes: single, list, or range like 1..10");
    tail_cmd->add_option("--rel-tol", tail.rel_tol,
                         "Quadrature relative tolerance (default 1e-9)");
    tail_cmd->add_option("--empirical", tail.empirical,
                         "Sample CSV for the joint-exceedance estimate");
    tail_cmd->add_option("--threshold", tail.threshold,
                         "Exceedance threshold t (default 0.999)");
    tail_cmd->add_option("--side", tail.side, "upper | lower (default upper)");
    tail_cmd->add_option("--cols", tail.cols,
                         "Two 1-based column indices (default 1,2)");
    tail_cmd->add_option("--out", tail.out, "Output path (default stdout)");

    CorrConfig corr;
    CLI::App* corr_cmd = app.add_subcommand(
        "corr", "Pearson correlation matrix of a dataset");
    corr_cmd->fallthrough();
    corr_cmd->add_option("--dataset", corr.dataset, "Bundled dataset A|B");
    corr_cmd->add_option("--input", corr.input, "CSV file of observations");
    corr_cmd->add_flag("--log", corr.log_scale,
                       "Correlate the logs instead of the raw values");
    corr_cmd->add_flag("--round2", corr.round2,
                       "Two-decimal display formatting");
    corr_cmd->add_option("--out", corr.out, "Output CSV path (default stdout)");

    VarConfig var;
    CLI::App* var_cmd = app.add_subcommand(
        "var", "Monte Carlo Value-at-Risk of the aggregate loss");
    var_cmd->fallthrough();
    var_cmd->add_option("--copula", var.model.copula,
                        "Dependence model: gamma, gaussian, or t")
        ->required();
    var_cmd->add_option("--driver", var.model.driver,
                        "Driver for --copula gamma: rook, uf, patchwork");
    var_cmd->add_option("--dataset", var.model.dataset, "Bundled dataset A|B");
    var_cmd->add_option("--input", var.model.input, "CSV file of observations");
    var_cmd->add_option("--rho", var.model.rho,
                        "Cell correlation for --driver patchwork");
    var_cmd->add_option("--dof", var.model.dof,
                        "Degrees of freedom for --copula t (default 2)");
    var_cmd->add_option("--corr", var.model.corr_scale,
                        "Correlation scale for gaussian/t: log|raw "
                        "(default log)");
    var_cmd->add_option("--a", var.model.a_text,
                        "Gamma shapes (single value broadcasts)");
    var_cmd->add_option("--sims", var.sims, "Number of simulations")
        ->required();
    var_cmd->add_option("--levels", var.levels_text,
                        "Upper-tail levels (default 0.1,0.05,0.01,0.005)");
    var_cmd->add_option("--out", var.out,
                        "Output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly
    }

    try {
        const std::uint64_t seed =
            seed_text.empty() ? default_seed() : parse_u64(seed_text, "--seed");
        const std::uint64_t stream =
            stream_text.empty() ? 0 : parse_u64(stream_text, "--stream");
        if (*sim_cmd) return cmd_simulate(sim, seed, stream);
        if (*dens_cmd) return cmd_density(dens);
        if (*tail_cmd) return cmd_taildep(tail);
        if (*corr_cmd) return cmd_corr(corr);
        if (*var_cmd) return cmd_var(var, seed, stream);
        throw ConfigError("no subcommand selected");
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 1;
    }
}

}  // namespace puc

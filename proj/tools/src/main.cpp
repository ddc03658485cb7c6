// cyclolat: bound reports, unit-vector dumps, lattice measurements and
// verification sweeps for the log-lattice of cyclotomic units.
//
// Exit codes: 0 success, 1 invalid input, 2 mathematical violation detected,
// 3 computation budget exceeded.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclolat/bounds.hpp"
#include "cyclolat/embedding.hpp"
#include "cyclolat/errors.hpp"
#include "cyclolat/lattice.hpp"
#include "cyclolat/numtheory.hpp"
#include "cyclolat/reference.hpp"
#include "cyclolat/sweeps.hpp"
#include "render.hpp"

namespace cc = cyclolat::cli;
using cyclolat::cli::JsonBuilder;
using cyclolat::cli::RenderOptions;

namespace {

struct GlobalOptions {
    RenderOptions render;
    int jobs = 1;
    std::uint64_t seed = 42;
    std::string out_path;  // empty = stdout
};

void write_payload(const GlobalOptions& global, const std::string& payload) {
    if (global.out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream file(global.out_path, std::ios::binary);
    if (!file) throw cyclolat::Error("cannot open output file: " + global.out_path);
    file << payload;
}

std::string fmt(const GlobalOptions& global, double value) {
    return cc::format_double(value, global.render.precision);
}

std::string join_components(const GlobalOptions& global, const Eigen::VectorXd& values,
                            char separator = ';') {
    std::string joined;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i) joined += separator;
        joined += fmt(global, values(i));
    }
    return joined;
}

void report_elapsed(const cyclolat::SweepOutcome& outcome) {
    std::cerr << "# elapsed: " << outcome.elapsed << " s\n";
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const GlobalOptions& global, std::int64_t n) {
    const cyclolat::Modulus mod = cyclolat::make_modulus(n);
    const cyclolat::BoundReport report = cyclolat::make_bound_report(mod);
    std::string payload;
    if (global.render.format == cc::OutputFormat::csv) {
        payload = cc::csv_row({"n", "s", "phi", "rank", "bound_old_sqrt3", "bound_old_sqrt6",
                               "bound_new", "bound_corollary", "lemma4", "lemma5_phi_upper"});
        payload += cc::csv_row({std::to_string(report.n), std::to_string(report.s),
                                std::to_string(report.phi), std::to_string(report.rank),
                                fmt(global, report.bound_old_sqrt3),
                                fmt(global, report.bound_old_sqrt6), fmt(global, report.bound_new),
                                fmt(global, report.bound_corollary), fmt(global, report.lemma4),
                                fmt(global, report.lemma5_phi_upper)});
    } else {
        JsonBuilder json(global.render.precision);
        json.begin_object();
        json.key("n").integer(report.n);
        json.key("s").integer(report.s);
        json.key("phi").integer(report.phi);
        json.key("rank").integer(report.rank);
        json.key("bound_old_sqrt3").number(report.bound_old_sqrt3);
        json.key("bound_old_sqrt6").number(report.bound_old_sqrt6);
        json.key("bound_new").number(report.bound_new);
        json.key("bound_corollary").number(report.bound_corollary);
        json.key("lemma4").number(report.lemma4);
        json.key("lemma5_phi_upper").number(report.lemma5_phi_upper);
        json.end_object();
        payload = json.take();
    }
    write_payload(global, payload);
    return 0;
}

// ---------------------------------------------------------------------------
// units

int cmd_units(const GlobalOptions& global, std::int64_t n) {
    const cyclolat::Modulus mod = cyclolat::make_modulus(n);
    const double bound = cyclolat::lemma4_bound(mod.n, mod.s);
    std::vector<cyclolat::UnitLog> units;
    for (const std::int64_t label : cyclolat::unit_labels(mod))
        units.push_back(cyclolat::ramachandra_log(mod, label));

    std::string payload;
    if (global.render.format == cc::OutputFormat::csv) {
        payload = cc::csv_row(
            {"n", "a", "norm", "trace_residual", "lemma4_bound", "margin", "components"});
        for (const cyclolat::UnitLog& unit : units)
            payload += cc::csv_row({std::to_string(n), std::to_string(unit.label),
                                    fmt(global, unit.norm),
                                    fmt(global, unit.log.components.sum()), fmt(global, bound),
                                    fmt(global, bound - unit.norm),
                                    join_components(global, unit.log.components)});
    } else {
        JsonBuilder json(global.render.precision);
        json.begin_object();
        json.key("n").integer(n);
        json.key("lemma4_bound").number(bound);
        json.key("units").begin_array();
        for (const cyclolat::UnitLog& unit : units) {
            json.begin_object();
            json.key("a").integer(unit.label);
            json.key("norm").number(unit.norm);
            json.key("trace_residual").number(unit.log.components.sum());
            json.key("margin").number(bound - unit.norm);
            json.key("components").begin_array();
            for (Eigen::Index i = 0; i < unit.log.components.size(); ++i)
                json.number(unit.log.components(i));
            json.end_array();
            json.end_object();
        }
        json.end_array();
        json.end_object();
        payload = json.take();
    }
    write_payload(global, payload);
    return 0;
}

// ---------------------------------------------------------------------------
// lattice

struct LatticeSelection {
    bool gram = false;
    bool lll = false;
    bool minima = false;
    bool mu = false;
};

LatticeSelection parse_selection(const std::vector<std::string>& tokens) {
    LatticeSelection selection;
    for (const std::string& token : tokens) {
        if (token == "gram") selection.gram = true;
        else if (token == "lll") selection.lll = true;
        else if (token == "minima") selection.minima = true;
        else if (token == "mu") selection.mu = true;
        else
            throw cyclolat::OutOfRange("unknown compute selector: " + token +
                                       " (expected gram, lll, minima or mu)");
    }
    return selection;
}

int cmd_lattice(const GlobalOptions& global, std::int64_t n,
                const std::vector<std::string>& compute, std::int64_t samples) {
    const cyclolat::Modulus mod = cyclolat::make_modulus(n);
    const LatticeSelection selection = parse_selection(compute);
    const cyclolat::LatticeBasis basis = cyclolat::ramachandra_basis(mod);
    const cyclolat::BoundReport report = cyclolat::make_bound_report(mod);

    std::optional<cyclolat::LllResult> reduced;
    if (selection.lll) reduced = cyclolat::lll_reduce(basis);
    std::optional<cyclolat::SuccessiveMinimaResult> minima;
    if (selection.minima) minima = cyclolat::successive_minima(basis);
    std::optional<cyclolat::CoveringRadiusResult> radius;
    if (selection.mu) {
        radius = basis.rank() <= 5
                     ? cyclolat::covering_radius_exact(basis)
                     : cyclolat::covering_radius_estimate(basis, samples, global.seed);
    }

    // Scale-check of the covering radius against the last minimum; only
    // meaningful when both halves were computed.
    const bool dimension_check = minima && radius;
    double mu_cap = 0;
    if (dimension_check)
        mu_cap = std::sqrt(static_cast<double>(basis.rank())) / 2.0 * minima->values.back();

    std::string payload;
    if (global.render.format == cc::OutputFormat::csv) {
        payload = cc::csv_row({"key", "value"});
        auto row = [&](const std::string& key, const std::string& value) {
            payload += cc::csv_row({key, value});
        };
        row("n", std::to_string(mod.n));
        row("s", std::to_string(mod.s));
        row("phi", std::to_string(mod.phi));
        row("rank", std::to_string(mod.rank));
        row("provenance", basis.provenance);
        if (selection.gram) {
            const Eigen::MatrixXd g = cyclolat::gram(basis);
            for (Eigen::Index i = 0; i < g.rows(); ++i)
                row("gram_row_" + std::to_string(i), join_components(global, g.row(i)));
        }
        if (reduced) {
            for (Eigen::Index i = 0; i < reduced->basis.rows.rows(); ++i)
                row("lll_row_" + std::to_string(i),
                    join_components(global, reduced->basis.rows.row(i)));
            for (Eigen::Index i = 0; i < reduced->transform.rows(); ++i) {
                std::string line;
                for (Eigen::Index j = 0; j < reduced->transform.cols(); ++j) {
                    if (j) line += ';';
                    line += std::to_string(reduced->transform(i, j));
                }
                row("lll_transform_row_" + std::to_string(i), line);
            }
        }
        if (minima)
            for (std::size_t i = 0; i < minima->values.size(); ++i)
                row("lambda_" + std::to_string(i + 1), fmt(global, minima->values[i]));
        if (radius) {
            row("mu_method", radius->method == cyclolat::CoveringMethod::voronoi_exact
                                 ? "voronoi_exact"
                                 : "randomized_lower_bound");
            row("mu", fmt(global, radius->value));
            row("mu_sq", fmt(global, radius->value * radius->value));
            row("certificate", fmt(global, radius->certificate));
            row("deep_hole", join_components(global, radius->deep_hole));
            if (radius->method == cyclolat::CoveringMethod::randomized_lower_bound) {
                row("mu_samples", std::to_string(samples));
                row("mu_seed", std::to_string(global.seed));
            }
        }
        if (dimension_check) {
            row("dimension_bound", fmt(global, mu_cap));
            row("dimension_bound_ok", radius->value <= mu_cap + 1e-6 ? "true" : "false");
        }
        row("bound_old_sqrt3", fmt(global, report.bound_old_sqrt3));
        row("bound_old_sqrt6", fmt(global, report.bound_old_sqrt6));
        row("bound_new", fmt(global, report.bound_new));
        row("bound_corollary", fmt(global, report.bound_corollary));
        row("lemma4", fmt(global, report.lemma4));
        row("lemma5_phi_upper", fmt(global, report.lemma5_phi_upper));
        if (radius) {
            row("mu_below_bound_new", radius->value < report.bound_new ? "true" : "false");
            row("mu_below_bound_old_sqrt3",
                radius->value < report.bound_old_sqrt3 ? "true" : "false");
        }
    } else {
        JsonBuilder json(global.render.precision);
        json.begin_object();
        json.key("n").integer(mod.n);
        json.key("s").integer(mod.s);
        json.key("phi").integer(mod.phi);
        json.key("rank").integer(mod.rank);
        json.key("provenance").string(basis.provenance);
        if (selection.gram) {
            const Eigen::MatrixXd g = cyclolat::gram(basis);
            json.key("gram").begin_array();
            for (Eigen::Index i = 0; i < g.rows(); ++i) {
                json.begin_array();
                for (Eigen::Index j = 0; j < g.cols(); ++j) json.number(g(i, j));
                json.end_array();
            }
            json.end_array();
        }
        if (reduced) {
            json.key("lll").begin_object();
            json.key("rows").begin_array();
            for (Eigen::Index i = 0; i < reduced->basis.rows.rows(); ++i) {
                json.begin_array();
                for (Eigen::Index j = 0; j < reduced->basis.rows.cols(); ++j)
                    json.number(reduced->basis.rows(i, j));
                json.end_array();
            }
            json.end_array();
            json.key("transform").begin_array();
            for (Eigen::Index i = 0; i < reduced->transform.rows(); ++i) {
                json.begin_array();
                for (Eigen::Index j = 0; j < reduced->transform.cols(); ++j)
                    json.integer(reduced->transform(i, j));
                json.end_array();
            }
            json.end_array();
            json.end_object();
        }
        if (minima) {
            json.key("minima").begin_array();
            for (const double value : minima->values) json.number(value);
            json.end_array();
        }
        if (radius) {
            json.key("mu").begin_object();
            json.key("value").number(radius->value);
            json.key("mu_sq").number(radius->value * radius->value);
            json.key("method").string(radius->method == cyclolat::CoveringMethod::voronoi_exact
                                          ? "voronoi_exact"
                                          : "randomized_lower_bound");
            json.key("certificate").number(radius->certificate);
            json.key("deep_hole").begin_array();
            for (Eigen::Index i = 0; i < radius->deep_hole.size(); ++i)
                json.number(radius->deep_hole(i));
            json.end_array();
            if (radius->method == cyclolat::CoveringMethod::randomized_lower_bound) {
                json.key("samples").integer(samples);
                json.key("seed").integer(static_cast<std::int64_t>(global.seed));
            }
            json.end_object();
        }
        if (dimension_check) {
            json.key("dimension_bound").number(mu_cap);
            json.key("dimension_bound_ok").boolean(radius->value <= mu_cap + 1e-6);
        }
        json.key("bounds").begin_object();
        json.key("bound_old_sqrt3").number(report.bound_old_sqrt3);
        json.key("bound_old_sqrt6").number(report.bound_old_sqrt6);
        json.key("bound_new").number(report.bound_new);
        json.key("bound_corollary").number(report.bound_corollary);
        json.key("lemma4").number(report.lemma4);
        json.key("lemma5_phi_upper").number(report.lemma5_phi_upper);
        json.end_object();
        if (radius) {
            json.key("mu_below_bound_new").boolean(radius->value < report.bound_new);
            json.key("mu_below_bound_old_sqrt3").boolean(radius->value < report.bound_old_sqrt3);
        }
        json.end_object();
        payload = json.take();
    }
    write_payload(global, payload);
    return 0;
}

// ---------------------------------------------------------------------------
// sweeps (lemma2, phibound) share their rendering

std::string render_sweep(const GlobalOptions& global, const cyclolat::SweepOutcome& outcome) {
    if (global.render.format == cc::OutputFormat::csv) {
        std::string payload = cc::csv_row({"range", "checked", "violations"});
        payload += cc::csv_row({outcome.range, std::to_string(outcome.checked),
                                std::to_string(static_cast<std::int64_t>(
                                    outcome.violations.size()))});
        if (!outcome.violations.empty()) {
            payload += cc::csv_row({"input", "quantity", "relation", "observed"});
            for (const cyclolat::SweepViolation& v : outcome.violations)
                payload += cc::csv_row({v.input, v.quantity, v.relation, v.observed});
        }
        return payload;
    }
    JsonBuilder json(global.render.precision);
    json.begin_object();
    json.key("range").string(outcome.range);
    json.key("checked").integer(outcome.checked);
    json.key("violations").begin_array();
    for (const cyclolat::SweepViolation& v : outcome.violations) {
        json.begin_object();
        json.key("input").string(v.input);
        json.key("quantity").string(v.quantity);
        json.key("relation").string(v.relation);
        json.key("observed").string(v.observed);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    return json.take();
}

int cmd_lemma2(const GlobalOptions& global, std::int64_t m_max, int extras,
               const std::string& emit_csv_path) {
    std::vector<cyclolat::Lemma2Record> rows;
    const cyclolat::SweepOutcome outcome =
        cyclolat::lemma2_sweep(m_max, extras, global.jobs, emit_csv_path.empty() ? nullptr : &rows);
    if (!emit_csv_path.empty()) {
        // Data artifact for plotting: always full round-trip precision.
        std::string dump = cc::csv_row({"m", "sum", "lower", "upper", "ratio"});
        for (const cyclolat::Lemma2Record& rec : rows)
            dump += cc::csv_row({std::to_string(rec.m), cc::format_double(rec.sum, 0),
                                 cc::format_double(rec.lower, 0), cc::format_double(rec.upper, 0),
                                 cc::format_double(rec.sum / static_cast<double>(rec.m), 0)});
        std::ofstream file(emit_csv_path, std::ios::binary);
        if (!file) throw cyclolat::Error("cannot open output file: " + emit_csv_path);
        file << dump;
    }
    report_elapsed(outcome);
    write_payload(global, render_sweep(global, outcome));
    return outcome.clean() ? 0 : 2;
}

int cmd_phibound(const GlobalOptions& global, std::int64_t n_max) {
    const cyclolat::SweepOutcome outcome = cyclolat::phibound_sweep(n_max, global.jobs);
    report_elapsed(outcome);
    write_payload(global, render_sweep(global, outcome));
    return outcome.clean() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// table1

int cmd_table1(const GlobalOptions& global) {
    struct Cell {
        double computed = 0;
        double reference = 0;
        double delta = 0;
        std::string status;
    };
    struct Row {
        std::int64_t n = 0;
        int s = 0;
        double mu_computed = 0;
        Cell mu;  // computed slot holds mu_sq (the reference column is squared)
        Cell old_bound;
        Cell new_bound;
    };

    bool all_ok = true;
    std::vector<Row> rows;
    for (const cyclolat::ReferenceRow& ref : cyclolat::reference_table) {
        const cyclolat::Modulus mod = cyclolat::make_modulus(ref.n);
        const cyclolat::BoundReport report = cyclolat::make_bound_report(mod);
        const cyclolat::CoveringRadiusResult radius =
            cyclolat::covering_radius_exact(cyclolat::ramachandra_basis(mod));

        Row row;
        row.n = ref.n;
        row.s = ref.s;
        row.mu_computed = radius.value;
        row.mu.computed = radius.value * radius.value;
        row.mu.reference = ref.mu_sq;
        row.mu.delta = row.mu.computed - ref.mu_sq;
        if (ref.mu_sq_informational) {
            // Index caveat: the generated sublattice can sit strictly inside
            // the full unit lattice, so only a floor on mu is enforced.
            row.mu.status =
                radius.value >= cyclolat::reference_mu_floor_n15 ? "informational" : "fail";
            if (radius.value < cyclolat::reference_mu_floor_n15) all_ok = false;
        } else if (std::abs(row.mu.delta) <= cyclolat::reference_tol_mu_sq) {
            row.mu.status = "ok";
        } else {
            row.mu.status = "fail";
            all_ok = false;
        }

        row.old_bound.computed = report.bound_old_sqrt3;
        row.old_bound.reference = ref.bound_old;
        row.old_bound.delta = report.bound_old_sqrt3 - ref.bound_old;
        row.old_bound.status =
            std::abs(row.old_bound.delta) <= cyclolat::reference_tol_old ? "ok" : "fail";
        if (row.old_bound.status == "fail") all_ok = false;

        row.new_bound.computed = report.bound_new;
        row.new_bound.reference = ref.bound_new;
        row.new_bound.delta = report.bound_new - ref.bound_new;
        row.new_bound.status =
            std::abs(row.new_bound.delta) <= cyclolat::reference_tol_new ? "ok" : "fail";
        if (row.new_bound.status == "fail") all_ok = false;

        rows.push_back(std::move(row));
    }

    std::string payload;
    if (global.render.format == cc::OutputFormat::csv) {
        payload = cc::csv_row({"n", "s", "mu_computed", "mu_sq_computed", "mu_reference",
                               "mu_delta", "mu_status", "bound_old_computed",
                               "bound_old_reference", "bound_old_delta", "bound_old_status",
                               "bound_new_computed", "bound_new_reference", "bound_new_delta",
                               "bound_new_status"});
        for (const Row& row : rows)
            payload += cc::csv_row(
                {std::to_string(row.n), std::to_string(row.s), fmt(global, row.mu_computed),
                 fmt(global, row.mu.computed), fmt(global, row.mu.reference),
                 fmt(global, row.mu.delta), row.mu.status, fmt(global, row.old_bound.computed),
                 fmt(global, row.old_bound.reference), fmt(global, row.old_bound.delta),
                 row.old_bound.status, fmt(global, row.new_bound.computed),
                 fmt(global, row.new_bound.reference), fmt(global, row.new_bound.delta),
                 row.new_bound.status});
    } else {
        JsonBuilder json(global.render.precision);
        json.begin_object();
        json.key("rows").begin_array();
        for (const Row& row : rows) {
            json.begin_object();
            json.key("n").integer(row.n);
            json.key("s").integer(row.s);
            json.key("mu_computed").number(row.mu_computed);
            json.key("mu_sq_computed").number(row.mu.computed);
            json.key("mu_reference").number(row.mu.reference);
            json.key("mu_delta").number(row.mu.delta);
            json.key("mu_status").string(row.mu.status);
            json.key("bound_old_computed").number(row.old_bound.computed);
            json.key("bound_old_reference").number(row.old_bound.reference);
            json.key("bound_old_delta").number(row.old_bound.delta);
            json.key("bound_old_status").string(row.old_bound.status);
            json.key("bound_new_computed").number(row.new_bound.computed);
            json.key("bound_new_reference").number(row.new_bound.reference);
            json.key("bound_new_delta").number(row.new_bound.delta);
            json.key("bound_new_status").string(row.new_bound.status);
            json.end_object();
        }
        json.end_array();
        json.key("ok").boolean(all_ok);
        json.end_object();
        payload = json.take();
    }
    write_payload(global, payload);
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-lattice of cyclotomic units: bounds, units, lattice measurements, sweeps"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string format_name = "csv";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", global.render.precision,
                   "Significant digits for floating-point output (1-17)")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--jobs", global.jobs, "Worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for the randomized estimator")
        ->capture_default_str();
    app.add_option("--out", global.out_path, "Write payload to this file instead of stdout");

    std::int64_t n = 0;
    CLI::App* bounds = app.add_subcommand("bounds", "All analytic bounds for one modulus");
    bounds->fallthrough();
    bounds->add_option("n", n, "Cyclotomic modulus")->required();

    CLI::App* units = app.add_subcommand("units", "Log vectors of the unit family");
    units->fallthrough();
    units->add_option("n", n, "Cyclotomic modulus")->required();

    CLI::App* lattice = app.add_subcommand("lattice", "Measurements of the log-unit lattice");
    lattice->fallthrough();
    lattice->add_option("n", n, "Cyclotomic modulus")->required();
    std::vector<std::string> compute{"minima", "mu"};
    lattice->add_option("--compute", compute, "Any of: gram, lll, minima, mu")
        ->delimiter(',')
        ->capture_default_str();
    std::int64_t samples = 10000;
    lattice->add_option("--samples", samples, "Samples for the randomized estimator")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* lemma2 = app.add_subcommand("lemma2", "Sandwich sweep for the sine log-sum");
    lemma2->fallthrough();
    std::int64_t m_max = 10000;
    int extras = 0;
    std::string emit_csv;
    lemma2->add_option("--m-max", m_max, "Check every m in [2, m_max]")->capture_default_str();
    lemma2->add_option("--extras", extras, "Log-spaced extra points up to 1e6")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    lemma2->add_option("--emit-csv", emit_csv, "Dump per-m records to this CSV file");

    CLI::App* phibound = app.add_subcommand("phibound", "Totient upper-bound sweep");
    phibound->fallthrough();
    std::int64_t n_max = 100000;
    phibound->add_option("--n-max", n_max, "Check every n in [2, n_max]")->capture_default_str();

    CLI::App* table1 = app.add_subcommand("table1", "Recompute the reference comparison table");
    table1->fallthrough();

    try {
        app.parse(argc, argv);
        global.render.format =
            format_name == "json" ? cc::OutputFormat::json : cc::OutputFormat::csv;
        if (bounds->parsed()) return cmd_bounds(global, n);
        if (units->parsed()) return cmd_units(global, n);
        if (lattice->parsed()) return cmd_lattice(global, n, compute, samples);
        if (lemma2->parsed()) return cmd_lemma2(global, m_max, extras, emit_csv);
        if (phibound->parsed()) return cmd_phibound(global, n_max);
        if (table1->parsed()) return cmd_table1(global);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cyclolat::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

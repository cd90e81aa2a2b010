// dopk command line: exact construction and verification of orthogonal
// polynomial systems, dual weights, and determinantal correlation kernels
// on finite grids.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dopk/classical.hpp"
#include "dopk/ensembles.hpp"
#include "dopk/io.hpp"

namespace {

using namespace dopk;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string input;
    std::string backend = "rational";
    long bits = 256;
    std::string tol = "1e-30";
    std::uint64_t budget = 1000000;
    std::string format = "json";
    std::string out;
};

void add_io_flags(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
    if (needs_input)
        cmd->add_option("--input", opts.input, "grid/weight JSON file")->required();
    cmd->add_option("--format", opts.format, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
}

void add_backend_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--backend", opts.backend, "scalar backend (rational|float)")
        ->check(CLI::IsMember({"rational", "float"}));
    cmd->add_option("--bits", opts.bits, "float mantissa bits (>= 53)");
    cmd->add_option("--tol", opts.tol, "relative tolerance for float comparisons");
}

void emit(const std::string& text, const CommonOpts& opts) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw parse_error("cannot open output file '" + opts.out + "'");
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool use_float(const CommonOpts& opts) { return opts.backend == "float"; }

BigFloat float_tol(const CommonOpts& opts) { return BigFloat(parse_rational(opts.tol)); }

void configure_float(const CommonOpts& opts) {
    BigFloat::set_default_precision(opts.bits);
}

template <ScalarField T>
json scalars_to_json(const std::vector<T>& xs) {
    json arr = json::array();
    for (const T& x : xs) arr.push_back(scalar_traits<T>::to_string(x));
    return arr;
}

template <ScalarField T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_traits<T>::to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// dual-weight
// ---------------------------------------------------------------------------

int run_dual_weight(const CommonOpts& opts) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    const WeightTable<Rational> v = dual_weight(g, u);
    if (opts.format == "csv") {
        std::string csv = "x,u,v\n";
        for (std::size_t k = 0; k < g.size(); ++k)
            csv += g.point(k).to_string() + "," + u.value(k).to_string() + "," +
                   v.value(k).to_string() + "\n";
        emit(csv, opts);
    } else {
        emit(dump(json{{"points", rationals_to_json(g.points())},
                       {"weights", rationals_to_json(u.values())},
                       {"dual_weights", rationals_to_json(v.values())}}),
             opts);
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// orthogonalize
// ---------------------------------------------------------------------------

template <ScalarField T>
int emit_system(const OrthoSystem<T>& s, const CommonOpts& opts) {
    if (opts.format == "csv") {
        std::string csv = "degree,leading,norm";
        for (std::size_t k = 0; k < s.grid.size(); ++k)
            csv += ",P(" + scalar_traits<T>::to_string(s.grid.point(k)) + ")";
        csv += "\n";
        for (std::size_t i = 0; i < s.degree_count(); ++i) {
            csv += std::to_string(i) + "," + scalar_traits<T>::to_string(s.leading[i]) + "," +
                   scalar_traits<T>::to_string(s.norms[i]);
            for (std::size_t k = 0; k < s.grid.size(); ++k)
                csv += "," + scalar_traits<T>::to_string(s.values[i][k]);
            csv += "\n";
        }
        emit(csv, opts);
    } else {
        json values = json::array();
        for (const auto& row : s.values) values.push_back(scalars_to_json(row));
        emit(dump(json{{"points", scalars_to_json(s.grid.points())},
                       {"weights", scalars_to_json(s.weight.values())},
                       {"leading", scalars_to_json(s.leading)},
                       {"norms", scalars_to_json(s.norms)},
                       {"recurrence_alpha", scalars_to_json(s.alphas)},
                       {"recurrence_beta", scalars_to_json(s.betas)},
                       {"values", std::move(values)}}),
             opts);
    }
    return kExitPass;
}

int run_orthogonalize(const CommonOpts& opts) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    if (use_float(opts)) {
        configure_float(opts);
        const WeightTable<BigFloat> w = convert_weight<BigFloat>(u);
        return emit_system(orthogonalize(w.grid(), w), opts);
    }
    return emit_system(orthogonalize(g, u), opts);
}

// ---------------------------------------------------------------------------
// verify-duality
// ---------------------------------------------------------------------------

int emit_report(const VerificationReport& report, const CommonOpts& opts) {
    emit(opts.format == "csv" ? report.to_csv() : dump(report.to_json()), opts);
    return report.pass() ? kExitPass : kExitVerifyFailed;
}

int run_verify_duality(const CommonOpts& opts) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    if (use_float(opts)) {
        configure_float(opts);
        const WeightTable<BigFloat> w = convert_weight<BigFloat>(u);
        const DualPair<BigFloat> pair = dual_system(orthogonalize(w.grid(), w));
        return emit_report(verify_duality(pair, float_tol(opts)), opts);
    }
    const DualPair<Rational> pair = dual_system(orthogonalize(g, u));
    return emit_report(verify_duality(pair), opts);
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

int run_kernel(const CommonOpts& opts, std::size_t m, const std::string& form_name) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    const KernelForm form =
        form_name == "symmetric" ? KernelForm::Symmetric : KernelForm::Conjugated;
    if (form == KernelForm::Symmetric && !use_float(opts))
        throw std::invalid_argument("the symmetric kernel form requires --backend float");

    auto emit_kernel = [&](const auto& K) {
        using T = std::decay_t<decltype(K.entries(0, 0))>;
        if (opts.format == "csv") {
            std::string csv = "x";
            for (std::size_t k = 0; k < K.grid.size(); ++k)
                csv += "," + scalar_traits<T>::to_string(K.grid.point(k));
            csv += "\n";
            for (std::size_t j = 0; j < K.grid.size(); ++j) {
                csv += scalar_traits<T>::to_string(K.grid.point(j));
                for (std::size_t k = 0; k < K.grid.size(); ++k)
                    csv += "," + scalar_traits<T>::to_string(K.entries(j, k));
                csv += "\n";
            }
            emit(csv, opts);
        } else {
            emit(dump(json{{"m", K.order},
                           {"form", form_name},
                           {"points", scalars_to_json(K.grid.points())},
                           {"entries", matrix_to_json(K.entries)}}),
                 opts);
        }
    };

    if (use_float(opts)) {
        configure_float(opts);
        const WeightTable<BigFloat> w = convert_weight<BigFloat>(u);
        emit_kernel(kernel(orthogonalize(w.grid(), w), m, form));
    } else {
        emit_kernel(kernel(orthogonalize(g, u), m, form));
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// correlations
// ---------------------------------------------------------------------------

int run_correlations(const CommonOpts& opts, std::size_t m, std::size_t max_order) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    if (use_float(opts))
        throw std::invalid_argument("correlations are computed by exact enumeration; "
                                    "use the rational backend");
    const SubsetMeasure<Rational> mu = ensemble(g, u, m, opts.budget);
    const KernelMatrix<Rational> K = kernel(orthogonalize(g, u), m);
    if (max_order == 0 || max_order > g.size()) max_order = std::min<std::size_t>(m + 1, g.size());

    bool all_equal = true;
    json rows = json::array();
    std::string csv = "subset,bruteforce,determinantal,equal\n";
    for (std::size_t size = 1; size <= max_order; ++size) {
        subsets::for_each_colex(g.size(), size, [&](const std::vector<std::size_t>& A) {
            const Rational brute = correlation_bruteforce(mu, A);
            const Rational direct = correlation_determinantal(K, A);
            const bool equal = brute == direct;
            all_equal = all_equal && equal;
            if (opts.format == "csv") {
                std::string ids;
                for (std::size_t j = 0; j < A.size(); ++j)
                    ids += (j ? ";" : "") + std::to_string(A[j]);
                csv += ids + "," + brute.to_string() + "," + direct.to_string() + "," +
                       (equal ? "true" : "false") + "\n";
            } else {
                rows.push_back(json{{"subset", A},
                                    {"bruteforce", brute.to_string()},
                                    {"determinantal", direct.to_string()},
                                    {"equal", equal}});
            }
        });
    }
    if (opts.format == "csv")
        emit(csv, opts);
    else
        emit(dump(json{{"m", m}, {"max_order", max_order}, {"pass", all_equal},
                       {"rows", std::move(rows)}}),
             opts);
    return all_equal ? kExitPass : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify-prop2 / verify-theorem5
// ---------------------------------------------------------------------------

int emit_reports(const std::vector<VerificationReport>& reports, const CommonOpts& opts) {
    bool pass = true;
    for (const VerificationReport& r : reports) pass = pass && r.pass();
    if (opts.format == "csv") {
        std::string csv;
        for (const VerificationReport& r : reports) csv += r.to_csv();
        emit(csv, opts);
    } else {
        json arr = json::array();
        for (const VerificationReport& r : reports) arr.push_back(r.to_json());
        emit(dump(json{{"pass", pass}, {"reports", std::move(arr)}}), opts);
    }
    return pass ? kExitPass : kExitVerifyFailed;
}

int run_verify_measure_identity(const CommonOpts& opts, long m) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    if (use_float(opts))
        throw std::invalid_argument("verify-prop2 compares exact measures; "
                                    "use the rational backend");
    std::vector<VerificationReport> reports;
    if (m >= 0) {
        reports.push_back(verify_measure_identity(g, u, static_cast<std::size_t>(m), opts.budget));
    } else {
        for (std::size_t mm = 1; mm <= g.max_degree(); ++mm)
            reports.push_back(verify_measure_identity(g, u, mm, opts.budget));
    }
    return emit_reports(reports, opts);
}

int run_verify_kernel_duality(const CommonOpts& opts, long m) {
    auto [g, u] = to_grid_weights(read_grid_weights_file(opts.input));
    std::vector<VerificationReport> reports;
    if (use_float(opts)) {
        configure_float(opts);
        const WeightTable<BigFloat> w = convert_weight<BigFloat>(u);
        const DualPair<BigFloat> pair = dual_system(orthogonalize(w.grid(), w));
        const BigFloat tol = float_tol(opts);
        if (m >= 0) {
            reports.push_back(verify_kernel_duality(pair, static_cast<std::size_t>(m), tol));
        } else {
            for (std::size_t mm = 0; mm <= g.max_degree(); ++mm)
                reports.push_back(verify_kernel_duality(pair, mm, tol));
        }
        return emit_reports(reports, opts);
    }
    const DualPair<Rational> pair = dual_system(orthogonalize(g, u));
    if (m >= 0) {
        reports.push_back(verify_kernel_duality(pair, static_cast<std::size_t>(m)));
    } else {
        for (std::size_t mm = 0; mm <= g.max_degree(); ++mm)
            reports.push_back(verify_kernel_duality(pair, mm));
    }
    return emit_reports(reports, opts);
}

// ---------------------------------------------------------------------------
// classical / limit-check
// ---------------------------------------------------------------------------

int run_classical_krawtchouk(const CommonOpts& opts, const std::string& p, long n_max) {
    return emit_report(verify_krawtchouk_reflection(KrawtchoukParams(parse_rational(p), n_max)), opts);
}

int run_classical_hahn(const CommonOpts& opts, const std::string& alpha, const std::string& beta,
                       long n_max) {
    return emit_report(
        verify_hahn_reflection(HahnParams(parse_rational(alpha), parse_rational(beta), n_max)), opts);
}

int run_limit_check(const CommonOpts& opts, const std::string& p, long n_max,
                    const std::vector<std::string>& ts) {
    std::vector<Rational> t_values;
    for (const std::string& t : ts) t_values.push_back(parse_rational(t));
    const ConvergenceReport report = limit_transition_check(parse_rational(p), n_max, t_values);
    if (opts.format == "csv") {
        std::string csv = "t,max_deviation\n";
        for (const auto& [t, d] : report.deviations)
            csv += t.to_string() + "," + d.to_string() + "\n";
        emit(csv, opts);
    } else {
        emit(dump(report.to_json()), opts);
    }
    return report.pass() ? kExitPass : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orthogonal polynomial duality and determinantal kernels on finite grids"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::function<int()> action;

    auto* dual_weight_cmd = app.add_subcommand("dual-weight", "dual weight table of an input weight");
    add_io_flags(dual_weight_cmd, opts, true);
    dual_weight_cmd->callback([&] { action = [&] { return run_dual_weight(opts); }; });

    auto* ortho_cmd = app.add_subcommand("orthogonalize", "orthogonal system dump");
    add_io_flags(ortho_cmd, opts, true);
    add_backend_flags(ortho_cmd, opts);
    ortho_cmd->callback([&] { action = [&] { return run_orthogonalize(opts); }; });

    auto* duality_cmd = app.add_subcommand("verify-duality", "verify the dual-system identities");
    add_io_flags(duality_cmd, opts, true);
    add_backend_flags(duality_cmd, opts);
    duality_cmd->callback([&] { action = [&] { return run_verify_duality(opts); }; });

    std::size_t kernel_m = 1;
    std::string kernel_form = "conjugated";
    auto* kernel_cmd = app.add_subcommand("kernel", "correlation kernel matrix K^(m)");
    add_io_flags(kernel_cmd, opts, true);
    add_backend_flags(kernel_cmd, opts);
    kernel_cmd->add_option("-m,--order", kernel_m, "number of points m")->required();
    kernel_cmd->add_option("--form", kernel_form, "kernel form (conjugated|symmetric)")
        ->check(CLI::IsMember({"conjugated", "symmetric"}));
    kernel_cmd->callback([&] { action = [&] { return run_kernel(opts, kernel_m, kernel_form); }; });

    std::size_t corr_m = 1;
    std::size_t corr_order = 0;
    auto* corr_cmd =
        app.add_subcommand("correlations", "brute-force vs determinantal correlations");
    add_io_flags(corr_cmd, opts, true);
    add_backend_flags(corr_cmd, opts);
    corr_cmd->add_option("-m,--order", corr_m, "number of points m")->required();
    corr_cmd->add_option("--max-order", corr_order, "largest correlation order (default m+1)");
    corr_cmd->add_option("--budget", opts.budget, "subset enumeration budget");
    corr_cmd->callback([&] { action = [&] { return run_correlations(opts, corr_m, corr_order); }; });

    long measure_m = -1;
    auto* measure_cmd = app.add_subcommand("verify-prop2", "verify the measure identity");
    add_io_flags(measure_cmd, opts, true);
    add_backend_flags(measure_cmd, opts);
    measure_cmd->add_option("-m,--order", measure_m, "number of points m (default: all)");
    measure_cmd->add_option("--budget", opts.budget, "subset enumeration budget");
    measure_cmd->callback([&] { action = [&] { return run_verify_measure_identity(opts, measure_m); }; });

    long kernel_dual_m = -1;
    auto* kernel_dual_cmd = app.add_subcommand("verify-theorem5", "verify the kernel duality");
    add_io_flags(kernel_dual_cmd, opts, true);
    add_backend_flags(kernel_dual_cmd, opts);
    kernel_dual_cmd->add_option("-m,--order", kernel_dual_m, "number of points m (default: all)");
    kernel_dual_cmd->callback([&] { action = [&] { return run_verify_kernel_duality(opts, kernel_dual_m); }; });

    auto* classical_cmd = app.add_subcommand("classical", "classical family identities");
    classical_cmd->require_subcommand(1);
    std::string cl_p = "1/2", cl_alpha = "0", cl_beta = "0";
    long cl_n = 2;

    auto* kraw_cmd = classical_cmd->add_subcommand("krawtchouk", "verify the reflection identity");
    add_io_flags(kraw_cmd, opts, false);
    kraw_cmd->add_option("--p", cl_p, "success probability (exact rational)")->required();
    kraw_cmd->add_option("--N", cl_n, "support maximum N")->required();
    kraw_cmd->callback([&] { action = [&] { return run_classical_krawtchouk(opts, cl_p, cl_n); }; });

    auto* hahn_cmd = classical_cmd->add_subcommand("hahn", "verify the reflection identity");
    add_io_flags(hahn_cmd, opts, false);
    hahn_cmd->add_option("--alpha", cl_alpha, "alpha (exact rational)")->required();
    hahn_cmd->add_option("--beta", cl_beta, "beta (exact rational)")->required();
    hahn_cmd->add_option("--N", cl_n, "support maximum N")->required();
    hahn_cmd->callback(
        [&] { action = [&] { return run_classical_hahn(opts, cl_alpha, cl_beta, cl_n); }; });

    std::vector<std::string> lc_ts;
    auto* limit_cmd = app.add_subcommand("limit-check", "hahn-to-krawtchouk limit transition");
    add_io_flags(limit_cmd, opts, false);
    limit_cmd->add_option("--p", cl_p, "krawtchouk parameter (exact rational)")->required();
    limit_cmd->add_option("--N", cl_n, "support maximum N")->required();
    limit_cmd->add_option("--t", lc_ts, "increasing positive t values")
        ->required()
        ->delimiter(',');
    limit_cmd->callback([&] { action = [&] { return run_limit_check(opts, cl_p, cl_n, lc_ts); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const budget_exceeded_error& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return kExitBadInput;
    }
}

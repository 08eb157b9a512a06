// psdblock command-line front end: file-based positivity and norm-inequality
// checks, unitary-orbit decompositions, witness generation, the worked
// examples, and seeded property sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psdblock/constructions.hpp"
#include "psdblock/decompose.hpp"
#include "psdblock/io.hpp"
#include "psdblock/linalg.hpp"

namespace {

using namespace psdblock;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string block_path;
    std::string matrix_path;
    std::string example;
    double x = 0.3;
    double y = 0.5;
    std::string suite;
    long trials = 100;
    std::string dims = "1..4";
    std::uint64_t seed = 1;
    long l_max = 1024;
    long t_max = 1 << 20;
    double tol = kNormTol;
    std::string format = "text";
    std::string out_path;
};

void emit(const json& j, const Options& opt, const std::string& csv = "") {
    std::string payload;
    if (opt.format == "csv" && !csv.empty())
        payload = csv;
    else if (opt.format == "json" || (opt.format == "csv" && csv.empty()))
        payload = j.dump(2) + "\n";
    else
        payload = j.dump(2) + "\n";
    if (opt.out_path.empty())
        std::cout << payload;
    else {
        std::ofstream f(opt.out_path);
        if (!f) throw ParseError("cannot open " + opt.out_path + " for writing");
        f << payload;
    }
}

std::vector<Eigen::Index> parse_dims(const std::string& spec) {
    std::vector<Eigen::Index> dims;
    const auto dotdot = spec.find("..");
    if (dotdot != std::string::npos) {
        const long lo = std::stol(spec.substr(0, dotdot));
        const long hi = std::stol(spec.substr(dotdot + 2));
        if (lo < 1 || hi < lo) throw ParseError("bad --dims range: " + spec);
        for (long d = lo; d <= hi; ++d) dims.push_back(d);
        return dims;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        dims.push_back(std::stol(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (dims.empty()) throw ParseError("empty --dims");
    return dims;
}

int cmd_check(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    const InequalityReport rep = check_main_inequality(m, opt.tol);
    emit(inequality_report_to_json(rep), opt, dominance_to_csv(rep.dominance));
    return rep.conclusion_holds ? kExitOk : kExitVerdictNegative;
}

int cmd_decompose(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    const Decomposition d = lemma1_decompose(m);
    emit(decomposition_to_json(d), opt);
    return d.residual <= 1e-10 ? kExitOk : kExitNumerical;
}

int cmd_schur(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    const bool strict = schur_pd_test(m.A, m.X, m.B, /*strict=*/true);
    const bool non_strict = schur_pd_test(m.A, m.X, m.B, /*strict=*/false);
    const PositivityVerdict v = positivity(HermitianMatrix(m.assembled()));
    emit(json{{"schur_strict", strict},
              {"schur_non_strict", non_strict},
              {"positivity", positivity_to_json(v)}},
         opt);
    return strict ? kExitOk : kExitVerdictNegative;
}

int cmd_det(const Options& opt) {
    const Matrix full = load_matrix(opt.matrix_path);
    if (full.rows() != full.cols() || full.rows() % 2 != 0)
        throw ParseError("det: --matrix must be square with even dimension");
    const Eigen::Index n = full.rows() / 2;
    const Matrix a = full.topLeftCorner(n, n);
    const Matrix b = full.topRightCorner(n, n);
    const Matrix c = full.bottomLeftCorner(n, n);
    const Matrix d = full.bottomRightCorner(n, n);
    const Complex via_blocks = block_det(a, b, c, d);
    const Complex direct = full.determinant();
    const double err = std::abs(via_blocks - direct) / std::max(1.0, std::abs(direct));
    emit(json{{"block_det", {via_blocks.real(), via_blocks.imag()}},
              {"direct_det", {direct.real(), direct.imag()}},
              {"relative_error", err}},
         opt);
    return err <= 1e-8 ? kExitOk : kExitVerdictNegative;
}

int cmd_amplify(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    const AmplifierWitness w = amplify_offdiag(m.A, m.X, opt.l_max, opt.tol);
    emit(json{{"l", w.l},
              {"amplified", matrix_to_json(w.amplified.mat())},
              {"dominance", dominance_to_json(w.dominance)},
              {"positivity", positivity_to_json(w.psd_verdict)}},
         opt, dominance_to_csv(w.dominance));
    return kExitOk;
}

int cmd_scale(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    const ScalingWitness w = find_scaling_t(m.A, m.X, m.B, opt.t_max);
    emit(json{{"t", w.t},
              {"F_t", block_to_json(w.F_t)},
              {"certificate", positivity_to_json(w.certificate)}},
         opt);
    return kExitOk;
}

int cmd_plp(const Options& opt) {
    const PsdBlockMatrix m = load_block(opt.block_path);
    if (m.n != m.m) throw ParseError("plp: blocks must have equal size");
    RealVector a(m.n), b(m.n);
    Eigen::VectorXcd x(m.n);
    for (Eigen::Index i = 0; i < m.n; ++i) {
        a(i) = m.A.mat()(i, i).real();
        b(i) = m.B.mat()(i, i).real();
        x(i) = m.X(i, i);
    }
    const PlpWitness w = build_plp(a, b, x, opt.tol);
    emit(json{{"N", matrix_to_json(w.N.mat())}, {"report", dominance_to_json(w.report)}},
         opt, dominance_to_csv(w.report));
    return w.report.verdict == DominanceVerdict::strictly_dominates ? kExitOk
                                                                    : kExitVerdictNegative;
}

void print_eigen_table(const std::string& name, const RealVector& eig) {
    std::printf("%s eigenvalues (descending):\n", name.c_str());
    for (Eigen::Index i = eig.size() - 1; i >= 0; --i)
        std::printf("  lambda_%lld = %.10g\n", static_cast<long long>(eig.size() - i), eig(i));
}

int cmd_reproduce(const Options& opt) {
    if (opt.example == "Mx") {
        const PsdBlockMatrix m = example_Mx(opt.x);
        const HermitianMatrix full(m.assembled());
        print_eigen_table("M_x (x = " + std::to_string(opt.x) + ")",
                          hermitian_eigenvalues(full));
        const PositivityVerdict v = positivity(full);
        std::printf("positivity: %s\n", to_string(v.verdict));
        const InequalityReport rep = check_main_inequality(m, opt.tol);
        std::printf("||M_x|| <= ||A+B|| (all symmetric norms): %s\n",
                    rep.conclusion_holds ? "holds" : "FAILS");
        return rep.conclusion_holds ? kExitOk : kExitVerdictNegative;
    }
    if (opt.example == "C") {
        const PsdBlockMatrix m = example_C();
        const HermitianMatrix full(m.assembled());
        print_eigen_table("C", hermitian_eigenvalues(full));
        const PositivityVerdict v = positivity(full);
        std::printf("positivity: %s\n", to_string(v.verdict));
        const double lhs = spectral_norm(full.mat());
        const double rhs = spectral_norm((m.A.mat() + m.B.mat()).eval());
        std::printf("spectral norms: ||C||_s = %.6g  vs  ||A+B||_s = %.6g\n", lhs, rhs);
        const bool verified = v.is_pd() && lhs > rhs;
        std::printf("counterexample (PD and ||C||_s > ||A+B||_s): %s\n",
                    verified ? "verified" : "NOT verified");
        return verified ? kExitOk : kExitVerdictNegative;
    }
    if (opt.example == "Ny") {
        const PsdBlockMatrix m = example_Ny(opt.y);
        const HermitianMatrix full(m.assembled());
        print_eigen_table("N_y (y = " + std::to_string(opt.y) + ")",
                          hermitian_eigenvalues(full));
        const double spec_lhs = spectral_norm(full.mat());
        const Matrix sum = (m.A.mat() + m.B.mat()).eval();
        const double spec_rhs = spectral_norm(sum);
        const double fro2_lhs = frobenius_norm(full.mat()) * frobenius_norm(full.mat());
        const double fro2_rhs = frobenius_norm(sum) * frobenius_norm(sum);
        std::printf("spectral:       %.6g vs %.6g\n", spec_lhs, spec_rhs);
        std::printf("frobenius^2:    %.6g vs %.6g\n", fro2_lhs, fro2_rhs);
        const bool counterexample = spec_lhs > spec_rhs && fro2_lhs > fro2_rhs;
        std::printf("counterexample for 0 <= y < 1: %s\n",
                    counterexample ? "verified" : "not strict at this y");
        return counterexample ? kExitOk : kExitVerdictNegative;
    }
    throw ParseError("unknown --example (use Mx, C or Ny)");
}

// ---- sweep suites -------------------------------------------------------

struct SuiteResult {
    long passes = 0;
    long failures = 0;
    std::optional<std::uint64_t> first_failing_seed;

    void record(bool ok, std::uint64_t trial_seed) {
        if (ok)
            ++passes;
        else {
            ++failures;
            if (!first_failing_seed) first_failing_seed = trial_seed;
        }
    }
};

PsdBlockMatrix random_block(Rng& rng, const std::vector<Eigen::Index>& dims,
                            bool equal_blocks) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    const Eigen::Index m = equal_blocks
                               ? n
                               : dims[static_cast<std::size_t>(rng.integer(
                                     0, static_cast<std::int64_t>(dims.size()) - 1))];
    return split(random_psd(n + m, rng), n);
}

bool trial_remark1(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const PsdBlockMatrix m = random_block(rng, dims, /*equal_blocks=*/false);
    const SingularSpectrum sm = singular_values(m.assembled());
    const SingularSpectrum sa = singular_values(m.A.mat());
    const SingularSpectrum sb = singular_values(m.B.mat());
    for (Eigen::Index k = 1; k <= m.n + m.m; ++k)
        if (sm.ky_fan(k) > sa.ky_fan(k) + sb.ky_fan(k) + 1e-9) return false;
    return true;
}

bool trial_midpoints(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const PsdBlockMatrix m = random_block(rng, dims, /*equal_blocks=*/true);
    const Matrix mid = (m.A.mat() + m.B.mat()) / 2.0;
    const Matrix rx = real_part(m.X).mat();
    const Matrix ix = imag_part(m.X).mat();
    for (const Matrix& cand : {Matrix(mid - rx), Matrix(mid + rx), Matrix(mid - ix),
                               Matrix(mid + ix)}) {
        const RealVector eig = hermitian_eigenvalues(HermitianMatrix(cand));
        if (eig.size() && eig(0) < -1e-10) return false;
    }
    return true;
}

bool trial_hermitian_x(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    const PsdBlockMatrix m = random_hermitian_offdiag_psd(n, rng);
    return dominance(m.assembled(), (m.A.mat() + m.B.mat()).eval()).lhs_dominated();
}

bool trial_pww(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    RealVector lambda(n), nu(n), d(n);
    Matrix x = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lambda(i) = rng.uniform() * 2.0;
        nu(i) = rng.uniform() * 2.0;
        const double r = rng.uniform() * std::sqrt(lambda(i) * nu(i));
        const double theta = rng.uniform() * 2.0 * std::numbers::pi;
        x(i, i) = Complex(r * std::cos(theta), r * std::sin(theta));
        d(i) = std::norm(x(i, i));
    }
    const PsdBlockMatrix m =
        assemble(HermitianMatrix::diagonal(lambda), x, HermitianMatrix::diagonal(nu));
    // pooled quadratic roots must match the dense eigensolver
    std::vector<double> roots;
    for (const QuadraticPair& p : pww_eigenvalues(lambda, nu, d)) {
        roots.push_back(p.root_a);
        roots.push_back(p.root_b);
    }
    std::sort(roots.begin(), roots.end());
    const RealVector eig = hermitian_eigenvalues(HermitianMatrix(m.assembled()));
    for (Eigen::Index i = 0; i < eig.size(); ++i)
        if (std::abs(eig(i) - roots[static_cast<std::size_t>(i)]) > 1e-9) return false;
    return dominance(m.assembled(), (m.A.mat() + m.B.mat()).eval()).lhs_dominated();
}

bool trial_normal_x(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    const PsdBlockMatrix m = random_commuting_normal_instance(n, rng);
    const InequalityReport rep = verify_commuting_normal_case(m);
    return rep.theorem_applies && rep.conclusion_holds;
}

bool trial_zero_block(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    const HermitianMatrix a = random_psd(n, rng);
    const Matrix x = rng.complex_gaussian_matrix(n, n);
    const ZeroBlockVerdict z = zero_block_verdict(a, x);
    return !(z.is_psd && z.offdiag_norm > 1e-10);
}

bool trial_schur_agree(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    // mix of PD and indefinite A so both outcomes occur
    const HermitianMatrix a(
        (random_psd(n, rng).mat() - rng.uniform() * Matrix::Identity(n, n)).eval());
    const HermitianMatrix b(
        (random_psd(n, rng).mat() + 0.1 * Matrix::Identity(n, n)).eval());
    const Matrix x = rng.complex_gaussian_matrix(n, n);
    const bool schur = schur_pd_test(a, x, b, /*strict=*/true);
    const PsdBlockMatrix m = assemble(a, x, b);
    const bool direct = positivity(HermitianMatrix(m.assembled())).is_pd();
    return schur == direct;
}

bool trial_det_agree(Rng& rng, const std::vector<Eigen::Index>& dims) {
    const Eigen::Index n = dims[static_cast<std::size_t>(
        rng.integer(0, static_cast<std::int64_t>(dims.size()) - 1))];
    // commuting pair: either two diagonals or two polynomials in a common matrix
    Matrix a, c;
    if (rng.uniform() < 0.5) {
        a = Matrix::Zero(n, n);
        c = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            a(i, i) = rng.complex_gaussian();
            c(i, i) = rng.complex_gaussian();
        }
    } else {
        const Matrix g = rng.complex_gaussian_matrix(n, n);
        a = g * g + 0.5 * g + Matrix::Identity(n, n);
        c = g * g * g - g + 2.0 * Matrix::Identity(n, n);
    }
    const Matrix b = rng.complex_gaussian_matrix(n, n);
    const Matrix d = rng.complex_gaussian_matrix(n, n);
    Matrix full(2 * n, 2 * n);
    full.topLeftCorner(n, n) = a;
    full.topRightCorner(n, n) = b;
    full.bottomLeftCorner(n, n) = c;
    full.bottomRightCorner(n, n) = d;
    const Complex via_blocks = block_det(a, b, c, d, 1e-6);
    const Complex direct = full.determinant();
    return std::abs(via_blocks - direct) <= 1e-8 * std::max(1.0, std::abs(direct));
}

int cmd_sweep(const Options& opt) {
    if (opt.trials < 1) throw ParseError("sweep: --trials must be >= 1");
    const std::vector<Eigen::Index> dims = parse_dims(opt.dims);
    bool (*trial)(Rng&, const std::vector<Eigen::Index>&) = nullptr;
    if (opt.suite == "remark1") trial = trial_remark1;
    else if (opt.suite == "midpoints") trial = trial_midpoints;
    else if (opt.suite == "hermitian_x") trial = trial_hermitian_x;
    else if (opt.suite == "pww") trial = trial_pww;
    else if (opt.suite == "normal_x") trial = trial_normal_x;
    else if (opt.suite == "zero_block") trial = trial_zero_block;
    else if (opt.suite == "schur_agree") trial = trial_schur_agree;
    else if (opt.suite == "det_agree") trial = trial_det_agree;
    else throw ParseError("sweep: unknown --suite " + opt.suite);

    SuiteResult result;
    for (long i = 0; i < opt.trials; ++i) {
        Rng rng = Rng::for_trial(opt.seed, static_cast<std::uint64_t>(i));
        bool ok = false;
        try {
            ok = trial(rng, dims);
        } catch (const Error&) {
            ok = false;
        }
        result.record(ok, static_cast<std::uint64_t>(i));
    }
    json j{{"suite", opt.suite},
           {"trials", opt.trials},
           {"passes", result.passes},
           {"failures", result.failures}};
    if (result.first_failing_seed) j["first_failing_trial"] = *result.first_failing_seed;
    emit(j, opt);
    return result.failures == 0 ? kExitOk : kExitVerdictNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive semi-definite block matrices: decompositions, symmetric-norm "
                 "inequalities and counterexample generators"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tol, "comparison tolerance");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", opt.out_path, "write the report to this path");
    };

    auto* check = app.add_subcommand("check", "check ||M|| <= ||A+B|| from a block file");
    check->add_option("--block", opt.block_path, "block JSON file")->required();
    add_common(check);

    auto* decompose = app.add_subcommand("decompose", "unitary-orbit decomposition of M");
    decompose->add_option("--block", opt.block_path)->required();
    add_common(decompose);

    auto* schur = app.add_subcommand("schur", "Schur complement positivity test");
    schur->add_option("--block", opt.block_path)->required();
    add_common(schur);

    auto* det = app.add_subcommand("det", "block determinant identity for commuting blocks");
    det->add_option("--matrix", opt.matrix_path, "square matrix JSON file")->required();
    add_common(det);

    auto* amplify = app.add_subcommand("amplify", "off-diagonal amplifier witness");
    amplify->add_option("--block", opt.block_path)->required();
    amplify->add_option("--l-max", opt.l_max, "search bound for l");
    add_common(amplify);

    auto* scale = app.add_subcommand("scale", "minimal t with [[tA, X], [X*, tB]] PD");
    scale->add_option("--block", opt.block_path)->required();
    scale->add_option("--t-max", opt.t_max, "search bound for t");
    add_common(scale);

    auto* plp = app.add_subcommand("plp", "indefinite strict-dominance witness");
    plp->add_option("--block", opt.block_path)->required();
    add_common(plp);

    auto* reproduce = app.add_subcommand("reproduce", "run a named worked example");
    reproduce->add_option("--example", opt.example, "Mx, C or Ny")->required();
    reproduce->add_option("--x", opt.x, "parameter for Mx");
    reproduce->add_option("--y", opt.y, "parameter for Ny");
    add_common(reproduce);

    auto* sweep = app.add_subcommand("sweep", "seeded randomized property suite");
    sweep->add_option("--suite", opt.suite, "suite name")->required();
    sweep->add_option("--trials", opt.trials, "number of trials");
    sweep->add_option("--dims", opt.dims, "dimension range, e.g. 1..6 or 2,3,4");
    sweep->add_option("--seed", opt.seed, "base seed");
    sweep->add_option("--l-max", opt.l_max);
    sweep->add_option("--t-max", opt.t_max);
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(opt);
        if (*decompose) return cmd_decompose(opt);
        if (*schur) return cmd_schur(opt);
        if (*det) return cmd_det(opt);
        if (*amplify) return cmd_amplify(opt);
        if (*scale) return cmd_scale(opt);
        if (*plp) return cmd_plp(opt);
        if (*reproduce) return cmd_reproduce(opt);
        if (*sweep) return cmd_sweep(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CommutationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotPsdError& e) {
        std::cerr << "verdict: " << e.what() << '\n';
        return kExitVerdictNegative;
    } catch (const NotPdError& e) {
        std::cerr << "verdict: " << e.what() << '\n';
        return kExitVerdictNegative;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

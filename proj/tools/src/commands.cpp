#include "bspline_cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "bspline/basis_matrix.hpp"
#include "bspline/curve.hpp"
#include "bspline_cli/check.hpp"
#include "bspline_cli/spline_file.hpp"

namespace bspline::cli {

namespace {

enum class Method
{
    coxdeboor,
    matrix,
    cumulative,
};

struct BasisMatrixArgs
{
    int degree = 0;
    std::string knots_file;
    std::optional<int> span;
    bool cumulative = false;
    std::string format = "json";
};

struct EvalArgs
{
    std::string spline_file;
    double tau = 0.0;
    Method method = Method::matrix;
    int derivative = 0;
};

struct SampleArgs
{
    std::string spline_file;
    int n = 0;
    std::string out_file;
};

SpanIndex first_valid_span(const ExactKnotVector& kv, int degree)
{
    const int n = kv.control_point_count(degree);
    for (int j = degree; j < n; ++j)
        if (kv[static_cast<std::size_t>(j)] < kv[static_cast<std::size_t>(j) + 1])
            return SpanIndex(j);
    throw InvalidKnots("knot vector has no span of positive width in the evaluable domain");
}

int cmd_basis_matrix(const BasisMatrixArgs& args, std::ostream& out)
{
    validate_degree(args.degree);
    std::optional<BasisMatrix> m;
    if (args.knots_file.empty()) {
        if (args.span)
            throw InvalidArgument("--span needs --knots; the uniform matrix is span-independent");
        m = uniform_basis_matrix(args.degree);
    } else {
        const auto doc = read_json_file(args.knots_file);
        if (!doc.is_object() || !doc.contains("knots"))
            throw FormatError("knots file needs a \"knots\" entry");
        const auto kv = knots_from_json(doc["knots"]);
        const SpanIndex span = args.span ? SpanIndex(*args.span) : first_valid_span(kv, args.degree);
        m = general_basis_matrix(kv, args.degree, span);
    }

    const Matrix<Rational> entries = args.cumulative ? cumulative_matrix(*m).entries() : m->entries();
    if (args.format == "csv")
        write_matrix_csv(out, entries);
    else
        out << matrix_to_json(entries, m->degree(), m->span(), args.cumulative).dump(2) << '\n';
    return exit_ok;
}

int cmd_eval(const EvalArgs& args, std::ostream& out)
{
    const SplineCurve curve = load_spline(args.spline_file);
    Point p;
    if (args.derivative > 0) {
        p = curve.eval_derivative(args.tau, args.derivative);
    } else {
        switch (args.method) {
        case Method::coxdeboor:
            p = curve.eval_coxdeboor(args.tau);
            break;
        case Method::matrix:
            p = curve.eval_matrix(args.tau);
            break;
        case Method::cumulative:
            p = curve.eval_cumulative(args.tau);
            break;
        }
    }
    for (Eigen::Index c = 0; c < p.size(); ++c)
        out << (c ? " " : "") << format_double(p(c));
    out << '\n';
    return exit_ok;
}

int cmd_sample(const SampleArgs& args)
{
    const SplineCurve curve = load_spline(args.spline_file);
    const auto samples = curve.sample(args.n);
    std::ofstream file(args.out_file);
    if (!file)
        throw IoError("cannot open '" + args.out_file + "' for writing");
    write_samples_csv(file, samples);
    file.flush();
    if (!file)
        throw IoError("failed writing '" + args.out_file + "'");
    return exit_ok;
}

int cmd_check(const CheckOptions& options, std::ostream& out)
{
    const auto report = run_check(options);
    print_report(out, report);
    return report.passed ? exit_ok : exit_invariant_failure;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"B-spline basis matrices and curve evaluation"};
    app.require_subcommand(1);

    BasisMatrixArgs bm;
    auto* basis = app.add_subcommand("basis-matrix", "Print a basis matrix with exact rational entries");
    basis->add_option("--degree,-k", bm.degree, "Spline degree")->required();
    basis->add_option("--knots", bm.knots_file, "JSON file with a \"knots\" entry (non-uniform mode)");
    basis->add_option("--span", bm.span, "Span index j (default: first non-degenerate span)");
    basis->add_flag("--cumulative", bm.cumulative, "Print the cumulative-form matrix");
    basis->add_option("--format", bm.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    EvalArgs ev;
    const std::map<std::string, Method> methods{
        {"coxdeboor", Method::coxdeboor}, {"matrix", Method::matrix}, {"cumulative", Method::cumulative}};
    auto* eval = app.add_subcommand("eval", "Evaluate a spline at one parameter");
    eval->add_option("--spline", ev.spline_file, "Spline JSON file")->required();
    eval->add_option("--tau", ev.tau, "Parameter value")->required();
    eval->add_option("--method", ev.method, "Evaluation path")->transform(CLI::CheckedTransformer(methods));
    eval->add_option("--derivative", ev.derivative, "Derivative order (0 evaluates the curve)")
        ->check(CLI::NonNegativeNumber);

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Sample a spline uniformly over its domain into CSV");
    sample->add_option("--spline", sa.spline_file, "Spline JSON file")->required();
    sample->add_option("--n", sa.n, "Number of samples (>= 2)")->required();
    sample->add_option("--out", sa.out_file, "Output CSV path")->required();

    CheckOptions co;
    auto* check = app.add_subcommand("check", "Cross-check evaluation paths and matrix invariants");
    check->add_option("--degree-max", co.degree_max, "Highest degree to check");
    check->add_option("--trials", co.trials, "Random trials per degree");
    check->add_option("--seed", co.seed, "PRNG seed");
    check->add_flag("--inject-fault", co.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    try {
        if (*basis)
            return cmd_basis_matrix(bm, out);
        if (*eval)
            return cmd_eval(ev, out);
        if (*sample)
            return cmd_sample(sa);
        if (*check)
            return cmd_check(co, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
    return exit_invalid_input;
}

} // namespace bspline::cli

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclocond/arith.hpp"
#include "cyclocond/bounds.hpp"
#include "cyclocond/checks.hpp"
#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/distortion.hpp"
#include "cyclocond/errors.hpp"
#include "cyclocond/parallel.hpp"
#include "cyclocond/vandermonde.hpp"
#include "serialize.hpp"

namespace cyclocond::cli {

namespace {

constexpr std::uint64_t kMaxCondSweep = 1500;

struct IoError : Error {
    using Error::Error;
};

struct Options {
    std::uint64_t n = 0;
    std::optional<unsigned> bits;
    bool oracle = false;

    std::uint64_t from = 2;
    std::uint64_t to = 50;
    std::string outPath = "-";
    std::string format = "csv";
    unsigned jobs = availableParallelism();
    bool boundsOnly = false;

    std::string suite = "all";

    double sigma = 3.2;
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
};

Json header(const char* command)
{
    Json j;
    j["formatVersion"] = kFormatVersion;
    j["command"] = command;
    return j;
}

void emit(std::ostream& out, Json j) { out << j.dump(2) << '\n'; }

PrecisionContext contextFor(const Options& o, std::uint64_t n)
{
    if (!o.bits)
        return defaultContext(n);
    if (*o.bits < PrecisionContext::kMinBits)
        throw DomainError("--bits must be at least " + std::to_string(PrecisionContext::kMinBits));
    return PrecisionContext(*o.bits);
}

void cmdCoeffs(const Options& o, std::ostream& out)
{
    if (o.n == 0 || o.n > kMaxCyclotomicConductor)
        throw DomainError("n must lie in [1, " + std::to_string(kMaxCyclotomicConductor) + "]");
    const CycloData c = cyclotomic(o.n);
    Json j = header("coeffs");
    j["n"] = c.n;
    j["m"] = c.m;
    j["A"] = bigJson(c.height);
    Json coeffs = Json::array();
    for (const auto& a : c.poly.coeffs())
        coeffs.push_back(a.get_str());
    j["coeffs"] = std::move(coeffs);
    emit(out, std::move(j));
}

void cmdCond(const Options& o, std::ostream& out)
{
    if (o.n == 0 || o.n > kMaxClosedFormConductor)
        throw DomainError("n must lie in [1, " + std::to_string(kMaxClosedFormConductor) + "]");
    if (o.oracle && o.n > kMaxLuConductor)
        throw DomainError("--oracle supports n <= " + std::to_string(kMaxLuConductor));
    const PrecisionContext ctx = contextFor(o, o.n);
    const CondReport r = conditionNumber(o.n, ctx);
    Json j = header("cond");
    j.update(condReportJson(r));
    if (o.n >= 2)
        j["bounds"] = boundSetJson(tightestBound(factor(o.n), cyclotomic(o.n), r));
    if (o.oracle) {
        const CondReport lu = conditionNumberLU(o.n, ctx);
        Json x = condReportJson(lu);
        const mp::Real diff = mp::abs(lu.cond - r.cond) / r.cond;
        x["agreement"] = diff.toDouble();
        j["oracle"] = std::move(x);
    }
    emit(out, std::move(j));
}

SweepRow sweepRow(std::uint64_t n, bool boundsOnly)
{
    const Factored f = factor(n);
    SweepRow row;
    row.n = n;
    row.m = eulerPhi(f);
    row.omega = omega(f);
    row.rad = radical(f);
    row.height = cyclotomicHeight(n);
    std::optional<double> condLog10;
    if (!boundsOnly) {
        const CondReport r = conditionNumber(n, defaultContext(n));
        condLog10 = r.condLog10();
        if (*condLog10 < 15.0)
            row.cond = r.cond.toDouble();
        row.bits = r.bits;
        row.relErr = r.relErr;
    }
    const BoundSet s = evaluateBounds(f, row.height, condLog10);
    row.condLog10 = condLog10;
    row.tightest = s.tightestApplicable;
    row.tightestLog10 = s.tightestLog10;
    row.marginLog10 = s.marginLog10;
    return row;
}

void cmdSweep(const Options& o, std::ostream& out)
{
    const std::uint64_t cap = o.boundsOnly ? kMaxCyclotomicConductor : kMaxCondSweep;
    if (o.from < 2 || o.from > o.to || o.to > cap)
        throw DomainError("need 2 <= --from <= --to <= " + std::to_string(cap) +
                          (o.boundsOnly ? "" : " (use --bounds-only for larger ranges)"));
    if (o.format != "csv" && o.format != "json")
        throw DomainError("--format must be csv or json");

    std::ofstream file;
    if (o.outPath != "-") {
        file.open(o.outPath, std::ios::binary | std::ios::trunc);
        if (!file)
            throw IoError("cannot open " + o.outPath + " for writing");
    }
    std::ostream& sink = o.outPath == "-" ? out : file;

    const std::uint64_t count = o.to - o.from + 1;
    std::vector<SweepRow> rows(count);
    parallelFor(count, std::max(1u, o.jobs), [&](unsigned, std::size_t i) {
        rows[i] = sweepRow(o.from + i, o.boundsOnly);
    });

    if (o.format == "csv") {
        sink << sweepCsvHeader() << '\n';
        for (const auto& r : rows)
            sink << sweepCsvLine(r) << '\n';
    } else {
        Json j = header("sweep");
        j["from"] = o.from;
        j["to"] = o.to;
        j["boundsOnly"] = o.boundsOnly;
        Json cols = Json::array();
        for (const char* c : kSweepColumns)
            cols.push_back(c);
        j["columns"] = std::move(cols);
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(sweepRowJson(r));
        j["rows"] = std::move(arr);
        sink << j.dump(2) << '\n';
    }
    sink.flush();
    if (!sink)
        throw IoError("write to " + o.outPath + " failed");
}

int cmdVerify(const Options& o, std::ostream& out)
{
    static const std::vector<std::pair<std::string, Suite>> names = {
        {"arith", Suite::Arith},   {"poly", Suite::Poly},         {"inverse", Suite::Inverse},
        {"bounds", Suite::Bounds}, {"distortion", Suite::Distortion}, {"all", Suite::All},
    };
    std::optional<Suite> suite;
    for (const auto& [name, s] : names)
        if (name == o.suite)
            suite = s;
    if (!suite)
        throw DomainError("unknown suite " + o.suite);

    SuiteOptions opts;
    opts.threads = std::max(1u, o.jobs);
    if (o.bits) {
        if (*o.bits < PrecisionContext::kMinBits)
            throw DomainError("--bits must be at least " + std::to_string(PrecisionContext::kMinBits));
        opts.bits = *o.bits;
    }
    bool ok = true;
    for (const CheckResult& r : runSuite(*suite, opts)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases] " << r.summary << '\n';
        for (const auto& f : r.failures)
            out << "    " << f << '\n';
        if (r.failureCount > r.failures.size())
            out << "    ... " << (r.failureCount - r.failures.size()) << " more\n";
        ok = ok && r.passed;
    }
    out << (ok ? "verify " : "verify FAILED ") << suiteName(*suite) << '\n';
    return ok ? kOk : kVerificationFailed;
}

void cmdSubfield(const Options& o, std::ostream& out)
{
    const CondReport r = realSubfieldCond(o.n, contextFor(o, o.n));
    const mp::Real threshold = mp::Real::pow2(r.cond.bits(), static_cast<long>(r.m) - 1);
    Json j = header("subfield");
    j.update(condReportJson(r));
    j["degree"] = r.m;
    j["threshold"] = threshold.toDouble();
    j["exceedsThreshold"] = r.cond > threshold;
    emit(out, std::move(j));
}

void cmdDistortion(const Options& o, std::ostream& out)
{
    const DistortionStats s = measureDistortion(o.n, o.sigma, o.count, o.seed, contextFor(o, o.n));
    Json j = header("distortion");
    j.update(distortionJson(s));
    emit(out, std::move(j));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Condition numbers of cyclotomic Vandermonde matrices"};
    app.name("cyclocond");
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of the n-th cyclotomic polynomial");
    coeffs->add_option("n", o.n, "Conductor")->required();

    auto* cond = app.add_subcommand("cond", "Condition number of the Vandermonde matrix of Phi_n");
    cond->add_option("n", o.n, "Conductor")->required();
    cond->add_option("--bits", o.bits, "Working precision in bits");
    cond->add_flag("--oracle", o.oracle, "Cross-check against an explicit LU inverse");

    auto* sweep = app.add_subcommand("sweep", "Condition numbers and bounds over a range");
    sweep->add_option("--from", o.from, "First conductor")->capture_default_str();
    sweep->add_option("--to", o.to, "Last conductor")->capture_default_str();
    sweep->add_option("--out", o.outPath, "Output file, - for stdout")->capture_default_str();
    sweep->add_option("--format", o.format, "csv or json")->capture_default_str();
    sweep->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    sweep->add_flag("--bounds-only", o.boundsOnly, "Skip condition numbers");

    auto* verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("--suite", o.suite, "arith|poly|inverse|bounds|distortion|all")->capture_default_str();
    verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--bits", o.bits, "Working precision in bits");

    auto* subfield = app.add_subcommand("subfield", "Condition number over the real subfield nodes");
    subfield->add_option("n", o.n, "Conductor")->required();
    subfield->add_option("--bits", o.bits, "Working precision in bits (at least 512 is used)");

    auto* distortion = app.add_subcommand("distortion", "Sample noise amplification");
    distortion->add_option("n", o.n, "Conductor")->required();
    distortion->add_option("--sigma", o.sigma, "Gaussian width")->capture_default_str();
    distortion->add_option("--count", o.count, "Samples")->capture_default_str();
    distortion->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    distortion->add_option("--bits", o.bits, "Working precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadArguments;
    }

    try {
        if (*coeffs)
            cmdCoeffs(o, out);
        else if (*cond)
            cmdCond(o, out);
        else if (*sweep)
            cmdSweep(o, out);
        else if (*verify)
            return cmdVerify(o, out);
        else if (*subfield)
            cmdSubfield(o, out);
        else if (*distortion)
            cmdDistortion(o, out);
        return kOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericFailure;
    }
}

}  // namespace cyclocond::cli

#include "serialize.hpp"

#include <charconv>
#include <cmath>

namespace cyclocond::cli {

namespace {

Json optionalNumber(const std::optional<double>& v)
{
    if (!v || !std::isfinite(*v))
        return nullptr;
    return *v;
}

std::string csvField(const std::optional<double>& v) { return v && std::isfinite(*v) ? formatDouble(*v) : ""; }

std::optional<double> decimalCond(double condLog10, double cond)
{
    if (!std::isfinite(cond) || condLog10 >= 15.0 || cond >= kDecimalCondLimit)
        return std::nullopt;
    return cond;
}

}  // namespace

std::string formatDouble(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, end);
}

Json bigJson(const BigInt& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Json condReportJson(const CondReport& r)
{
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["method"] = std::string(condMethodName(r.method));
    j["bits"] = r.bits;
    j["cond"] = optionalNumber(decimalCond(r.condLog10(), r.cond.toDouble()));
    j["condLog10"] = r.condLog10();
    j["condDigits"] = r.cond.toString(20);
    j["frobV"] = r.frobV.toString(20);
    j["frobVinv"] = r.frobVinv.toString(20);
    j["relErr"] = r.relErr;
    return j;
}

Json boundSetJson(const BoundSet& s)
{
    Json j;
    j["tightestBoundId"] = s.tightestApplicable ? Json(std::string(boundWireId(*s.tightestApplicable))) : Json(nullptr);
    j["tightestBoundLog10"] = optionalNumber(s.tightestLog10);
    j["marginLog10"] = optionalNumber(s.marginLog10);
    j["heightLog10"] = s.heightLog10;
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json x;
        x["id"] = std::string(boundWireId(e.id));
        x["log10Value"] = optionalNumber(e.log10Value);
        x["applicable"] = e.applicable;
        x["asymptotic"] = isAsymptotic(e.id);
        x["bounds"] = boundsHeight(e.id) ? "A" : "cond";
        x["evaluatedAt"] = e.evaluatedAt;
        x["slackLog10"] = optionalNumber(e.slackLog10);
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    Json v = Json::array();
    for (BoundId id : s.violations)
        v.push_back(std::string(boundWireId(id)));
    j["violations"] = std::move(v);
    return j;
}

Json distortionJson(const DistortionStats& s)
{
    Json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["sampleCount"] = s.sampleCount;
    j["skippedZero"] = s.skippedZero;
    j["sigma"] = s.sigma;
    j["seed"] = s.seed;
    j["bits"] = s.bits;
    j["generator"] = std::string(kDistortionGenerator);
    j["distribution"] = std::string(kDistortionDistribution);
    j["distributionNote"] = "stand-in error distribution; no modulus applied";
    j["meanForward"] = s.meanForward;
    j["maxForward"] = s.maxForward;
    j["meanBackward"] = s.meanBackward;
    j["maxBackward"] = s.maxBackward;
    j["maxRoundTrip"] = s.maxRoundTrip;
    j["frobV"] = s.frobV;
    j["frobVinv"] = s.frobVinv;
    j["cond"] = s.cond;
    j["forwardWithinFrobenius"] = s.forwardWithinFrobenius;
    j["backwardWithinFrobenius"] = s.backwardWithinFrobenius;
    j["roundTripWithinCond"] = s.roundTripWithinCond;
    return j;
}

std::string sweepCsvHeader()
{
    std::string out;
    for (const char* c : kSweepColumns) {
        if (!out.empty())
            out += ',';
        out += c;
    }
    return out;
}

std::string sweepCsvLine(const SweepRow& r)
{
    std::string out = std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.omega) + ',' +
                      std::to_string(r.rad) + ',' + r.height.get_str() + ',' + csvField(r.condLog10) + ',' +
                      csvField(r.cond) + ',' + (r.tightest ? std::string(boundWireId(*r.tightest)) : "") + ',' +
                      csvField(r.tightestLog10) + ',' + csvField(r.marginLog10) + ',' +
                      (r.bits ? std::to_string(*r.bits) : "") + ',' + csvField(r.relErr);
    return out;
}

Json sweepRowJson(const SweepRow& r)
{
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["omega"] = r.omega;
    j["rad"] = r.rad;
    j["A"] = bigJson(r.height);
    j["condLog10"] = optionalNumber(r.condLog10);
    j["cond"] = optionalNumber(r.cond);
    j["tightestBoundId"] = r.tightest ? Json(std::string(boundWireId(*r.tightest))) : Json(nullptr);
    j["tightestBoundLog10"] = optionalNumber(r.tightestLog10);
    j["marginLog10"] = optionalNumber(r.marginLog10);
    j["bits"] = r.bits ? Json(*r.bits) : Json(nullptr);
    j["relErr"] = optionalNumber(r.relErr);
    return j;
}

}  // namespace cyclocond::cli

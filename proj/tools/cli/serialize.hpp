#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclocond/bounds.hpp"
#include "cyclocond/distortion.hpp"
#include "cyclocond/vandermonde.hpp"

namespace cyclocond::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
/// Decimal condition numbers at or above this are emitted as null.
inline constexpr double kDecimalCondLimit = 1e15;

/// Shortest round-trip decimal, independent of the C locale.
std::string formatDouble(double v);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json bigJson(const BigInt& z);

Json condReportJson(const CondReport& r);
Json boundSetJson(const BoundSet& s);
Json distortionJson(const DistortionStats& s);

/// One sweep line. Cond-related fields are empty in bounds-only mode.
struct SweepRow {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    unsigned omega = 0;
    std::uint64_t rad = 0;
    BigInt height = 0;
    std::optional<double> condLog10;
    std::optional<double> cond;
    std::optional<BoundId> tightest;
    std::optional<double> tightestLog10;
    std::optional<double> marginLog10;
    std::optional<unsigned> bits;
    std::optional<double> relErr;
};

inline constexpr const char* kSweepColumns[] = {
    "n", "m", "omega", "rad", "A", "condLog10", "cond", "tightestBoundId", "tightestBoundLog10", "marginLog10",
    "bits", "relErr",
};

std::string sweepCsvHeader();
std::string sweepCsvLine(const SweepRow& r);
Json sweepRowJson(const SweepRow& r);

}  // namespace cyclocond::cli

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heightbound/heights.hpp"
#include "heightbound/int_poly.hpp"

namespace heightbound {

/// Degree cap for the exhaustive scan (validity limit of the
/// root-subset irreducibility test).
inline constexpr int kMaxScanDegree = 8;

/// Relative tolerance for the two product identities.
inline constexpr double kProductIdentityTolerance = 1e-8;

/// Relative tolerance for H(alpha) = H(1/alpha).
inline constexpr double kReversalTolerance = 1e-9;

struct ScanConfig {
    int max_degree = 4;
    long coeff_bound = 5;
    bool monic_only = false;
    double tolerance = 1e-9; // margin tolerance
    int workers = 1;
};

/// Per-candidate identity results. integer_case_gap is the worst
/// relative gap over a in {0.1, 0.2, 0.3, 0.4} (monic candidates only);
/// final_slack is present for eligible candidates.
struct IdentitySlacks {
    std::optional<double> integer_case_gap;
    bool integer_exact_ge_one = true;
    double archimedean_gap = 0;
    double reversal_gap = 0;
    std::optional<double> final_slack;
};

struct ScanRecord {
    HeightProfile profile;
    bool eligible = false; // r > 0 and alpha not in {0, 1, -1}
    IdentitySlacks slacks;
    bool violation = false;        // eligible and margin < -tolerance
    bool identity_failure = false; // any identity outside its tolerance
};

struct ExtremalRow {
    int d = 0;
    int r = 0;
    IntPoly poly;
    double mahler = 0;
    double height = 0;
    double bound = 0;
    double margin = 0;

    bool operator==(const ExtremalRow& other) const;
};

/// Per-(d, r) minima over all eligible candidates, sorted by (d, r).
struct ExtremalTable {
    std::vector<ExtremalRow> rows;

    const ExtremalRow* find(int d, int r) const;
    bool operator==(const ExtremalTable& other) const { return rows == other.rows; }
};

struct ScanResult {
    ExtremalTable table;
    long candidates = 0;
    long eligible = 0;
    long violations = 0;
    long identity_failures = 0;
    std::vector<std::string> violation_polys;
    std::vector<std::string> exceptions;

    // corpus-wide extremes of the identity checks
    double max_integer_case_gap = 0;
    double max_archimedean_gap = 0;
    double max_reversal_gap = 0;
    double min_final_slack = 0;
    double min_margin = 0;

    bool ok() const { return violations == 0 && identity_failures == 0 && exceptions.empty(); }
};

/// Every primitive, canonical-sign, squarefree, irreducible polynomial
/// with degree in [1, max_degree], coefficients in
/// [-coeff_bound, coeff_bound] and p(0) p(1) p(-1) != 0, each exactly
/// once, in deterministic order.
std::vector<IntPoly> enumerate_candidates(const ScanConfig& config);

/// Full record for one candidate. Throws root_finding_error upward.
ScanRecord verify_polynomial(const IntPoly& p, const ScanConfig& config);

/// Exhaustive scan; the aggregate is identical for any worker count.
ScanResult run_scan(const ScanConfig& config);

/// CSV columns: d,r,R,coeffs,mahler,height,bound,margin. R is the
/// reduced fraction r/d; floats carry 17 significant digits; coeffs are
/// space-separated ascending; rows sorted by (d, r).
void export_table_csv(const ExtremalTable& table, std::ostream& out);

/// JSON array mirroring the CSV fields.
void export_table_json(const ExtremalTable& table, std::ostream& out);

/// Inverse of export_table_json.
ExtremalTable import_table_json(std::istream& in);

} // namespace heightbound

#include "heightbound/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "heightbound/bounds.hpp"
#include "heightbound/format.hpp"
#include "heightbound/root_finder.hpp"

namespace heightbound {

namespace {

constexpr double kIntegerCaseGrid[] = {0.1, 0.2, 0.3, 0.4};

void validate(const ScanConfig& config) {
    if (config.max_degree < 1 || config.max_degree > kMaxScanDegree)
        throw std::invalid_argument("max_degree must lie in [1, 8]");
    if (config.coeff_bound < 1)
        throw std::invalid_argument("coeff_bound must be >= 1");
    if (config.workers < 1)
        throw std::invalid_argument("workers must be >= 1");
    if (!(config.tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
}

long content_of(const std::vector<long>& c) {
    long g = 0;
    for (long x : c)
        g = std::gcd(g, x);
    return g;
}

/* Walk all coefficient tuples of one (degree, leading) block in
 * ascending odometer order over (c_0, ..., c_{d-1}) and hand the
 * candidates that survive the cheap filters (nonzero values at 0 and
 * +-1, content 1) to fn. Squarefreeness/irreducibility are left to the
 * caller so it can count them once. */
void for_each_block_candidate(int degree, long lead, long bound,
                              const std::function<void(const IntPoly&)>& fn) {
    std::vector<long> c(static_cast<size_t>(degree) + 1, -bound);
    c.back() = lead;
    for (;;) {
        long at0 = c[0];
        long at1 = 0, atm1 = 0;
        long sign = 1;
        for (int k = 0; k <= degree; ++k) {
            at1 += c[static_cast<size_t>(k)];
            atm1 += sign * c[static_cast<size_t>(k)];
            sign = -sign;
        }
        if (at0 != 0 && at1 != 0 && atm1 != 0 && content_of(c) == 1) {
            std::vector<mpz_class> coeffs(c.begin(), c.end());
            fn(IntPoly(std::move(coeffs)));
        }
        int k = 0;
        while (k < degree && c[static_cast<size_t>(k)] == bound) {
            c[static_cast<size_t>(k)] = -bound;
            ++k;
        }
        if (k == degree)
            break;
        ++c[static_cast<size_t>(k)];
    }
}

struct Block {
    int degree;
    long lead;
};

std::vector<Block> make_blocks(const ScanConfig& config) {
    std::vector<Block> blocks;
    for (int d = 1; d <= config.max_degree; ++d) {
        const long max_lead = config.monic_only ? 1 : config.coeff_bound;
        for (long lead = 1; lead <= max_lead; ++lead)
            blocks.push_back({d, lead});
    }
    return blocks;
}

struct BlockResult {
    long candidates = 0;
    long eligible = 0;
    long violations = 0;
    long identity_failures = 0;
    std::vector<std::string> violation_polys;
    std::vector<std::string> exceptions;
    std::map<std::pair<int, int>, ExtremalRow> extremal;
    double max_integer_case_gap = 0;
    double max_archimedean_gap = 0;
    double max_reversal_gap = 0;
    double min_final_slack = 1e300;
    double min_margin = 1e300;
};

bool better_row(const ExtremalRow& a, const ExtremalRow& b) {
    if (a.height != b.height)
        return a.height < b.height;
    return IntPoly::lex_less(a.poly, b.poly);
}

void fold_record(BlockResult& acc, const ScanRecord& rec) {
    ++acc.candidates;
    if (rec.slacks.integer_case_gap)
        acc.max_integer_case_gap = std::max(acc.max_integer_case_gap, *rec.slacks.integer_case_gap);
    acc.max_archimedean_gap = std::max(acc.max_archimedean_gap, rec.slacks.archimedean_gap);
    acc.max_reversal_gap = std::max(acc.max_reversal_gap, rec.slacks.reversal_gap);
    if (rec.identity_failure)
        ++acc.identity_failures;
    if (!rec.eligible)
        return;
    ++acc.eligible;
    if (rec.slacks.final_slack)
        acc.min_final_slack = std::min(acc.min_final_slack, *rec.slacks.final_slack);
    acc.min_margin = std::min(acc.min_margin, *rec.profile.margin);
    if (rec.violation) {
        ++acc.violations;
        if (acc.violation_polys.size() < 32)
            acc.violation_polys.push_back(rec.profile.poly.to_string());
    }
    ExtremalRow row{rec.profile.d, rec.profile.r, rec.profile.poly, rec.profile.mahler,
                    rec.profile.height, *rec.profile.bound, *rec.profile.margin};
    auto key = std::make_pair(row.d, row.r);
    auto it = acc.extremal.find(key);
    if (it == acc.extremal.end())
        acc.extremal.emplace(key, std::move(row));
    else if (better_row(row, it->second))
        it->second = std::move(row);
}

BlockResult scan_block(const Block& block, const ScanConfig& config) {
    BlockResult res;
    for_each_block_candidate(block.degree, block.lead, config.coeff_bound, [&](const IntPoly& p) {
        if (!p.is_squarefree() || !is_irreducible(p))
            return;
        try {
            fold_record(res, verify_polynomial(p, config));
        } catch (const std::exception& e) {
            res.exceptions.push_back(p.to_string() + ": " + e.what());
        }
    });
    return res;
}

} // namespace

bool ExtremalRow::operator==(const ExtremalRow& other) const {
    return d == other.d && r == other.r && poly == other.poly && mahler == other.mahler &&
           height == other.height && bound == other.bound && margin == other.margin;
}

const ExtremalRow* ExtremalTable::find(int d, int r) const {
    for (const auto& row : rows)
        if (row.d == d && row.r == r)
            return &row;
    return nullptr;
}

std::vector<IntPoly> enumerate_candidates(const ScanConfig& config) {
    validate(config);
    std::vector<IntPoly> out;
    for (const Block& b : make_blocks(config))
        for_each_block_candidate(b.degree, b.lead, config.coeff_bound, [&](const IntPoly& p) {
            if (p.is_squarefree() && is_irreducible(p))
                out.push_back(p);
        });
    return out;
}

ScanRecord verify_polynomial(const IntPoly& p, const ScanConfig& config) {
    const RootSet roots = find_roots(p);
    ScanRecord rec{height_profile(p, roots), false, {}, false, false};
    rec.eligible = rec.profile.r > 0 && p.constant() != 0 && p.eval(1) != 0 && p.eval(-1) != 0;

    const IntPoly rev = p.reversed();
    const RootSet rev_roots = find_roots(rev);
    const double rev_height = std::pow(mahler_measure(rev, rev_roots), 1.0 / rev.degree());
    rec.slacks.reversal_gap = std::fabs(rec.profile.height - rev_height) / rec.profile.height;

    const ProductPair arch = archimedean_norm_product(p, roots);
    rec.slacks.archimedean_gap = arch.rel_gap();

    if (p.leading() == 1) {
        double worst = 0;
        bool ge_one = true;
        for (double a : kIntegerCaseGrid) {
            const ProductPair ip = integer_case_product(p, roots, a);
            worst = std::max(worst, ip.rel_gap());
            ge_one = ge_one && ip.exact_side >= 1.0 - 1e-12;
        }
        rec.slacks.integer_case_gap = worst;
        rec.slacks.integer_exact_ge_one = ge_one;
    }

    if (rec.eligible)
        rec.slacks.final_slack = final_inequality_check(p, roots, rev_roots);

    rec.violation = rec.eligible && *rec.profile.margin < -config.tolerance;
    rec.identity_failure =
        rec.slacks.archimedean_gap > kProductIdentityTolerance ||
        rec.slacks.reversal_gap > kReversalTolerance ||
        (rec.slacks.integer_case_gap &&
         (*rec.slacks.integer_case_gap > kProductIdentityTolerance || !rec.slacks.integer_exact_ge_one)) ||
        (rec.slacks.final_slack && *rec.slacks.final_slack < -config.tolerance);
    return rec;
}

ScanResult run_scan(const ScanConfig& config) {
    validate(config);
    const std::vector<Block> blocks = make_blocks(config);
    std::vector<BlockResult> results(blocks.size());

    if (config.workers == 1 || blocks.size() == 1) {
        for (size_t i = 0; i < blocks.size(); ++i)
            results[i] = scan_block(blocks[i], config);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= blocks.size())
                    return;
                results[i] = scan_block(blocks[i], config);
            }
        };
        const size_t n = std::min<size_t>(static_cast<size_t>(config.workers), blocks.size());
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (size_t t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // merge in block order: the aggregate never depends on scheduling
    ScanResult out;
    std::map<std::pair<int, int>, ExtremalRow> extremal;
    out.min_final_slack = 1e300;
    out.min_margin = 1e300;
    for (const BlockResult& br : results) {
        out.candidates += br.candidates;
        out.eligible += br.eligible;
        out.violations += br.violations;
        out.identity_failures += br.identity_failures;
        out.violation_polys.insert(out.violation_polys.end(), br.violation_polys.begin(),
                                   br.violation_polys.end());
        out.exceptions.insert(out.exceptions.end(), br.exceptions.begin(), br.exceptions.end());
        out.max_integer_case_gap = std::max(out.max_integer_case_gap, br.max_integer_case_gap);
        out.max_archimedean_gap = std::max(out.max_archimedean_gap, br.max_archimedean_gap);
        out.max_reversal_gap = std::max(out.max_reversal_gap, br.max_reversal_gap);
        out.min_final_slack = std::min(out.min_final_slack, br.min_final_slack);
        out.min_margin = std::min(out.min_margin, br.min_margin);
        for (const auto& [key, row] : br.extremal) {
            auto it = extremal.find(key);
            if (it == extremal.end())
                extremal.emplace(key, row);
            else if (better_row(row, it->second))
                it->second = row;
        }
    }
    for (auto& [key, row] : extremal)
        out.table.rows.push_back(std::move(row));
    if (out.eligible == 0) {
        out.min_final_slack = 0;
        out.min_margin = 0;
    }
    return out;
}

namespace {

std::string coeffs_spaced(const IntPoly& p) {
    std::string s;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k)
            s += " ";
        s += p.coeffs()[k].get_str();
    }
    return s;
}

} // namespace

void export_table_csv(const ExtremalTable& table, std::ostream& out) {
    out << "d,r,R,coeffs,mahler,height,bound,margin\n";
    for (const auto& row : table.rows) {
        out << row.d << "," << row.r << "," << ratio_string(row.r, row.d) << ","
            << coeffs_spaced(row.poly) << "," << fmt17(row.mahler) << "," << fmt17(row.height)
            << "," << fmt17(row.bound) << "," << fmt17(row.margin) << "\n";
    }
}

void export_table_json(const ExtremalTable& table, std::ostream& out) {
    out << "[";
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (i)
            out << ",";
        out << "\n  {\"d\":" << row.d << ",\"r\":" << row.r << ",\"R\":\""
            << ratio_string(row.r, row.d) << "\",\"coeffs\":[";
        for (size_t k = 0; k < row.poly.coeffs().size(); ++k) {
            if (k)
                out << ",";
            out << row.poly.coeffs()[k].get_str();
        }
        out << "],\"mahler\":" << fmt17(row.mahler) << ",\"height\":" << fmt17(row.height)
            << ",\"bound\":" << fmt17(row.bound) << ",\"margin\":" << fmt17(row.margin) << "}";
    }
    out << "\n]\n";
}

ExtremalTable import_table_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    ExtremalTable table;
    for (const auto& item : j) {
        std::vector<mpz_class> coeffs;
        for (const auto& c : item.at("coeffs"))
            coeffs.emplace_back(c.get<long>());
        ExtremalRow row{item.at("d").get<int>(),
                        item.at("r").get<int>(),
                        IntPoly(std::move(coeffs)),
                        item.at("mahler").get<double>(),
                        item.at("height").get<double>(),
                        item.at("bound").get<double>(),
                        item.at("margin").get<double>()};
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace heightbound

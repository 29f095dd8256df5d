#pragma once

#include <json.hpp>

#include "qfp/dsl.hpp"
#include "qfp/height.hpp"
#include "qfp/verify.hpp"

namespace qfp {

using json = nlohmann::json;

inline constexpr int kReportVersion = 1;

/// Witt-vector calculator over GF(p): [k] lifts, integer literals as k*1,
/// + - *, the truncated shift V(...), and the coordinatewise Frobenius F(...).
struct WittEvalResult {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<std::uint32_t> coords;
    std::vector<std::pair<std::string, std::string>> trace;  // subexpression -> value
};
WittEvalResult eval_witt_expr(std::uint32_t p, std::uint32_t n, const std::string& text);

json ring_echo_json(const RingDecl& decl);

json build_height_report(const RingDecl& decl, const HeightReport& rep,
                         std::uint32_t max_level, std::uint32_t degree_cap,
                         std::uint64_t seed);
std::string height_report_text(const HeightReport& rep);

struct ReducedOutcome {
    bool supported = true;
    bool reduced = true;
    std::string witness;
    std::string note;
};
json build_reduced_report(const RingDecl& decl, const ReducedOutcome& outcome);
std::string reduced_report_text(const RingDecl& decl, const ReducedOutcome& outcome);

json build_witt_eval_report(const WittEvalResult& res, const std::string& expr);
std::string witt_eval_text(const WittEvalResult& res, const std::string& expr);

json build_verify_report(const SuiteLedger& ledger, const std::string& filter);
std::string verify_report_text(const SuiteLedger& ledger);

json build_compare_report(const RingDecl& decl, const QCompareReport& rep);
std::string compare_report_text(const QCompareReport& rep);

}  // namespace qfp

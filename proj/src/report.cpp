#include "qfp/report.hpp"

#include <cctype>
#include <sstream>

namespace qfp {
namespace {

std::string verdict_str(SuiteRow::Verdict v) {
    switch (v) {
        case SuiteRow::Verdict::Pass: return "pass";
        case SuiteRow::Verdict::Fail: return "FAIL";
        case SuiteRow::Verdict::ComputedLawHoldsTextDiffers:
            return "computed-law-holds-text-differs";
    }
    return "?";
}

std::string status_str(PerLevelVerdict::Status s) {
    switch (s) {
        case PerLevelVerdict::Status::Split: return "split";
        case PerLevelVerdict::Status::NotSplit: return "not_split";
        case PerLevelVerdict::Status::FeasibleUpTo: return "feasible_up_to";
        case PerLevelVerdict::Status::InfeasibleCertified: return "infeasible_certified";
        case PerLevelVerdict::Status::Gated: return "gated_nonreduced";
    }
    return "?";
}

json height_json(const HeightValue& h) {
    json j;
    switch (h.kind) {
        case HeightValue::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = h.value;
            break;
        case HeightValue::Kind::LowerBound:
            j["kind"] = "lower_bound";
            j["value"] = h.value;
            break;
        case HeightValue::Kind::Infinity:
            j["kind"] = "infinity";
            break;
    }
    if (h.evidence_degree) j["evidence_degree"] = *h.evidence_degree;
    return j;
}

json graded_json(const GradedSplitResult& g) {
    json j;
    j["degree_cap"] = g.degree_cap;
    j["rows"] = g.num_rows;
    j["cols"] = g.num_cols;
    j["verified"] = g.certificate_verified;
    if (g.feasible) {
        j["sigma"] = g.sigma_values;
    } else {
        json farkas;
        farkas["rows"] = g.farkas_rows;
        farkas["coeffs"] = g.farkas_coeffs;
        json described = json::array();
        for (std::size_t i = 0; i < g.farkas_rows.size() && i < 64; ++i)
            described.push_back(g.row_info[g.farkas_rows[i]].detail);
        farkas["row_info"] = described;
        j["farkas"] = farkas;
    }
    return j;
}

}  // namespace

json ring_echo_json(const RingDecl& decl) {
    json j;
    j["name"] = decl.name;
    j["field"] = decl.q;
    j["vars"] = decl.vars;
    json rels = json::array();
    for (const auto& r : decl.relations) rels.push_back(r.to_string(decl.vars));
    j["relations"] = rels;
    j["mode"] = decl.mode == RingDecl::Mode::Finite ? "finite" : "graded";
    return j;
}

json build_height_report(const RingDecl& decl, const HeightReport& rep,
                         std::uint32_t max_level, std::uint32_t degree_cap,
                         std::uint64_t seed) {
    json j;
    j["version"] = kReportVersion;
    j["command"] = "height";
    j["ring"] = ring_echo_json(decl);
    j["params"] = {{"max_n", max_level}, {"max_degree", degree_cap}, {"seed", seed}};

    json result;
    result["ring"] = rep.ring_description;
    result["reduced"] = rep.reduced;
    result["height"] = height_json(rep.height);
    json levels = json::array();
    for (const auto& lv : rep.levels) {
        json l;
        l["level"] = lv.level;
        l["status"] = status_str(lv.status);
        if (lv.fedder)
            l["fedder"] = *lv.fedder == FedderVerdict::FSplit ? "f_split" : "not_f_split";
        if (lv.graded) l["degree_cap"] = lv.graded->degree_cap;
        levels.push_back(std::move(l));
    }
    result["levels"] = levels;
    j["result"] = std::move(result);

    json certs;
    if (!rep.reduced) certs["nilpotent_witness"] = rep.nilpotent_witness;
    json level_certs = json::array();
    for (const auto& lv : rep.levels) {
        json c;
        c["level"] = lv.level;
        if (lv.finite && lv.finite->split) {
            c["sigma"] = lv.finite->sigma_display;
            c["verified"] = lv.finite->certificate_verified;
        }
        if (lv.graded) c["graded"] = graded_json(*lv.graded);
        level_certs.push_back(std::move(c));
    }
    certs["levels"] = std::move(level_certs);
    j["certificates"] = std::move(certs);
    return j;
}

std::string height_report_text(const HeightReport& rep) {
    std::ostringstream os;
    os << "ring: " << rep.ring_description << "\n";
    if (!rep.reduced)
        os << "reduced: no (nilpotent witness: " << rep.nilpotent_witness << ")\n";
    else
        os << "reduced: yes\n";
    for (const auto& lv : rep.levels) {
        os << "  n=" << lv.level << ": " << status_str(lv.status);
        if (lv.fedder)
            os << "  [hypersurface criterion: "
               << (*lv.fedder == FedderVerdict::FSplit ? "f_split" : "not_f_split") << "]";
        if (lv.graded) {
            os << "  (degree cap " << lv.graded->degree_cap << ", " << lv.graded->num_rows
               << " rows, " << lv.graded->num_cols << " unknowns";
            if (!lv.graded->feasible)
                os << ", certificate of " << lv.graded->farkas_rows.size() << " rows";
            os << ")";
        }
        os << "\n";
    }
    os << "height: ";
    switch (rep.height.kind) {
        case HeightValue::Kind::Exact: os << rep.height.value << " (exact)"; break;
        case HeightValue::Kind::LowerBound:
            os << ">= " << rep.height.value << " (certified lower bound)";
            if (rep.height.evidence_degree)
                os << ", feasibility evidence for " << rep.height.value
                   << " at degree cap " << *rep.height.evidence_degree;
            break;
        case HeightValue::Kind::Infinity: os << "infinity (not reduced)"; break;
    }
    os << "\n";
    return os.str();
}

json build_reduced_report(const RingDecl& decl, const ReducedOutcome& outcome) {
    json j;
    j["version"] = kReportVersion;
    j["command"] = "reduced";
    j["ring"] = ring_echo_json(decl);
    j["params"] = json::object();
    json result;
    result["supported"] = outcome.supported;
    if (outcome.supported) result["reduced"] = outcome.reduced;
    if (!outcome.note.empty()) result["note"] = outcome.note;
    j["result"] = std::move(result);
    json certs = json::object();
    if (outcome.supported && !outcome.reduced) certs["nilpotent_witness"] = outcome.witness;
    j["certificates"] = std::move(certs);
    return j;
}

std::string reduced_report_text(const RingDecl& decl, const ReducedOutcome& outcome) {
    std::ostringstream os;
    os << "ring: " << print_ring_decl(decl) << "\n";
    if (!outcome.supported)
        os << "reduced: unsupported (" << outcome.note << ")\n";
    else if (outcome.reduced)
        os << "reduced: yes\n";
    else
        os << "reduced: no (witness: " << outcome.witness << ")\n";
    return os.str();
}

json build_witt_eval_report(const WittEvalResult& res, const std::string& expr) {
    json j;
    j["version"] = kReportVersion;
    j["command"] = "witt-eval";
    j["params"] = {{"p", res.p}, {"n", res.n}, {"expr", expr}};
    json result;
    result["coords"] = res.coords;
    json tr = json::array();
    for (const auto& [e, v] : res.trace) tr.push_back({{"expr", e}, {"value", v}});
    result["trace"] = std::move(tr);
    j["result"] = std::move(result);
    j["certificates"] = json::object();
    return j;
}

std::string witt_eval_text(const WittEvalResult& res, const std::string& expr) {
    std::ostringstream os;
    os << "W_" << res.n << "(GF(" << res.p << ")): " << expr << " = (";
    for (std::size_t i = 0; i < res.coords.size(); ++i)
        os << (i ? "," : "") << res.coords[i];
    os << ")\n";
    for (const auto& [e, v] : res.trace) os << "  " << e << " = " << v << "\n";
    return os.str();
}

json build_verify_report(const SuiteLedger& ledger, const std::string& filter) {
    json j;
    j["version"] = kReportVersion;
    j["command"] = "verify";
    j["params"] = {{"filter", filter}, {"seed", ledger.seed}};
    json rows = json::array();
    std::size_t failures = 0;
    for (const auto& r : ledger.rows) {
        if (r.verdict == SuiteRow::Verdict::Fail) ++failures;
        rows.push_back({{"case", r.case_id},
                        {"subcase", r.subcase},
                        {"anchor", r.anchor},
                        {"verdict", verdict_str(r.verdict)},
                        {"detail", r.detail}});
    }
    j["ledger"] = std::move(rows);
    j["result"] = {{"rows", ledger.rows.size()},
                   {"failures", failures},
                   {"ok", failures == 0}};
    j["certificates"] = json::object();
    return j;
}

std::string verify_report_text(const SuiteLedger& ledger) {
    std::ostringstream os;
    os << "seed: " << ledger.seed << "\n";
    for (const auto& r : ledger.rows) {
        os << "  [" << verdict_str(r.verdict) << "] " << r.case_id;
        if (!r.subcase.empty()) os << " / " << r.subcase;
        os << "  (" << r.anchor << ")";
        if (!r.detail.empty()) os << "  -- " << r.detail;
        os << "\n";
    }
    os << (ledger.all_ok() ? "suite ok" : "SUITE FAILURES PRESENT") << "\n";
    return os.str();
}

json build_compare_report(const RingDecl& decl, const QCompareReport& rep) {
    json j;
    j["version"] = kReportVersion;
    j["command"] = "q-compare";
    j["ring"] = ring_echo_json(decl);
    j["params"] = {{"n", rep.level}};
    j["result"] = {{"pushout_classes", rep.pushout_classes},
                   {"modp_classes", rep.modp_classes},
                   {"well_defined", rep.well_defined},
                   {"bijective", rep.bijective},
                   {"equivariant", rep.additive_equivariant && rep.action_equivariant},
                   {"isomorphic", rep.isomorphic()},
                   {"pushout_p_annihilates", rep.pushout_p_annihilates},
                   {"summary", rep.summary()}};
    j["certificates"] = json::object();
    return j;
}

std::string compare_report_text(const QCompareReport& rep) { return rep.summary() + "\n"; }

// ------------------------------------------------------ witt expression --

namespace {

class WittExprParser {
public:
    WittExprParser(const FiniteAlgebra& F, std::uint32_t p, std::uint32_t n,
                   const std::string& text, WittEvalResult* out)
        : F_(F), p_(p), n_(n), text_(text), out_(out) {}

    WittVecA parse() {
        WittVecA v = expr();
        skip_ws();
        require(pos_ == text_.size(), "trailing input in Witt expression");
        return v;
    }

private:
    WittVecA expr() {
        WittVecA acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = trace("+", witt_add(acc, term()));
            } else if (peek() == '-') {
                ++pos_;
                acc = trace("-", witt_sub(acc, term()));
            } else {
                return acc;
            }
        }
    }
    WittVecA term() {
        WittVecA acc = atom();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = trace("*", witt_mul(acc, atom()));
            } else {
                return acc;
            }
        }
    }
    WittVecA atom() {
        skip_ws();
        char c = peek();
        if (c == '[') {
            ++pos_;
            long k = integer();
            skip_ws();
            require(peek() == ']', "expected ']' in Teichmuller lift");
            ++pos_;
            return trace("[" + std::to_string(k) + "]",
                         teichmuller(F_, p_, n_, F_.from_mpz(k)));
        }
        if (c == '(') {
            ++pos_;
            WittVecA v = expr();
            skip_ws();
            require(peek() == ')', "expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'V' || c == 'F') {
            ++pos_;
            skip_ws();
            require(peek() == '(', "expected '(' after operator");
            ++pos_;
            WittVecA v = expr();
            skip_ws();
            require(peek() == ')', "expected ')'");
            ++pos_;
            return c == 'V' ? trace("V", verschiebung_trunc(v))
                            : trace("F", witt_frobenius(v));
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            long k = integer();
            return trace(std::to_string(k), witt_from_int(F_, p_, n_, k));
        }
        throw error("unexpected character in Witt expression: '" + std::string(1, c) + "'");
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        require(peek() >= '0' && peek() <= '9', "expected an integer");
        long v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            v = v * 10 + (text_[pos_++] - '0');
        return neg ? -v : v;
    }
    WittVecA trace(const std::string& what, WittVecA v) {
        std::string s = "(";
        for (std::uint32_t i = 0; i < v.length(); ++i)
            s += (i ? "," : "") + F_.to_string(v.coords[i]);
        out_->trace.emplace_back(what, s + ")");
        return v;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(std::uint8_t(text_[pos_]))) ++pos_;
    }

    const FiniteAlgebra& F_;
    std::uint32_t p_, n_;
    const std::string& text_;
    WittEvalResult* out_;
    std::size_t pos_ = 0;
};

}  // namespace

WittEvalResult eval_witt_expr(std::uint32_t p, std::uint32_t n, const std::string& text) {
    FiniteAlgebra F = FiniteAlgebra::finite_field(p);
    WittEvalResult out;
    out.p = p;
    out.n = n;
    WittExprParser parser(F, p, n, text, &out);
    WittVecA v = parser.parse();
    for (std::uint32_t i = 0; i < n; ++i) out.coords.push_back(v.coords[i].c[0]);
    return out;
}

}  // namespace qfp

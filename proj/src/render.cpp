#include "render.hpp"

#include <sstream>

#include "json.hpp"

namespace quartic {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json valuation_json(const PadicValuation& v) {
    if (v.is_infinite()) return json("infinity");
    return json(v.finite_value());
}

ordered_json row_json(const CoeffRecord& rec) {
    ordered_json row;
    row["m"] = rec.m;
    row["l"] = rec.l;
    row["odd_part"] = rec.value.odd_part().get_str();
    row["pow2_exponent"] = rec.value.exponent();
    row["nu2"] = valuation_json(rec.nu2);
    row["nu3"] = valuation_json(rec.nu3);
    return row;
}

ordered_json counterexample_json(const Counterexample& ce) {
    ordered_json j;
    j["inputs"] = ce.inputs;
    j["expected"] = ce.expected;
    j["actual"] = ce.actual;
    return j;
}

ordered_json report_json(const SuiteReport& r) {
    ordered_json j;
    j["suite"] = r.suite_name;
    j["range"] = {r.range_lo, r.range_hi};
    j["passed"] = r.passed;
    j["counterexample"] =
        r.first_counterexample ? counterexample_json(*r.first_counterexample) : ordered_json();
    return j;
}

}  // namespace

const char* family_name(PolyFamily family) {
    return family == PolyFamily::Alpha ? "alpha" : "beta";
}

std::string coeff_json(const CoeffRecord& rec, const std::string& method) {
    ordered_json j = row_json(rec);
    j["fraction"] = rec.value.fraction_str();
    j["numerator_digits"] = rec.numerator_digits;
    j["method"] = method;
    return j.dump();
}

std::string coeff_text(const CoeffRecord& rec) {
    std::ostringstream out;
    out << "d_" << rec.l << "(" << rec.m << ") = " << rec.value.str() << " = "
        << rec.value.fraction_str() << "\n"
        << "nu2 = " << rec.nu2.str() << "\n"
        << "nu3 = " << rec.nu3.str() << "\n"
        << "numerator digits = " << rec.numerator_digits << "\n";
    return out.str();
}

std::string table_json(const std::vector<CoeffRecord>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : rows) arr.push_back(row_json(rec));
    return arr.dump();
}

std::string table_csv(const std::vector<CoeffRecord>& rows) {
    std::ostringstream out;
    out << "m,l,odd_part,pow2_exponent,nu2,nu3\n";
    for (const auto& rec : rows) {
        out << rec.m << ',' << rec.l << ',' << rec.value.odd_part().get_str() << ','
            << rec.value.exponent() << ',' << rec.nu2.str() << ',' << rec.nu3.str() << '\n';
    }
    return out.str();
}

std::string reports_json(const std::vector<SuiteReport>& reports) {
    ordered_json j;
    bool all_passed = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        all_passed = all_passed && r.passed;
    }
    j["suites"] = arr;
    j["passed"] = all_passed;
    return j.dump();
}

std::string reports_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    bool all_passed = true;
    for (const auto& r : reports) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite_name << " (range " << r.range_lo
            << ".." << r.range_hi << ")";
        if (r.first_counterexample) {
            out << " first counterexample: " << r.first_counterexample->inputs
                << "; expected " << r.first_counterexample->expected << "; got "
                << r.first_counterexample->actual;
        }
        out << "\n";
        all_passed = all_passed && r.passed;
    }
    out << (all_passed ? "all suites passed" : "FAILURES present") << "\n";
    return out.str();
}

std::string verdict_json(const LineVerdict& verdict) {
    ordered_json j;
    if (verdict.family) j["family"] = family_name(*verdict.family);
    j["l"] = verdict.l;
    j["verdict"] = verdict.verdict == LineStatus::AllOnLine ? "AllOnLine" : "Violated";
    j["parity_holds"] = verdict.parity_holds;
    j["real_root_count"] = verdict.real_root_count;
    j["expected_real_root_count"] = verdict.expected_real_root_count;
    if (verdict.witness) {
        ordered_json w;
        w["lo"] = verdict.witness->lo.get_str();
        w["hi"] = verdict.witness->hi.get_str();
        j["witness"] = w;
    } else {
        j["witness"] = ordered_json();
    }
    return j.dump();
}

std::string verdict_text(const LineVerdict& verdict) {
    std::ostringstream out;
    if (verdict.family) out << family_name(*verdict.family) << "_" << verdict.l << ": ";
    out << (verdict.verdict == LineStatus::AllOnLine ? "AllOnLine" : "Violated")
        << " (parity " << (verdict.parity_holds ? "holds" : "fails") << ", imaginary-pair roots "
        << verdict.real_root_count << "/" << verdict.expected_real_root_count << ")";
    if (verdict.witness)
        out << "\noff-line root isolated in (" << verdict.witness->lo.get_str() << ", "
            << verdict.witness->hi.get_str() << ")";
    out << "\n";
    return out.str();
}

std::string numeric_roots_json(const NumericRootsResult& result, PolyFamily family, unsigned l) {
    ordered_json j;
    j["family"] = family_name(family);
    j["l"] = l;
    j["precision_bits"] = result.precision_bits;
    ordered_json arr = ordered_json::array();
    for (const auto& root : result.roots) {
        ordered_json r;
        r["re"] = root.re;
        r["im"] = root.im;
        arr.push_back(r);
    }
    j["roots"] = arr;
    j["max_re_offset"] = result.max_offline_str;
    j["iterations"] = result.iterations;
    return j.dump();
}

std::string numeric_roots_text(const NumericRootsResult& result) {
    std::ostringstream out;
    out << "roots (precision " << result.precision_bits << " bits, " << result.iterations
        << " iterations):\n";
    for (const auto& root : result.roots) out << "  " << root.re << " + " << root.im << "i\n";
    out << "max |Re + 1/2| = " << result.max_offline_str << "\n";
    return out.str();
}

std::string scan_json(const ThreeAdicScan& scan) {
    ordered_json j;
    j["max_m"] = scan.m_max;
    j["zero_count"] = scan.zeros.size();
    j["zeros"] = scan.zeros;
    ordered_json gaps = ordered_json::array();
    for (const auto& g : scan.gaps) {
        ordered_json gj;
        gj["from"] = g.from_m;
        gj["to"] = g.to_m;
        gj["gap"] = g.gap;
        gj["in_q_set"] = g.in_q_set;
        gaps.push_back(gj);
    }
    j["gaps"] = gaps;
    j["all_gaps_in_q_set"] = scan.all_gaps_in_q_set;
    j["max_valuation"] = {{"m", scan.max_m_at}, {"nu3", scan.max_valuation}};
    j["includes_m_equal_1"] = scan.includes_m_equal_1;
    return j.dump();
}

std::string scan_text(const ThreeAdicScan& scan) {
    std::ostringstream out;
    out << "nu_3(d_1(m)) scan for 1 <= m <= " << scan.m_max << "\n";
    out << "zeros (" << scan.zeros.size() << "): ";
    for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
        if (i) out << ' ';
        out << scan.zeros[i];
    }
    out << "\ngaps: ";
    for (std::size_t i = 0; i < scan.gaps.size(); ++i) {
        if (i) out << ' ';
        out << scan.gaps[i].gap << (scan.gaps[i].in_q_set ? "" : "(!)");
    }
    out << "\nall gaps in q-set: " << (scan.all_gaps_in_q_set ? "true" : "false") << "\n";
    out << "max nu_3 over 2 <= m <= " << scan.m_max << ": " << scan.max_valuation << " at m = "
        << scan.max_m_at << "\n";
    out << "zero list includes m = 1: " << (scan.includes_m_equal_1 ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace quartic

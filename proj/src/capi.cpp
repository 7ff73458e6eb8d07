#include "quartic/quartic.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "alphabeta.hpp"
#include "coefficients.hpp"
#include "conjecture.hpp"
#include "quadrature.hpp"
#include "render.hpp"
#include "threeadic.hpp"
#include "verify.hpp"

using namespace quartic;

// Handle bodies: computed once, accessors hand out stored data.

struct quartic_coeff {
    CoeffRecord record;
    std::string odd_part;
    std::string fraction;
    std::string json;
    std::string text;
};

struct quartic_report {
    std::vector<SuiteReport> suites;
    bool passed = false;
    std::string json;
    std::string text;
};

struct quartic_verdict {
    LineVerdict verdict;
    std::string json;
    std::string text;
};

struct quartic_numeric_roots {
    NumericRootsResult result;
    std::string json;
    std::string text;
};

struct quartic_scan {
    ThreeAdicScan scan;
    std::string json;
    std::string text;
};

namespace {

quartic_status status_from_exception() {
    try {
        throw;
    } catch (const std::out_of_range&) {
        return QUARTIC_ERR_RANGE;
    } catch (const std::invalid_argument&) {
        return QUARTIC_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error&) {
        return QUARTIC_ERR_NO_CONVERGENCE;
    } catch (const std::bad_alloc&) {
        return QUARTIC_ERR_INTERNAL;
    } catch (...) {
        return QUARTIC_ERR_INTERNAL;
    }
}

template <typename Fn>
quartic_status guarded(Fn&& fn) {
    try {
        fn();
        return QUARTIC_OK;
    } catch (...) {
        return status_from_exception();
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const char* method_name(quartic_method method) {
    switch (method) {
        case QUARTIC_METHOD_SINGLE: return "single";
        case QUARTIC_METHOD_TRIPLE: return "triple";
        case QUARTIC_METHOD_ALPHABETA: return "alphabeta";
        case QUARTIC_METHOD_F21: return "f21";
        case QUARTIC_METHOD_LEIBNIZ: return "leibniz";
    }
    return nullptr;
}

DyadicRational compute_by_method(uint32_t m, uint32_t l, quartic_method method) {
    switch (method) {
        case QUARTIC_METHOD_SINGLE:
            return d_single(m, l);
        case QUARTIC_METHOD_TRIPLE:
            return d_triple(m, l);
        case QUARTIC_METHOD_ALPHABETA:
            return d_alphabeta(m, l);
        case QUARTIC_METHOD_F21: {
            if (l > m) throw std::out_of_range("l out of range");
            BigRational c = coeffs_via_2f1(m).at(l);
            return DyadicRational::from_rational(c);
        }
        case QUARTIC_METHOD_LEIBNIZ:
            return leibniz_dl(m, l);
    }
    throw std::invalid_argument("unknown method");
}

PolyFamily to_family(quartic_family family) {
    switch (family) {
        case QUARTIC_FAMILY_ALPHA: return PolyFamily::Alpha;
        case QUARTIC_FAMILY_BETA: return PolyFamily::Beta;
    }
    throw std::invalid_argument("unknown family");
}

BigRational parse_rational(const char* text) {
    if (text == nullptr) throw std::invalid_argument("null rational string");
    BigRational q;
    if (mpq_set_str(q.get_mpq_t(), text, 10) != 0)
        throw std::invalid_argument(std::string("cannot parse rational: ") + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

extern "C" {

const char* quartic_version(void) { return "1.0.0"; }

const char* quartic_status_str(quartic_status status) {
    switch (status) {
        case QUARTIC_OK: return "ok";
        case QUARTIC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QUARTIC_ERR_RANGE: return "index out of range";
        case QUARTIC_ERR_NO_CONVERGENCE: return "no convergence";
        case QUARTIC_ERR_IO: return "i/o error";
        case QUARTIC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void quartic_string_free(char* s) { delete[] s; }

quartic_status quartic_coeff_compute(uint32_t m, uint32_t l, quartic_method method,
                                     quartic_coeff** out) {
    if (out == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        const char* name = method_name(method);
        if (name == nullptr) throw std::invalid_argument("unknown method");
        DyadicRational value = compute_by_method(m, l, method);
        CoeffRecord rec;
        rec.m = m;
        rec.l = l;
        rec.value = value;
        rec.nu2 = value.nu2();
        rec.nu3 = nu_p(value, 3);
        rec.numerator_odd_part = value.odd_part();
        rec.numerator_digits = decimal_digits(value.numerator());
        auto handle = std::make_unique<quartic_coeff>();
        handle->record = rec;
        handle->odd_part = rec.value.odd_part().get_str();
        handle->fraction = rec.value.fraction_str();
        handle->json = coeff_json(rec, name);
        handle->text = coeff_text(rec);
        *out = handle.release();
    });
}

void quartic_coeff_free(quartic_coeff* coeff) { delete coeff; }

const char* quartic_coeff_odd_part(const quartic_coeff* coeff) { return coeff->odd_part.c_str(); }
int64_t quartic_coeff_pow2_exponent(const quartic_coeff* coeff) {
    return coeff->record.value.exponent();
}
int64_t quartic_coeff_nu2(const quartic_coeff* coeff) {
    return coeff->record.nu2.finite_value();
}
int64_t quartic_coeff_nu3(const quartic_coeff* coeff) {
    return coeff->record.nu3.finite_value();
}
const char* quartic_coeff_fraction(const quartic_coeff* coeff) { return coeff->fraction.c_str(); }
uint64_t quartic_coeff_numerator_digits(const quartic_coeff* coeff) {
    return coeff->record.numerator_digits;
}
const char* quartic_coeff_json(const quartic_coeff* coeff) { return coeff->json.c_str(); }
const char* quartic_coeff_text(const quartic_coeff* coeff) { return coeff->text.c_str(); }

quartic_status quartic_eval_p(uint32_t m, const char* a, char** out_value) {
    if (out_value == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out_value = nullptr;
    return guarded([&] {
        BigRational value = p_eval(m, parse_rational(a));
        *out_value = copy_string(value.get_str());
    });
}

quartic_status quartic_verify_run(const char* suite, int64_t max_m, quartic_report** out) {
    if (out == nullptr || suite == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        std::optional<unsigned long> range;
        if (max_m >= 0) range = static_cast<unsigned long>(max_m);
        auto handle = std::make_unique<quartic_report>();
        handle->suites = run_suites(suite, range);
        handle->passed = true;
        for (const auto& r : handle->suites) handle->passed = handle->passed && r.passed;
        handle->json = reports_json(handle->suites);
        handle->text = reports_text(handle->suites);
        *out = handle.release();
    });
}

void quartic_report_free(quartic_report* report) { delete report; }
int quartic_report_passed(const quartic_report* report) { return report->passed ? 1 : 0; }
size_t quartic_report_suite_count(const quartic_report* report) { return report->suites.size(); }
const char* quartic_report_json(const quartic_report* report) { return report->json.c_str(); }
const char* quartic_report_text(const quartic_report* report) { return report->text.c_str(); }

quartic_status quartic_roots_decide(quartic_family family, uint32_t l, quartic_verdict** out) {
    if (out == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        if (l < 1) throw std::out_of_range("roots decision requires l >= 1");
        auto handle = std::make_unique<quartic_verdict>();
        handle->verdict = decide_line(to_family(family), l);
        handle->json = verdict_json(handle->verdict);
        handle->text = verdict_text(handle->verdict);
        *out = handle.release();
    });
}

void quartic_verdict_free(quartic_verdict* verdict) { delete verdict; }
int quartic_verdict_all_on_line(const quartic_verdict* verdict) {
    return verdict->verdict.verdict == LineStatus::AllOnLine ? 1 : 0;
}
const char* quartic_verdict_json(const quartic_verdict* verdict) { return verdict->json.c_str(); }
const char* quartic_verdict_text(const quartic_verdict* verdict) { return verdict->text.c_str(); }

quartic_status quartic_roots_numeric(quartic_family family, uint32_t l, uint32_t precision_bits,
                                     quartic_numeric_roots** out) {
    if (out == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        if (l < 1) throw std::out_of_range("numeric roots require l >= 1");
        PolyFamily fam = to_family(family);
        IntPolynomial p = (fam == PolyFamily::Alpha) ? alpha_poly(l) : beta_poly(l);
        auto handle = std::make_unique<quartic_numeric_roots>();
        handle->result = numeric_roots(p, precision_bits);
        handle->json = numeric_roots_json(handle->result, fam, l);
        handle->text = numeric_roots_text(handle->result);
        *out = handle.release();
    });
}

void quartic_numeric_roots_free(quartic_numeric_roots* roots) { delete roots; }
double quartic_numeric_roots_max_offset(const quartic_numeric_roots* roots) {
    return roots->result.max_offline;
}
const char* quartic_numeric_roots_json(const quartic_numeric_roots* roots) {
    return roots->json.c_str();
}
const char* quartic_numeric_roots_text(const quartic_numeric_roots* roots) {
    return roots->text.c_str();
}

quartic_status quartic_threeadic_scan(uint64_t max_m, quartic_scan** out) {
    if (out == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<quartic_scan>();
        handle->scan = scan(max_m);
        handle->json = scan_json(handle->scan);
        handle->text = scan_text(handle->scan);
        *out = handle.release();
    });
}

void quartic_scan_free(quartic_scan* s) { delete s; }
int64_t quartic_scan_max_valuation(const quartic_scan* s) { return s->scan.max_valuation; }
uint64_t quartic_scan_max_valuation_at(const quartic_scan* s) { return s->scan.max_m_at; }
size_t quartic_scan_zero_count(const quartic_scan* s) { return s->scan.zeros.size(); }
uint64_t quartic_scan_zero(const quartic_scan* s, size_t index) { return s->scan.zeros.at(index); }
size_t quartic_scan_gap_count(const quartic_scan* s) { return s->scan.gaps.size(); }
uint64_t quartic_scan_gap(const quartic_scan* s, size_t index) { return s->scan.gaps.at(index).gap; }
int quartic_scan_gap_in_q_set(const quartic_scan* s, size_t index) {
    return s->scan.gaps.at(index).in_q_set ? 1 : 0;
}
int quartic_scan_all_gaps_in_q_set(const quartic_scan* s) {
    return s->scan.all_gaps_in_q_set ? 1 : 0;
}
const char* quartic_scan_json(const quartic_scan* s) { return s->json.c_str(); }
const char* quartic_scan_text(const quartic_scan* s) { return s->text.c_str(); }

quartic_status quartic_q_sequence(uint32_t count, uint64_t* out_terms) {
    if (out_terms == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        QSequence q = q_sequence(count);
        for (uint32_t i = 0; i < count; ++i) out_terms[i] = q.terms[i];
    });
}

quartic_status quartic_table_render(uint32_t m_max, quartic_format format, char** out) {
    if (out == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        auto rows = coeff_table(m_max);
        std::string rendered;
        switch (format) {
            case QUARTIC_FORMAT_JSON: rendered = table_json(rows); break;
            case QUARTIC_FORMAT_CSV: rendered = table_csv(rows); break;
            default: throw std::invalid_argument("unknown format");
        }
        *out = copy_string(rendered);
    });
}

quartic_status quartic_table_write(uint32_t m_max, quartic_format format, const char* path) {
    if (path == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    char* rendered = nullptr;
    quartic_status st = quartic_table_render(m_max, format, &rendered);
    if (st != QUARTIC_OK) return st;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        quartic_string_free(rendered);
        return QUARTIC_ERR_IO;
    }
    file.write(rendered, static_cast<std::streamsize>(std::strlen(rendered)));
    file.flush();
    quartic_string_free(rendered);
    return file.good() ? QUARTIC_OK : QUARTIC_ERR_IO;
}

quartic_status quartic_quad_identity(double a, uint32_t m, double tol, double* out_rel_error) {
    if (out_rel_error == nullptr) return QUARTIC_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        PolyIdentityCheck check = check_poly_identity(a, m, tol);
        *out_rel_error = check.rel_error;
        if (!check.ok) throw std::runtime_error("identity check exceeded tolerance");
    });
}

}  // extern "C"

#include "decoyq/decoyq.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "decoyq/analysis.hpp"
#include "decoyq/csv.hpp"
#include "decoyq/eavesdrop.hpp"
#include "decoyq/error.hpp"
#include "decoyq/fidelity.hpp"
#include "decoyq/states.hpp"

struct dq_scheme {
  decoyq::DecoyScheme value;
};
struct dq_reports {
  std::vector<decoyq::FidelityReport> value;
};
struct dq_ranking {
  decoyq::Ranking value;
};
struct dq_attack {
  decoyq::AttackOutcome value;
};

namespace {

thread_local std::string g_last_error;

dq_status to_status(decoyq::ErrorCode code) {
  switch (code) {
    case decoyq::ErrorCode::kInvalidArgument: return DQ_ERR_INVALID_ARGUMENT;
    case decoyq::ErrorCode::kDimensionMismatch: return DQ_ERR_DIMENSION;
    case decoyq::ErrorCode::kNoClosedForm: return DQ_ERR_NO_CLOSED_FORM;
    case decoyq::ErrorCode::kNoCrossover: return DQ_ERR_NO_CROSSOVER;
    case decoyq::ErrorCode::kNumerical: return DQ_ERR_NUMERICAL;
  }
  return DQ_ERR_INTERNAL;
}

dq_status fail(dq_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, mapping exceptions to status codes. Nothing may escape the C ABI.
template <class Fn>
dq_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return DQ_OK;
  } catch (const decoyq::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DQ_ERR_INTERNAL, "unknown exception");
  }
}

dq_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (cap < text.size() + 1) {
    if (buf && cap > 0) buf[0] = '\0';
    return fail(DQ_ERR_BUFFER_TOO_SMALL, "buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return DQ_OK;
}

decoyq::NoiseFamily to_family(dq_noise_family f) {
  switch (f) {
    case DQ_NOISE_AD: return decoyq::NoiseFamily::kAmplitudeDamping;
    case DQ_NOISE_PD: return decoyq::NoiseFamily::kPhaseDamping;
    case DQ_NOISE_CD: return decoyq::NoiseFamily::kCollectiveDephasing;
    case DQ_NOISE_CR: return decoyq::NoiseFamily::kCollectiveRotation;
  }
  throw decoyq::Error(decoyq::ErrorCode::kInvalidArgument, "unknown noise family");
}

dq_noise_family from_family(decoyq::NoiseFamily f) {
  switch (f) {
    case decoyq::NoiseFamily::kAmplitudeDamping: return DQ_NOISE_AD;
    case decoyq::NoiseFamily::kPhaseDamping: return DQ_NOISE_PD;
    case decoyq::NoiseFamily::kCollectiveDephasing: return DQ_NOISE_CD;
    case decoyq::NoiseFamily::kCollectiveRotation: return DQ_NOISE_CR;
  }
  return DQ_NOISE_AD;
}

decoyq::AttackMethod to_method(dq_attack_method method, uint64_t trials, uint64_t seed) {
  switch (method) {
    case DQ_METHOD_EXACT: return decoyq::ExactEnumeration{};
    case DQ_METHOD_MONTE_CARLO: return decoyq::MonteCarlo{trials, seed};
  }
  throw decoyq::Error(decoyq::ErrorCode::kInvalidArgument, "unknown attack method");
}

std::vector<decoyq::DecoyScheme> collect(const dq_scheme* const* schemes, size_t count) {
  std::vector<decoyq::DecoyScheme> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (!schemes[i]) throw decoyq::Error(decoyq::ErrorCode::kInvalidArgument, "null scheme in list");
    out.push_back(schemes[i]->value);
  }
  return out;
}

#define DQ_REQUIRE(ptr)                                                   \
  do {                                                                    \
    if (!(ptr)) return fail(DQ_ERR_NULL_POINTER, #ptr " must not be null"); \
  } while (0)

}  // namespace

extern "C" {

const char* dq_version(void) { return "1.0.0"; }

const char* dq_status_message(dq_status status) {
  switch (status) {
    case DQ_OK: return "ok";
    case DQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DQ_ERR_DIMENSION: return "dimension mismatch";
    case DQ_ERR_NO_CLOSED_FORM: return "no closed form";
    case DQ_ERR_NO_CROSSOVER: return "no crossover in interval";
    case DQ_ERR_NUMERICAL: return "numerical invariant violated";
    case DQ_ERR_NULL_POINTER: return "null pointer";
    case DQ_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dq_last_error(void) { return g_last_error.c_str(); }

dq_status dq_scheme_parse(const char* text, dq_scheme** out) {
  DQ_REQUIRE(text);
  DQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dq_scheme{decoyq::parse_scheme(text)}; });
}

dq_status dq_scheme_name(const dq_scheme* scheme, char* buf, size_t cap, size_t* needed) {
  DQ_REQUIRE(scheme);
  return copy_out(decoyq::scheme_name(scheme->value), buf, cap, needed);
}

void dq_scheme_free(dq_scheme* scheme) { delete scheme; }

dq_status dq_noise_parse(const char* text, dq_noise_family* out) {
  DQ_REQUIRE(text);
  DQ_REQUIRE(out);
  return guarded([&] { *out = from_family(decoyq::parse_noise_family(text)); });
}

dq_status dq_noise_default_range(dq_noise_family family, double* lo, double* hi) {
  DQ_REQUIRE(lo);
  DQ_REQUIRE(hi);
  return guarded([&] { std::tie(*lo, *hi) = decoyq::default_range(to_family(family)); });
}

dq_status dq_fidelity(const dq_scheme* scheme, dq_noise_family family, double parameter, double* out) {
  DQ_REQUIRE(scheme);
  DQ_REQUIRE(out);
  return guarded([&] {
    *out = decoyq::scheme_fidelity(scheme->value, decoyq::NoiseModel::make(to_family(family), parameter));
  });
}

dq_status dq_closed_form(const dq_scheme* scheme, dq_noise_family family, double parameter, double* out) {
  DQ_REQUIRE(scheme);
  DQ_REQUIRE(out);
  return guarded([&] {
    *out = decoyq::closed_form(scheme->value, decoyq::NoiseModel::make(to_family(family), parameter));
  });
}

dq_status dq_verify_table(int grid_size, double closed_form_offset, dq_reports** out) {
  DQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new dq_reports{decoyq::verify_table(grid_size, {closed_form_offset})};
  });
}

dq_status dq_sweep(const dq_scheme* const* schemes, size_t count, dq_noise_family family,
                   double start, double end, int points, dq_reports** out) {
  DQ_REQUIRE(out);
  *out = nullptr;
  if (count > 0) DQ_REQUIRE(schemes);
  return guarded([&] {
    decoyq::SweepSpec spec{collect(schemes, count), to_family(family), start, end, points};
    *out = new dq_reports{decoyq::sweep(spec)};
  });
}

size_t dq_reports_count(const dq_reports* reports) { return reports ? reports->value.size() : 0; }

dq_status dq_reports_max_deviation(const dq_reports* reports, size_t index, double* out) {
  DQ_REQUIRE(reports);
  DQ_REQUIRE(out);
  if (index >= reports->value.size()) return fail(DQ_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& dev = reports->value[index].max_abs_deviation;
  if (!dev) return fail(DQ_ERR_NO_CLOSED_FORM, "report has no closed form");
  *out = *dev;
  return DQ_OK;
}

dq_status dq_reports_csv(const dq_reports* reports, char* buf, size_t cap, size_t* needed) {
  DQ_REQUIRE(reports);
  std::ostringstream os;
  decoyq::write_fidelity_csv(os, reports->value);
  return copy_out(os.str(), buf, cap, needed);
}

dq_status dq_reports_summary_csv(const dq_reports* reports, char* buf, size_t cap, size_t* needed) {
  DQ_REQUIRE(reports);
  std::ostringstream os;
  decoyq::write_verify_summary(os, reports->value);
  return copy_out(os.str(), buf, cap, needed);
}

void dq_reports_free(dq_reports* reports) { delete reports; }

dq_status dq_find_crossover(const dq_scheme* a, const dq_scheme* b, dq_noise_family family,
                            double lo, double hi, double* out) {
  DQ_REQUIRE(a);
  DQ_REQUIRE(b);
  DQ_REQUIRE(out);
  return guarded([&] { *out = decoyq::find_crossover(a->value, b->value, to_family(family), lo, hi); });
}

dq_status dq_is_decoherence_free(const dq_scheme* scheme, dq_noise_family family, int samples,
                                 double tol, int* out) {
  DQ_REQUIRE(scheme);
  DQ_REQUIRE(out);
  return guarded([&] {
    *out = decoyq::is_decoherence_free(scheme->value, to_family(family), samples, tol) ? 1 : 0;
  });
}

dq_status dq_recommend(dq_noise_family family, double parameter, const dq_scheme* const* candidates,
                       size_t count, dq_ranking** out) {
  DQ_REQUIRE(out);
  *out = nullptr;
  if (count > 0) DQ_REQUIRE(candidates);
  return guarded([&] {
    const auto noise = decoyq::NoiseModel::make(to_family(family), parameter);
    *out = new dq_ranking{count == 0 ? decoyq::recommend(noise)
                                     : decoyq::recommend(noise, collect(candidates, count))};
  });
}

size_t dq_ranking_count(const dq_ranking* ranking) { return ranking ? ranking->value.ordered.size() : 0; }

dq_status dq_ranking_entry(const dq_ranking* ranking, size_t index, double* fidelity, size_t* tie_group) {
  DQ_REQUIRE(ranking);
  const auto& r = ranking->value;
  if (index >= r.ordered.size()) return fail(DQ_ERR_INVALID_ARGUMENT, "ranking index out of range");
  if (fidelity) *fidelity = r.ordered[index].fidelity;
  if (tie_group)
    for (size_t g = 0; g < r.ties.size(); ++g)
      for (size_t i : r.ties[g])
        if (i == index) *tie_group = g + 1;
  return DQ_OK;
}

dq_status dq_ranking_csv(const dq_ranking* ranking, char* buf, size_t cap, size_t* needed) {
  DQ_REQUIRE(ranking);
  std::ostringstream os;
  decoyq::write_ranking_csv(os, ranking->value);
  return copy_out(os.str(), buf, cap, needed);
}

void dq_ranking_free(dq_ranking* ranking) { delete ranking; }

dq_status dq_intercept_resend(dq_attack_method method, uint64_t trials, uint64_t seed, int eve_present,
                              dq_attack** out) {
  DQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new dq_attack{decoyq::intercept_resend_bb84(to_method(method, trials, seed), eve_present != 0)};
  });
}

dq_status dq_wrong_pair_attack(const char* bell, int first, int second, dq_attack_method method,
                               uint64_t trials, uint64_t seed, dq_attack** out) {
  DQ_REQUIRE(bell);
  DQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new dq_attack{decoyq::wrong_pair_bell_attack(decoyq::parse_bell_label(bell), {first, second},
                                                        to_method(method, trials, seed))};
  });
}

dq_status dq_attack_detection(const dq_attack* attack, double* out) {
  DQ_REQUIRE(attack);
  DQ_REQUIRE(out);
  *out = attack->value.detection_probability;
  return DQ_OK;
}

dq_status dq_attack_csv(const dq_attack* attack, char* buf, size_t cap, size_t* needed) {
  DQ_REQUIRE(attack);
  std::ostringstream os;
  decoyq::write_attack_csv(os, attack->value);
  return copy_out(os.str(), buf, cap, needed);
}

void dq_attack_free(dq_attack* attack) { delete attack; }

}  // extern "C"

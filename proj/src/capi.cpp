#include "ecgraph.h"

#include <algorithm>
#include <complex>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "ec_check.hpp"
#include "error.hpp"
#include "number_theory.hpp"
#include "pseudorandom.hpp"
#include "spectrum.hpp"

struct ecg_graph {
  ecgraph::CayleyGraph impl;
};

struct ecg_spectrum {
  ecgraph::SpectrumReport impl;
};

struct ecg_certificate {
  ecgraph::EcCertificate impl;
};

namespace {

thread_local std::string g_last_error;

ecg_status map_code(ecgraph::errc code) {
  switch (code) {
    case ecgraph::errc::invalid_argument:
      return ECG_ERR_INVALID_ARGUMENT;
    case ecgraph::errc::budget_exceeded:
      return ECG_ERR_BUDGET_EXCEEDED;
    case ecgraph::errc::cap_exceeded:
      return ECG_ERR_CAP_EXCEEDED;
    case ecgraph::errc::io_error:
      return ECG_ERR_IO;
  }
  return ECG_ERR_INTERNAL;
}

template <class Fn>
ecg_status wrap(Fn&& fn) {
  try {
    fn();
    return ECG_OK;
  } catch (const ecgraph::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ECG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ECG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return ECG_ERR_INTERNAL;
  }
}

ecg_status bad_argument(const char* message) {
  g_last_error = message;
  return ECG_ERR_INVALID_ARGUMENT;
}

std::vector<std::uint64_t> to_vector(const std::uint64_t* data, size_t len) {
  if (len == 0) return {};
  return std::vector<std::uint64_t>(data, data + len);
}

// Null data with nonzero length is the only invalid array shape.
bool array_ok(const std::uint64_t* data, size_t len) {
  return len == 0 || data != nullptr;
}

}  // namespace

extern "C" {

const char* ecg_status_message(ecg_status status) {
  switch (status) {
    case ECG_OK:
      return "ok";
    case ECG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ECG_ERR_BUDGET_EXCEEDED:
      return "search budget exceeded";
    case ECG_ERR_CAP_EXCEEDED:
      return "size cap exceeded";
    case ECG_ERR_IO:
      return "i/o failure";
    case ECG_ERR_INTERNAL:
      return "internal failure";
  }
  return "unknown status";
}

const char* ecg_last_error(void) { return g_last_error.c_str(); }

ecg_status ecg_params_create(uint64_t q, uint32_t e, ecg_params* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] {
    ecgraph::GraphParams p = ecgraph::GraphParams::create(q, e);
    out->q = p.q;
    out->e = p.e;
    out->n = p.n;
    out->d = p.d;
  });
}

ecg_status ecg_graph_build(uint64_t q, uint32_t e, ecg_graph** out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  *out = nullptr;
  return wrap([&] {
    *out = new ecg_graph{ecgraph::CayleyGraph::build(q, e)};
  });
}

void ecg_graph_free(ecg_graph* g) { delete g; }

ecg_status ecg_graph_params(const ecg_graph* g, ecg_params* out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  const ecgraph::GraphParams& p = g->impl.params();
  out->q = p.q;
  out->e = p.e;
  out->n = p.n;
  out->d = p.d;
  return ECG_OK;
}

uint64_t ecg_graph_order(const ecg_graph* g) {
  return g == nullptr ? 0 : g->impl.order();
}

uint64_t ecg_graph_degree(const ecg_graph* g) {
  return g == nullptr ? 0 : g->impl.degree();
}

uint64_t ecg_graph_edge_count(const ecg_graph* g) {
  return g == nullptr ? 0 : g->impl.edge_count();
}

ecg_status ecg_graph_is_adjacent(const ecg_graph* g, uint64_t x, uint64_t y,
                                 int* out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  return wrap([&] { *out = g->impl.is_adjacent(x, y) ? 1 : 0; });
}

ecg_status ecg_graph_character(const ecg_graph* g, uint64_t x, int* out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  if (x >= g->impl.order())
    return bad_argument("element out of range");
  *out = g->impl.chi()(x);
  return ECG_OK;
}

uint64_t ecg_graph_connection_set_size(const ecg_graph* g) {
  return g == nullptr ? 0 : g->impl.connection_set().size();
}

ecg_status ecg_graph_connection_set(const ecg_graph* g, uint64_t* buf,
                                    size_t buf_len) {
  if (g == nullptr || buf == nullptr)
    return bad_argument("graph or buffer pointer is null");
  const std::vector<std::uint64_t>& conn = g->impl.connection_set();
  if (buf_len < conn.size()) return bad_argument("buffer too small");
  std::copy(conn.begin(), conn.end(), buf);
  return ECG_OK;
}

ecg_status ecg_graph_validate(const ecg_graph* g, int* regular, int* symmetric,
                              int* loop_free) {
  if (g == nullptr) return bad_argument("graph pointer is null");
  return wrap([&] {
    const std::uint64_t n = g->impl.order();
    if (regular != nullptr) {
      *regular = 1;
      for (std::uint64_t v = 0; v < n; ++v)
        if (g->impl.row(v).count() != g->impl.degree()) {
          *regular = 0;
          break;
        }
    }
    if (symmetric != nullptr) {
      *symmetric = 1;
      for (std::uint64_t u = 0; u < n && *symmetric; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v)
          if (g->impl.row(u).test(v) != g->impl.row(v).test(u)) {
            *symmetric = 0;
            break;
          }
    }
    if (loop_free != nullptr) {
      *loop_free = 1;
      for (std::uint64_t v = 0; v < n; ++v)
        if (g->impl.row(v).test(v)) {
          *loop_free = 0;
          break;
        }
    }
  });
}

ecg_status ecg_graph_export_edge_list(const ecg_graph* g, const char* path) {
  if (g == nullptr || path == nullptr)
    return bad_argument("graph or path pointer is null");
  return wrap([&] { g->impl.export_edge_list_file(path); });
}

ecg_status ecg_extender(const ecg_graph* g, const uint64_t* a, size_t a_len,
                        const uint64_t* b, size_t b_len, int64_t* out) {
  if (g == nullptr || out == nullptr || !array_ok(a, a_len) ||
      !array_ok(b, b_len))
    return bad_argument("null pointer argument");
  return wrap([&] {
    *out = ecgraph::extender(g->impl, to_vector(a, a_len),
                             to_vector(b, b_len));
  });
}

ecg_status ecg_extender_avoiding_forbidden(const ecg_graph* g,
                                           const uint64_t* a, size_t a_len,
                                           const uint64_t* b, size_t b_len,
                                           int64_t* out) {
  if (g == nullptr || out == nullptr || !array_ok(a, a_len) ||
      !array_ok(b, b_len))
    return bad_argument("null pointer argument");
  return wrap([&] {
    *out = ecgraph::extender_avoiding_forbidden(g->impl, to_vector(a, a_len),
                                                to_vector(b, b_len));
  });
}

ecg_status ecg_forbidden_set_size(const ecg_graph* g, const uint64_t* a,
                                  size_t a_len, const uint64_t* b,
                                  size_t b_len, uint64_t* out) {
  if (g == nullptr || out == nullptr || !array_ok(a, a_len) ||
      !array_ok(b, b_len))
    return bad_argument("null pointer argument");
  return wrap([&] {
    *out = ecgraph::forbidden_set(g->impl, to_vector(a, a_len),
                                  to_vector(b, b_len))
               .size();
  });
}

ecg_status ecg_char_sums(const ecg_graph* g, const uint64_t* a, size_t a_len,
                         const uint64_t* b, size_t b_len,
                         ecg_char_sums_report* out) {
  if (g == nullptr || out == nullptr || !array_ok(a, a_len) ||
      !array_ok(b, b_len))
    return bad_argument("null pointer argument");
  return wrap([&] {
    ecgraph::CharSumReport r = ecgraph::char_sums(
        g->impl, to_vector(a, a_len), to_vector(b, b_len));
    out->f = r.f;
    out->g = r.g;
    out->h = r.h;
    out->t = r.t;
    out->z_forbidden_size = r.z_forbidden_size;
    out->h_upper_bound = r.h_upper_bound;
    out->g_lower_bound = r.g_lower_bound;
  });
}

ecg_status ecg_verify_weil_bound(const ecg_graph* g, const uint64_t* points,
                                 size_t k, ecg_weil_report* out) {
  if (g == nullptr || out == nullptr || !array_ok(points, k))
    return bad_argument("null pointer argument");
  return wrap([&] {
    ecgraph::WeilReport r =
        ecgraph::verify_weil_bound(g->impl.chi(), to_vector(points, k));
    out->sum = r.sum;
    out->bound = r.bound;
    out->ok = r.ok ? 1 : 0;
    out->k = r.k;
    out->reduced_distinct = r.reduced_distinct ? 1 : 0;
    out->reduced_sum_scaled = r.reduced_sum_scaled;
    out->reduction_ok = r.reduction_ok ? 1 : 0;
  });
}

ecg_status ecg_sufficient_condition(uint64_t q, uint32_t e, uint64_t t,
                                    int* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] { *out = ecgraph::sufficient_condition(q, e, t) ? 1 : 0; });
}

ecg_status ecg_find_least_q1(uint64_t t, uint32_t e, uint64_t* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] { *out = ecgraph::find_least_q1(t, e); });
}

ecg_status ecg_brute_force_ec(const ecg_graph* g, uint64_t t,
                              const ecg_ec_options* options,
                              ecg_certificate** out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  *out = nullptr;
  ecgraph::EcOptions opts;
  if (options != nullptr) {
    opts.threads = options->threads;
    if (options->budget != 0) opts.budget = options->budget;
    opts.force = options->force != 0;
    opts.distinct_residues = options->distinct_residues != 0;
  }
  return wrap([&] {
    *out = new ecg_certificate{ecgraph::brute_force_ec(g->impl, t, opts)};
  });
}

ecg_status ecg_certify_sufficient(uint64_t q, uint32_t e, uint64_t t,
                                  ecg_certificate** out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  *out = nullptr;
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    *out = new ecg_certificate{
        ecgraph::certify_by_sufficient_condition(params, t)};
  });
}

void ecg_certificate_free(ecg_certificate* cert) { delete cert; }

int ecg_certificate_verified(const ecg_certificate* cert) {
  return cert != nullptr && cert->impl.verified ? 1 : 0;
}

int ecg_certificate_method(const ecg_certificate* cert) {
  if (cert == nullptr) return -1;
  return cert->impl.method == ecgraph::EcMethod::exhaustive
             ? ECG_METHOD_EXHAUSTIVE
             : ECG_METHOD_SUFFICIENT_CONDITION;
}

uint64_t ecg_certificate_t(const ecg_certificate* cert) {
  return cert == nullptr ? 0 : cert->impl.t;
}

uint64_t ecg_certificate_search_space(const ecg_certificate* cert) {
  return cert == nullptr ? 0 : cert->impl.search_space;
}

int ecg_certificate_distinct_residues(const ecg_certificate* cert) {
  return cert != nullptr && cert->impl.distinct_residues ? 1 : 0;
}

int ecg_certificate_has_witness_min(const ecg_certificate* cert) {
  return cert != nullptr && cert->impl.witness_count_min.has_value() ? 1 : 0;
}

uint64_t ecg_certificate_witness_min(const ecg_certificate* cert) {
  if (cert == nullptr || !cert->impl.witness_count_min.has_value()) return 0;
  return *cert->impl.witness_count_min;
}

int ecg_certificate_has_counterexample(const ecg_certificate* cert) {
  return cert != nullptr && cert->impl.counterexample.has_value() ? 1 : 0;
}

ecg_status ecg_certificate_counterexample_sizes(const ecg_certificate* cert,
                                                size_t* a_len, size_t* b_len) {
  if (cert == nullptr || a_len == nullptr || b_len == nullptr)
    return bad_argument("null pointer argument");
  if (!cert->impl.counterexample.has_value())
    return bad_argument("certificate has no counterexample");
  *a_len = cert->impl.counterexample->a.size();
  *b_len = cert->impl.counterexample->b.size();
  return ECG_OK;
}

ecg_status ecg_certificate_counterexample(const ecg_certificate* cert,
                                          uint64_t* a_buf, size_t a_len,
                                          uint64_t* b_buf, size_t b_len) {
  if (cert == nullptr) return bad_argument("certificate pointer is null");
  if (!cert->impl.counterexample.has_value())
    return bad_argument("certificate has no counterexample");
  const ecgraph::EcCounterexample& cex = *cert->impl.counterexample;
  if (a_len < cex.a.size() || b_len < cex.b.size())
    return bad_argument("buffer too small");
  if (!cex.a.empty() && a_buf == nullptr)
    return bad_argument("null pointer argument");
  if (!cex.b.empty() && b_buf == nullptr)
    return bad_argument("null pointer argument");
  std::copy(cex.a.begin(), cex.a.end(), a_buf);
  std::copy(cex.b.begin(), cex.b.end(), b_buf);
  return ECG_OK;
}

ecg_status ecg_spectrum_closed_form(uint64_t q, uint32_t e,
                                    ecg_spectrum** out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  *out = nullptr;
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    *out = new ecg_spectrum{ecgraph::closed_form_spectrum(params)};
  });
}

void ecg_spectrum_free(ecg_spectrum* spec) { delete spec; }

uint64_t ecg_spectrum_class_count(const ecg_spectrum* spec) {
  return spec == nullptr ? 0 : spec->impl.eigenvalues.size();
}

ecg_status ecg_spectrum_entry(const ecg_spectrum* spec, uint64_t index,
                              int64_t* a_coeff, int64_t* b_coeff,
                              uint64_t* multiplicity, double* value) {
  if (spec == nullptr) return bad_argument("spectrum pointer is null");
  if (index >= spec->impl.eigenvalues.size())
    return bad_argument("eigenvalue class index out of range");
  const ecgraph::ExactEigenvalue& ev = spec->impl.eigenvalues[index];
  if (a_coeff != nullptr) *a_coeff = ev.a_coeff;
  if (b_coeff != nullptr) *b_coeff = ev.b_coeff;
  if (multiplicity != nullptr) *multiplicity = ev.multiplicity;
  if (value != nullptr) *value = ecgraph::eigenvalue_value(ev, spec->impl.params);
  return ECG_OK;
}

double ecg_spectrum_lambda(const ecg_spectrum* spec) {
  return spec == nullptr ? 0.0 : spec->impl.lambda;
}

int ecg_spectrum_check_identities(const ecg_spectrum* spec) {
  return spec != nullptr && ecgraph::check_spectrum_identities(spec->impl) ? 1
                                                                           : 0;
}

ecg_status ecg_eigenvalue_for_frequency(uint64_t q, uint32_t e,
                                        uint64_t frequency, int64_t* a_coeff,
                                        int64_t* b_coeff,
                                        uint64_t* multiplicity) {
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    ecgraph::ExactEigenvalue ev =
        ecgraph::eigenvalue_for_frequency(frequency, params);
    if (a_coeff != nullptr) *a_coeff = ev.a_coeff;
    if (b_coeff != nullptr) *b_coeff = ev.b_coeff;
    if (multiplicity != nullptr) *multiplicity = ev.multiplicity;
  });
}

ecg_status ecg_character_sum_eigenvalue(uint64_t q, uint32_t e,
                                        uint64_t frequency, double* value,
                                        double* imag_abs) {
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    std::complex<double> z =
        ecgraph::character_sum_eigenvalue(params, frequency);
    if (value != nullptr) *value = z.real();
    if (imag_abs != nullptr) *imag_abs = std::abs(z.imag());
  });
}

ecg_status ecg_numerical_spectrum(const ecg_graph* g, uint64_t max_order,
                                  double* buf, size_t buf_len) {
  if (g == nullptr || buf == nullptr)
    return bad_argument("graph or buffer pointer is null");
  if (buf_len < g->impl.order()) return bad_argument("buffer too small");
  return wrap([&] {
    std::vector<double> values =
        ecgraph::numerical_spectrum(g->impl, max_order);
    std::copy(values.begin(), values.end(), buf);
  });
}

ecg_status ecg_gauss_sum(uint64_t b, uint64_t q, uint32_t k, double* real_part,
                         double* imag_part) {
  return wrap([&] {
    std::complex<double> z = ecgraph::gauss_sum(b, q, k);
    if (real_part != nullptr) *real_part = z.real();
    if (imag_part != nullptr) *imag_part = z.imag();
  });
}

ecg_status ecg_jacobi_symbol(int64_t a, uint64_t m, int* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] { *out = ecgraph::jacobi_symbol(a, m); });
}

ecg_status ecg_edges_between(const ecg_graph* g, const uint64_t* u,
                             size_t u_len, const uint64_t* w, size_t w_len,
                             uint64_t* out) {
  if (g == nullptr || out == nullptr || !array_ok(u, u_len) ||
      !array_ok(w, w_len))
    return bad_argument("null pointer argument");
  return wrap([&] {
    *out = ecgraph::edges_between(g->impl, to_vector(u, u_len),
                                  to_vector(w, w_len));
  });
}

ecg_status ecg_mixing_scan(const ecg_graph* g, uint64_t samples, uint64_t seed,
                           ecg_mixing_result* out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  return wrap([&] {
    ecgraph::MixingScanResult r = ecgraph::mixing_scan(g->impl, samples, seed);
    out->samples = r.samples.size();
    out->max_normalized = r.max_normalized;
    out->lambda = r.lambda;
    out->ok = r.ok ? 1 : 0;
    out->worst_u_size = r.worst.stats.u_size;
    out->worst_w_size = r.worst.stats.w_size;
    out->worst_edges = r.worst.stats.e_uw;
    out->worst_expected = r.worst.stats.expected;
  });
}

ecg_status ecg_jumbledness_alpha(const ecg_graph* g, double p,
                                 uint64_t samples, uint64_t seed,
                                 double* alpha, int* exhaustive) {
  if (g == nullptr || alpha == nullptr)
    return bad_argument("graph or out pointer is null");
  return wrap([&] {
    ecgraph::JumblednessReport r =
        ecgraph::jumbledness_alpha(g->impl, p, samples, seed);
    *alpha = r.alpha;
    if (exhaustive != nullptr) *exhaustive = r.exhaustive ? 1 : 0;
  });
}

ecg_status ecg_cheeger_spectral_lower(uint64_t q, uint32_t e, double* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    *out = ecgraph::cheeger_spectral_lower(ecgraph::closed_form_spectrum(params));
  });
}

ecg_status ecg_cheeger_bruteforce(const ecg_graph* g, double* out) {
  if (g == nullptr || out == nullptr)
    return bad_argument("graph or out pointer is null");
  return wrap([&] { *out = ecgraph::cheeger_bruteforce(g->impl); });
}

ecg_status ecg_quasirandom_stats(uint64_t q, uint32_t e,
                                 ecg_quasirandom* out) {
  if (out == nullptr) return bad_argument("out pointer is null");
  return wrap([&] {
    ecgraph::GraphParams params = ecgraph::GraphParams::create(q, e);
    ecgraph::QuasirandomStats st = ecgraph::quasirandom_stats(params);
    out->edge_count = st.edge_count;
    out->lambda1_over_pn = st.lambda1_over_pn;
    out->lambda2_over_n = st.lambda2_over_n;
  });
}

ecg_status ecg_family_trend(uint32_t e, const uint64_t* qs, size_t q_count,
                            uint64_t* orders, uint64_t* degrees,
                            double* lambdas, double* ratios,
                            double* edge_probs, double* epsilon) {
  if (!array_ok(qs, q_count) || q_count == 0)
    return bad_argument("prime list is empty or null");
  return wrap([&] {
    ecgraph::FamilyTrendReport r =
        ecgraph::family_trend(e, to_vector(qs, q_count));
    for (size_t i = 0; i < r.instances.size(); ++i) {
      const ecgraph::TrendInstance& inst = r.instances[i];
      if (orders != nullptr) orders[i] = inst.params.n;
      if (degrees != nullptr) degrees[i] = inst.params.d;
      if (lambdas != nullptr) lambdas[i] = inst.lambda;
      if (ratios != nullptr) ratios[i] = inst.ratio;
      if (edge_probs != nullptr) edge_probs[i] = inst.edge_probability;
    }
    if (epsilon != nullptr) *epsilon = r.epsilon;
  });
}

}  // extern "C"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "ecgraph.h"

namespace {

struct GraphGuard {
  ecg_graph* g = nullptr;
  ~GraphGuard() { ecg_graph_free(g); }
};

struct SpectrumGuard {
  ecg_spectrum* s = nullptr;
  ~SpectrumGuard() { ecg_spectrum_free(s); }
};

struct CertGuard {
  ecg_certificate* c = nullptr;
  ~CertGuard() { ecg_certificate_free(c); }
};

}  // namespace

TEST_CASE("status messages and thread-local error detail") {
  for (int s = ECG_OK; s <= ECG_ERR_INTERNAL; ++s) {
    const char* msg = ecg_status_message(static_cast<ecg_status>(s));
    REQUIRE(msg != nullptr);
    CHECK(std::strlen(msg) > 0);
  }
  ecg_params p;
  CHECK(ecg_params_create(7, 1, &p) == ECG_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(ecg_last_error()) > 0);
}

TEST_CASE("parameter creation") {
  ecg_params p;
  REQUIRE(ecg_params_create(5, 3, &p) == ECG_OK);
  CHECK(p.q == 5);
  CHECK(p.e == 3);
  CHECK(p.n == 125);
  CHECK(p.d == 50);
  CHECK(ecg_params_create(5, 3, nullptr) == ECG_ERR_INVALID_ARGUMENT);
  CHECK(ecg_params_create(5, 2, &p) == ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph lifecycle and queries") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(13, 1, &gg.g) == ECG_OK);
  CHECK(ecg_graph_order(gg.g) == 13);
  CHECK(ecg_graph_degree(gg.g) == 6);
  CHECK(ecg_graph_edge_count(gg.g) == 39);

  ecg_params p;
  REQUIRE(ecg_graph_params(gg.g, &p) == ECG_OK);
  CHECK(p.n == 13);

  int adj = -1;
  REQUIRE(ecg_graph_is_adjacent(gg.g, 0, 1, &adj) == ECG_OK);
  CHECK(adj == 1);
  REQUIRE(ecg_graph_is_adjacent(gg.g, 0, 2, &adj) == ECG_OK);
  CHECK(adj == 0);
  CHECK(ecg_graph_is_adjacent(gg.g, 0, 13, &adj) == ECG_ERR_INVALID_ARGUMENT);

  int chi = 42;
  REQUIRE(ecg_graph_character(gg.g, 3, &chi) == ECG_OK);
  CHECK(chi == 1);
  REQUIRE(ecg_graph_character(gg.g, 2, &chi) == ECG_OK);
  CHECK(chi == -1);
  REQUIRE(ecg_graph_character(gg.g, 0, &chi) == ECG_OK);
  CHECK(chi == 0);

  REQUIRE(ecg_graph_connection_set_size(gg.g) == 6);
  std::vector<uint64_t> conn(6);
  REQUIRE(ecg_graph_connection_set(gg.g, conn.data(), conn.size()) == ECG_OK);
  CHECK(conn == std::vector<uint64_t>({1, 3, 4, 9, 10, 12}));
  CHECK(ecg_graph_connection_set(gg.g, conn.data(), 3) ==
        ECG_ERR_INVALID_ARGUMENT);

  int regular = 0, symmetric = 0, loop_free = 0;
  REQUIRE(ecg_graph_validate(gg.g, &regular, &symmetric, &loop_free) == ECG_OK);
  CHECK(regular == 1);
  CHECK(symmetric == 1);
  CHECK(loop_free == 1);
  REQUIRE(ecg_graph_validate(gg.g, nullptr, nullptr, nullptr) == ECG_OK);

  CHECK(ecg_graph_build(7, 1, &gg.g) == ECG_ERR_INVALID_ARGUMENT);
  ecg_graph* capped = nullptr;
  CHECK(ecg_graph_build(5, 7, &capped) == ECG_ERR_CAP_EXCEEDED);
  CHECK(capped == nullptr);
  CHECK(ecg_graph_build(5, 1, nullptr) == ECG_ERR_INVALID_ARGUMENT);

  // Null-object accessors degrade to zero rather than crash.
  CHECK(ecg_graph_order(nullptr) == 0);
  CHECK(ecg_graph_degree(nullptr) == 0);
}

TEST_CASE("edge list export") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(5, 1, &gg.g) == ECG_OK);
  std::string path = "capi_edges.txt";
  REQUIRE(ecg_graph_export_edge_list(gg.g, path.c_str()) == ECG_OK);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  std::remove(path.c_str());
  CHECK(ecg_graph_export_edge_list(gg.g, "/nonexistent-dir/edges.txt") ==
        ECG_ERR_IO);
  CHECK(ecg_graph_export_edge_list(gg.g, nullptr) ==
        ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("extender and character sum machinery") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(5, 3, &gg.g) == ECG_OK);

  uint64_t a0[] = {0};
  int64_t z = -2;
  REQUIRE(ecg_extender(gg.g, a0, 1, nullptr, 0, &z) == ECG_OK);
  CHECK(z >= 0);

  // Frozen case: f = 0, extenders exist but all collide with B mod q.
  uint64_t b[] = {8, 24, 106};
  REQUIRE(ecg_extender(gg.g, nullptr, 0, b, 3, &z) == ECG_OK);
  CHECK(z >= 0);
  REQUIRE(ecg_extender_avoiding_forbidden(gg.g, nullptr, 0, b, 3, &z) ==
          ECG_OK);
  CHECK(z == -1);

  uint64_t forbidden = 0;
  REQUIRE(ecg_forbidden_set_size(gg.g, a0, 1, b, 3, &forbidden) == ECG_OK);
  CHECK(forbidden == 100);  // residues {0, 3, 4, 1}: 4 classes of 25

  ecg_char_sums_report cs;
  REQUIRE(ecg_char_sums(gg.g, a0, 1, nullptr, 0, &cs) == ECG_OK);
  CHECK(cs.f == 100);
  CHECK(cs.g == 101);
  CHECK(cs.h == 1);
  CHECK(cs.t == 1);
  CHECK(cs.z_forbidden_size == 25);
  CHECK(cs.h_upper_bound == 1);
  CHECK(cs.g_lower_bound == doctest::Approx(77.0).epsilon(1e-12));

  CHECK(ecg_char_sums(gg.g, nullptr, 0, nullptr, 0, &cs) ==
        ECG_ERR_INVALID_ARGUMENT);
  CHECK(ecg_extender(gg.g, nullptr, 1, nullptr, 0, &z) ==
        ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("weil bound verification") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(5, 3, &gg.g) == ECG_OK);
  uint64_t collide[] = {0, 5};
  ecg_weil_report wr;
  REQUIRE(ecg_verify_weil_bound(gg.g, collide, 2, &wr) == ECG_OK);
  CHECK(wr.sum == 100);
  CHECK(wr.ok == 0);
  CHECK(wr.reduced_distinct == 0);
  CHECK(wr.k == 2);

  uint64_t distinct[] = {1, 7};
  REQUIRE(ecg_verify_weil_bound(gg.g, distinct, 2, &wr) == ECG_OK);
  CHECK(wr.reduced_distinct == 1);
  CHECK(wr.ok == 1);
  CHECK(wr.reduction_ok == 1);
  CHECK(wr.sum == wr.reduced_sum_scaled);
  CHECK(std::fabs(static_cast<double>(wr.sum)) <= wr.bound);

  CHECK(ecg_verify_weil_bound(gg.g, nullptr, 1, &wr) ==
        ECG_ERR_INVALID_ARGUMENT);
  CHECK(ecg_verify_weil_bound(gg.g, distinct, 0, &wr) ==
        ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sufficient condition and least prime") {
  int holds = -1;
  REQUIRE(ecg_sufficient_condition(13, 3, 2, &holds) == ECG_OK);
  CHECK(holds == 1);
  REQUIRE(ecg_sufficient_condition(5, 3, 2, &holds) == ECG_OK);
  CHECK(holds == 0);
  CHECK(ecg_sufficient_condition(7, 1, 2, &holds) ==
        ECG_ERR_INVALID_ARGUMENT);

  uint64_t q = 0;
  REQUIRE(ecg_find_least_q1(2, 3, &q) == ECG_OK);
  CHECK(q == 13);
  REQUIRE(ecg_find_least_q1(4, 3, &q) == ECG_OK);
  CHECK(q == 409);
  CHECK(ecg_find_least_q1(2, 3, nullptr) == ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("exhaustive certificates through the C interface") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(13, 1, &gg.g) == ECG_OK);
  CertGuard verified;
  REQUIRE(ecg_brute_force_ec(gg.g, 2, nullptr, &verified.c) == ECG_OK);
  CHECK(ecg_certificate_verified(verified.c) == 1);
  CHECK(ecg_certificate_method(verified.c) == ECG_METHOD_EXHAUSTIVE);
  CHECK(ecg_certificate_t(verified.c) == 2);
  CHECK(ecg_certificate_search_space(verified.c) == 312);
  CHECK(ecg_certificate_distinct_residues(verified.c) == 0);
  CHECK(ecg_certificate_has_witness_min(verified.c) == 1);
  CHECK(ecg_certificate_witness_min(verified.c) == 2);
  CHECK(ecg_certificate_has_counterexample(verified.c) == 0);

  GraphGuard g5;
  REQUIRE(ecg_graph_build(5, 1, &g5.g) == ECG_OK);
  CertGuard refuted;
  REQUIRE(ecg_brute_force_ec(g5.g, 2, nullptr, &refuted.c) == ECG_OK);
  CHECK(ecg_certificate_verified(refuted.c) == 0);
  CHECK(ecg_certificate_has_counterexample(refuted.c) == 1);
  size_t a_len = 0, b_len = 0;
  REQUIRE(ecg_certificate_counterexample_sizes(refuted.c, &a_len, &b_len) ==
          ECG_OK);
  CHECK(a_len == 2);
  CHECK(b_len == 0);
  std::vector<uint64_t> a(a_len);
  REQUIRE(ecg_certificate_counterexample(refuted.c, a.data(), a_len, nullptr,
                                         0) == ECG_OK);
  CHECK(a == std::vector<uint64_t>({0, 1}));
  CHECK(ecg_certificate_counterexample(verified.c, a.data(), a_len, nullptr,
                                       0) == ECG_ERR_INVALID_ARGUMENT);

  // Budget refusal and restricted mode.
  GraphGuard cube;
  REQUIRE(ecg_graph_build(13, 3, &cube.g) == ECG_OK);
  ecg_ec_options tight = {};
  tight.budget = 10;
  ecg_certificate* blocked = nullptr;
  CHECK(ecg_brute_force_ec(cube.g, 2, &tight, &blocked) ==
        ECG_ERR_BUDGET_EXCEEDED);
  CHECK(blocked == nullptr);

  ecg_ec_options restricted = {};
  restricted.distinct_residues = 1;
  CertGuard rcert;
  REQUIRE(ecg_brute_force_ec(cube.g, 2, &restricted, &rcert.c) == ECG_OK);
  CHECK(ecg_certificate_verified(rcert.c) == 1);
  CHECK(ecg_certificate_distinct_residues(rcert.c) == 1);
  CHECK(ecg_certificate_witness_min(rcert.c) == 338);

  CertGuard plain;
  REQUIRE(ecg_brute_force_ec(cube.g, 2, nullptr, &plain.c) == ECG_OK);
  CHECK(ecg_certificate_verified(plain.c) == 0);

  CertGuard sufficient;
  REQUIRE(ecg_certify_sufficient(13, 1, 2, &sufficient.c) == ECG_OK);
  CHECK(ecg_certificate_verified(sufficient.c) == 1);
  CHECK(ecg_certificate_method(sufficient.c) ==
        ECG_METHOD_SUFFICIENT_CONDITION);
  CHECK(ecg_certificate_has_witness_min(sufficient.c) == 0);
}

TEST_CASE("spectrum through the C interface") {
  SpectrumGuard sg;
  REQUIRE(ecg_spectrum_closed_form(5, 3, &sg.s) == ECG_OK);
  REQUIRE(ecg_spectrum_class_count(sg.s) == 4);
  int64_t a = 0, b = 0;
  uint64_t mult = 0;
  double value = 0.0;
  REQUIRE(ecg_spectrum_entry(sg.s, 0, &a, &b, &mult, &value) == ECG_OK);
  CHECK(a == 100);
  CHECK(b == 0);
  CHECK(mult == 1);
  CHECK(value == 50.0);
  REQUIRE(ecg_spectrum_entry(sg.s, 3, &a, &b, &mult, &value) == ECG_OK);
  CHECK(a == -25);
  CHECK(b == -25);
  CHECK(mult == 2);
  CHECK(value == doctest::Approx(-40.45084971874737).epsilon(1e-12));
  CHECK(ecg_spectrum_entry(sg.s, 4, &a, &b, &mult, &value) ==
        ECG_ERR_INVALID_ARGUMENT);
  REQUIRE(ecg_spectrum_entry(sg.s, 1, nullptr, nullptr, nullptr, nullptr) ==
          ECG_OK);
  CHECK(ecg_spectrum_lambda(sg.s) ==
        doctest::Approx(40.45084971874737).epsilon(1e-12));
  CHECK(ecg_spectrum_check_identities(sg.s) == 1);

  REQUIRE(ecg_eigenvalue_for_frequency(5, 3, 50, &a, &b, &mult) == ECG_OK);
  CHECK(a == -25);
  CHECK(b == -25);
  CHECK(mult == 2);

  double real = 0.0, imag = 1.0;
  REQUIRE(ecg_character_sum_eigenvalue(5, 3, 25, &real, &imag) == ECG_OK);
  CHECK(real == doctest::Approx(15.45084971874737).epsilon(1e-8));
  CHECK(imag <= 1e-9);

  GraphGuard gg;
  REQUIRE(ecg_graph_build(5, 1, &gg.g) == ECG_OK);
  std::vector<double> eig(5);
  REQUIRE(ecg_numerical_spectrum(gg.g, 0, eig.data(), eig.size()) == ECG_OK);
  CHECK(eig[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(eig[4] == doctest::Approx(-1.6180339887498949).epsilon(1e-10));
  CHECK(ecg_numerical_spectrum(gg.g, 0, eig.data(), 3) ==
        ECG_ERR_INVALID_ARGUMENT);

  double re = 0.0, im = 0.0;
  REQUIRE(ecg_gauss_sum(1, 5, 1, &re, &im) == ECG_OK);
  CHECK(re == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(std::fabs(im) <= 1e-9);
  CHECK(ecg_gauss_sum(5, 5, 1, &re, &im) == ECG_ERR_INVALID_ARGUMENT);

  int jac = 0;
  REQUIRE(ecg_jacobi_symbol(2, 125, &jac) == ECG_OK);
  CHECK(jac == -1);
  CHECK(ecg_jacobi_symbol(2, 8, &jac) == ECG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pseudo-randomness through the C interface") {
  GraphGuard gg;
  REQUIRE(ecg_graph_build(5, 1, &gg.g) == ECG_OK);
  uint64_t u[] = {0};
  uint64_t w[] = {1, 2};
  uint64_t count = 0;
  REQUIRE(ecg_edges_between(gg.g, u, 1, w, 2, &count) == ECG_OK);
  CHECK(count == 1);
  CHECK(ecg_edges_between(gg.g, nullptr, 1, w, 2, &count) ==
        ECG_ERR_INVALID_ARGUMENT);

  GraphGuard big;
  REQUIRE(ecg_graph_build(5, 3, &big.g) == ECG_OK);
  ecg_mixing_result mix1, mix2;
  REQUIRE(ecg_mixing_scan(big.g, 200, 0, &mix1) == ECG_OK);
  REQUIRE(ecg_mixing_scan(big.g, 200, 0, &mix2) == ECG_OK);
  CHECK(mix1.samples == 200);
  CHECK(mix1.ok == 1);
  CHECK(mix1.max_normalized <= mix1.lambda);
  CHECK(mix1.max_normalized == mix2.max_normalized);
  CHECK(mix1.worst_u_size == mix2.worst_u_size);
  CHECK(mix1.worst_edges == mix2.worst_edges);

  double alpha = 0.0;
  int exhaustive = 0;
  REQUIRE(ecg_jumbledness_alpha(gg.g, 0.4, 0, 0, &alpha, &exhaustive) ==
          ECG_OK);
  CHECK(exhaustive == 1);
  CHECK(alpha == doctest::Approx(0.8485281374238569).epsilon(1e-12));
  CHECK(ecg_jumbledness_alpha(gg.g, 1.5, 0, 0, &alpha, &exhaustive) ==
        ECG_ERR_INVALID_ARGUMENT);

  double lower = 0.0;
  REQUIRE(ecg_cheeger_spectral_lower(13, 1, &lower) == ECG_OK);
  CHECK(lower == doctest::Approx(2.3486121811340026).epsilon(1e-12));
  double exact = 0.0;
  REQUIRE(ecg_cheeger_bruteforce(gg.g, &exact) == ECG_OK);
  CHECK(exact == 1.0);
  CHECK(ecg_cheeger_bruteforce(big.g, &exact) == ECG_ERR_CAP_EXCEEDED);

  ecg_quasirandom quasi;
  REQUIRE(ecg_quasirandom_stats(5, 3, &quasi) == ECG_OK);
  CHECK(quasi.edge_count == 3125);
  CHECK(quasi.lambda1_over_pn == 1.0);
  CHECK(quasi.lambda2_over_n ==
        doctest::Approx(0.12360679774997897).epsilon(1e-12));

  uint64_t qs[] = {5, 13, 17};
  uint64_t orders[3], degrees[3];
  double lambdas[3], ratios[3], probs[3], epsilon = -1.0;
  REQUIRE(ecg_family_trend(3, qs, 3, orders, degrees, lambdas, ratios, probs,
                           &epsilon) == ECG_OK);
  CHECK(epsilon == 1.0);
  CHECK(orders[0] == 125);
  CHECK(degrees[0] == 50);
  CHECK(lambdas[0] == doctest::Approx(40.45084971874737).epsilon(1e-12));
  CHECK(ratios[0] == doctest::Approx(5.7206140281768425).epsilon(1e-12));
  CHECK(ratios[1] == doctest::Approx(12.221354826536944).epsilon(1e-12));
  CHECK(probs[0] == doctest::Approx(0.4).epsilon(1e-14));
  REQUIRE(ecg_family_trend(3, qs, 3, nullptr, nullptr, nullptr, nullptr,
                           nullptr, nullptr) == ECG_OK);
  CHECK(ecg_family_trend(3, qs, 1, nullptr, nullptr, nullptr, nullptr,
                         nullptr, nullptr) == ECG_ERR_INVALID_ARGUMENT);
  CHECK(ecg_family_trend(3, nullptr, 3, nullptr, nullptr, nullptr, nullptr,
                         nullptr, nullptr) == ECG_ERR_INVALID_ARGUMENT);
}

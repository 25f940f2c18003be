#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "nbscp/scp_approx.hpp"

using namespace nbscp;
using Catch::Approx;

TEST_CASE("two-bucket approximation of the informative pair is exact here") {
  const auto m = testutil::informative_pair_model();
  const auto t = log_terms(m, TestPoint{{0, 0}});
  const auto r = scp_approx(t, uniform_noise(2, 0.1), 2, false);
  CHECK(r.value == Approx(0.900).margin(1e-12));
  CHECK(r.method == ScpMethod::approx);
  CHECK(r.meta.k == 2);
}

TEST_CASE("silent channels approximate to certainty") {
  Rng rng(12);
  for (std::size_t k : {2u, 5u, 50u}) {
    const auto inst = testutil::random_instance(rng, 6, 0.1, 0.3, false);
    CHECK(scp_approx(inst.terms, uniform_noise(6, 0.0), k).value == 1.0);
  }
}

// The module's primary correctness check: the generating-function tail
// equals a brute-force enumeration over the bucket-midpoint values.
TEST_CASE("approximation equals brute force over quantized values") {
  Rng rng(246);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(11));
    const auto inst = testutil::random_instance(rng, n, 0.0, 0.45, rng.bernoulli(0.3),
                                                rng.bernoulli(0.5));
    const auto k = 2 + static_cast<std::size_t>(rng.below(49));
    const bool shift = rng.bernoulli(0.5);
    const auto scheme = build_quantization(inst.terms.d, inst.noise, k, inst.terms.target, shift);
    const double oracle = testutil::brute_force_quantized_scp(inst.terms, inst.noise, scheme);
    const auto mult = rng.bernoulli(0.5) ? MultStrategy::direct : MultStrategy::transform;
    CHECK(scp_approx(inst.terms, inst.noise, k, shift, mult).value ==
          Approx(oracle).margin(1e-12));
  }
}

TEST_CASE("degenerate instances bypass quantization exactly") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    LogTerms t;
    const auto n = 1 + static_cast<std::size_t>(rng.below(8));
    const double d = rng.uniform(-2.0, 2.0);
    t.a.assign(n, 0.0);
    t.d.assign(n, d);
    t.b = t.d;
    t.target = rng.uniform(-2.0, 2.0) * static_cast<double>(n);
    t.base_class = t.target <= 0 ? 0 : 1;
    NoiseSpec noise;
    noise.eps.resize(n);
    for (auto& e : noise.eps) e = rng.uniform(0.0, 0.45);
    const double exact = scp_exact(t, noise).value;
    CHECK(scp_approx(t, noise, 50, true).value == Approx(exact).margin(1e-13));
    CHECK(scp_hybrid(t, noise, 50, true, 0).value == Approx(exact).margin(1e-13));
  }
}

TEST_CASE("fine quantization with clearance reproduces the exact SCP") {
  Rng rng(555);
  int usable = 0;
  for (int trial = 0; trial < 40 && usable < 12; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(7));
    const auto inst = testutil::random_instance(rng, n, 0.02, 0.4, false);
    const std::size_t k = 2000;
    const auto scheme = build_quantization(inst.terms.d, inst.noise, k, inst.terms.target, false);
    if (scheme.degenerate) continue;
    // require every subset sum to clear the target by n*w/2
    const double margin = static_cast<double>(n) * scheme.width / 2.0;
    bool clear = true;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << n) && clear; ++code) {
      double sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((code >> i) & 1) sum += inst.terms.d[i];
      if (std::abs(sum - inst.terms.target) < margin) clear = false;
    }
    if (!clear) continue;
    ++usable;
    const double exact = scp_exact(inst.terms, inst.noise).value;
    CHECK(scp_approx(inst.terms, inst.noise, k, false).value == Approx(exact).margin(1e-12));
  }
  CHECK(usable >= 12);
}

TEST_CASE("hybrid at full order collapses to the exact SCP") {
  Rng rng(8080);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(rng.below(10));
    const auto inst = testutil::random_instance(rng, n, 0.0, 0.45, false, rng.bernoulli(0.5));
    const double exact = scp_exact(inst.terms, inst.noise).value;
    CHECK(scp_hybrid(inst.terms, inst.noise, 5, true, n).value == Approx(exact).margin(1e-12));
  }
}

TEST_CASE("hybrid at order zero collapses to the plain approximation") {
  Rng rng(9090);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(10));
    const auto inst = testutil::random_instance(rng, n, 0.01, 0.45, false, rng.bernoulli(0.5));
    const auto k = 2 + static_cast<std::size_t>(rng.below(20));
    for (bool shift : {false, true})
      CHECK(scp_hybrid(inst.terms, inst.noise, k, shift, 0).value ==
            Approx(scp_approx(inst.terms, inst.noise, k, shift).value).margin(1e-12));
  }
}

TEST_CASE("hybrid rejects an order beyond the feature count") {
  Rng rng(3);
  const auto inst = testutil::random_instance(rng, 4, 0.1, 0.2, false);
  CHECK_THROWS_AS(scp_hybrid(inst.terms, inst.noise, 5, true, 5), validation_error);
}

// With the shifted grid every single-flip decision matches the exact one,
// so approximation errors must come from flip sets of two or more.
TEST_CASE("shift aligns every single-flip decision with the exact rule") {
  Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(12));
    const auto inst = testutil::random_instance(rng, n, 0.01, 0.3, true, true);
    const auto scheme = build_quantization(inst.terms.d, inst.noise, 10, inst.terms.target, true);
    if (scheme.degenerate) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const bool exact_kept = classification_preserved(inst.terms.d[j], inst.terms.target,
                                                       inst.terms.base_class);
      const bool quant_kept = classification_preserved(scheme.midpoint(scheme.bucket_of[j]),
                                                       inst.terms.target, inst.terms.base_class);
      CHECK(exact_kept == quant_kept);
    }
  }
}

TEST_CASE("shifted error shrinks quadratically in the channel noise") {
  Rng rng(616);
  const std::vector<double> eps_grid{1e-1, 1e-2, 1e-3};
  std::vector<double> mean_err(eps_grid.size(), 0.0);
  const int instances = 25;
  std::vector<testutil::RandomInstance> fixed;
  for (int i = 0; i < instances; ++i)
    fixed.push_back(testutil::random_instance(rng, 10, 0.0, 0.0, true, true));
  for (std::size_t e = 0; e < eps_grid.size(); ++e) {
    for (const auto& inst : fixed) {
      const auto noise = uniform_noise(10, eps_grid[e]);
      const double exact = scp_exact(inst.terms, noise).value;
      const double approx = scp_approx(inst.terms, noise, 12, true).value;
      mean_err[e] += std::abs(approx - exact) / instances;
    }
  }
  // least-squares slope of log err against log eps
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double x = std::log10(eps_grid[i]);
    const double y = std::log10(std::max(mean_err[i], 1e-18));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  CHECK(slope >= 1.5);
}

#pragma once

// Bernoulli naive Bayes over binary features: training, classification,
// persistence, and the per-point log-domain terms that drive every
// same-classification-probability computation.

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/format.hpp"

namespace nbscp {

// One row of binary features.
struct TestPoint {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
};

// Labeled binary dataset. feature_names is carried so CSV round trips keep
// column order; it never affects computation and may be empty.
struct Dataset {
  std::vector<TestPoint> points;
  std::vector<std::uint8_t> labels;
  std::vector<std::string> feature_names;

  std::size_t size() const { return points.size(); }
  std::size_t feature_count() const {
    return points.empty() ? feature_names.size() : points.front().size();
  }
};

// Two-class model: prior0 = p(C=0), theta0[i] = p(X_i=1 | C=0),
// theta1[i] = p(X_i=1 | C=1). Every probability is kept strictly inside
// (0, 1) so all logarithms below are finite.
struct NaiveBayesModel {
  std::size_t n = 0;
  double prior0 = 0.5;
  std::vector<double> theta0;
  std::vector<double> theta1;
};

inline void validate_model(const NaiveBayesModel& m) {
  if (m.n == 0) throw validation_error("model: feature count must be positive");
  if (m.theta0.size() != m.n || m.theta1.size() != m.n)
    throw validation_error("model: theta vectors must both have length n");
  if (!(m.prior0 > 0.0 && m.prior0 < 1.0))
    throw validation_error("model: prior0 must lie strictly inside (0,1)");
  for (const auto* v : {&m.theta0, &m.theta1})
    for (double p : *v)
      if (!(p > 0.0 && p < 1.0))
        throw validation_error("model: conditional probabilities must lie strictly inside (0,1)");
}

inline void check_point(const NaiveBayesModel& m, const TestPoint& x) {
  if (x.size() != m.n) throw validation_error("point: dimension mismatch with model");
  for (auto b : x.bits)
    if (b > 1) throw validation_error("point: features must be 0/1");
}

// Per-point log-domain quantities. For feature j of a fixed point, a[j] is
// the log likelihood ratio of the observed bit, b[j] the ratio after a
// flip, and d[j] = b[j] - a[j] the change one flip adds to the decision
// value. target is the negated noiseless decision value: a set of flips
// keeps a class-0 decision iff its d-sum reaches target (ties resolve to
// class 0), and keeps a class-1 decision iff its d-sum stays strictly
// below target.
struct LogTerms {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> d;
  double target = 0.0;
  int base_class = 0;

  std::size_t size() const { return d.size(); }
};

inline void validate_dataset(const Dataset& data) {
  if (data.points.empty()) throw validation_error("dataset: no rows");
  if (data.labels.size() != data.points.size())
    throw validation_error("dataset: labels and points differ in length");
  const std::size_t n = data.points.front().size();
  if (n == 0) throw validation_error("dataset: no feature columns");
  for (const auto& p : data.points) {
    if (p.size() != n) throw validation_error("dataset: inconsistent feature lengths");
    for (auto b : p.bits)
      if (b > 1) throw validation_error("dataset: features must be 0/1");
  }
  for (auto l : data.labels)
    if (l > 1) throw validation_error("dataset: labels must be 0/1");
}

// Additive (Laplace) estimation. smoothing > 0 guarantees the open-interval
// invariant; smoothing = 0 is accepted only when no count is degenerate.
inline NaiveBayesModel train(const Dataset& data, double smoothing = 1.0) {
  validate_dataset(data);
  if (!(smoothing >= 0.0))
    throw validation_error("train: smoothing must be a non-negative real");

  const std::size_t n = data.points.front().size();
  const std::size_t rows = data.points.size();
  std::size_t count0 = 0;
  std::vector<std::size_t> ones0(n, 0), ones1(n, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    auto& ones = data.labels[r] == 0 ? ones0 : ones1;
    if (data.labels[r] == 0) ++count0;
    for (std::size_t i = 0; i < n; ++i) ones[i] += data.points[r].bits[i];
  }
  const std::size_t count1 = rows - count0;

  if (smoothing == 0.0) {
    if (count0 == 0 || count1 == 0)
      throw validation_error("train: smoothing 0 requires both labels present");
    for (std::size_t i = 0; i < n; ++i)
      if (ones0[i] == 0 || ones0[i] == count0 || ones1[i] == 0 || ones1[i] == count1)
        throw validation_error(
            "train: smoothing 0 with a degenerate feature count would produce a 0/1 probability");
  }

  NaiveBayesModel m;
  m.n = n;
  m.prior0 = (static_cast<double>(count0) + smoothing) / (static_cast<double>(rows) + 2.0 * smoothing);
  m.theta0.resize(n);
  m.theta1.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.theta0[i] = (static_cast<double>(ones0[i]) + smoothing) / (static_cast<double>(count0) + 2.0 * smoothing);
    m.theta1[i] = (static_cast<double>(ones1[i]) + smoothing) / (static_cast<double>(count1) + 2.0 * smoothing);
  }
  validate_model(m);
  return m;
}

// Noiseless decision value: log prior odds plus per-feature log likelihood
// ratios of the observed bits.
inline double log_odds(const NaiveBayesModel& m, const TestPoint& x) {
  validate_model(m);
  check_point(m, x);
  double sum = std::log(m.prior0 / (1.0 - m.prior0));
  for (std::size_t i = 0; i < m.n; ++i) {
    const double alpha = x.bits[i] ? m.theta0[i] : 1.0 - m.theta0[i];
    const double beta = x.bits[i] ? m.theta1[i] : 1.0 - m.theta1[i];
    sum += std::log(alpha / beta);
  }
  return sum;
}

// A decision value of exactly zero classifies to class 0.
inline int classify(const NaiveBayesModel& m, const TestPoint& x) {
  return log_odds(m, x) >= 0.0 ? 0 : 1;
}

inline LogTerms log_terms(const NaiveBayesModel& m, const TestPoint& x) {
  validate_model(m);
  check_point(m, x);
  LogTerms t;
  t.a.resize(m.n);
  t.b.resize(m.n);
  t.d.resize(m.n);
  double sum = std::log(m.prior0 / (1.0 - m.prior0));
  for (std::size_t i = 0; i < m.n; ++i) {
    const double alpha = x.bits[i] ? m.theta0[i] : 1.0 - m.theta0[i];
    const double beta = x.bits[i] ? m.theta1[i] : 1.0 - m.theta1[i];
    t.a[i] = std::log(alpha / beta);
    t.b[i] = std::log((1.0 - alpha) / (1.0 - beta));
    t.d[i] = t.b[i] - t.a[i];
    sum += t.a[i];
  }
  t.target = -sum;
  t.base_class = sum >= 0.0 ? 0 : 1;
  return t;
}

// Plain-text model document: `n`, `prior0`, `theta0`, `theta1` with 17
// significant digits, enough for an exact binary round trip.
inline void save_model(const NaiveBayesModel& m, std::ostream& os) {
  validate_model(m);
  os << "n " << m.n << "\n";
  os << "prior0 " << format_full(m.prior0) << "\n";
  os << "theta0";
  for (double v : m.theta0) os << " " << format_full(v);
  os << "\ntheta1";
  for (double v : m.theta1) os << " " << format_full(v);
  os << "\n";
}

inline NaiveBayesModel load_model(std::istream& is) {
  auto expect_key = [&](const char* key) {
    std::string tok;
    if (!(is >> tok) || tok != key)
      throw validation_error(std::string("model document: expected field '") + key + "'");
  };
  NaiveBayesModel m;
  long long n = 0;
  expect_key("n");
  if (!(is >> n) || n <= 0) throw validation_error("model document: bad feature count");
  m.n = static_cast<std::size_t>(n);
  expect_key("prior0");
  if (!(is >> m.prior0)) throw validation_error("model document: bad prior0");
  for (auto [key, vec] : {std::pair{"theta0", &m.theta0}, std::pair{"theta1", &m.theta1}}) {
    expect_key(key);
    vec->resize(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
      if (!(is >> (*vec)[i]))
        throw validation_error(std::string("model document: ") + key + " needs n values");
  }
  std::string trailing;
  if (is >> trailing) throw validation_error("model document: unexpected trailing content");
  validate_model(m);
  return m;
}

}  // namespace nbscp

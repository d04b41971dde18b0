#include "qosc/braiding_search.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include <unsupported/Eigen/LevenbergMarquardt>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

using AD = Eigen::AutoDiffScalar<Eigen::Matrix<double, 14, 1>>;

template <int R>
Eigen::Matrix<FieldElem, R, 9> fixed_rows(const FMat& m) {
  if (m.rows() != R || m.cols() != 9) throw Error("unexpected oscillator presentation shape");
  return m.unaryExpr([](const FieldElem& x) { return at_Q1_eq_q2(x); });
}

template <int R>
Eigen::Matrix<double, R, 9> numeric_rows(const Eigen::Matrix<FieldElem, R, 9>& m, double q0) {
  const DoublePoint p{q0, q0 * q0};
  return m.unaryExpr([&](const FieldElem& x) { return x.eval(p); });
}

Eigen::VectorXd flatten(const std::vector<double>& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()); }

struct BraidingFunctor : Eigen::DenseFunctor<double> {
  BraidingFunctor(const BraidingData<double>& d, int values)
      : Eigen::DenseFunctor<double>(14, values), data(d), ad_data(cast_data<AD>(d)) {}

  int operator()(const InputType& x, ValueType& f) const {
    f = flatten(braiding_residuals<double>(rprime_ansatz<double>(x), data));
    return 0;
  }

  int df(const InputType& x, JacobianType& jac) const {
    Vec14<AD> c;
    for (int k = 0; k < 14; ++k) c(k) = AD(x(k), 14, k);
    const auto r = braiding_residuals<AD>(rprime_ansatz<AD>(c), ad_data);
    jac.resize(static_cast<Eigen::Index>(r.size()), 14);
    for (std::size_t i = 0; i < r.size(); ++i) jac.row(static_cast<Eigen::Index>(i)) = r[i].derivatives().transpose();
    return 0;
  }

  BraidingData<double> data;
  BraidingData<AD> ad_data;
};

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Gauss-Newton with a minimum-norm step; converges onto solution manifolds too.
void polish(const BraidingFunctor& f, Eigen::VectorXd& x, double target) {
  Eigen::VectorXd fv(f.values());
  Eigen::MatrixXd jac;
  for (int it = 0; it < 30; ++it) {
    f(x, fv);
    if (max_abs(fv) < target) return;
    f.df(x, jac);
    Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(fv);
    if (!step.allFinite()) return;
    x -= step;
  }
}

int jacobian_nullity(const BraidingFunctor& f, const Eigen::VectorXd& x) {
  Eigen::MatrixXd jac;
  f.df(x, jac);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& s = svd.singularValues();
  const double cut = 1e-7 * std::max(1.0, s(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > cut;
  return 14 - rank;
}

}  // namespace

BraidingData<FieldElem> braiding_data_q2(const RewriteSystem& osc) {
  return {substitute_Q1_q2(paper_R()), fixed_rows<3>(oscillator_relation_rows(osc)),
          fixed_rows<6>(degree2_reduction(osc))};
}

BraidingData<double> braiding_data_numeric(const RewriteSystem& osc, double q0) {
  const auto exact = braiding_data_q2(osc);
  const DoublePoint p{q0, q0 * q0};
  return {evaluate(exact.r, p), numeric_rows<3>(exact.rel, q0), numeric_rows<6>(exact.red, q0)};
}

Vec14<FieldElem> rprime_ansatz_values(const BigRMatrix& rp) {
  Vec14<FieldElem> c;
  std::array<bool, 14> seen{};
  for (const auto& s : rprime_ansatz_slots()) {
    const FieldElem& v = rp(s.row, s.col);
    if (seen[s.c - 1] && c(s.c - 1) != v) throw Error("matrix does not fit the R' ansatz at C" + std::to_string(s.c));
    c(s.c - 1) = v;
    seen[s.c - 1] = true;
  }
  if (rprime_ansatz<FieldElem>(c) != rp) throw Error("matrix has entries outside the R' ansatz pattern");
  return c;
}

const std::vector<BraidingTemplate>& braiding_templates() {
  static const std::vector<BraidingTemplate> templates = [] {
    const FieldElem q = FieldElem::q();
    const FieldElem q2 = q * q;
    auto vec = [](std::initializer_list<FieldElem> xs) {
      Vec14<FieldElem> c;
      int k = 0;
      for (const auto& x : xs) c(k++) = x;
      return c;
    };
    std::vector<BraidingTemplate> t;
    t.push_back({"generic R' at Q1=q^2", rprime_ansatz_values(substitute_Q1_q2(paper_Rprime()))});
    t.push_back({"sol1", vec({1, q2, 0, 0, q, 0, 0, q2.inv(), 0, q.inv(), 0, 0, 0, -1})});
    t.push_back({"sol2", vec({1, q2, 0, 2, q, 0, 0, q2.inv(), 0, q.inv(), 0, 0, 0, 1})});
    t.push_back({"sol3", vec({1, q2, 0, 0, q, 0, 0, q2.inv(), FieldElem(-2) / q2, q.inv(), 0, 0, 0, 1})});
    return t;
  }();
  return templates;
}

Vec14<double> evaluate_at(const Vec14<FieldElem>& c, double q0) {
  const DoublePoint p{q0, q0 * q0};
  return c.unaryExpr([&](const FieldElem& x) { return x.eval(p); });
}

CandidateCheck verify_candidate(const RewriteSystem& osc, const Vec14<double>& c, double q0) {
  const auto data = braiding_data_numeric(osc, q0);
  std::vector<ConstraintBlock> blocks;
  const auto r = braiding_residuals<double>(rprime_ansatz<double>(c), data, &blocks);
  CandidateCheck out;
  for (const auto& b : blocks)
    for (std::size_t i = b.begin; i < b.end; ++i)
      if (std::abs(r[i]) > out.max_residual) {
        out.max_residual = std::abs(r[i]);
        out.worst_block = b.name;
      }
  return out;
}

std::vector<std::string> verify_candidate_exact(const RewriteSystem& osc, const Vec14<FieldElem>& c) {
  const auto data = braiding_data_q2(osc);
  std::vector<ConstraintBlock> blocks;
  const auto r = braiding_residuals<FieldElem>(rprime_ansatz<FieldElem>(c), data, &blocks);
  std::vector<std::string> failing;
  for (const auto& b : blocks)
    for (std::size_t i = b.begin; i < b.end; ++i)
      if (!r[i].is_zero()) {
        failing.push_back(b.name);
        break;
      }
  return failing;
}

SolveReport solve_braidings_numeric(const RewriteSystem& osc, const SolverOptions& opt) {
  if (!(opt.q0 > 0) || std::abs(opt.q0 - 1.0) < 1e-12) throw InvalidParams("q0 must be positive and different from 1");
  const auto t0 = std::chrono::steady_clock::now();
  const auto data = braiding_data_numeric(osc, opt.q0);
  const int m = static_cast<int>(braiding_residuals<double>(Mat9<double>::Zero(), data).size());
  BraidingFunctor f(data, m);

  SolveReport rep;
  rep.options = opt;
  std::mt19937_64 rng(opt.seed);
  const double span = 1.0 + opt.q0 * opt.q0;
  std::uniform_real_distribution<double> dist(-span, span);
  std::vector<Eigen::VectorXd> found;
  for (int s = 0; s < opt.starts; ++s) {
    Eigen::VectorXd x(14);
    for (int k = 0; k < 14; ++k) x(k) = dist(rng);
    Eigen::LevenbergMarquardt<BraidingFunctor> lm(f);
    lm.setMaxfev(2000);
    lm.setXtol(1e-14);
    lm.setFtol(1e-14);
    lm.minimize(x);
    polish(f, x, opt.accept_tol * 1e-2);
    Eigen::VectorXd fv(m);
    f(x, fv);
    if (!x.allFinite() || max_abs(fv) >= opt.accept_tol) continue;
    ++rep.converged_starts;
    bool dup = false;
    for (const auto& y : found)
      if ((y - x).norm() < opt.dedup_tol) dup = true;
    if (!dup) found.push_back(x);
  }
  std::sort(found.begin(), found.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  for (const auto& x : found) {
    BraidingSolution sol;
    sol.c = x;
    Eigen::VectorXd fv(m);
    f(x, fv);
    sol.residual = max_abs(fv);
    sol.nullity = jacobian_nullity(f, x);
    sol.label = "unlisted";
    for (const auto& t : braiding_templates())
      if ((evaluate_at(t.c, opt.q0) - sol.c).norm() < opt.dedup_tol) sol.label = t.name;
    rep.solutions.push_back(sol);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qosc

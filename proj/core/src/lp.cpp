#include "ealab/lp.hpp"

#include <algorithm>
#include <cctype>

#include "ealab/error.hpp"

namespace ealab {

std::string to_string(const Rational& q) {
  // mpq_class(p, q) does not reduce, so callers may hand us 4/2.
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const bool well_formed =
      !s.empty() &&
      std::all_of(s.begin(), s.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'; }) &&
      std::count(s.begin(), s.end(), '/') <= 1 && s.back() != '/' &&
      s.front() != '/';
  if (!well_formed) {
    throw Error(ErrorKind::kParseError, "not a rational: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::kParseError, "not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::size_t LinearSystem::add_variable(std::string name) {
  variables.push_back(std::move(name));
  return variables.size() - 1;
}

void LinearSystem::add_constraint(std::string label, std::vector<Term> terms,
                                  Relation relation, Rational rhs) {
  constraints.push_back(
      {std::move(label), std::move(terms), relation, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  explicit Tableau(const LinearSystem& sys) : sys_(sys) {
    const auto m = sys.constraints.size();
    nv_ = sys.variables.size();
    slack_of_.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      if (sys.constraints[i].relation != Relation::kEqual) {
        slack_of_[i] = static_cast<std::ptrdiff_t>(nv_ + ns_++);
      }
    }
    art0_ = nv_ + ns_;
    cols_ = art0_ + m;
    rhs_ = cols_;
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    sign_.assign(m, 1);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = sys.constraints[i];
      sign_[i] = c.rhs < 0 ? -1 : 1;
      auto& row = rows_[i];
      for (const auto& t : c.terms) {
        if (t.var >= nv_) {
          throw Error(ErrorKind::kInvalidArgument,
                      "constraint '" + c.label + "' uses unknown variable");
        }
        row[t.var] += t.coeff;
      }
      if (slack_of_[i] >= 0) {
        row[slack_of_[i]] = c.relation == Relation::kLessEqual ? 1 : -1;
      }
      row[rhs_] = c.rhs;
      if (sign_[i] < 0) {
        for (auto& v : row) v = -v;
      }
      row[art0_ + i] = 1;
      basis_[i] = art0_ + i;
    }
  }

  SolveResult run() {
    const auto m = rows_.size();
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> cost(cols_);
    for (std::size_t i = 0; i < m; ++i) cost[art0_ + i] = 1;
    optimize(cost, /*allow_artificial=*/true);
    Rational w = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] >= art0_) w += rows_[i][rhs_];
    }
    if (w > 0) {
      Infeasible out;
      out.certificate.kind = Certificate::Kind::kInfeasible;
      out.certificate.multipliers = multipliers(cost);
      out.certificate.bound = 0;
      return out;
    }
    drive_out_artificials();

    Feasible found;
    if (!sys_.objective.empty()) {
      std::vector<Rational> d(cols_);
      for (std::size_t j = 0; j < nv_ && j < sys_.objective.size(); ++j) {
        d[j] = -sys_.objective[j];
      }
      if (!optimize(d, /*allow_artificial=*/false)) {
        found.unbounded = true;
      } else {
        Certificate cert;
        cert.kind = Certificate::Kind::kObjectiveBound;
        cert.multipliers = multipliers(d);
        Rational value = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (basis_[i] < nv_ && basis_[i] < sys_.objective.size()) {
            value += sys_.objective[basis_[i]] * rows_[i][rhs_];
          }
        }
        cert.bound = value;
        found.objective_value = value;
        found.optimality = std::move(cert);
      }
    }
    found.assignment.assign(nv_, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < nv_) found.assignment[basis_[i]] = rows_[i][rhs_];
    }
    return found;
  }

 private:
  // Minimizes cost.z; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    const auto m = rows_.size();
    const std::size_t limit = allow_artificial ? cols_ : art0_;
    for (;;) {
      // Reduced costs r_j = c_j - c_B . T_j; Bland: first negative.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (sgn(cost[basis_[i]]) != 0 && sgn(rows_[i][j]) != 0) {
            r -= cost[basis_[i]] * rows_[i][j];
          }
        }
        if (r < 0) entering = j;
      }
      if (!entering) return true;
      const auto j = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(rows_[i][j]) <= 0) continue;
        Rational ratio = rows_[i][rhs_] / rows_[i][j];
        if (!leave || ratio < best ||
            (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, j);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < art0_) continue;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (sgn(rows_[i][j]) != 0 && !is_basic(j)) {
          pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at 0.
    }
  }

  // y = c_B B^-1, read off the artificial block; mapped back to the
  // original rows as -sign_i * y_i.
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    const auto m = rows_.size();
    std::vector<Rational> y(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t r = 0; r < m; ++r) {
        if (sgn(cost[basis_[r]]) != 0) {
          y[k] += cost[basis_[r]] * rows_[r][art0_ + k];
        }
      }
      y[k] = -y[k] * sign_[k];
    }
    return y;
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void pivot(std::size_t p, std::size_t j) {
    auto& prow = rows_[p];
    const Rational piv = prow[j];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= cols_; ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] /= piv;
        nz.push_back(k);
      }
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == p || sgn(rows_[i][j]) == 0) continue;
      const Rational f = rows_[i][j];
      for (auto k : nz) rows_[i][k] -= f * prow[k];
    }
    basis_[p] = j;
  }

  const LinearSystem& sys_;
  std::size_t nv_ = 0;
  std::size_t ns_ = 0;
  std::size_t art0_ = 0;
  std::size_t cols_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::ptrdiff_t> slack_of_;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

Rational row_value(const LinearConstraint& c, const std::vector<Rational>& x) {
  Rational v = 0;
  for (const auto& t : c.terms) v += t.coeff * x[t.var];
  return v;
}

}  // namespace

SolveResult solve(const LinearSystem& system) {
  if (!system.objective.empty() &&
      system.objective.size() != system.variables.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "objective length does not match variable count");
  }
  return Tableau(system).run();
}

std::optional<std::string> first_violation(const LinearSystem& system,
                                           const std::vector<Rational>& x) {
  if (x.size() != system.variables.size()) return std::string("<size>");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0) return system.variables[j] + " >= 0";
  }
  for (const auto& c : system.constraints) {
    const auto v = row_value(c, x);
    const bool ok = c.relation == Relation::kEqual       ? v == c.rhs
                    : c.relation == Relation::kLessEqual ? v <= c.rhs
                                                         : v >= c.rhs;
    if (!ok) return c.label;
  }
  return std::nullopt;
}

bool replay_certificate(const LinearSystem& system, const Certificate& cert) {
  const auto m = system.constraints.size();
  const auto n = system.variables.size();
  if (cert.multipliers.size() != m) return false;
  std::vector<Rational> combo(n);
  Rational rhs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = system.constraints[i];
    const auto& y = cert.multipliers[i];
    if (c.relation == Relation::kLessEqual && y < 0) return false;
    if (c.relation == Relation::kGreaterEqual && y > 0) return false;
    if (sgn(y) == 0) continue;
    for (const auto& t : c.terms) {
      if (t.var >= n) return false;
      combo[t.var] += y * t.coeff;
    }
    rhs += y * c.rhs;
  }
  if (cert.kind == Certificate::Kind::kInfeasible) {
    return std::all_of(combo.begin(), combo.end(),
                       [](const Rational& v) { return v >= 0; }) &&
           rhs < 0;
  }
  if (system.objective.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (combo[j] < system.objective[j]) return false;
  }
  return rhs <= cert.bound;
}

}  // namespace ealab

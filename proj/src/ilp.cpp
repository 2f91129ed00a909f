#include "swapbribery/ilp.hpp"

#include <sstream>
#include <stdexcept>

#include "swapbribery/errors.hpp"

namespace swapbribery {

int IntegerProgram::add_variable(std::string name, long long lo, long long hi) {
  if (lo < 0 || hi < lo) throw DomainError("variable bounds must satisfy 0 <= lower <= upper");
  names.push_back(std::move(name));
  lower.push_back(lo);
  upper.push_back(hi);
  return variable_count() - 1;
}

namespace {

void validate(const IntegerProgram& program) {
  const int n = program.variable_count();
  if (static_cast<int>(program.lower.size()) != n || static_cast<int>(program.upper.size()) != n)
    throw DomainError("bound vectors do not match the variable count");
  for (int j = 0; j < n; ++j)
    if (program.lower[j] < 0 || program.upper[j] < program.lower[j]) throw DomainError("invalid variable bounds");
  for (const auto& c : program.constraints) {
    std::vector<char> seen(n, 0);
    for (const auto& [v, a] : c.terms) {
      if (v < 0 || v >= n) throw DomainError("constraint refers to an unknown variable");
      if (seen[v]) throw DomainError("variable repeated within one constraint");
      seen[v] = 1;
    }
  }
}

Rational activity(const LinearConstraint& c, const std::vector<long long>& x) {
  Rational s = 0;
  for (const auto& [v, a] : c.terms) s += a * to_rational(x[v]);
  return s;
}

bool holds(Relation rel, const Rational& lhs, const Rational& rhs) {
  switch (rel) {
    case Relation::le: return lhs <= rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::eq: return lhs == rhs;
  }
  return false;
}

long long floor_div(const Rational& a, const Rational& b) { return floor_to_ll(a / b); }

/// Tightens bounds until nothing changes. False when some constraint
/// cannot be met.
bool propagate(const IntegerProgram& program, std::vector<long long>& lo, std::vector<long long>& hi) {
  for (int pass = 0; pass < 200; ++pass) {
    bool changed = false;
    for (const auto& c : program.constraints) {
      for (int side = 0; side < 2; ++side) {
        // side 0 treats the constraint as "terms <= rhs", side 1 as ">=".
        if (side == 0 && c.relation == Relation::ge) continue;
        if (side == 1 && c.relation == Relation::le) continue;
        const int sign = side == 0 ? 1 : -1;
        Rational min_activity = 0;
        for (const auto& [v, a] : c.terms) {
          Rational coef = sign * a;
          min_activity += coef * to_rational(coef > 0 ? lo[v] : hi[v]);
        }
        Rational slack = sign * c.rhs - min_activity;
        if (slack < 0) return false;
        for (const auto& [v, a] : c.terms) {
          Rational coef = sign * a;
          if (coef > 0) {
            long long bound = lo[v] + floor_div(slack, coef);
            if (bound < hi[v]) {
              hi[v] = bound;
              changed = true;
            }
          } else if (coef < 0) {
            long long bound = hi[v] - floor_div(slack, -coef);
            if (bound > lo[v]) {
              lo[v] = bound;
              changed = true;
            }
          }
          if (lo[v] > hi[v]) return false;
        }
      }
    }
    if (!changed) return true;
  }
  return true;
}

/// Dense bounded-variable simplex, phase one only.
class PhaseOne {
 public:
  PhaseOne(const IntegerProgram& program, const std::vector<long long>& lo, const std::vector<long long>& hi) {
    const int n = program.variable_count();
    rows_ = static_cast<int>(program.constraints.size());
    structural_ = n;
    for (int j = 0; j < n; ++j) add_column(to_rational(lo[j]), to_rational(hi[j]), 0);
    std::vector<int> slack_of(rows_, -1);
    for (int i = 0; i < rows_; ++i)
      if (program.constraints[i].relation != Relation::eq) slack_of[i] = add_column(0, std::nullopt, 0);
    std::vector<int> artificial_of(rows_);
    for (int i = 0; i < rows_; ++i) artificial_of[i] = add_column(0, std::nullopt, 1);

    const int cols = static_cast<int>(lower_.size());
    table_.assign(rows_, std::vector<Rational>(cols, 0));
    basic_.assign(rows_, -1);
    for (int i = 0; i < rows_; ++i) {
      const auto& c = program.constraints[i];
      Rational residual = c.rhs;
      for (const auto& [v, a] : c.terms) {
        table_[i][v] = a;
        residual -= a * value_[v];
      }
      if (slack_of[i] >= 0) table_[i][slack_of[i]] = c.relation == Relation::le ? 1 : -1;
      const int sigma = residual < 0 ? -1 : 1;
      int art = artificial_of[i];
      table_[i][art] = sigma;
      if (sigma < 0)
        for (auto& entry : table_[i]) entry = -entry;
      basic_[i] = art;
      value_[art] = abs(residual);
    }
  }

  std::optional<std::vector<Rational>> solve() {
    const int cols = static_cast<int>(lower_.size());
    for (long long iteration = 0;; ++iteration) {
      if (iteration > 200000) throw ResourceError("simplex iteration limit reached");
      std::vector<char> is_basic(cols, 0);
      for (int b : basic_) is_basic[b] = 1;

      int entering = -1;
      int direction = 0;
      for (int j = 0; j < cols && entering < 0; ++j) {
        if (is_basic[j]) continue;
        Rational d = cost_[j];
        for (int i = 0; i < rows_; ++i)
          if (cost_[basic_[i]] != 0 && table_[i][j] != 0) d -= cost_[basic_[i]] * table_[i][j];
        bool can_increase = !upper_[j] || value_[j] < *upper_[j];
        if (d < 0 && can_increase) {
          entering = j;
          direction = 1;
        } else if (d > 0 && value_[j] > lower_[j]) {
          entering = j;
          direction = -1;
        }
      }
      if (entering < 0) break;

      // Longest step keeping every basic variable within its bounds.
      std::optional<Rational> step;
      if (upper_[entering]) step = *upper_[entering] - lower_[entering];
      int leaving_row = -1;
      for (int i = 0; i < rows_; ++i) {
        const Rational& t = table_[i][entering];
        if (t == 0) continue;
        Rational rate = -t * direction;
        int b = basic_[i];
        std::optional<Rational> limit;
        if (rate < 0)
          limit = (value_[b] - lower_[b]) / -rate;
        else if (upper_[b])
          limit = (*upper_[b] - value_[b]) / rate;
        if (!limit) continue;
        // Ties go to a bound flip first, then to the smallest basic index.
        if (!step || *limit < *step || (*limit == *step && leaving_row >= 0 && b < basic_[leaving_row])) {
          step = *limit;
          leaving_row = i;
        }
      }
      if (!step) throw std::logic_error("phase-one simplex is unbounded");

      Rational theta = *step;
      value_[entering] += theta * direction;
      for (int i = 0; i < rows_; ++i)
        if (table_[i][entering] != 0) value_[basic_[i]] -= table_[i][entering] * theta * direction;
      if (leaving_row < 0) continue;  // bound flip

      int leaving = basic_[leaving_row];
      // Snap the leaving variable onto the bound it reached.
      Rational rate = -table_[leaving_row][entering] * direction;
      value_[leaving] = rate < 0 ? lower_[leaving] : *upper_[leaving];
      pivot(leaving_row, entering);
    }

    Rational infeasibility = 0;
    for (int j = 0; j < static_cast<int>(cost_.size()); ++j)
      if (cost_[j] != 0) infeasibility += value_[j];
    if (infeasibility != 0) return std::nullopt;
    return std::vector<Rational>(value_.begin(), value_.begin() + structural_);
  }

 private:
  int add_column(Rational lo, std::optional<Rational> hi, int cost) {
    lower_.push_back(lo);
    upper_.push_back(std::move(hi));
    value_.push_back(std::move(lo));
    cost_.push_back(cost);
    return static_cast<int>(lower_.size()) - 1;
  }

  void pivot(int r, int c) {
    const int cols = static_cast<int>(lower_.size());
    Rational p = table_[r][c];
    for (auto& entry : table_[r]) entry /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || table_[i][c] == 0) continue;
      Rational f = table_[i][c];
      for (int j = 0; j < cols; ++j)
        if (table_[r][j] != 0) table_[i][j] -= f * table_[r][j];
    }
    basic_[r] = c;
  }

  int rows_ = 0;
  int structural_ = 0;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> value_;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> table_;
  std::vector<int> basic_;
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible_point(const IntegerProgram& program,
                                                       const std::vector<long long>& lower,
                                                       const std::vector<long long>& upper) {
  validate(program);
  return PhaseOne(program, lower, upper).solve();
}

bool satisfies(const IntegerProgram& program, const std::vector<long long>& values) {
  if (static_cast<int>(values.size()) != program.variable_count()) return false;
  for (int j = 0; j < program.variable_count(); ++j)
    if (values[j] < program.lower[j] || values[j] > program.upper[j]) return false;
  for (const auto& c : program.constraints)
    if (!holds(c.relation, activity(c, values), c.rhs)) return false;
  return true;
}

IlpResult ilp_feasible(const IntegerProgram& program, const IlpOptions& options) {
  validate(program);
  const int n = program.variable_count();
  if (n > options.variable_cap)
    throw ResourceError("ILP has " + std::to_string(n) + " variables, above the cap " + std::to_string(options.variable_cap));

  IlpResult result;
  struct Node {
    std::vector<long long> lo, hi;
  };
  std::vector<Node> stack{{program.lower, program.upper}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++result.nodes > options.node_cap) throw ResourceError("ILP search exceeded the node cap");
    if (!propagate(program, node.lo, node.hi)) continue;

    int branch = -1;
    long long split = 0;
    if (options.use_relaxation) {
      auto point = PhaseOne(program, node.lo, node.hi).solve();
      if (!point) continue;
      for (int j = 0; j < n && branch < 0; ++j) {
        if (is_integer((*point)[j])) continue;
        branch = j;
        split = floor_to_ll((*point)[j]);
      }
      if (branch < 0) {
        std::vector<long long> values(n);
        for (int j = 0; j < n; ++j) values[j] = floor_to_ll((*point)[j]);
        if (!satisfies(program, values)) throw std::logic_error("integral relaxation point violates the program");
        result.feasible = true;
        result.values = std::move(values);
        return result;
      }
    } else {
      for (int j = 0; j < n && branch < 0; ++j)
        if (node.lo[j] < node.hi[j]) {
          branch = j;
          split = node.lo[j];
        }
      if (branch < 0) {
        if (satisfies(program, node.lo)) {
          result.feasible = true;
          result.values = node.lo;
          return result;
        }
        continue;
      }
    }
    Node up = node;
    up.lo[branch] = split + 1;
    node.hi[branch] = split;
    stack.push_back(std::move(up));
    stack.push_back(std::move(node));
  }
  return result;
}

std::string to_lp_text(const IntegerProgram& program, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& line : comments) os << "\\ " << line << "\n";
  os << "Minimize\n obj: 0\nSubject To\n";
  int index = 0;
  for (const auto& c : program.constraints) {
    ++index;
    os << " " << (c.label.empty() ? "c" + std::to_string(index) : c.label) << ":";
    bool first = true;
    for (const auto& [v, a] : c.terms) {
      if (a == 0) continue;
      os << (a < 0 ? " - " : (first ? " " : " + "));
      Rational mag = abs(a);
      if (mag != 1) os << to_string(mag) << " ";
      os << program.names[v];
      first = false;
    }
    if (first) os << " 0";
    os << (c.relation == Relation::le ? " <= " : c.relation == Relation::ge ? " >= " : " = ") << to_string(c.rhs)
       << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < program.variable_count(); ++j)
    os << " " << program.lower[j] << " <= " << program.names[j] << " <= " << program.upper[j] << "\n";
  os << "General\n";
  for (int j = 0; j < program.variable_count(); ++j) os << " " << program.names[j] << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace swapbribery

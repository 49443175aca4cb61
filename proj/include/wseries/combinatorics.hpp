#pragma once

#include <string>
#include <vector>

#include "wseries/exact.hpp"

namespace wseries {

// Memoized integer triangle grown row by row from a two-term recurrence.
// Out-of-range indices read as zero, so the recurrences can be written
// without boundary special cases. Rows are capped to keep a runaway loop
// from silently eating memory; everything in this project fits well under
// the default cap.
class IntTriangle {
 public:
  enum class Kind {
    StirlingCycle,   // unsigned Stirling numbers of the first kind
    Assoc2Subset,    // 2-associated Stirling subset numbers (blocks of size >= 2)
    Eulerian2,       // second-order Eulerian numbers
    AssocStirling1D  // d(m,k), unsigned coefficients of [ln(1+v)-v]^k:
                     // sum_m d(m,k) v^m/m! = (-ln(1-v)-v)^k/k!
  };

  explicit IntTriangle(Kind kind, long max_rows = 200) : kind_(kind), max_rows_(max_rows) {}

  const ExactInt& value(long n, long k) const;

  // Test hook: perturb one entry by `delta` so downstream identity checks can
  // prove they really depend on the table contents.
  void poison(long n, long k, const ExactInt& delta);

  Kind kind() const { return kind_; }

 private:
  void grow_to(long n) const;

  Kind kind_;
  long max_rows_;
  mutable std::vector<std::vector<ExactInt>> rows_;
  static const ExactInt zero_;
};

// The four triangles used throughout, bundled so a caller (e.g. the CLI's
// self-check) can run the identity suites against a private, possibly
// corrupted copy.
struct Tables {
  IntTriangle stirling_cycle{IntTriangle::Kind::StirlingCycle};
  IntTriangle assoc2{IntTriangle::Kind::Assoc2Subset};
  IntTriangle eulerian2{IntTriangle::Kind::Eulerian2};
  IntTriangle d{IntTriangle::Kind::AssocStirling1D};

  IntTriangle* by_name(const std::string& name);
};

Tables& default_tables();

const ExactInt& stirling_cycle(long n, long k);
const ExactInt& stirling2_assoc2(long n, long k);
const ExactInt& eulerian2(long n, long k);
const ExactInt& assoc_stirling1_d(long m, long k);

// q_m(r) = sum_k <<m-1;k>> (-1)^k r^{k+1}, stored by its integer coefficients
// (coefficient of r^{k+1} at index k).
struct EulerianPolynomial {
  long m = 0;
  std::vector<ExactInt> coeffs;

  static EulerianPolynomial build(long m, const Tables& t = default_tables());
  Rational eval(const Rational& r) const;
};

// Exact identity checks. Each returns true when the identity holds exactly
// in rational arithmetic; on failure an optional diagnostic names the first
// offending index. All of them are parametric in the evaluation point.

// Both Carlitz-Riordan forms at the rational argument lam (the second form
// is evaluated at mu = lam/(1-lam), so lam must not be 1 for that part).
bool check_carlitz_riordan(long n, const Rational& lam, const Tables& t = default_tables(),
                           std::string* diag = nullptr);

// The binomial-transform pair expressing 2-associated subset numbers through
// second-order Eulerian numbers and back.
bool check_binomial_pair(long n, long q, const Tables& t = default_tables(),
                         std::string* diag = nullptr);

// sum_p (-1)^{p+m-1} {p+m-1; p} over the whole row; equals (m-1)!.
ExactInt alternating_sum_2assoc(long m, const Tables& t = default_tables());
bool check_alternating_sum_2assoc(long m, const Tables& t = default_tables(),
                                  std::string* diag = nullptr);

// The three identities tying the Eulerian, d, and 2-associated forms of the
// same coefficients together, evaluated at the rational point w. The first
// holds from n = 1; the other two compare sums that only represent the same
// coefficient from n = 2 on, so they are checked for n >= 2.
bool check_euler_d_2assoc(long n, const Rational& w, const Tables& t = default_tables(),
                          std::string* diag = nullptr);

// Same three identities in double arithmetic at an irrational point (the
// intended evaluation point is the Omega constant).
bool check_euler_d_2assoc_numeric(long n, double w, double tol);

}  // namespace wseries

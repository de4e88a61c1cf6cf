#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spectral {

using Expvec = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q with a fixed variable count.
// Terms are keyed by exponent vector.  The map's lexicographic key order
// doubles as the monomial order used by exact division; canonical signs and
// rendering use graded lex instead (see grlex_leading).
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(std::uint32_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::uint32_t nvars, const mpq_class& c);
  static MPoly variable(std::uint32_t nvars, std::uint32_t v,
                        std::uint32_t exp = 1);

  std::uint32_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); zero gives 0.
  mpq_class constant_value() const;
  const std::map<Expvec, mpq_class>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates c on monomial e, erasing the term if it cancels.
  void add_term(const Expvec& e, const mpq_class& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  MPoly mul_scalar(const mpq_class& c) const;
  MPoly mul_term(const Expvec& e, const mpq_class& c) const;
  MPoly pow(std::uint32_t k) const;

  std::uint32_t degree_in(std::uint32_t v) const;
  std::uint32_t total_degree() const;
  bool depends_on(std::uint32_t v) const;
  MPoly derivative(std::uint32_t v) const;

  // Extends the variable set to new_nvars, placing old variable i at
  // position map[i].
  MPoly remap(std::uint32_t new_nvars, const std::vector<std::uint32_t>& map) const;

  // Graded-lex maximal term (total degree first, then earlier variable
  // wins); nullptr for the zero polynomial.
  const std::pair<const Expvec, mpq_class>* grlex_leading() const;
  bool grlex_lc_negative() const;

  // Largest term under the plain lex storage order; nullptr for zero.
  const std::pair<const Expvec, mpq_class>* lex_leading() const;

  // Exact division: returns a/b, or nullopt when b does not divide a.
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  // Divides out the rational content.  Afterwards the coefficients are
  // integers with gcd 1; the returned content is positive (signs stay in
  // the polynomial).  Zero polynomial: returns 0 and stays zero.
  mpq_class extract_content();

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::uint32_t nvars_;
  std::map<Expvec, mpq_class> terms_;
};

// Gcd of two polynomials, integer-primitive with positive graded-lex leading
// coefficient (contents are discarded: gcd(6x, 4x) = x).  gcd(0, f) is the
// normalized primitive part of f; gcd(0, 0) = 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace spectral

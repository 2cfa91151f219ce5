#pragma once

#include "cubinv/matrix.hpp"
#include "cubinv/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubinv {

/// Raised when two operands do not share a variable table, or an input
/// violates a documented precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroPolynomial : public std::domain_error {
public:
    ZeroPolynomial() : std::domain_error("zero polynomial has no bi-degree") {}
};

class NotBiHomogeneous : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Magnetization variables count towards the first bi-degree component,
/// stress variables towards the second. Formal variables (symbols standing
/// for whole invariants) count towards neither.
enum class VarKind { Magnetization, Stress, Formal };

const char* to_string(VarKind kind);
std::optional<VarKind> parse_var_kind(std::string_view text);

/// (alpha, beta) = (degree in magnetization, degree in stress).
struct BiDegree {
    int alpha = 0;
    int beta = 0;

    int total() const { return alpha + beta; }

    friend bool operator==(const BiDegree&, const BiDegree&) = default;
    /// Degree-lexicographic: total degree, then alpha, then beta.
    friend std::strong_ordering operator<=>(const BiDegree& a, const BiDegree& b) {
        if (auto c = a.total() <=> b.total(); c != 0) return c;
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.beta <=> b.beta;
    }
    friend BiDegree operator+(const BiDegree& a, const BiDegree& b) {
        return {a.alpha + b.alpha, a.beta + b.beta};
    }

    std::string to_string() const;
};

/// Ordered variable names with their kinds. The order fixes the exponent layout.
class VarTable {
public:
    struct Var {
        std::string name;
        VarKind kind;
        friend bool operator==(const Var&, const Var&) = default;
    };

    explicit VarTable(std::vector<Var> vars);

    static std::shared_ptr<const VarTable> make(std::vector<Var> vars) {
        return std::make_shared<const VarTable>(std::move(vars));
    }

    std::size_t size() const { return vars_.size(); }
    const Var& operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Var>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Var> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint16_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return exps_; }

    int total_degree() const;
    BiDegree bidegree(const VarTable& table) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint16_t> exps_;
};

/// Graded lexicographic order, larger monomials first: higher total degree
/// wins, ties broken by the exponent vector compared in table order.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}
    Polynomial(VarTablePtr table, TermMap terms);

    static Polynomial constant(VarTablePtr table, const Rational& c);
    static Polynomial variable(VarTablePtr table, std::size_t index);
    static Polynomial variable(const VarTablePtr& table, std::string_view name);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Throws ZeroPolynomial or NotBiHomogeneous.
    BiDegree bidegree() const;
    bool is_bihomogeneous() const;
    int total_degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
    Polynomial operator-() const { return scaled(Rational(-1)); }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned n) const;

    Rational evaluate(std::span<const Rational> values) const;
    /// Every variable of the table must be assigned; throws UsageError otherwise.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Replaces variable i by images[i]; all images share one table.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Canonical text form, terms in GrlexDescending order, explicit '*' and '^'.
    std::string to_string() const;
    std::string to_latex() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void check_table(const Polynomial& o) const;
    void add_term(const Monomial& m, const Rational& c);

    VarTablePtr table_;
    TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial scale(const Rational& c, const Polynomial& p) { return p.scaled(c); }
inline Polynomial power(const Polynomial& p, unsigned n) { return p.pow(n); }

inline BiDegree bidegree(const Polynomial& p) { return p.bidegree(); }

struct CoefficientMatrix {
    std::vector<Monomial> monomials;
    /// One row per monomial, one column per input polynomial.
    RatMatrix a;
};

/// Writes each polynomial as a column over the union of their monomials.
/// All nonzero inputs must share a table and a bi-degree (UsageError otherwise).
CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& ps);

std::string monomial_to_string(const Monomial& m, const VarTable& table);

/// LaTeX spelling of a variable name: m1 -> M_{1}, s12 -> \sigma_{12}.
std::string latex_variable(std::string_view name);

}  // namespace cubinv

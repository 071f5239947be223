#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "hilbert10/bigint.hpp"
#include "hilbert10/poly.hpp"

namespace h10 {

class Expr;
struct SubstBinding;

namespace detail {
struct ExprNode;
struct ExprAccess;
}

// Total assignment of degree weights to variables; unlisted variables
// weigh 1.
class DegreeEnv {
  public:
    DegreeEnv() = default;
    DegreeEnv(std::initializer_list<std::pair<VarIndex, unsigned long>> init) {
        for (const auto& [v, w] : init) weights_[v] = w;
    }
    void set(VarIndex v, unsigned long w) { weights_[v] = w; }
    unsigned long weight(VarIndex v) const {
        auto it = weights_.find(v);
        return it == weights_.end() ? 1UL : it->second;
    }

  private:
    std::unordered_map<VarIndex, unsigned long> weights_;
};

/*
 * Immutable polynomial expression DAG.  Construction is hash-consed:
 * structurally identical subterms share one node, so `identical` is
 * pointer comparison.  Subst nodes carry a finite variable assignment
 * that acts as the identity on unlisted variables; evaluation of
 * Subst(f, body) under z evaluates body under s -> eval(z, f(s)).
 *
 * degree_bound is a sound upper bound on the total weighted degree of
 * the expanded polynomial: exact degrees for Const/Var, max over sums,
 * sum over products, multiplication by the exponent for powers, and a
 * recomputed weight environment for substitutions.  It is attained
 * whenever no cancellation occurs and no Subst node is involved.
 */
class Expr {
  public:
    enum class Kind : unsigned char { Const, Var, Add, Mul, Pow, Subst };

    static Expr constant(BigInt c);
    static Expr constant(long c) { return constant(BigInt(c)); }
    static Expr variable(VarIndex v);
    // n-ary sum/product; a single operand is returned unwrapped
    static Expr add(std::vector<Expr> operands);
    static Expr mul(std::vector<Expr> operands);
    static Expr pow(Expr base, BigInt exponent);  // exponent >= 0
    static Expr pow(Expr base, unsigned long exponent);
    // bindings must name distinct variables
    static Expr subst(std::vector<SubstBinding> bindings, Expr body);

    Kind kind() const;
    const BigInt& value() const;               // Const
    VarIndex var() const;                      // Var
    std::span<const Expr> operands() const;    // Add / Mul
    const Expr& base() const;                  // Pow
    const BigInt& exponent() const;            // Pow
    const Expr& body() const;                  // Subst
    std::span<const SubstBinding> bindings() const;  // Subst

    // Value at the point z (variables beyond the span are 0).
    BigInt eval(std::span<const BigInt> z) const;
    BigInt eval(const std::vector<BigInt>& z) const {
        return eval(std::span<const BigInt>(z));
    }

    BigInt degree_bound(const DegreeEnv& env = DegreeEnv()) const;

    // Superset of the variables the expanded polynomial can mention.
    std::set<VarIndex> var_bound() const;

    // Full expansion; nullopt once any intermediate result would exceed
    // the term budget.
    std::optional<SparsePoly> expand(std::size_t term_budget) const;

    std::size_t node_count() const;  // unique reachable nodes

    bool identical(const Expr& o) const { return node_ == o.node_; }

    friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) {
        return add({a, mul({constant(-1), b})});
    }
    friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
    friend Expr operator-(const Expr& a) { return mul({constant(-1), a}); }

  private:
    explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::ExprNode> node_;

    friend struct detail::ExprAccess;
};

struct SubstBinding {
    VarIndex var;
    Expr value;
};

// Expression form of a polynomial: sum of coefficient-monomial products.
Expr to_expr(const SparsePoly& p);

}  // namespace h10

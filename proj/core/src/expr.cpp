#include "hilbert10/expr.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace h10 {

namespace detail {

struct ExprNode {
    Expr::Kind kind = Expr::Kind::Const;
    std::size_t hash = 0;
    BigInt payload;                   // Const value or Pow exponent
    VarIndex var = 0;                 // Var index
    std::vector<Expr> kids;           // Add/Mul operands, Pow base, Subst body
    std::vector<SubstBinding> binds;  // Subst assignment, sorted by variable
};

struct ExprAccess {
    static const ExprNode* node(const Expr& e) { return e.node_.get(); }
    static Expr wrap(std::shared_ptr<const ExprNode> n) { return Expr(std::move(n)); }
    static const std::shared_ptr<const ExprNode>& ref(const Expr& e) { return e.node_; }
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::size_t ptr_hash(const ExprNode* p) {
    return reinterpret_cast<std::uintptr_t>(p) >> 4;
}

std::size_t node_hash(const ExprNode& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
    h = mix(h, hash_value(n.payload));
    h = mix(h, n.var);
    for (const Expr& k : n.kids) h = mix(h, ptr_hash(ExprAccess::node(k)));
    for (const SubstBinding& b : n.binds) {
        h = mix(h, b.var);
        h = mix(h, ptr_hash(ExprAccess::node(b.value)));
    }
    return h;
}

// Children are interned before their parents, so structural equality of a
// candidate against an interned node only needs pointer comparisons below
// the top level.
bool node_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.var != b.var || a.kids.size() != b.kids.size() ||
        a.binds.size() != b.binds.size())
        return false;
    if (cmp(a.payload, b.payload) != 0) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (ExprAccess::node(a.kids[i]) != ExprAccess::node(b.kids[i])) return false;
    for (std::size_t i = 0; i < a.binds.size(); ++i)
        if (a.binds[i].var != b.binds[i].var ||
            ExprAccess::node(a.binds[i].value) != ExprAccess::node(b.binds[i].value))
            return false;
    return true;
}

// Process-wide intern table; node construction is serialized, traversals
// of already-built expressions take no lock.
class InternTable {
  public:
    std::shared_ptr<const ExprNode> intern(ExprNode&& candidate) {
        candidate.hash = node_hash(candidate);
        std::lock_guard<std::mutex> lock(mutex_);
        auto [lo, hi] = buckets_.equal_range(candidate.hash);
        for (auto it = lo; it != hi;) {
            std::shared_ptr<const ExprNode> held = it->second.lock();
            if (!held) {
                it = buckets_.erase(it);
                continue;
            }
            if (node_equal(*held, candidate)) return held;
            ++it;
        }
        auto fresh = std::make_shared<const ExprNode>(std::move(candidate));
        buckets_.emplace(fresh->hash, fresh);
        return fresh;
    }

    static InternTable& instance() {
        static InternTable table;
        return table;
    }

  private:
    std::mutex mutex_;
    std::unordered_multimap<std::size_t, std::weak_ptr<const ExprNode>> buckets_;
};

}  // namespace
}  // namespace detail

using detail::ExprAccess;
using detail::ExprNode;

Expr Expr::constant(BigInt c) {
    ExprNode n;
    n.kind = Kind::Const;
    n.payload = std::move(c);
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr Expr::variable(VarIndex v) {
    ExprNode n;
    n.kind = Kind::Var;
    n.var = v;
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr Expr::add(std::vector<Expr> operands) {
    if (operands.empty()) throw std::invalid_argument("Expr::add: no operands");
    if (operands.size() == 1) return operands.front();
    ExprNode n;
    n.kind = Kind::Add;
    n.kids = std::move(operands);
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr Expr::mul(std::vector<Expr> operands) {
    if (operands.empty()) throw std::invalid_argument("Expr::mul: no operands");
    if (operands.size() == 1) return operands.front();
    ExprNode n;
    n.kind = Kind::Mul;
    n.kids = std::move(operands);
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr Expr::pow(Expr base, BigInt exponent) {
    if (sgn(exponent) < 0) throw std::domain_error("Expr::pow: negative exponent");
    ExprNode n;
    n.kind = Kind::Pow;
    n.payload = std::move(exponent);
    n.kids.push_back(std::move(base));
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr Expr::pow(Expr base, unsigned long exponent) {
    return pow(std::move(base), BigInt(exponent));
}

Expr Expr::subst(std::vector<SubstBinding> bindings, Expr body) {
    std::sort(bindings.begin(), bindings.end(),
              [](const SubstBinding& a, const SubstBinding& b) { return a.var < b.var; });
    for (std::size_t i = 1; i < bindings.size(); ++i)
        if (bindings[i].var == bindings[i - 1].var)
            throw std::domain_error("Expr::subst: duplicate binding");
    ExprNode n;
    n.kind = Kind::Subst;
    n.kids.push_back(std::move(body));
    n.binds = std::move(bindings);
    return ExprAccess::wrap(detail::InternTable::instance().intern(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const BigInt& Expr::value() const {
    if (node_->kind != Kind::Const) throw std::logic_error("Expr::value: not a constant");
    return node_->payload;
}

VarIndex Expr::var() const {
    if (node_->kind != Kind::Var) throw std::logic_error("Expr::var: not a variable");
    return node_->var;
}

std::span<const Expr> Expr::operands() const {
    if (node_->kind != Kind::Add && node_->kind != Kind::Mul)
        throw std::logic_error("Expr::operands: not a sum or product");
    return node_->kids;
}

const Expr& Expr::base() const {
    if (node_->kind != Kind::Pow) throw std::logic_error("Expr::base: not a power");
    return node_->kids.front();
}

const BigInt& Expr::exponent() const {
    if (node_->kind != Kind::Pow) throw std::logic_error("Expr::exponent: not a power");
    return node_->payload;
}

const Expr& Expr::body() const {
    if (node_->kind != Kind::Subst) throw std::logic_error("Expr::body: not a substitution");
    return node_->kids.front();
}

std::span<const SubstBinding> Expr::bindings() const {
    if (node_->kind != Kind::Subst)
        throw std::logic_error("Expr::bindings: not a substitution");
    return node_->binds;
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const {
        return detail::ptr_hash(static_cast<const ExprNode*>(p.first)) * 0x9e3779b97f4a7c15ULL ^
               reinterpret_cast<std::uintptr_t>(p.second);
    }
};

class Evaluator {
  public:
    struct Frame {
        const Frame* parent = nullptr;
        std::span<const BigInt> root;  // meaningful on the root frame only
        std::unordered_map<VarIndex, BigInt> bound;
    };

    explicit Evaluator(std::span<const BigInt> z) {
        frames_.push_back(Frame{});
        frames_.back().root = z;
    }

    BigInt run(const Expr& e) { return run(e, &frames_.front()); }

  private:
    BigInt lookup(VarIndex v, const Frame* f) const {
        for (; f->parent != nullptr; f = f->parent) {
            auto it = f->bound.find(v);
            if (it != f->bound.end()) return it->second;
        }
        return v < f->root.size() ? f->root[v] : BigInt(0);
    }

    BigInt run(const Expr& e, const Frame* frame) {
        const ExprNode* n = ExprAccess::node(e);
        const auto key = std::make_pair(static_cast<const void*>(n),
                                        static_cast<const void*>(frame));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt out;
        switch (e.kind()) {
            case Expr::Kind::Const:
                out = e.value();
                break;
            case Expr::Kind::Var:
                out = lookup(e.var(), frame);
                break;
            case Expr::Kind::Add: {
                out = 0;
                for (const Expr& k : e.operands()) out += run(k, frame);
                break;
            }
            case Expr::Kind::Mul: {
                out = 1;
                for (const Expr& k : e.operands()) {
                    out *= run(k, frame);
                    if (sgn(out) == 0) break;
                }
                break;
            }
            case Expr::Kind::Pow: {
                const BigInt b = run(e.base(), frame);
                const BigInt& ex = e.exponent();
                if (sgn(ex) == 0) {
                    out = 1;
                } else if (sgn(b) == 0) {
                    out = 0;
                } else if (b == 1) {
                    out = 1;
                } else if (b == -1) {
                    out = mpz_even_p(ex.get_mpz_t()) ? 1 : -1;
                } else if (ex.fits_ulong_p()) {
                    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), ex.get_ui());
                } else {
                    throw std::overflow_error("Expr::eval: power value too large");
                }
                break;
            }
            case Expr::Kind::Subst: {
                Frame* child = subst_frame(e, frame);
                out = run(e.body(), child);
                break;
            }
        }
        memo_.emplace(key, out);
        return out;
    }

    Frame* subst_frame(const Expr& e, const Frame* frame) {
        const auto key = std::make_pair(
            static_cast<const void*>(ExprAccess::node(e)), static_cast<const void*>(frame));
        if (auto it = subst_frames_.find(key); it != subst_frames_.end()) return it->second;
        frames_.push_back(Frame{});
        Frame* child = &frames_.back();
        child->parent = frame;
        for (const SubstBinding& b : e.bindings()) child->bound.emplace(b.var, run(b.value, frame));
        subst_frames_.emplace(key, child);
        return child;
    }

    std::deque<Frame> frames_;
    std::unordered_map<std::pair<const void*, const void*>, BigInt, PairHash> memo_;
    std::unordered_map<std::pair<const void*, const void*>, Frame*, PairHash> subst_frames_;
};

class DegreeBounder {
  public:
    struct Frame {
        const Frame* parent = nullptr;
        const DegreeEnv* root = nullptr;
        std::unordered_map<VarIndex, BigInt> bound;
    };

    explicit DegreeBounder(const DegreeEnv& env) {
        frames_.push_back(Frame{});
        frames_.back().root = &env;
    }

    BigInt run(const Expr& e) { return run(e, &frames_.front()); }

  private:
    BigInt lookup(VarIndex v, const Frame* f) const {
        for (; f->parent != nullptr; f = f->parent) {
            auto it = f->bound.find(v);
            if (it != f->bound.end()) return it->second;
        }
        return f->root->weight(v);
    }

    BigInt run(const Expr& e, const Frame* frame) {
        const ExprNode* n = ExprAccess::node(e);
        const auto key = std::make_pair(static_cast<const void*>(n),
                                        static_cast<const void*>(frame));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt out = 0;
        switch (e.kind()) {
            case Expr::Kind::Const:
                break;
            case Expr::Kind::Var:
                out = lookup(e.var(), frame);
                break;
            case Expr::Kind::Add:
                for (const Expr& k : e.operands()) out = std::max(out, run(k, frame));
                break;
            case Expr::Kind::Mul:
                for (const Expr& k : e.operands()) out += run(k, frame);
                break;
            case Expr::Kind::Pow:
                out = e.exponent() * run(e.base(), frame);
                break;
            case Expr::Kind::Subst: {
                Frame* child = subst_frame(e, frame);
                out = run(e.body(), child);
                break;
            }
        }
        memo_.emplace(key, out);
        return out;
    }

    Frame* subst_frame(const Expr& e, const Frame* frame) {
        const auto key = std::make_pair(
            static_cast<const void*>(ExprAccess::node(e)), static_cast<const void*>(frame));
        if (auto it = subst_frames_.find(key); it != subst_frames_.end()) return it->second;
        frames_.push_back(Frame{});
        Frame* child = &frames_.back();
        child->parent = frame;
        for (const SubstBinding& b : e.bindings()) child->bound.emplace(b.var, run(b.value, frame));
        subst_frames_.emplace(key, child);
        return child;
    }

    std::deque<Frame> frames_;
    std::unordered_map<std::pair<const void*, const void*>, BigInt, PairHash> memo_;
    std::unordered_map<std::pair<const void*, const void*>, Frame*, PairHash> subst_frames_;
};

struct BudgetExceeded {};

class Expander {
  public:
    struct Frame {
        const Frame* parent = nullptr;
        std::unordered_map<VarIndex, SparsePoly> bound;
    };

    explicit Expander(std::size_t budget) : budget_(budget) { frames_.push_back(Frame{}); }

    SparsePoly run(const Expr& e) { return run(e, &frames_.front()); }

  private:
    SparsePoly lookup(VarIndex v, const Frame* f) const {
        for (; f != nullptr; f = f->parent) {
            auto it = f->bound.find(v);
            if (it != f->bound.end()) return it->second;
        }
        return SparsePoly::variable(v);
    }

    void check(const SparsePoly& p) const {
        if (p.term_count() > budget_) throw BudgetExceeded{};
    }

    SparsePoly mul_checked(const SparsePoly& a, const SparsePoly& b) const {
        auto r = SparsePoly::mul_bounded(a, b, budget_);
        if (!r) throw BudgetExceeded{};
        return std::move(*r);
    }

    SparsePoly run(const Expr& e, const Frame* frame) {
        const auto key = std::make_pair(
            static_cast<const void*>(ExprAccess::node(e)), static_cast<const void*>(frame));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        SparsePoly out;
        switch (e.kind()) {
            case Expr::Kind::Const:
                out = SparsePoly::constant(e.value());
                break;
            case Expr::Kind::Var:
                out = lookup(e.var(), frame);
                break;
            case Expr::Kind::Add:
                for (const Expr& k : e.operands()) {
                    out += run(k, frame);
                    check(out);
                }
                break;
            case Expr::Kind::Mul: {
                out = SparsePoly::constant(1);
                for (const Expr& k : e.operands()) {
                    out = mul_checked(out, run(k, frame));
                    if (out.is_zero()) break;
                }
                break;
            }
            case Expr::Kind::Pow: {
                const SparsePoly base = run(e.base(), frame);
                const BigInt& ex = e.exponent();
                if (sgn(ex) == 0) {
                    out = SparsePoly::constant(1);
                } else if (ex.fits_ulong_p()) {
                    out = pow_checked(base, ex.get_ui());
                } else if (base.is_zero()) {
                    out = SparsePoly();
                } else if (base == SparsePoly::constant(1)) {
                    out = base;
                } else if (base == SparsePoly::constant(-1)) {
                    out = SparsePoly::constant(mpz_even_p(ex.get_mpz_t()) ? 1 : -1);
                } else {
                    // any other base to a beyond-machine exponent cannot fit
                    // a finite term budget
                    throw BudgetExceeded{};
                }
                break;
            }
            case Expr::Kind::Subst: {
                Frame* child = subst_frame(e, frame);
                out = run(e.body(), child);
                break;
            }
        }
        check(out);
        memo_.emplace(key, out);
        return out;
    }

    SparsePoly pow_checked(SparsePoly base, unsigned long e) const {
        SparsePoly r = SparsePoly::constant(1);
        while (e > 0) {
            if (e & 1) r = mul_checked(r, base);
            e >>= 1;
            if (e > 0) base = mul_checked(base, base);
        }
        return r;
    }

    Frame* subst_frame(const Expr& e, const Frame* frame) {
        const auto key = std::make_pair(
            static_cast<const void*>(ExprAccess::node(e)), static_cast<const void*>(frame));
        if (auto it = subst_frames_.find(key); it != subst_frames_.end()) return it->second;
        frames_.push_back(Frame{});
        Frame* child = &frames_.back();
        child->parent = frame;
        for (const SubstBinding& b : e.bindings())
            child->bound.emplace(b.var, run(b.value, frame));
        subst_frames_.emplace(key, child);
        return child;
    }

    std::size_t budget_;
    std::deque<Frame> frames_;
    std::unordered_map<std::pair<const void*, const void*>, SparsePoly, PairHash> memo_;
    std::unordered_map<std::pair<const void*, const void*>, Frame*, PairHash> subst_frames_;
};

}  // namespace

BigInt Expr::eval(std::span<const BigInt> z) const {
    Evaluator ev(z);
    return ev.run(*this);
}

BigInt Expr::degree_bound(const DegreeEnv& env) const {
    DegreeBounder db(env);
    return db.run(*this);
}

namespace {

const std::set<VarIndex>& var_bound_rec(
    const Expr& e, std::unordered_map<const ExprNode*, std::set<VarIndex>>& memo) {
    const ExprNode* n = ExprAccess::node(e);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::set<VarIndex> out;
    switch (e.kind()) {
        case Expr::Kind::Const:
            break;
        case Expr::Kind::Var:
            out.insert(e.var());
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Mul:
            for (const Expr& k : e.operands()) {
                const auto& sub = var_bound_rec(k, memo);
                out.insert(sub.begin(), sub.end());
            }
            break;
        case Expr::Kind::Pow:
            out = var_bound_rec(e.base(), memo);
            break;
        case Expr::Kind::Subst: {
            const auto& body = var_bound_rec(e.body(), memo);
            for (VarIndex v : body) {
                const SubstBinding* hit = nullptr;
                for (const SubstBinding& b : e.bindings())
                    if (b.var == v) {
                        hit = &b;
                        break;
                    }
                if (hit == nullptr) {
                    out.insert(v);
                } else {
                    const auto& sub = var_bound_rec(hit->value, memo);
                    out.insert(sub.begin(), sub.end());
                }
            }
            break;
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::set<VarIndex> Expr::var_bound() const {
    std::unordered_map<const ExprNode*, std::set<VarIndex>> memo;
    return var_bound_rec(*this, memo);
}

std::optional<SparsePoly> Expr::expand(std::size_t term_budget) const {
    try {
        Expander x(term_budget);
        return x.run(*this);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

namespace {

void count_rec(const Expr& e, std::unordered_set<const ExprNode*>& seen) {
    if (!seen.insert(ExprAccess::node(e)).second) return;
    switch (e.kind()) {
        case Expr::Kind::Const:
        case Expr::Kind::Var:
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Mul:
            for (const Expr& k : e.operands()) count_rec(k, seen);
            break;
        case Expr::Kind::Pow:
            count_rec(e.base(), seen);
            break;
        case Expr::Kind::Subst:
            count_rec(e.body(), seen);
            for (const SubstBinding& b : e.bindings()) count_rec(b.value, seen);
            break;
    }
}

}  // namespace

std::size_t Expr::node_count() const {
    std::unordered_set<const ExprNode*> seen;
    count_rec(*this, seen);
    return seen.size();
}

Expr to_expr(const SparsePoly& p) {
    if (p.is_zero()) return Expr::constant(0);
    std::vector<Expr> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        std::vector<Expr> factors;
        if (c != 1 || m.is_unit()) factors.push_back(Expr::constant(c));
        for (const auto& [v, e] : m.pairs()) {
            if (e == 1)
                factors.push_back(Expr::variable(v));
            else
                factors.push_back(Expr::pow(Expr::variable(v), static_cast<unsigned long>(e)));
        }
        terms.push_back(Expr::mul(std::move(factors)));
    }
    return Expr::add(std::move(terms));
}

}  // namespace h10

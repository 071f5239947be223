#include "hilbert10/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace h10 {

Monomial Monomial::variable(VarIndex v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.exps_.push_back({v, e});
    return m;
}

Monomial Monomial::from_pairs(std::vector<Pair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
        if (e == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == v) {
            const std::uint64_t sum = std::uint64_t(m.exps_.back().second) + e;
            if (sum > 0xffffffffULL) throw std::overflow_error("Monomial: exponent overflow");
            m.exps_.back().second = static_cast<std::uint32_t>(sum);
        } else {
            m.exps_.push_back({v, e});
        }
    }
    return m;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
    for (const auto& [var, e] : exps_)
        if (var == v) return e;
    return 0;
}

unsigned long Monomial::total_degree() const {
    unsigned long d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

VarIndex Monomial::max_var() const {
    return exps_.empty() ? 0 : exps_.back().first;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto ia = exps_.begin(), ib = o.exps_.begin();
    while (ia != exps_.end() || ib != o.exps_.end()) {
        if (ib == o.exps_.end() || (ia != exps_.end() && ia->first < ib->first)) {
            r.exps_.push_back(*ia++);
        } else if (ia == exps_.end() || ib->first < ia->first) {
            r.exps_.push_back(*ib++);
        } else {
            const std::uint64_t sum = std::uint64_t(ia->second) + ib->second;
            if (sum > 0xffffffffULL) throw std::overflow_error("Monomial: exponent overflow");
            r.exps_.push_back({ia->first, static_cast<std::uint32_t>(sum)});
            ++ia, ++ib;
        }
    }
    return r;
}

int Monomial::grlex_cmp(const Monomial& a, const Monomial& b) {
    const unsigned long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first)
            // owner of the smaller index has a positive exponent where the
            // other has zero, hence is lexicographically greater
            return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.exps_.end()) return 1;
    if (ib != b.exps_.end()) return -1;
    return 0;
}

SparsePoly SparsePoly::constant(BigInt c) {
    SparsePoly p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(VarIndex v) {
    SparsePoly p;
    p.terms_.emplace(Monomial::variable(v), 1);
    return p;
}

SparsePoly SparsePoly::monomial(Monomial m, BigInt c) {
    SparsePoly p;
    if (sgn(c) != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

SparsePoly SparsePoly::from_terms(std::vector<std::pair<Monomial, BigInt>> terms) {
    SparsePoly p;
    for (auto& [m, c] : terms) {
        auto [it, fresh] = p.terms_.try_emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) p.terms_.erase(it);
        } else if (sgn(it->second) == 0) {
            p.terms_.erase(it);
        }
    }
    return p;
}

BigInt SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned long SparsePoly::total_degree() const {
    // terms are graded-descending, so the first one carries the degree
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::set<VarIndex> SparsePoly::vars() const {
    std::set<VarIndex> vs;
    for (const auto& [mono, c] : terms_)
        for (const auto& [v, e] : mono.pairs()) vs.insert(v);
    return vs;
}

VarIndex SparsePoly::max_vars() const {
    VarIndex m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_var());
    return m;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

namespace {

BigInt i128_to_big(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u);
    return neg ? BigInt(-r) : r;
}

struct PackPlan {
    bool ok = false;
    std::vector<VarIndex> vars;      // ascending index
    std::vector<unsigned> shift;     // smallest index in the highest bits
    std::vector<std::uint64_t> limit;
};

// Kronecker-style packing: one 64-bit key per monomial, one field per
// variable, each field wide enough for the sum of the operands' maxima so
// key addition is exponent addition without carries.  Field order puts the
// smallest variable index in the most significant bits, which makes plain
// integer comparison of keys agree with lexicographic monomial comparison.
PackPlan plan_packing(const SparsePoly& a, const SparsePoly& b) {
    std::map<VarIndex, std::pair<std::uint64_t, std::uint64_t>> maxima;
    for (const auto& [m, c] : a.terms())
        for (const auto& [v, e] : m.pairs()) {
            auto& mm = maxima[v];
            mm.first = std::max<std::uint64_t>(mm.first, e);
        }
    for (const auto& [m, c] : b.terms())
        for (const auto& [v, e] : m.pairs()) {
            auto& mm = maxima[v];
            mm.second = std::max<std::uint64_t>(mm.second, e);
        }
    PackPlan plan;
    unsigned total = 0;
    for (const auto& [v, mm] : maxima) {
        const std::uint64_t cap = mm.first + mm.second;
        if (cap > 0xffffffffULL) return plan;
        const unsigned w = std::bit_width(cap);
        total += w;
        if (total > 64) return plan;
        plan.vars.push_back(v);
        plan.shift.push_back(w);  // temporarily the width
        plan.limit.push_back(cap);
    }
    unsigned pos = 64;
    for (std::size_t i = 0; i < plan.vars.size(); ++i) {
        pos -= plan.shift[i];
        plan.shift[i] = pos;
    }
    // shift the whole layout down so the last field starts at bit 0
    if (!plan.vars.empty() && plan.shift.back() != 0) {
        const unsigned down = plan.shift.back();
        for (auto& s : plan.shift) s -= down;
    }
    plan.ok = true;
    return plan;
}

std::uint64_t pack_monomial(const Monomial& m, const PackPlan& plan) {
    std::uint64_t key = 0;
    std::size_t i = 0;
    for (const auto& [v, e] : m.pairs()) {
        while (plan.vars[i] != v) ++i;
        key |= std::uint64_t(e) << plan.shift[i];
    }
    return key;
}

Monomial unpack_monomial(std::uint64_t key, const PackPlan& plan) {
    std::vector<Monomial::Pair> pairs;
    for (std::size_t i = 0; i < plan.vars.size(); ++i) {
        const std::uint64_t mask = plan.limit[i] == 0
                                       ? 0
                                       : ((std::uint64_t(1) << std::bit_width(plan.limit[i])) - 1);
        const std::uint64_t e = (key >> plan.shift[i]) & mask;
        if (e > 0) pairs.push_back({plan.vars[i], static_cast<std::uint32_t>(e)});
    }
    return Monomial::from_pairs(std::move(pairs));
}

unsigned long packed_degree(std::uint64_t key, const PackPlan& plan) {
    unsigned long d = 0;
    for (std::size_t i = 0; i < plan.vars.size(); ++i) {
        const std::uint64_t mask = plan.limit[i] == 0
                                       ? 0
                                       : ((std::uint64_t(1) << std::bit_width(plan.limit[i])) - 1);
        d += (key >> plan.shift[i]) & mask;
    }
    return d;
}

bool coeffs_fit_long(const SparsePoly& p, unsigned& maxbits) {
    maxbits = 0;
    for (const auto& [m, c] : p.terms()) {
        if (!c.fits_slong_p()) return false;
        maxbits = std::max<unsigned>(maxbits, static_cast<unsigned>(bit_length(c)));
    }
    return maxbits <= 62;
}

// Open-addressing accumulator keyed by packed monomials.
template <class V>
class FlatAccum {
  public:
    explicit FlatAccum(std::size_t expect) {
        std::size_t cap = 64;
        while (cap < expect * 2) cap <<= 1;
        keys_.resize(cap);
        vals_.resize(cap);
        used_.assign(cap, 0);
        mask_ = cap - 1;
    }

    template <class U>
    void add(std::uint64_t key, const U& v) {
        std::size_t i = index_of(key);
        if (!used_[i]) {
            used_[i] = 1;
            keys_[i] = key;
            vals_[i] = v;
            if (++count_ * 10 > (mask_ + 1) * 7) grow();
        } else {
            vals_[i] += v;
        }
    }

    std::size_t count() const { return count_; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i <= mask_; ++i)
            if (used_[i]) fn(keys_[i], vals_[i]);
    }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::size_t index_of(std::uint64_t key) const {
        std::size_t i = mix(key) & mask_;
        while (used_[i] && keys_[i] != key) i = (i + 1) & mask_;
        return i;
    }

    void grow() {
        std::vector<std::uint64_t> ok = std::move(keys_);
        std::vector<V> ov = std::move(vals_);
        std::vector<unsigned char> ou = std::move(used_);
        const std::size_t ocap = mask_ + 1;
        keys_.assign(ocap * 2, 0);
        vals_.clear();
        vals_.resize(ocap * 2);
        used_.assign(ocap * 2, 0);
        mask_ = ocap * 2 - 1;
        for (std::size_t i = 0; i < ocap; ++i) {
            if (!ou[i]) continue;
            std::size_t j = mix(ok[i]) & mask_;
            while (used_[j]) j = (j + 1) & mask_;
            used_[j] = 1;
            keys_[j] = ok[i];
            vals_[j] = std::move(ov[i]);
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<V> vals_;
    std::vector<unsigned char> used_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

}  // namespace

SparsePoly poly_mul_impl(const SparsePoly& a, const SparsePoly& b, const std::size_t* budget,
                         bool* exceeded) {
    if (exceeded) *exceeded = false;
    SparsePoly result;
    if (a.is_zero() || b.is_zero()) return result;

    const PackPlan plan = plan_packing(a, b);
    if (plan.ok) {
        struct PTerm {
            std::uint64_t key;
            const BigInt* coeff;
        };
        std::vector<PTerm> ta, tb;
        ta.reserve(a.term_count());
        tb.reserve(b.term_count());
        for (const auto& [m, c] : a.terms()) ta.push_back({pack_monomial(m, plan), &c});
        for (const auto& [m, c] : b.terms()) tb.push_back({pack_monomial(m, plan), &c});

        unsigned abits = 0, bbits = 0;
        const bool small_coeffs = coeffs_fit_long(a, abits) && coeffs_fit_long(b, bbits) &&
                                  abits + bbits +
                                          std::bit_width(std::min(ta.size(), tb.size())) <=
                                      126;

        struct AccTerm {
            unsigned long deg;
            std::uint64_t key;
            BigInt coeff;
        };
        std::vector<AccTerm> acc;
        if (small_coeffs) {
            FlatAccum<__int128> table(std::max(ta.size(), tb.size()));
            std::vector<std::pair<std::uint64_t, long>> sa, sb;
            sa.reserve(ta.size());
            sb.reserve(tb.size());
            for (const auto& t : ta) sa.push_back({t.key, mpz_get_si(t.coeff->get_mpz_t())});
            for (const auto& t : tb) sb.push_back({t.key, mpz_get_si(t.coeff->get_mpz_t())});
            for (const auto& [ka, ca] : sa) {
                for (const auto& [kb, cb] : sb)
                    table.add(ka + kb, static_cast<__int128>(ca) * cb);
                if (budget && table.count() > *budget) {
                    *exceeded = true;
                    return result;
                }
            }
            acc.reserve(table.count());
            table.for_each([&](std::uint64_t k, const __int128& v) {
                if (v != 0) acc.push_back({packed_degree(k, plan), k, i128_to_big(v)});
            });
        } else {
            FlatAccum<BigInt> table(std::max(ta.size(), tb.size()));
            BigInt prod;
            for (const auto& [ka, ca] : ta) {
                for (const auto& [kb, cb] : tb) {
                    prod = (*ca) * (*cb);
                    table.add(ka + kb, prod);
                }
                if (budget && table.count() > *budget) {
                    *exceeded = true;
                    return result;
                }
            }
            acc.reserve(table.count());
            table.for_each([&](std::uint64_t k, const BigInt& v) {
                if (sgn(v) != 0) acc.push_back({packed_degree(k, plan), k, v});
            });
        }
        if (budget && acc.size() > *budget) {
            *exceeded = true;
            return result;
        }
        std::sort(acc.begin(), acc.end(), [](const AccTerm& x, const AccTerm& y) {
            if (x.deg != y.deg) return x.deg > y.deg;
            return x.key > y.key;
        });
        for (auto& t : acc)
            result.terms_.emplace_hint(result.terms_.end(), unpack_monomial(t.key, plan),
                                       std::move(t.coeff));
        return result;
    }

    // generic fallback for layouts that do not fit one machine word
    std::unordered_map<Monomial, BigInt, MonomialHash> table;
    table.reserve(a.term_count() + b.term_count());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [it, fresh] = table.try_emplace(ma * mb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
        if (budget && table.size() > *budget) {
            *exceeded = true;
            return result;
        }
    }
    std::vector<std::pair<Monomial, BigInt>> acc;
    acc.reserve(table.size());
    for (auto it = table.begin(); it != table.end();) {
        auto node = table.extract(it++);
        if (sgn(node.mapped()) != 0)
            acc.push_back({std::move(node.key()), std::move(node.mapped())});
    }
    if (budget && acc.size() > *budget) {
        *exceeded = true;
        return result;
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) {
        return Monomial::grlex_cmp(x.first, y.first) > 0;
    });
    for (auto& [m, c] : acc)
        result.terms_.emplace_hint(result.terms_.end(), std::move(m), std::move(c));
    return result;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    return poly_mul_impl(*this, o, nullptr, nullptr);
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
}

std::optional<SparsePoly> SparsePoly::mul_bounded(const SparsePoly& a, const SparsePoly& b,
                                                  std::size_t term_budget) {
    bool exceeded = false;
    SparsePoly r = poly_mul_impl(a, b, &term_budget, &exceeded);
    if (exceeded) return std::nullopt;
    return r;
}

SparsePoly SparsePoly::pow(unsigned long e) const {
    SparsePoly r = constant(1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

BigInt SparsePoly::insertion(std::span<const BigInt> z) const {
    // per-variable power tables sized by the largest exponent in use
    std::unordered_map<VarIndex, std::vector<BigInt>> pows;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.pairs()) {
            auto& tab = pows[v];
            if (tab.size() <= e) tab.resize(e + 1);
        }
    for (auto& [v, tab] : pows) {
        tab[0] = 1;
        const BigInt zv = v < z.size() ? z[v] : BigInt(0);
        for (std::size_t i = 1; i < tab.size(); ++i) tab[i] = tab[i - 1] * zv;
    }
    BigInt acc = 0, term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (const auto& [v, e] : m.pairs()) term *= pows[v][e];
        acc += term;
    }
    return acc;
}

std::vector<std::pair<std::vector<std::uint32_t>, BigInt>> SparsePoly::expand_terms() const {
    std::vector<std::pair<std::vector<std::uint32_t>, BigInt>> out;
    if (terms_.empty()) return out;
    const std::size_t width = max_vars() + 1;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> dense(width, 0);
        for (const auto& [v, e] : m.pairs()) dense[v] = e;
        out.push_back({std::move(dense), c});
    }
    return out;
}

}  // namespace h10

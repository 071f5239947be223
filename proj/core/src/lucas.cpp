#include "hilbert10/lucas.hpp"

#include <set>
#include <stdexcept>

#include "hilbert10/arith.hpp"

namespace h10 {

namespace {

BigInt iterate(const BigInt& A, unsigned long n, BigInt x0, BigInt x1) {
    if (n == 0) return x0;
    for (unsigned long i = 1; i < n; ++i) {
        BigInt next = A * x1 - x0;
        x0 = std::move(x1);
        x1 = std::move(next);
    }
    return x1;
}

unsigned long to_index(const BigInt& n) {
    BigInt a = abs(n);
    if (!a.fits_ulong_p()) throw std::domain_error("lucas: index magnitude too large");
    return a.get_ui();
}

}  // namespace

BigInt lucas_psi(const BigInt& A, unsigned long n) { return iterate(A, n, 0, 1); }

BigInt lucas_chi(const BigInt& A, unsigned long n) { return iterate(A, n, 2, A); }

BigInt lucas_psi_int(const BigInt& A, const BigInt& n) {
    BigInt v = lucas_psi(A, to_index(n));
    return sgn(n) < 0 ? BigInt(-v) : v;
}

BigInt lucas_chi_int(const BigInt& A, const BigInt& n) { return lucas_chi(A, to_index(n)); }

bool pell_check(const BigInt& A, const BigInt& m) {
    const BigInt psi = lucas_psi_int(A, m);
    const BigInt chi = lucas_chi_int(A, m);
    return (A * A - 4) * psi * psi + 4 == chi * chi;
}

std::vector<std::pair<BigInt, BigInt>> pell_solutions_up_to(const BigInt& A,
                                                            const BigInt& bound) {
    if (abs(A) <= 2) throw std::domain_error("pell_solutions_up_to: |A| must exceed 2");
    if (sgn(bound) < 0) throw std::domain_error("pell_solutions_up_to: negative bound");
    std::set<std::pair<BigInt, BigInt>> found;  // keyed (Y, X)
    BigInt psi0 = 0, psi1 = 1;
    BigInt chi0 = 2, chi1 = A;
    for (unsigned long n = 0;; ++n) {
        if (abs(psi0) > bound) break;
        found.insert({psi0, chi0});
        found.insert({psi0, -chi0});
        found.insert({-psi0, chi0});
        found.insert({-psi0, -chi0});
        BigInt pn = A * psi1 - psi0;
        BigInt cn = A * chi1 - chi0;
        psi0 = std::move(psi1);
        psi1 = std::move(pn);
        chi0 = std::move(chi1);
        chi1 = std::move(cn);
    }
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(found.size());
    for (const auto& [y, x] : found) out.push_back({x, y});
    return out;
}

bool is_lucas_psi_value(const BigInt& A, const BigInt& Y) {
    return is_square((A * A - 4) * Y * Y + 4);
}

}  // namespace h10

#include "nodal/stabilizer.hpp"

#include <algorithm>
#include <numeric>

namespace nodal {

BigInt order_bound(int n, int d) {
    if (n < 1) throw InputError("order_bound: n must be >= 1");
    if (d < 2) throw InputError("order_bound: d must be >= 2");
    BigInt base = d - 1;
    BigInt product = 1;
    for (int i = 2; i <= n + 1; ++i) {
        BigInt high, low;
        mpz_pow_ui(high.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n + 1));
        mpz_pow_ui(low.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n + 1 - i));
        product *= (i % 2 == 1) ? BigInt(high + low) : BigInt(high - low);
    }
    return product;
}

int infinitesimal_diagonal_stabilizer(const Form& f) {
    if (f.is_zero()) throw InputError("infinitesimal_diagonal_stabilizer: zero form");
    const int nv = f.n() + 1;
    std::vector<std::vector<Rational>> rows;
    rows.emplace_back(static_cast<std::size_t>(nv), Rational(1));  // trace-zero condition
    for (const auto& [e, c] : f.poly().terms()) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(nv));
        for (int x : e) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    return nv - matrix_rank(std::move(rows));
}

long long monomial_stabilizer_count(const Form& f, int root_order) {
    if (f.is_zero()) throw InputError("monomial_stabilizer_count: zero form");
    if (root_order < 1) throw InputError("monomial_stabilizer_count: root order must be >= 1");
    const int nv = f.n() + 1;
    const int k = root_order;

    double candidates = 1;
    for (int i = 2; i <= nv; ++i) candidates *= i;
    for (int i = 0; i < nv; ++i) candidates *= k;
    if (candidates > 5e7)
        throw ResourceGuardError("monomial_stabilizer_count: candidate count too large");

    const auto& terms = f.poly().terms();
    std::vector<int> sigma(static_cast<std::size_t>(nv));
    std::iota(sigma.begin(), sigma.end(), 0);
    long long count = 0;
    do {
        // Phase targets: each support monomial must land on a support monomial
        // with coefficient ratio +-1; the phase residue <m, a> mod k is then
        // pinned to 0 or k/2.
        bool possible = true;
        std::vector<std::pair<Exponent, int>> phase_targets;
        for (const auto& [e, c] : terms) {
            Exponent image(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) image[static_cast<std::size_t>(sigma[i])] = e[i];
            auto it = terms.find(image);
            if (it == terms.end()) {
                possible = false;
                break;
            }
            Rational ratio = it->second / c;
            int residue;
            if (ratio == 1)
                residue = 0;
            else if (ratio == -1 && k % 2 == 0)
                residue = k / 2;
            else {
                possible = false;
                break;
            }
            phase_targets.emplace_back(e, residue);
        }
        if (possible) {
            int det_residue;
            if (permutation_sign(sigma) == 1)
                det_residue = 0;
            else if (k % 2 == 0)
                det_residue = k / 2;
            else
                det_residue = -1;  // det = 1 unreachable for odd permutations
            if (det_residue >= 0) {
                std::vector<int> a(static_cast<std::size_t>(nv), 0);
                while (true) {
                    long long sum = std::accumulate(a.begin(), a.end(), 0LL);
                    bool fixes = sum % k == det_residue;
                    for (std::size_t t = 0; fixes && t < phase_targets.size(); ++t) {
                        const auto& [e, residue] = phase_targets[t];
                        long long phase = 0;
                        for (std::size_t i = 0; i < e.size(); ++i)
                            phase += static_cast<long long>(e[i]) * a[i];
                        fixes = phase % k == residue;
                    }
                    if (fixes) ++count;
                    int pos = 0;
                    while (pos < nv && ++a[static_cast<std::size_t>(pos)] == k) {
                        a[static_cast<std::size_t>(pos)] = 0;
                        ++pos;
                    }
                    if (pos == nv) break;
                }
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

StabilizerProbe probe_stabilizer(const Form& f, int root_order) {
    return StabilizerProbe{monomial_stabilizer_count(f, root_order),
                           infinitesimal_diagonal_stabilizer(f)};
}

}  // namespace nodal

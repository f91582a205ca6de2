#include "nodal/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace nodal {

Ideal::Ideal(int nvars_, std::vector<Poly> gens) : nvars(nvars_), generators(std::move(gens)) {
    if (generators.empty()) throw InputError("Ideal: no generators");
    for (const Poly& g : generators) {
        if (g.nvars() != nvars) throw InputError("Ideal: generator variable count mismatch");
        if (g.is_zero()) throw InputError("Ideal: zero generator");
    }
}

std::string GroebnerBasis::to_text() const {
    std::ostringstream out;
    for (const Poly& p : basis_) out << p.to_string() << "\n";
    return out.str();
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
    if (basis.empty()) throw InputError("normal_form: empty basis");
    for (const Poly& g : basis) {
        if (g.nvars() != f.nvars()) throw InputError("normal_form: variable count mismatch");
        if (g.is_zero()) throw InputError("normal_form: zero basis element");
    }
    Poly p = f;
    Poly remainder(f.nvars());
    while (!p.is_zero()) {
        const Exponent& t = p.lead_exponent();
        const Poly* reducer = nullptr;
        for (const Poly& g : basis) {
            if (exponent_divides(g.lead_exponent(), t)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            remainder.add_term(t, p.lead_coeff());
            Poly lead = Poly::monomial(p.nvars(), t, p.lead_coeff());
            p -= lead;
        } else {
            Rational c = p.lead_coeff() / reducer->lead_coeff();
            Poly factor = Poly::monomial(p.nvars(), exponent_sub(t, reducer->lead_exponent()), c);
            p -= factor * *reducer;
        }
    }
    return remainder;
}

namespace {

struct PairKey {
    int lcm_degree;
    int i;
    int j;
    bool operator<(const PairKey& rhs) const {
        return std::tie(lcm_degree, i, j) < std::tie(rhs.lcm_degree, rhs.i, rhs.j);
    }
};

Poly s_polynomial(const Poly& f, const Poly& g) {
    Exponent l = exponent_lcm(f.lead_exponent(), g.lead_exponent());
    Poly a = Poly::monomial(f.nvars(), exponent_sub(l, f.lead_exponent()), Rational(1) / f.lead_coeff());
    Poly b = Poly::monomial(g.nvars(), exponent_sub(l, g.lead_exponent()), Rational(1) / g.lead_coeff());
    return a * f - b * g;
}

bool coprime_leads(const Poly& f, const Poly& g) {
    const Exponent& a = f.lead_exponent();
    const Exponent& b = g.lead_exponent();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

void check_guards(const GuardLimits& limits, long pairs_done, int degree) {
    if (pairs_done > limits.max_pairs)
        throw ResourceGuardError("buchberger: S-pair budget exceeded (" + std::to_string(limits.max_pairs) + ")");
    if (degree > limits.max_degree)
        throw ResourceGuardError("buchberger: intermediate degree " + std::to_string(degree) + " exceeds cap " +
                                 std::to_string(limits.max_degree));
    if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline)
        throw ResourceGuardError("buchberger: time budget exceeded");
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const GuardLimits& limits) {
    const int nvars = ideal.nvars;
    bool homogeneous_input = true;
    for (const Poly& g : ideal.generators) homogeneous_input &= g.is_homogeneous();

    std::vector<Poly> basis;
    for (const Poly& g : ideal.generators) {
        Poly p = g.primitive_integer_form();
        if (std::find(basis.begin(), basis.end(), p) == basis.end()) basis.push_back(std::move(p));
    }

    std::set<PairKey> queue;
    auto push_pairs = [&](int t) {
        for (int i = 0; i < t; ++i) {
            Exponent l = exponent_lcm(basis[i].lead_exponent(), basis[t].lead_exponent());
            queue.insert(PairKey{total_degree(l), i, t});
        }
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    long pairs_done = 0;
    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        ++pairs_done;
        check_guards(limits, pairs_done, key.lcm_degree);
        if (coprime_leads(basis[key.i], basis[key.j])) continue;  // product criterion
        Poly s = s_polynomial(basis[key.i], basis[key.j]);
        if (s.is_zero()) continue;
        Poly h = normal_form(s, basis);
        if (h.is_zero()) continue;
        h = h.primitive_integer_form();
        if (homogeneous_input && !h.is_homogeneous())
            throw InternalError("buchberger: homogeneity lost during reduction");
        check_guards(limits, pairs_done, h.degree());
        basis.push_back(std::move(h));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop elements whose lead term another element's lead divides.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!exponent_divides(basis[j].lead_exponent(), basis[i].lead_exponent())) continue;
            // On equal lead terms keep the earlier element.
            if (basis[j].lead_exponent() == basis[i].lead_exponent() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each element against the others, then make monic.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
        if (r.is_zero()) throw InternalError("buchberger: minimal element reduced to zero");
        reduced.push_back(r.monic());
    }

    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return degrevlex_greater(a.lead_exponent(), b.lead_exponent());
    });

    GroebnerBasis gb(nvars, std::move(reduced));
    for (const Poly& g : ideal.generators)
        if (!normal_form(g, gb.basis()).is_zero())
            throw InternalError("buchberger: input generator does not reduce to zero");
    return gb;
}

bool only_origin(const GroebnerBasis& gb) {
    for (const Poly& p : gb.basis())
        if (!p.is_homogeneous()) throw InputError("only_origin: basis element is not homogeneous");
    // A nonzero constant means the unit ideal: empty zero set.
    for (const Poly& p : gb.basis())
        if (p.degree() == 0) return true;
    for (int k = 0; k < gb.nvars(); ++k) {
        bool pure_power_found = false;
        for (const Poly& p : gb.basis()) {
            const Exponent& e = p.lead_exponent();
            bool pure = e[static_cast<std::size_t>(k)] > 0;
            for (int j = 0; pure && j < gb.nvars(); ++j)
                if (j != k && e[static_cast<std::size_t>(j)] > 0) pure = false;
            if (pure) {
                pure_power_found = true;
                break;
            }
        }
        if (!pure_power_found) return false;
    }
    return true;
}

}  // namespace nodal

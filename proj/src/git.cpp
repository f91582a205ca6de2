#include "nodal/git.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace nodal {

WeightVector::WeightVector(std::vector<long long> r) : r_(std::move(r)) {
    if (r_.size() < 2) throw InputError("WeightVector: need at least two entries");
    for (std::size_t i = 0; i + 1 < r_.size(); ++i)
        if (r_[i] < r_[i + 1]) throw InputError("WeightVector: not sorted (r" + std::to_string(i) +
                                                " < r" + std::to_string(i + 1) + ")");
    long long sum = std::accumulate(r_.begin(), r_.end(), 0LL);
    if (sum != 0) throw InputError("WeightVector: sum is " + std::to_string(sum) + ", not zero");
    if (std::all_of(r_.begin(), r_.end(), [](long long x) { return x == 0; }))
        throw InputError("WeightVector: all entries are zero");
}

long long mu(const Form& f, const WeightVector& r) {
    if (f.is_zero()) throw InputError("mu: zero form");
    if (r.size() != static_cast<std::size_t>(f.n() + 1)) throw InputError("mu: weight length mismatch");
    bool first = true;
    long long best = 0;
    for (const auto& [e, c] : f.poly().terms()) {
        long long w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long long>(e[i]) * r[i];
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

CoordinateSearch CoordinateSearch::sampled(int transforms, std::uint64_t seed) {
    CoordinateSearch cs;
    cs.mode = Mode::Sampled;
    cs.transform_count = transforms;
    cs.seed = seed;
    return cs;
}

// ------------------------------------------------------- Fourier-Motzkin

namespace {

// Scale to coprime integer coefficients, keeping the inequality direction.
void normalize_constraint(LinearConstraint& c) {
    mpz_class den_lcm(1);
    for (const Rational& x : c.coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.bound.get_den().get_mpz_t());
    mpz_class content(0);
    auto fold = [&](const Rational& x) {
        mpz_class num = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    };
    for (const Rational& x : c.coeffs) fold(x);
    fold(c.bound);
    if (content == 0) return;  // all-zero constraint, leave as-is
    Rational scale(den_lcm, content);
    scale.canonicalize();
    for (Rational& x : c.coeffs) x *= scale;
    c.bound *= scale;
}

bool is_constant(const LinearConstraint& c) {
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x == 0; });
}

struct EliminationLevel {
    std::vector<LinearConstraint> lowers;  // negative coefficient on the variable
    std::vector<LinearConstraint> uppers;  // positive coefficient
};

}  // namespace

std::optional<std::vector<Rational>> fm_feasible_point(std::vector<LinearConstraint> constraints,
                                                       int nvars, long max_constraints) {
    for (const LinearConstraint& c : constraints)
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw InputError("fm_feasible_point: constraint arity mismatch");

    std::vector<EliminationLevel> levels(static_cast<std::size_t>(nvars));
    std::vector<LinearConstraint> current = std::move(constraints);

    for (int v = nvars - 1; v >= 0; --v) {
        EliminationLevel& level = levels[static_cast<std::size_t>(v)];
        std::vector<LinearConstraint> rest;
        for (LinearConstraint& c : current) {
            const Rational& a = c.coeffs[static_cast<std::size_t>(v)];
            if (a > 0)
                level.uppers.push_back(std::move(c));
            else if (a < 0)
                level.lowers.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        auto keep = [&](LinearConstraint&& c) {
            normalize_constraint(c);
            if (is_constant(c)) {
                if (c.bound < 0) return false;  // 0 <= negative: infeasible
                return true;                    // trivially true, drop
            }
            if (seen.emplace(c.coeffs, c.bound).second) rest.push_back(std::move(c));
            return true;
        };
        for (const LinearConstraint& up : level.uppers) {
            for (const LinearConstraint& lo : level.lowers) {
                const Rational& u = up.coeffs[static_cast<std::size_t>(v)];
                const Rational& w = lo.coeffs[static_cast<std::size_t>(v)];
                LinearConstraint combo;
                combo.coeffs.resize(static_cast<std::size_t>(nvars));
                for (int i = 0; i < nvars; ++i)
                    combo.coeffs[static_cast<std::size_t>(i)] =
                        -w * up.coeffs[static_cast<std::size_t>(i)] + u * lo.coeffs[static_cast<std::size_t>(i)];
                combo.bound = -w * up.bound + u * lo.bound;
                if (!keep(std::move(combo))) return std::nullopt;
                if (static_cast<long>(rest.size()) > max_constraints)
                    throw ResourceGuardError("fm_feasible_point: constraint blowup beyond " +
                                             std::to_string(max_constraints));
            }
        }
        current = std::move(rest);
    }

    for (const LinearConstraint& c : current)
        if (c.bound < 0) return std::nullopt;

    // Back-substitute, preferring 0 inside the admissible interval.
    std::vector<Rational> x(static_cast<std::size_t>(nvars), Rational(0));
    for (int v = 0; v < nvars; ++v) {
        const EliminationLevel& level = levels[static_cast<std::size_t>(v)];
        std::optional<Rational> lo, hi;
        auto evaluate = [&](const LinearConstraint& c) {
            Rational acc = c.bound;
            for (int i = 0; i < v; ++i) acc -= c.coeffs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            return acc / c.coeffs[static_cast<std::size_t>(v)];
        };
        for (const LinearConstraint& c : level.lowers) {
            Rational b = evaluate(c);  // negative coefficient flips to a lower bound
            if (!lo || b > *lo) lo = b;
        }
        for (const LinearConstraint& c : level.uppers) {
            Rational b = evaluate(c);
            if (!hi || b < *hi) hi = b;
        }
        if (lo && hi && *lo > *hi) throw InternalError("fm_feasible_point: empty interval after elimination");
        Rational value(0);
        if (lo && *lo > 0)
            value = hi ? (*lo + *hi) / 2 : *lo;
        else if (hi && *hi < 0)
            value = lo ? (*lo + *hi) / 2 : *hi;
        x[static_cast<std::size_t>(v)] = value;
    }
    return x;
}

// ------------------------------------------------------- destabilizer search

namespace {

// Admissible rational weight on the r0 = 1 slice with <m, r> <= 0 for every
// support exponent, or nullopt.
std::optional<std::vector<Rational>> feasible_weight_for_support(const std::vector<Exponent>& support,
                                                                 int n) {
    if (n == 1) {
        // Single admissible ray (1, -1).
        for (const Exponent& m : support)
            if (m[0] - m[1] > 0) return std::nullopt;
        return std::vector<Rational>{Rational(1), Rational(-1)};
    }
    const int nvars = n - 1;  // free variables r1..r_{n-1}; rn = -1 - sum
    std::vector<LinearConstraint> cons;
    auto con = [&](std::vector<Rational> a, Rational b) {
        cons.push_back(LinearConstraint{std::move(a), std::move(b)});
    };
    std::vector<Rational> a(static_cast<std::size_t>(nvars), Rational(0));
    // r1 <= r0 = 1
    a[0] = 1;
    con(a, Rational(1));
    // r_{i+1} <= r_i for i = 1..n-2
    for (int i = 1; i <= n - 2; ++i) {
        std::fill(a.begin(), a.end(), Rational(0));
        a[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(i - 1)] = -1;
        con(a, Rational(0));
    }
    // rn <= r_{n-1}:  -1 - sum_j r_j <= r_{n-1}
    std::fill(a.begin(), a.end(), Rational(-1));
    a[static_cast<std::size_t>(n - 2)] = -2;
    con(a, Rational(1));
    // <m, r> <= 0 with r0 = 1 and rn substituted
    for (const Exponent& m : support) {
        std::fill(a.begin(), a.end(), Rational(0));
        for (int i = 1; i <= n - 1; ++i)
            a[static_cast<std::size_t>(i - 1)] = m[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(n)];
        con(a, Rational(m[static_cast<std::size_t>(n)] - m[0]));
    }
    auto x = fm_feasible_point(std::move(cons), nvars);
    if (!x) return std::nullopt;
    std::vector<Rational> r;
    r.reserve(static_cast<std::size_t>(n) + 1);
    r.push_back(Rational(1));
    Rational sum(1);
    for (const Rational& value : *x) {
        r.push_back(value);
        sum += value;
    }
    r.push_back(-sum);
    return r;
}

WeightVector integral_weight(const std::vector<Rational>& r) {
    mpz_class den_lcm(1);
    for (const Rational& x : r) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> scaled;
    mpz_class content(0);
    for (const Rational& x : r) {
        scaled.push_back(x.get_num() * (den_lcm / x.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.back().get_mpz_t());
    }
    std::vector<long long> out;
    for (mpz_class& z : scaled) {
        z /= content;
        if (!z.fits_slong_p()) throw InternalError("integral_weight: entry too large");
        out.push_back(z.get_si());
    }
    return WeightVector(std::move(out));
}

std::vector<Exponent> support_of(const Form& f) {
    std::vector<Exponent> s;
    s.reserve(f.poly().term_count());
    for (const auto& [e, c] : f.poly().terms()) s.push_back(e);
    return s;
}

std::vector<std::vector<int>> permutation_frames(int n, const CoordinateSearch& search,
                                                 std::mt19937_64& rng) {
    std::vector<int> identity(static_cast<std::size_t>(n) + 1);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<int>> frames;
    if (n <= 4) {
        std::vector<int> sigma = identity;
        do frames.push_back(sigma);
        while (std::next_permutation(sigma.begin(), sigma.end()));
    } else {
        frames.push_back(identity);
        for (int t = 1; t < search.permutation_samples; ++t) {
            std::vector<int> sigma = identity;
            // Fisher-Yates with the shared deterministic stream.
            for (std::size_t i = sigma.size() - 1; i > 0; --i)
                std::swap(sigma[i], sigma[rng() % (i + 1)]);
            frames.push_back(std::move(sigma));
        }
    }
    return frames;
}

RationalMatrix random_unimodular(int size, std::mt19937_64& rng) {
    RationalMatrix g = RationalMatrix::identity(size);
    static constexpr int kShearValues[] = {-2, -1, 1, 2};
    for (int s = 0; s < 3; ++s) {
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(size));
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(size - 1));
        if (j >= i) ++j;
        RationalMatrix shear = RationalMatrix::identity(size);
        shear.at(i, j) = kShearValues[rng() % 4];
        g = g * shear;
    }
    return g;
}

std::optional<DestabilizerCertificate> search_frames(const Form& f,
                                                     const std::vector<std::vector<int>>& frames,
                                                     long& frames_searched) {
    for (const std::vector<int>& sigma : frames) {
        ++frames_searched;
        Form permuted = permute_variables(f, sigma);
        auto weight = feasible_weight_for_support(support_of(permuted), f.n());
        if (!weight) continue;
        WeightVector w = integral_weight(*weight);
        long long m = mu(permuted, w);
        if (m > 0) throw InternalError("find_diagonal_destabilizer: extracted weight fails mu <= 0");
        return DestabilizerCertificate{sigma, std::move(w), m};
    }
    return std::nullopt;
}

}  // namespace

DestabilizerSearchResult find_diagonal_destabilizer(const Form& f, const CoordinateSearch& search) {
    if (f.is_zero()) throw InputError("find_diagonal_destabilizer: zero form");
    std::mt19937_64 rng(search.seed);
    auto frames = permutation_frames(f.n(), search, rng);

    DestabilizerSearchResult result;
    result.certificate = search_frames(f, frames, result.frames_searched);
    if (result.certificate || search.mode == CoordinateSearch::Mode::AllPermutations) return result;

    for (int t = 0; t < search.transform_count; ++t) {
        RationalMatrix g = random_unimodular(f.n() + 1, rng);
        Form moved = act(g, f);
        result.certificate = search_frames(moved, frames, result.frames_searched);
        if (result.certificate) {
            result.transform = std::move(g);
            return result;
        }
    }
    return result;
}

// ------------------------------------------------------- inequality families

WeightInequalityValues weight_inequality_values(const WeightVector& r, int n, int d) {
    if (r.size() != static_cast<std::size_t>(n + 1))
        throw InputError("weight_inequality_values: weight length mismatch");
    WeightInequalityValues out;
    const long long r0 = r[0];
    out.family1 = static_cast<long long>(d) * r0;
    for (int i = 1; i <= n; ++i) out.family2.push_back((d - 1) * r0 + r[static_cast<std::size_t>(i)]);
    for (int i = 1; i < n; ++i) out.family3.push_back((d - 2) * r0 + 2 * r[static_cast<std::size_t>(i)]);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.family4.push_back((d - 2) * r0 + r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(j)]);
    return out;
}

bool WeightInequalityValues::all_strictly_positive() const { return min_value() > 0; }

long long WeightInequalityValues::min_value() const {
    long long m = family1;
    for (long long v : family2) m = std::min(m, v);
    for (long long v : family3) m = std::min(m, v);
    for (long long v : family4) m = std::min(m, v);
    return m;
}

bool check_weight_inequalities(const WeightVector& r, int n, int d) {
    if (d <= n + 1)
        throw InputError("check_weight_inequalities: requires d > n+1 (got d = " + std::to_string(d) +
                         ", n = " + std::to_string(n) + ")");
    return weight_inequality_values(r, n, d).all_strictly_positive();
}

// ------------------------------------------------------- consequence check

VanishingReport verify_vanishing_consequence(const Form& f, const DestabilizerCertificate& cert,
                                             const GuardLimits& limits) {
    const int n = f.n();
    const int d = f.d();
    if (d <= n + 1) throw InputError("verify_vanishing_consequence: requires d > n+1");
    Form permuted = permute_variables(f, cert.permutation);
    if (mu(permuted, cert.weight) > 0)
        throw InputError("verify_vanishing_consequence: invalid certificate, mu recomputes positive");

    std::vector<Exponent> banned;
    auto monomial = [&](int i0, int a = -1, int b = -1) {
        Exponent e(static_cast<std::size_t>(n) + 1, 0);
        e[0] = i0;
        if (a >= 0) e[static_cast<std::size_t>(a)] += 1;
        if (b >= 0) e[static_cast<std::size_t>(b)] += 1;
        return e;
    };
    banned.push_back(monomial(d));
    for (int i = 1; i <= n; ++i) banned.push_back(monomial(d - 1, i));
    for (int i = 1; i < n; ++i) banned.push_back(monomial(d - 2, i, i));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) banned.push_back(monomial(d - 2, i, j));

    VanishingReport report;
    report.coefficients_zero = true;
    for (const Exponent& e : banned) {
        if (permuted.poly().terms().count(e)) {
            report.coefficients_zero = false;
            report.nonzero_coefficients.push_back(Poly::monomial(n + 1, e, Rational(1)).to_string());
        }
    }

    std::vector<Rational> e0(static_cast<std::size_t>(n) + 1, Rational(0));
    e0[0] = 1;
    auto [critical, kernel] = is_singular_at(permuted, e0);
    report.critical_at_e0 = critical;
    report.kernel_dim = kernel.value_or(0);
    report.cls = classify(permuted, limits).cls;
    return report;
}

}  // namespace nodal

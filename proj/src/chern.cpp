#include "nodal/chern.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace nodal {

ChernRing ChernRing::concrete(int n, int d) {
    if (n < 1) throw InputError("ChernRing: n must be >= 1");
    return ChernRing{Mode::Concrete, n, d};
}

ChernRing ChernRing::formal(int n) {
    if (n < 1) throw InputError("ChernRing: n must be >= 1");
    return ChernRing{Mode::Formal, n, 0};
}

namespace {

int weighted_degree(const ChernRing& ring, const std::vector<int>& e) {
    int deg = 0;
    for (std::size_t v = 0; v < e.size(); ++v) deg += e[v] * ring.var_weight(static_cast<int>(v));
    return deg;
}

}  // namespace

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    b = std::min(b, a - b);
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// ---------------------------------------------------------------- BaseClass

BaseClass BaseClass::unit(const ChernRing& ring) {
    BaseClass x(ring);
    x.add_term(std::vector<int>(static_cast<std::size_t>(ring.base_vars()), 0), 1);
    return x;
}

BaseClass BaseClass::h_power(const ChernRing& ring, int j, long long coeff) {
    if (ring.mode != ChernRing::Mode::Concrete) throw InputError("h_power: concrete mode only");
    if (j < 0) throw InputError("h_power: negative power");
    BaseClass x(ring);
    x.add_term({j}, coeff);
    return x;
}

BaseClass BaseClass::tangent_chern(const ChernRing& ring, int i) {
    if (i < 0 || i > ring.n) throw InputError("tangent_chern: index out of range");
    if (ring.mode == ChernRing::Mode::Concrete) return h_power(ring, i, binomial(ring.n + 1, i));
    BaseClass x(ring);
    std::vector<int> e(static_cast<std::size_t>(ring.base_vars()), 0);
    if (i > 0) e[static_cast<std::size_t>(i)] = 1;
    x.add_term(e, 1);
    return x;
}

BaseClass BaseClass::line_chern(const ChernRing& ring) {
    if (ring.mode == ChernRing::Mode::Concrete) return h_power(ring, 1, ring.d);
    BaseClass x(ring);
    std::vector<int> e(static_cast<std::size_t>(ring.base_vars()), 0);
    e[0] = 1;
    x.add_term(e, 1);
    return x;
}

void BaseClass::add_term(const std::vector<int>& exponent, long long coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(exponent.size()) != ring_.base_vars())
        throw InternalError("BaseClass: exponent arity mismatch");
    if (weighted_degree(ring_, exponent) > ring_.n) return;  // truncated above dim X
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BaseClass& BaseClass::operator+=(const BaseClass& rhs) {
    if (!(ring_ == rhs.ring_)) throw InputError("BaseClass +: ring mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BaseClass& BaseClass::operator-=(const BaseClass& rhs) {
    if (!(ring_ == rhs.ring_)) throw InputError("BaseClass -: ring mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BaseClass operator*(const BaseClass& a, const BaseClass& b) {
    if (!(a.ring_ == b.ring_)) throw InputError("BaseClass *: ring mismatch");
    BaseClass r(a.ring_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

BaseClass BaseClass::operator*(long long c) const {
    BaseClass r(ring_);
    for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
    return r;
}

std::string BaseClass::to_string() const {
    if (terms_.empty()) return "0";
    // Sorted by weighted degree descending, exponent vector as tie-break.
    std::vector<std::pair<std::vector<int>, long long>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        return weighted_degree(ring_, a.first) > weighted_degree(ring_, b.first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : items) {
        long long a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            std::string name = ring_.mode == ChernRing::Mode::Concrete
                                   ? "H"
                                   : (v == 0 ? "l" : "c" + std::to_string(v));
            if (e[v] > 1) name += "^" + std::to_string(e[v]);
            factors.push_back(name);
        }
        if (factors.empty() || a != 1) out << a;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0 || a != 1) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- BundleClass

BundleClass BundleClass::from_base(const BaseClass& x, int c_power) {
    BundleClass r(x.ring());
    r.add(x, c_power);
    return r;
}

bool BundleClass::is_zero() const {
    return std::all_of(coef_.begin(), coef_.end(), [](const BaseClass& x) { return x.is_zero(); });
}

int BundleClass::max_c_power() const {
    for (int k = static_cast<int>(coef_.size()) - 1; k >= 0; --k)
        if (!coef_[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

BaseClass BundleClass::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coef_.size())) return BaseClass::zero(ring_);
    return coef_[static_cast<std::size_t>(k)];
}

void BundleClass::add(const BaseClass& x, int c_power) {
    if (!(x.ring() == ring_)) throw InputError("BundleClass: ring mismatch");
    if (c_power < 0) throw InternalError("BundleClass: negative c power");
    while (static_cast<int>(coef_.size()) <= c_power) coef_.push_back(BaseClass::zero(ring_));
    coef_[static_cast<std::size_t>(c_power)] += x;
}

BundleClass& BundleClass::operator+=(const BundleClass& rhs) {
    for (int k = 0; k < static_cast<int>(rhs.coef_.size()); ++k) add(rhs.coef_[static_cast<std::size_t>(k)], k);
    return *this;
}

BundleClass& BundleClass::operator-=(const BundleClass& rhs) {
    for (int k = 0; k < static_cast<int>(rhs.coef_.size()); ++k)
        add(rhs.coef_[static_cast<std::size_t>(k)] * -1, k);
    return *this;
}

BundleClass operator*(const BundleClass& a, const BundleClass& b) {
    if (!(a.ring_ == b.ring_)) throw InputError("BundleClass *: ring mismatch");
    BundleClass r(a.ring_);
    for (int i = 0; i < static_cast<int>(a.coef_.size()); ++i) {
        if (a.coef_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.coef_.size()); ++j) {
            if (b.coef_[static_cast<std::size_t>(j)].is_zero()) continue;
            r.add(a.coef_[static_cast<std::size_t>(i)] * b.coef_[static_cast<std::size_t>(j)], i + j);
        }
    }
    return r;
}

BundleClass BundleClass::reduced() const {
    const int n = ring_.n;
    BundleClass r = *this;
    for (int k = r.max_c_power(); k >= n; --k) {
        BaseClass top = r.coefficient(k);
        if (top.is_zero()) continue;
        // c^k = -sum_{i=1}^{n} c_i(T) c^{k-i}
        r.coef_[static_cast<std::size_t>(k)] = BaseClass::zero(ring_);
        for (int i = 1; i <= n; ++i) r.add(BaseClass::tangent_chern(ring_, i) * top * -1, k - i);
    }
    while (!r.coef_.empty() && r.coef_.back().is_zero()) r.coef_.pop_back();
    return r;
}

bool BundleClass::equals_reduced(const BundleClass& rhs) const {
    BundleClass diff = reduced();
    diff -= rhs.reduced();
    return diff.is_zero();
}

std::vector<std::array<long long, 3>> BundleClass::triples() const {
    if (ring_.mode != ChernRing::Mode::Concrete) throw InputError("triples: concrete mode only");
    std::vector<std::array<long long, 3>> out;
    for (int k = 0; k < static_cast<int>(coef_.size()); ++k)
        for (const auto& [e, c] : coef_[static_cast<std::size_t>(k)].terms())
            out.push_back({c, static_cast<long long>(k), static_cast<long long>(e[0])});
    // degrevlex on (c, H): total degree first, then the smaller H-power wins.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long long ta = a[1] + a[2], tb = b[1] + b[2];
        if (ta != tb) return ta > tb;
        return a[2] < b[2];
    });
    return out;
}

std::string BundleClass::to_string() const {
    auto items = triples();
    if (items.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, k, j] : items) {
        long long a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (k > 0) factors.push_back(k > 1 ? "c^" + std::to_string(k) : "c");
        if (j > 0) factors.push_back(j > 1 ? "H^" + std::to_string(j) : "H");
        if (factors.empty() || a != 1) out << a;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0 || a != 1) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- operations

std::vector<BaseClass> twisted_cotangent_chern(const ChernRing& ring) {
    const int n = ring.n;
    BaseClass lambda = BaseClass::line_chern(ring);
    std::vector<BaseClass> lambda_pow{BaseClass::unit(ring)};
    for (int k = 1; k <= n; ++k) lambda_pow.push_back(lambda_pow.back() * lambda);
    std::vector<BaseClass> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BaseClass ck = BaseClass::zero(ring);
        for (int i = 0; i <= k; ++i) {
            long long sign = (i % 2 == 0) ? 1 : -1;
            BaseClass term = BaseClass::tangent_chern(ring, i) * lambda_pow[static_cast<std::size_t>(k - i)];
            ck += term * (sign * binomial(n - i, k - i));
        }
        out.push_back(std::move(ck));
    }
    return out;
}

BundleClass euler_class_unreduced(const ChernRing& ring) {
    auto chern_e = twisted_cotangent_chern(ring);
    BundleClass e(ring);
    for (int i = 0; i <= ring.n; ++i) e.add(chern_e[static_cast<std::size_t>(i)], ring.n - i);
    return e;
}

BundleClass euler_class(const ChernRing& ring) { return euler_class_unreduced(ring).reduced(); }

BaseClass pushforward(const BundleClass& x) { return x.reduced().coefficient(x.ring().n - 1); }

BaseClass pushforward_euler(const ChernRing& ring) { return pushforward(euler_class_unreduced(ring)); }

}  // namespace nodal

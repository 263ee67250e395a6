#include "lass/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace lass {

namespace {

void fill(std::size_t var, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        fill(var + 1, remaining - e, cur, out);
    }
}

void erase_zeros(Polynomial& f) {
    for (auto it = f.begin(); it != f.end();) {
        if (sgn(it->second) == 0)
            it = f.erase(it);
        else
            ++it;
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t m, unsigned degree) {
    std::vector<Exponent> out;
    if (m == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent cur(m, 0);
    fill(0, degree, cur, out);
    return out;
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

MonomialBasis::MonomialBasis(std::size_t variables, unsigned max_degree, unsigned min_degree)
    : variables_(variables), max_degree_(max_degree) {
    for (unsigned d = min_degree; d <= max_degree; ++d)
        for (auto& e : monomials_of_degree(variables, d)) {
            position_.emplace(e, monomials_.size());
            monomials_.push_back(std::move(e));
        }
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
    const auto it = position_.find(e);
    return it == position_.end() ? monomials_.size() : it->second;
}

std::string MonomialBasis::label(std::size_t i) const {
    const Exponent& e = monomials_.at(i);
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "·";
        s += "w" + std::to_string(v + 1);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

Polynomial truncate(const Polynomial& f, unsigned max_degree) {
    Polynomial out;
    for (const auto& [e, c] : f)
        if (total_degree(e) <= max_degree && sgn(c) != 0) out.emplace(e, c);
    return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [e, c] : b) out[e] += c;
    erase_zeros(out);
    return out;
}

Polynomial scale(const Scalar& s, const Polynomial& a) {
    Polynomial out;
    if (sgn(s) == 0) return out;
    for (const auto& [e, c] : a) out.emplace(e, s * c);
    return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned max_degree) {
    Polynomial out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            if (ea.size() != eb.size()) throw std::invalid_argument("multiply: variable count mismatch");
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (total_degree(e) > max_degree) continue;
            out[e] += ca * cb;
        }
    erase_zeros(out);
    return out;
}

Polynomial derivative(const Polynomial& f, std::size_t variable) {
    Polynomial out;
    for (const auto& [e, c] : f) {
        if (e.at(variable) == 0) continue;
        Exponent d = e;
        --d[variable];
        out[d] += c * static_cast<long>(e[variable]);
    }
    erase_zeros(out);
    return out;
}

Polynomial constant(std::size_t variables, const Scalar& c) {
    Polynomial out;
    if (sgn(c) != 0) out.emplace(Exponent(variables, 0), c);
    return out;
}

Polynomial monomial(const Exponent& e, const Scalar& c) {
    Polynomial out;
    if (sgn(c) != 0) out.emplace(e, c);
    return out;
}

bool is_zero(const Polynomial& f) {
    for (const auto& [e, c] : f)
        if (sgn(c) != 0) return false;
    return true;
}

unsigned order(const Polynomial& f) {
    unsigned best = ~0u;
    for (const auto& [e, c] : f)
        if (sgn(c) != 0) best = std::min(best, total_degree(e));
    if (best == ~0u) throw std::invalid_argument("order of the zero polynomial");
    return best;
}

}  // namespace lass

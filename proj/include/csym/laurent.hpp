#ifndef CSYM_LAURENT_HPP
#define CSYM_LAURENT_HPP

#include "csym/perm.hpp"
#include "csym/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csym {

// Monomial exponents; entries may be negative.
using ExpVec = std::vector<int>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline ExpVec exp_neg(const ExpVec& a) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline ExpVec exp_scale(int c, const ExpVec& a) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

// [v]_+ componentwise.
inline ExpVec exp_pos(const ExpVec& a) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] > 0 ? a[i] : 0;
    return out;
}

inline ExpVec exp_unit(int n, int k, int c = 1) {
    ExpVec e(n, 0);
    e[k] = c;
    return e;
}

// Sparse multivariate Laurent polynomial over Q. Terms are kept in a map
// keyed by exponent vector (lexicographic order), never storing a zero
// coefficient. Values are immutable in spirit: all operations return new
// polynomials.
class LaurentPoly {
public:
    explicit LaurentPoly(int n = 0) : n_(n) {}

    static LaurentPoly zero(int n) { return LaurentPoly(n); }

    static LaurentPoly constant(int n, const Rat& c) {
        LaurentPoly p(n);
        if (c != 0) p.terms_[ExpVec(n, 0)] = c;
        return p;
    }

    static LaurentPoly monomial(const ExpVec& e, const Rat& c) {
        LaurentPoly p(static_cast<int>(e.size()));
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    // x_k (0-based).
    static LaurentPoly variable(int n, int k) {
        return monomial(exp_unit(n, k), Rat(1));
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    Rat coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const ExpVec& e, const Rat& c) {
        if (static_cast<int>(e.size()) != n_)
            throw error("term exponent length does not match variable count");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly out(n_);
        for (auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_same_n(o);
        LaurentPoly out = *this;
        for (auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        check_same_n(o);
        LaurentPoly out = *this;
        for (auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_same_n(o);
        LaurentPoly out(n_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) out.add_term(exp_add(e1, e2), c1 * c2);
        return out;
    }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly out(n_);
        if (c == 0) return out;
        for (auto& [e, k] : terms_) out.terms_[e] = k * c;
        return out;
    }

    LaurentPoly mul_monomial(const ExpVec& e, const Rat& c = Rat(1)) const {
        LaurentPoly out(n_);
        if (c == 0) return out;
        for (auto& [e1, c1] : terms_) out.terms_[exp_add(e1, e)] = c1 * c;
        return out;
    }

    // Nonnegative powers only; inversion exists just for monomials.
    LaurentPoly pow(int e) const {
        if (e < 0) {
            if (terms_.size() == 1)
                return monomial(exp_scale(e, terms_.begin()->first),
                                rat_pow(terms_.begin()->second, e));
            throw error("negative power of a non-monomial Laurent polynomial");
        }
        LaurentPoly acc = constant(n_, Rat(1));
        LaurentPoly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return acc;
    }

    // deg^k / deg_k; both 0 on the zero polynomial. k is 0-based.
    int deg_max(int k) const {
        check_var(k);
        if (terms_.empty()) return 0;
        int m = terms_.begin()->first[k];
        for (auto& [e, c] : terms_) m = std::max(m, e[k]);
        return m;
    }

    int deg_min(int k) const {
        check_var(k);
        if (terms_.empty()) return 0;
        int m = terms_.begin()->first[k];
        for (auto& [e, c] : terms_) m = std::min(m, e[k]);
        return m;
    }

    bool has_negative_exponent() const {
        for (auto& [e, c] : terms_)
            for (int v : e)
                if (v < 0) return true;
        return false;
    }

    // F(sigma(x)): substitutes x_i -> x_{sigma(i)}.
    LaurentPoly permute(const Permutation& sigma) const {
        if (sigma.size() != n_) throw error("permutation size mismatch");
        Permutation inv = sigma.inverse();
        LaurentPoly out(n_);
        for (auto& [e, c] : terms_) out.terms_[inv.act(e)] = c;
        return out;
    }

    // Exact evaluation. point_i must be nonzero wherever x_i carries a
    // negative exponent.
    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != n_)
            throw error("evaluation point size mismatch");
        Rat total(0);
        for (auto& [e, c] : terms_) {
            Rat term = c;
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (point[i] == 0 && e[i] < 0)
                    throw error("evaluation: zero raised to negative power");
                term *= rat_pow(point[i], e[i]);
            }
            total += term;
        }
        return total;
    }

    // Exact division in the Laurent ring; nullopt when not divisible.
    // Both operands are shifted to plain polynomials first; lead terms are
    // lex-greatest, and exactness forces every quotient exponent to stay
    // nonnegative, which bounds the loop.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const {
        check_same_n(divisor);
        if (divisor.is_zero()) throw error("division by zero polynomial");
        if (is_zero()) return zero(n_);
        ExpVec da(n_, 0), db(n_, 0);
        for (int i = 0; i < n_; ++i) {
            da[i] = -deg_min(i);
            db[i] = -divisor.deg_min(i);
        }
        LaurentPoly rem = mul_monomial(da);
        LaurentPoly div = divisor.mul_monomial(db);
        LaurentPoly quot(n_);
        const auto dlead = std::prev(div.terms_.end());
        while (!rem.is_zero()) {
            ExpVec rexp = std::prev(rem.terms_.end())->first;
            Rat rcoeff = std::prev(rem.terms_.end())->second;
            ExpVec qe = exp_sub(rexp, dlead->first);
            for (int v : qe)
                if (v < 0) return std::nullopt;
            Rat qc = rcoeff / dlead->second;
            quot.add_term(qe, qc);
            rem = rem - div.mul_monomial(qe, qc);
        }
        return quot.mul_monomial(exp_sub(db, da));
    }

    std::string str(const std::vector<std::string>& names = {}) const;

    bool operator==(const LaurentPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return std::lexicographical_compare(
            terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
            [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
    }

private:
    void check_same_n(const LaurentPoly& o) const {
        if (n_ != o.n_) throw error("variable count mismatch");
    }
    void check_var(int k) const {
        if (k < 0 || k >= n_) throw error("variable index out of range");
    }

    int n_;
    std::map<ExpVec, Rat> terms_;
};

// Normal form F = T / x^d with x_i not dividing T; eta_i = deg^i T.
// The zero polynomial is represented as T = 0, d = 0, eta = 0.
struct TypedLaurent {
    LaurentPoly T;
    ExpVec d;
    ExpVec eta;
};

TypedLaurent normalize_type(const LaurentPoly& F);
LaurentPoly reconstruct(const TypedLaurent& t);

// Slice f_{k,i} of a polynomial with nonnegative exponents:
// f_{k,i} = sum over terms with k-th exponent i, divided by x_k^i.
LaurentPoly slice(const LaurentPoly& T, int k, int i);
LaurentPoly slice(const TypedLaurent& t, int k, int i);

} // namespace csym

#endif

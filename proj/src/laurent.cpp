#include "csym/laurent.hpp"

#include <sstream>

namespace csym {

TypedLaurent normalize_type(const LaurentPoly& F) {
    int n = F.nvars();
    TypedLaurent out{LaurentPoly(n), ExpVec(n, 0), ExpVec(n, 0)};
    if (F.is_zero()) return out;
    for (int i = 0; i < n; ++i) out.d[i] = -F.deg_min(i);
    out.T = F.mul_monomial(out.d);
    for (int i = 0; i < n; ++i) out.eta[i] = out.T.deg_max(i);
    return out;
}

LaurentPoly reconstruct(const TypedLaurent& t) {
    return t.T.mul_monomial(exp_neg(t.d));
}

LaurentPoly slice(const LaurentPoly& T, int k, int i) {
    LaurentPoly out(T.nvars());
    for (auto& [e, c] : T.terms()) {
        if (e[k] != i) continue;
        ExpVec e2 = e;
        e2[k] = 0;
        out.add_term(e2, c);
    }
    return out;
}

LaurentPoly slice(const TypedLaurent& t, int k, int i) {
    if (i < 0 || i > t.eta[k]) return LaurentPoly::zero(t.T.nvars());
    return slice(t.T, k, i);
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = false;
        for (int v : e)
            if (v != 0) has_vars = true;
        if (!has_vars || a != 1) os << to_string(a);
        bool printed = !has_vars || a != 1;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            if (i < static_cast<int>(names.size()))
                os << names[i];
            else
                os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace csym

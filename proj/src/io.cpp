#include "csym/io.hpp"

#include <iomanip>
#include <sstream>

namespace csym {

ParamMap parse_params(const std::string& text) {
    ParamMap out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw error("parameter assignment must look like name=value: '" +
                        item + "'");
        std::string name = item.substr(0, eq);
        out[name] = parse_rat(item.substr(eq + 1));
    }
    return out;
}

Rat rat_from_json_string(const std::string& s, const ParamMap& params) {
    if (!s.empty() && (isdigit(s[0]) || s[0] == '-')) return parse_rat(s);
    auto it = params.find(s);
    if (it == params.end()) throw error("unbound parameter '" + s + "'");
    return it->second;
}

namespace {

Int int_from_json_string(const std::string& s, const ParamMap& params) {
    Rat q = rat_from_json_string(s, params);
    if (q.get_den() != 1) throw error("expected an integer, got " + to_string(q));
    return q.get_num();
}

std::vector<int> small_vec(const Json& j) {
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

} // namespace

Json poly_to_json(const LaurentPoly& F) {
    Json terms = Json::array();
    for (auto& [e, c] : F.terms()) {
        Json t;
        t["e"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = F.nvars();
    out["terms"] = std::move(terms);
    return out;
}

LaurentPoly poly_from_json(const Json& j, const ParamMap& params) {
    LaurentPoly out(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Rat num = rat_from_json_string(t.at("num").get<std::string>(), params);
        Rat den = t.contains("den")
                      ? rat_from_json_string(t.at("den").get<std::string>(), params)
                      : Rat(1);
        if (den == 0) throw error("zero denominator in polynomial term");
        out.add_term(small_vec(t.at("e")), num / den);
    }
    return out;
}

Json seedlet_to_json(const Seedlet& w) {
    Json out;
    out["s"] = w.s + 1;
    out["b"] = w.b;
    out["r"] = w.r;
    Json z = Json::array();
    for (auto& v : w.Z) z.push_back(v.get_str());
    out["Z"] = std::move(z);
    return out;
}

Seedlet seedlet_from_json(const Json& j, const ParamMap& params) {
    int s = j.at("s").get<int>() - 1;
    ExpVec b = small_vec(j.at("b"));
    int r = j.at("r").get<int>();
    std::vector<Int> Z;
    for (const auto& z : j.at("Z"))
        Z.push_back(int_from_json_string(z.get<std::string>(), params));
    return make_seedlet(s, std::move(b), r, std::move(Z));
}

Json map_to_json(const ClusterSymmetricMap& psi) {
    Json out;
    Json sig = Json::array();
    for (int v : psi.sigma.image()) sig.push_back(v + 1);
    out["sigma"] = std::move(sig);
    out["seedlet"] = seedlet_to_json(psi.omega);
    return out;
}

ClusterSymmetricMap map_from_json(const Json& j, const ParamMap& params) {
    std::vector<int> img = small_vec(j.at("sigma"));
    for (int& v : img) --v;
    Seedlet w = seedlet_from_json(j.at("seedlet"), params);
    return make_map(Permutation(img), w.s, std::move(w));
}

Json seed_to_json(const Seed& seed) {
    Json out;
    out["B"] = seed.B;
    out["R"] = seed.R;
    Json z = Json::array();
    for (auto& row : seed.Z) {
        Json zr = Json::array();
        for (auto& v : row) zr.push_back(v.get_str());
        z.push_back(std::move(zr));
    }
    out["Z"] = std::move(z);
    return out;
}

Seed seed_from_json(const Json& j, const ParamMap& params) {
    IntMatrix B;
    for (const auto& row : j.at("B")) B.push_back(small_vec(row));
    std::vector<int> R = small_vec(j.at("R"));
    std::vector<std::vector<Int>> Z;
    for (const auto& row : j.at("Z")) {
        std::vector<Int> zr;
        for (const auto& v : row)
            zr.push_back(int_from_json_string(v.get<std::string>(), params));
        Z.push_back(std::move(zr));
    }
    return make_seed(std::move(B), std::move(R), std::move(Z));
}

namespace {

std::string vec_str(const ExpVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string zs_str(const std::vector<Int>& z) {
    std::string out = "[";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) out += ",";
        out += z[i].get_str();
    }
    return out + "]";
}

std::string image_str(const Permutation& p) {
    std::string out = "[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p(i) + 1);
    }
    return out + "]";
}

} // namespace

Json pair_report_to_json(const PairReport& report) {
    Json out;
    out["eta"] = report.eta;
    out["d"] = report.d;
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
        Json jp;
        Json sig = Json::array();
        for (int v : p.map.sigma.image()) sig.push_back(v + 1);
        jp["sigma"] = std::move(sig);
        jp["cycles"] = p.map.sigma.cycle_string();
        jp["s"] = p.map.s + 1;
        jp["b"] = p.map.omega.b;
        jp["r"] = p.map.omega.r;
        Json z = Json::array();
        for (auto& v : p.map.omega.Z) z.push_back(v.get_str());
        jp["Z"] = std::move(z);
        jp["b_twin"] = p.twin.b;
        Json zt = Json::array();
        for (auto& v : p.twin.Z) zt.push_back(v.get_str());
        jp["Z_twin"] = std::move(zt);
        jp["P"] = poly_to_json(p.P);
        Json dt = Json::array();
        for (size_t i = 0; i < p.dtilde.forced.size(); ++i) {
            if (p.dtilde.forced[i] != INT_MIN)
                dt.push_back(std::to_string(p.dtilde.forced[i]));
            else
                dt.push_back("d" + std::to_string(p.dtilde.param[i] + 1));
        }
        jp["d_total"] = std::move(dt);
        pairs.push_back(std::move(jp));
    }
    out["pairs"] = std::move(pairs);
    Json triv;
    Json dirs = Json::array();
    for (int i : report.trivial.zero_eta_dirs) dirs.push_back(i + 1);
    triv["zero_eta_directions"] = std::move(dirs);
    Json sigs = Json::array();
    for (const auto& s : report.trivial.symmetries) {
        Json img = Json::array();
        for (int v : s.image()) img.push_back(v + 1);
        sigs.push_back(std::move(img));
    }
    triv["T_symmetries"] = std::move(sigs);
    out["trivial"] = std::move(triv);
    return out;
}

std::string pair_report_to_text(const PairReport& report) {
    std::ostringstream os;
    os << "type eta = " << vec_str(report.eta) << ", d = " << vec_str(report.d)
       << "\n";
    os << "non-trivial cluster symmetric pairs: " << report.pairs.size() << "\n";
    if (!report.pairs.empty()) {
        std::vector<std::array<std::string, 6>> rows;
        rows.push_back({"sigma", "s", "b (twin)", "r", "Z (twin)", "d+dtilde"});
        for (const auto& p : report.pairs) {
            std::string dt = "(";
            for (size_t i = 0; i < p.dtilde.forced.size(); ++i) {
                if (i) dt += ",";
                dt += p.dtilde.forced[i] != INT_MIN
                          ? std::to_string(p.dtilde.forced[i])
                          : "d" + std::to_string(p.dtilde.param[i] + 1);
            }
            dt += ")";
            rows.push_back({p.map.sigma.cycle_string() + " " +
                                image_str(p.map.sigma),
                            std::to_string(p.map.s + 1),
                            vec_str(p.map.omega.b) + " / " + vec_str(p.twin.b),
                            std::to_string(p.map.omega.r),
                            zs_str(p.map.omega.Z) + " / " + zs_str(p.twin.Z),
                            dt});
        }
        std::array<size_t, 6> width{};
        for (const auto& r : rows)
            for (size_t i = 0; i < 6; ++i) width[i] = std::max(width[i], r[i].size());
        for (const auto& r : rows) {
            os << "  ";
            for (size_t i = 0; i < 6; ++i)
                os << std::left << std::setw(static_cast<int>(width[i]) + 2)
                   << r[i];
            os << "\n";
        }
    }
    os << "trivial family: zero-eta directions {";
    for (size_t i = 0; i < report.trivial.zero_eta_dirs.size(); ++i) {
        if (i) os << ",";
        os << report.trivial.zero_eta_dirs[i] + 1;
    }
    os << "}, " << report.trivial.symmetries.size()
       << " permutation symmetr" << (report.trivial.symmetries.size() == 1 ? "y" : "ies")
       << " of T\n";
    return os.str();
}

} // namespace csym

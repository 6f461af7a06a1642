#include "csym/cli.hpp"

#include "csym/diophantine.hpp"
#include "csym/hle.hpp"
#include "csym/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace csym {

namespace {

constexpr const char* kVersion = "csym 1.0.0";

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CLI::ValidationError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

ExpVec parse_int_list(const std::string& text) {
    ExpVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<Int> parse_big_list(const std::string& text) {
    std::vector<Int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(item);
    return out;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw error("cannot write file: " + path);
    f << content;
}

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].get_str();
    }
    return s + ")";
}

std::pair<BuiltinTable, int> parse_builtin(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--builtin expects rank2:i or rank3:i");
    std::string name = text.substr(0, colon);
    int idx = std::stoi(text.substr(colon + 1));
    if (name == "rank2") return {BuiltinTable::Rank2, idx};
    if (name == "rank3") return {BuiltinTable::Rank3, idx};
    throw CLI::ValidationError("unknown builtin table: " + name);
}

struct Common {
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out_path, "write output to a file");
}

int cmd_invariants(const std::vector<std::string>& map_files,
                   const std::string& eta_text, const std::string& d_text,
                   const std::string& params_text, const Common& c,
                   std::ostream& out) {
    ParamMap params = parse_params(params_text);
    std::vector<ClusterSymmetricMap> maps;
    for (const auto& f : map_files)
        maps.push_back(map_from_json(load_json(f), params));
    ExpVec eta = parse_int_list(eta_text);
    ExpVec d = parse_int_list(d_text);

    auto reports = invariants_for(maps, eta, d);
    Json j;
    j["eta"] = eta;
    j["d"] = d;
    j["dimension"] = reports.size();
    Json basis = Json::array();
    for (const auto& rep : reports) {
        Json e;
        e["poly"] = poly_to_json(rep.F);
        e["eta_realized"] = rep.eta_realized;
        e["d_realized"] = rep.d_realized;
        e["full_support"] = rep.full_support;
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);

    if (c.format == "json") {
        write_output(c.out_path, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "kernel dimension: " << reports.size() << "\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            os << "[" << i + 1 << "] F = " << rep.F.str() << "\n";
            os << "    realized type eta = ";
            for (size_t k = 0; k < rep.eta_realized.size(); ++k)
                os << (k ? "," : "(") << rep.eta_realized[k];
            os << "), d = ";
            for (size_t k = 0; k < rep.d_realized.size(); ++k)
                os << (k ? "," : "(") << rep.d_realized[k];
            os << "), full_support = " << (rep.full_support ? "yes" : "no")
               << "\n";
        }
        write_output(c.out_path, os.str(), out);
        if (!c.out_path.empty()) out << "wrote " << c.out_path << "\n";
    }
    return 0;
}

int cmd_pairs(const std::string& poly_file, const std::string& d_text,
              const std::string& params_text, const Common& c,
              std::ostream& out) {
    ParamMap params = parse_params(params_text);
    LaurentPoly F = poly_from_json(load_json(poly_file), params);
    if (!d_text.empty()) F = F.mul_monomial(exp_neg(parse_int_list(d_text)));
    auto report = find_pairs(F);
    if (c.format == "json") {
        write_output(c.out_path, pair_report_to_json(report).dump(2) + "\n", out);
    } else {
        out << pair_report_to_text(report);
        if (!c.out_path.empty()) {
            write_output(c.out_path, pair_report_to_json(report).dump(2) + "\n",
                         out);
            out << "wrote " << c.out_path << "\n";
        }
    }
    return 0;
}

int cmd_markov_suite(const std::string& rows_text, const std::string& kgrid,
                     const Int& bound, int jobs, std::ostream& out) {
    std::vector<int> rows;
    if (rows_text == "all") {
        for (int i = 1; i <= 10; ++i) rows.push_back(i);
    } else {
        for (int v : parse_int_list(rows_text)) rows.push_back(v);
    }
    long klo = 0, khi = 0;
    auto dots = kgrid.find("..");
    if (dots == std::string::npos) {
        klo = khi = std::stol(kgrid);
    } else {
        klo = std::stol(kgrid.substr(0, dots));
        khi = std::stol(kgrid.substr(dots + 2));
    }
    bool all_ok = true;
    for (int i : rows) {
        int arity = builtin_arity(BuiltinTable::Rank3, i);
        std::vector<Int> params(arity, klo);
        bool more = true;
        while (more) {
            auto row = builtin(BuiltinTable::Rank3, i, params);
            auto rep = verify_orbit_equals_solutions(row.eq, bound, jobs);
            out << "rank3:" << i << " params=(";
            for (int a = 0; a < arity; ++a)
                out << (a ? "," : "") << params[a].get_str();
            out << ") solutions=" << rep.count
                << (rep.equal ? " PASS" : " FAIL") << "\n";
            if (!rep.equal) {
                all_ok = false;
                for (const auto& t : rep.only_in_orbit)
                    out << "  orbit only: " << tuple_str(t) << "\n";
                for (const auto& t : rep.only_in_solutions)
                    out << "  solutions only: " << tuple_str(t) << "\n";
            }
            // next parameter tuple
            more = false;
            for (int a = 0; a < arity; ++a) {
                if (params[a] < khi) {
                    ++params[a];
                    for (int b2 = 0; b2 < a; ++b2) params[b2] = klo;
                    more = true;
                    break;
                }
            }
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact toolkit for cluster symmetric maps, invariant Laurent "
                 "polynomials, and Markov-cluster equations"};
    app.require_subcommand(1);
    bool version = false;
    app.add_flag("--version", version, "print version and exit");

    // invariants
    std::vector<std::string> inv_maps;
    std::string inv_eta, inv_d, inv_params;
    Common inv_common;
    auto* inv = app.add_subcommand("invariants",
                                   "solve the homogeneous linear system of a "
                                   "map (or several, intersected)");
    inv->add_option("--map", inv_maps, "map JSON file (repeatable)")->required();
    inv->add_option("--eta", inv_eta, "eta as comma list")->required();
    inv->add_option("--d", inv_d, "d as comma list")->required();
    inv->add_option("--params", inv_params, "name=value list");
    add_common(inv, inv_common);

    // pairs
    std::string pr_poly, pr_d, pr_params;
    Common pr_common;
    auto* pr = app.add_subcommand(
        "pairs", "find all non-trivial cluster symmetric pairs");
    pr->add_option("--poly", pr_poly, "polynomial JSON file")->required();
    pr->add_option("--d", pr_d, "extra denominator exponents (comma list)");
    pr->add_option("--params", pr_params, "name=value list");
    add_common(pr, pr_common);

    // verify
    std::string vf_poly, vf_map, vf_params;
    auto* vf = app.add_subcommand("verify", "test invariance of F under a map");
    vf->add_option("--poly", vf_poly)->required();
    vf->add_option("--map", vf_map)->required();
    vf->add_option("--params", vf_params, "name=value list");

    // seed-set
    std::string ss_seed;
    auto* ss = app.add_subcommand("seed-set",
                                  "cluster symmetric set of a seed");
    ss->add_option("--seed", ss_seed)->required();

    // correspond
    std::string co_map, co_seed, co_params;
    auto* co = app.add_subcommand("correspond",
                                  "does the map correspond to the seed?");
    co->add_option("--map", co_map)->required();
    co->add_option("--seed", co_seed)->required();
    co->add_option("--params", co_params);

    // seed-search
    std::vector<std::string> se_maps;
    std::string se_params;
    int se_bound = 3;
    Common se_common;
    auto* se = app.add_subcommand("seed-search",
                                  "seeds to which every map corresponds");
    se->add_option("--map", se_maps)->required();
    se->add_option("--bound", se_bound, "entry bound (default 3)");
    se->add_option("--params", se_params);
    add_common(se, se_common);

    // classify
    std::string cl_seed;
    auto* cl = app.add_subcommand("classify", "rank-2/rank-3 classification");
    cl->add_option("--seed", cl_seed)->required();

    // orbit
    std::string or_builtin, or_params, or_start = "";
    std::string or_bound = "100";
    int or_jobs = 1;
    Common or_common;
    auto* orb = app.add_subcommand("orbit",
                                   "mutation orbit of a builtin equation");
    orb->add_option("--builtin", or_builtin, "rank2:i or rank3:i")->required();
    orb->add_option("--params", or_params, "comma list of integers");
    orb->add_option("--bound", or_bound, "height bound")->required();
    orb->add_option("--start", or_start, "start tuple (default all ones)");
    orb->add_option("--jobs", or_jobs);
    add_common(orb, or_common);

    // descend
    std::string de_builtin, de_params, de_point;
    auto* de = app.add_subcommand("descend",
                                  "height descent word to (1,...,1)");
    de->add_option("--builtin", de_builtin)->required();
    de->add_option("--params", de_params);
    de->add_option("--point", de_point)->required();

    // markov-suite
    std::string ms_rows = "all", ms_kgrid = "0..3", ms_bound = "200";
    int ms_jobs = 1;
    auto* ms = app.add_subcommand(
        "markov-suite", "orbit = solution-set check for the rank-3 table");
    ms->add_option("--i", ms_rows, "row list or 'all'");
    ms->add_option("--kgrid", ms_kgrid, "parameter range lo..hi");
    ms->add_option("--bound", ms_bound, "coordinate bound");
    ms->add_option("--jobs", ms_jobs);

    std::vector<const char*> cargs;
    cargs.push_back("csym");
    for (const auto& a : args) cargs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (version) {
            out << kVersion << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (version) {
        out << kVersion << "\n";
        return 0;
    }

    try {
        if (inv->parsed())
            return cmd_invariants(inv_maps, inv_eta, inv_d, inv_params,
                                  inv_common, out);
        if (pr->parsed())
            return cmd_pairs(pr_poly, pr_d, pr_params, pr_common, out);
        if (vf->parsed()) {
            ParamMap params = parse_params(vf_params);
            LaurentPoly F = poly_from_json(load_json(vf_poly), params);
            auto psi = map_from_json(load_json(vf_map), params);
            out << "invariant: " << (is_invariant(F, psi) ? "true" : "false")
                << "\n";
            return 0;
        }
        if (ss->parsed()) {
            Seed seed = seed_from_json(load_json(ss_seed));
            auto sym = cluster_symmetric_set(seed);
            out << "cluster symmetric set: " << sym.size() << " element(s)\n";
            for (const auto& g : sym) {
                out << "  sigma = " << g.sigma.cycle_string() << " [";
                for (int i = 0; i < g.sigma.size(); ++i)
                    out << (i ? "," : "") << g.sigma(i) + 1;
                out << "], s = " << g.s + 1
                    << ", sign = " << (g.sign > 0 ? "+" : "-") << "\n";
            }
            return 0;
        }
        if (co->parsed()) {
            ParamMap params = parse_params(co_params);
            auto psi = map_from_json(load_json(co_map), params);
            Seed seed = seed_from_json(load_json(co_seed), params);
            out << "corresponds: " << (corresponds(psi, seed) ? "true" : "false")
                << "\n";
            return 0;
        }
        if (se->parsed()) {
            ParamMap params = parse_params(se_params);
            std::vector<ClusterSymmetricMap> maps;
            for (const auto& f : se_maps)
                maps.push_back(map_from_json(load_json(f), params));
            auto seeds = seed_search(maps, se_bound);
            if (se_common.format == "json") {
                Json j = Json::array();
                for (const auto& s : seeds) j.push_back(seed_to_json(s));
                write_output(se_common.out_path, j.dump(2) + "\n", out);
            } else {
                out << "seeds found: " << seeds.size() << "\n";
                for (const auto& s : seeds) {
                    out << "  B =";
                    for (const auto& row : s.B) {
                        out << " [";
                        for (size_t k = 0; k < row.size(); ++k)
                            out << (k ? "," : "") << row[k];
                        out << "]";
                    }
                    out << "  R = [";
                    for (size_t k = 0; k < s.R.size(); ++k)
                        out << (k ? "," : "") << s.R[k];
                    out << "]\n";
                }
                if (!se_common.out_path.empty()) {
                    Json j = Json::array();
                    for (const auto& s : seeds) j.push_back(seed_to_json(s));
                    write_output(se_common.out_path, j.dump(2) + "\n", out);
                    out << "wrote " << se_common.out_path << "\n";
                }
            }
            return 0;
        }
        if (cl->parsed()) {
            Seed seed = seed_from_json(load_json(cl_seed));
            if (seed.rank() == 2)
                out << "class: " << to_string(classify_rank2(seed)) << "\n";
            else if (seed.rank() == 3)
                out << "class: " << to_string(classify_rank3(seed)) << "\n";
            else
                throw error("classify handles rank 2 and rank 3 seeds");
            return 0;
        }
        if (orb->parsed()) {
            auto [table, idx] = parse_builtin(or_builtin);
            auto row = builtin(table, idx, parse_big_list(or_params));
            Tuple start(row.eq.nvars(), Int(1));
            if (!or_start.empty()) {
                start.clear();
                for (auto& v : parse_big_list(or_start)) start.push_back(v);
            }
            auto orbit = orbit_enumerate(row.eq, start, Int(or_bound));
            if (or_common.format == "json") {
                Json j = Json::array();
                for (const auto& t : orbit) {
                    Json jt = Json::array();
                    for (const auto& v : t) jt.push_back(v.get_str());
                    j.push_back(std::move(jt));
                }
                write_output(or_common.out_path, j.dump(2) + "\n", out);
            } else {
                std::ostringstream os;
                os << "orbit size: " << orbit.size() << "\n";
                for (const auto& t : orbit) os << tuple_str(t) << "\n";
                write_output(or_common.out_path, os.str(), out);
            }
            return 0;
        }
        if (de->parsed()) {
            auto [table, idx] = parse_builtin(de_builtin);
            auto row = builtin(table, idx, parse_big_list(de_params));
            Tuple point;
            for (auto& v : parse_big_list(de_point)) point.push_back(v);
            auto word = descend(row.eq, point);
            out << "word:";
            for (int w : word) out << " " << w + 1;
            out << "\n";
            return 0;
        }
        if (ms->parsed())
            return cmd_markov_suite(ms_rows, ms_kgrid, Int(ms_bound), ms_jobs,
                                    out);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace csym

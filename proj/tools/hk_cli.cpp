// hk: command-line front end to the library.
//
// Input is taken from the positional argument, then --input FILE, then stdin.
// Exit codes: 0 success, 2 malformed input or usage, 1 internal failure or failed verification.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hk/crystal_graph.hpp"
#include "hk/grothendieck.hpp"
#include "hk/insertion.hpp"
#include "hk/io.hpp"
#include "hk/local_crystal_n3.hpp"
#include "hk/residue.hpp"
#include "hk/star_crystal.hpp"
#include "hk/svt_crystal.hpp"
#include "hk/uncrowding.hpp"
#include "hk/verification.hpp"

using namespace hk;

namespace {

struct Source {
    std::string text;
    std::string file;
};

std::string read_source(const Source& s) {
    if (!s.text.empty()) return s.text;
    std::ostringstream buf;
    if (!s.file.empty()) {
        std::ifstream in(s.file);
        if (!in) throw ValidationError("cannot open " + s.file);
        buf << in.rdbuf();
    } else {
        buf << std::cin.rdbuf();
    }
    std::string out = buf.str();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

Json trace_json(const std::vector<Path>& trace) {
    Json out = Json::array();
    for (const Path& p : trace) {
        Json cells = Json::array();
        for (const Cell& c : p) cells.push_back({c.row, c.col});
        out.push_back(cells);
    }
    return out;
}

void add_source(CLI::App* cmd, Source& src, const std::string& what) {
    cmd->add_option("value", src.text, what + " (default: --input or stdin)");
    cmd->add_option("--input", src.file, "read input from FILE");
}

// Accepts factorization text or {"factors", "n"} JSON.
DecreasingFactorization read_factorization(const std::string& text, int n) {
    if (looks_like_json(text)) return factorization_from_json(parse_json(text));
    return parse_factorization(text, n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystals, insertions and Grothendieck expansions in the 0-Hecke monoid"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "decreasing factorizations of a word's element");
    std::string enum_word;
    int enum_n = 0, enum_m = 3, enum_excess = 0;
    std::string enum_format = "text";
    enumerate_cmd->add_option("--word", enum_word, "Hecke word, e.g. 12132")->required();
    enumerate_cmd->add_option("--n", enum_n, "letters lie in [1, n-1] (default: inferred)");
    enumerate_cmd->add_option("--factors,-m", enum_m, "number of factors")->check(CLI::Range(0, 64));
    enumerate_cmd->add_option("--max-excess", enum_excess, "largest excess")->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

    // insert
    auto* insert_cmd = app.add_subcommand("insert", "Hecke or star insertion of a factorization or biword");
    Source insert_src;
    std::string algo = "star";
    bool insert_trace = false, insert_inverse = false;
    int insert_n = 0;
    add_source(insert_cmd, insert_src, "factorization text, biword JSON, or {\"P\",\"Q\"} with --inverse");
    insert_cmd->add_option("--algo", algo)->check(CLI::IsMember({"star", "hecke"}));
    insert_cmd->add_flag("--trace", insert_trace, "include the bumping paths");
    insert_cmd->add_flag("--inverse", insert_inverse, "recover the biword from a star insertion pair");
    insert_cmd->add_option("--n", insert_n, "letters lie in [1, n-1] (default: inferred)");

    // residue
    auto* residue_cmd = app.add_subcommand("residue", "residue map from set-valued tableaux to factorizations");
    Source residue_src;
    bool residue_invert = false;
    std::string residue_shape;
    int residue_m = 0, residue_n = 0;
    add_source(residue_cmd, residue_src, "tableau text or JSON, or a factorization with --invert");
    residue_cmd->add_flag("--invert,--inverse", residue_invert, "factorization in, tableau JSON out");
    residue_cmd->add_option("--shape", residue_shape, "skew shape for the inverse, e.g. (4,4,1,1)/(2,2)");
    residue_cmd->add_option("--factors,-m", residue_m, "number of factors (default: largest entry)");
    residue_cmd->add_option("--n", residue_n, "alphabet bound (default: rows + first row length)");

    // uncrowd
    auto* uncrowd_cmd = app.add_subcommand("uncrowd", "uncrowding of a set-valued tableau");
    Source uncrowd_src;
    add_source(uncrowd_cmd, uncrowd_src, "tableau text or JSON");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "crystal component containing a seed");
    std::string seed, crystal = "star", graph_format = "dot";
    int graph_m = 0;
    graph_cmd->add_option("--seed", seed, "factorization, or tableau text for --crystal svt")->required();
    graph_cmd->add_option("--crystal", crystal)->check(CLI::IsMember({"star", "svt", "n3"}));
    graph_cmd->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "text", "json"}));
    graph_cmd->add_option("--entries,-m", graph_m, "largest tableau entry for --crystal svt");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "beta-graded Schur expansion of a Grothendieck polynomial");
    std::string expand_word, method = "enumerate", expand_format = "text";
    int vars = 0, max_beta = 0;
    expand_cmd->add_option("--word", expand_word, "Hecke word")->required();
    expand_cmd->add_option("--vars", vars, "number of variables")->required()->check(CLI::Range(1, 12));
    expand_cmd->add_option("--max-beta", max_beta, "largest beta degree")->check(CLI::NonNegativeNumber);
    expand_cmd->add_option("--method", method)->check(CLI::IsMember({"enumerate", "crystal", "both"}));
    expand_cmd->add_option("--format", expand_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks over bounded instance spaces");
    std::string tag = "all";
    bool deep = false, verify_json = false, serial = false;
    verify_cmd->add_option("--theorem", tag, "tag or 'all'");
    verify_cmd->add_flag("--deep", deep, "larger bounds");
    verify_cmd->add_flag("--json", verify_json, "one JSON report per line");
    verify_cmd->add_flag("--serial", serial, "single thread");
    verify_cmd->add_flag_callback("--list", [] {
        for (const auto& t : theorem_tags()) std::cout << t << "  " << theorem_summary(t) << "\n";
        std::exit(0);
    }, "list tags and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*enumerate_cmd) {
            const HeckeWord w = parse_word(enum_word, enum_n);
            const auto all = enumerate(eval(w), enum_m, enum_excess);
            if (enum_format == "json") {
                Json out = Json::array();
                for (const auto& f : all) out.push_back(to_json(f));
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& f : all) std::cout << format_factorization(f) << "\n";
            }
        } else if (*insert_cmd) {
            const std::string text = read_source(insert_src);
            if (insert_inverse) {
                const Json j = parse_json(text);
                if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
                    throw ValidationError("expected {\"P\": ..., \"Q\": ...}");
                const HeckeBiword b = star_inverse(tableau_from_json(j["P"]), tableau_from_json(j["Q"]), insert_n);
                std::cout << to_json(b).dump() << "\n";
                return 0;
            }
            HeckeBiword b;
            int n = insert_n;
            if (looks_like_json(text)) {
                const Json j = parse_json(text);
                if (j.contains("factors")) {
                    const auto f = factorization_from_json(j);
                    b = to_biword(f);
                    if (!n) n = f.n();
                } else {
                    b = biword_from_json(j);
                }
            } else {
                const auto f = parse_factorization(text, insert_n);
                b = to_biword(f);
                if (!n) n = f.n();
            }
            Json out;
            if (algo == "hecke") {
                const HeckeInsertion r = hecke_insert(b);
                out = to_json(r);
                if (insert_trace) out["trace"] = trace_json(r.trace);
            } else {
                const StarInsertion r = star_insert(b, n);
                out = to_json(r);
                if (insert_trace) out["trace"] = trace_json(r.trace);
            }
            std::cout << out.dump() << "\n";
        } else if (*residue_cmd) {
            const std::string text = read_source(residue_src);
            if (residue_invert) {
                const auto f = read_factorization(text, residue_n);
                const SetValuedTableau t =
                    residue_shape.empty() ? res_inv(f) : res_inv_shaped(f, parse_shape(residue_shape));
                std::cout << to_json(t).dump() << "\n";
            } else {
                const SetValuedTableau t = looks_like_json(text) ? svt_from_json(parse_json(text)) : parse_svt(text);
                std::cout << format_factorization(res(t, residue_m, residue_n)) << "\n";
            }
        } else if (*uncrowd_cmd) {
            const std::string text = read_source(uncrowd_src);
            const SetValuedTableau t = looks_like_json(text) ? svt_from_json(parse_json(text)) : parse_svt(text);
            std::cout << to_json(uncrowd(t)).dump() << "\n";
        } else if (*graph_cmd) {
            CrystalGraph g;
            if (crystal == "svt") {
                const SetValuedTableau t = parse_svt(seed);
                if (auto err = validate_svt(t)) throw ValidationError(*err);
                const int m = graph_m ? graph_m : std::max(2, max_entry(t));
                g = build_crystal(std::vector<SetValuedTableau>{t}, m - 1, f_svt, e_svt,
                                  [m](const SetValuedTableau& x) { return weight(x, m); },
                                  [](const SetValuedTableau& x) { return to_text(x); });
            } else {
                const auto f = parse_factorization(seed);
                const auto label = [](const DecreasingFactorization& x) { return format_factorization(x); };
                const auto wt = [](const DecreasingFactorization& x) { return weight(x); };
                if (crystal == "n3") {
                    factors3(f);  // rejects anything outside the n = 3 alphabet
                    g = build_crystal(std::vector{f}, f.m() - 1, f3, e3, wt, label);
                } else {
                    if (!is_fully_commutative(f))
                        throw DomainError("seed " + seed + " is not fully commutative");
                    g = build_crystal(std::vector{f}, f.m() - 1, f_star, e_star, wt, label);
                }
            }
            if (graph_format == "json") {
                std::cout << to_json(g).dump() << "\n";
            } else if (graph_format == "dot") {
                std::cout << to_dot(g);
            } else {
                for (int v = 0; v < g.size(); ++v)
                    for (int i = 1; i <= g.colors; ++i)
                        if (g.f_at(i, v) >= 0) std::cout << g.labels[v] << " -" << i << "-> " << g.labels[g.f_at(i, v)] << "\n";
            }
        } else if (*expand_cmd) {
            const HeckeWord w = parse_word(expand_word);
            const HeckeElement e = eval(w);
            std::optional<BetaSchurSeries> a, b;
            if (method != "crystal") a = schur_expand(grothendieck_poly(e, vars, max_beta), max_beta);
            if (method != "enumerate") b = schur_coeffs_via_crystal(e, vars, max_beta);
            if (a && b && *a != *b) {
                std::cerr << "the two methods disagree\nenumerate:\n"
                          << format_series(*a) << "crystal:\n" << format_series(*b);
                return 1;
            }
            const BetaSchurSeries& s = a ? *a : *b;
            if (expand_format == "json") std::cout << to_json(s).dump() << "\n";
            else if (expand_format == "csv") std::cout << format_series_csv(s);
            else std::cout << format_series(s);
        } else if (*verify_cmd) {
            std::vector<std::string> tags;
            if (tag == "all") tags = theorem_tags();
            else tags = {tag};
            bool ok = true;
            for (const auto& t : tags) {
                const Bounds bounds = deep ? deep_bounds(t) : default_bounds(t);
                const Report r = check_theorem(t, bounds, serial ? Exec::serial : Exec::parallel);
                ok = ok && r.ok();
                if (verify_json) {
                    std::cout << to_json(r).dump() << std::endl;
                } else {
                    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.tag << ": " << r.instances << " instances, "
                              << r.failures << " failures, " << r.seconds << " s";
                    if (!r.ok()) std::cout << "\n  first failure: " << r.witness;
                    std::cout << std::endl;
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {  // ValidationError, ReconstructionError, unknown tags
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

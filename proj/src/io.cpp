#include "hk/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hk {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

std::vector<int> parse_cell(const std::string& tok) {
    std::vector<int> cell;
    if (tok.front() == '{') {
        if (tok.back() != '}') throw ValidationError("unterminated cell '" + tok + "'");
        std::string body = tok.substr(1, tok.size() - 2);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::string part;
        while (in >> part) {
            if (part.find_first_not_of("0123456789") != std::string::npos) throw ValidationError("bad cell '" + tok + "'");
            cell.push_back(std::stoi(part));
        }
    } else {
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("bad cell '" + tok + "'");
            cell.push_back(c - '0');
        }
    }
    if (cell.empty()) throw ValidationError("empty cell '" + tok + "'");
    return cell;
}

std::string cell_text(const std::vector<int>& cell) {
    const bool digits = std::all_of(cell.begin(), cell.end(), [](int a) { return a >= 0 && a <= 9; });
    std::string s = digits ? "" : "{";
    for (std::size_t k = 0; k < cell.size(); ++k) {
        if (!digits && k) s += ',';
        s += std::to_string(cell[k]);
    }
    return digits ? s : s + "}";
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception&) {
        throw ValidationError(std::string("field '") + what + "' has the wrong type");
    }
}

}  // namespace

std::string to_text(const SetValuedTableau& t) {
    std::string out;
    for (int r = 1; r <= t.num_rows(); ++r) {
        if (r > 1) out += " | ";
        std::vector<std::string> toks(t.inner[r - 1], ".");
        for (const auto& cell : t.rows[r - 1]) toks.push_back(cell_text(cell));
        for (std::size_t k = 0; k < toks.size(); ++k) out += (k ? " " : "") + toks[k];
    }
    return out;
}

std::string to_text(const Tableau& t) { return to_text(to_set_valued(t)); }

SetValuedTableau parse_svt(const std::string& text) {
    SetValuedTableau t;
    std::string rest = trimmed(text);
    if (rest.empty()) return t;
    std::istringstream rows(rest);
    std::string row;
    while (std::getline(rows, row, '|')) {
        std::istringstream toks(row);
        std::string tok;
        int inner = 0;
        std::vector<std::vector<int>> cells;
        while (toks >> tok) {
            if (tok == ".") {
                if (!cells.empty()) throw ValidationError("inner cell '.' after a filled cell");
                ++inner;
            } else {
                cells.push_back(parse_cell(tok));
            }
        }
        t.inner.push_back(inner);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Tableau parse_tableau(const std::string& text) { return to_single_valued(parse_svt(text)); }

bool looks_like_json(const std::string& text) {
    const std::string t = trimmed(text);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

Json to_json(const HeckeWord& w) { return {{"letters", w.letters}, {"n", w.n}}; }

Json to_json(const DecreasingFactorization& f) { return {{"factors", f.written()}, {"n", f.n()}}; }

Json to_json(const HeckeBiword& b) { return {{"top", b.top}, {"bottom", b.bottom}}; }

Json to_json(const Tableau& t) { return {{"inner", t.inner}, {"rows", t.rows}}; }

Json to_json(const SetValuedTableau& t) { return {{"inner", t.inner}, {"rows", t.rows}}; }

Json to_json(const HeckeInsertion& r) { return {{"P", to_json(r.p)}, {"Q", to_json(r.q)}}; }

Json to_json(const StarInsertion& r) { return {{"P", to_json(r.p)}, {"Q", to_json(r.q)}}; }

Json to_json(const Uncrowding& u) { return {{"P", to_json(u.p)}, {"Q", to_json(u.q)}}; }

Json to_json(const BetaSchurSeries& s) {
    Json terms = Json::array();
    for (const auto& [key, c] : s.coeffs) terms.push_back({{"beta", key.first}, {"partition", key.second}, {"coefficient", c}});
    return {{"vars", s.vars}, {"max_beta", s.max_beta}, {"terms", terms}};
}

Json to_json(const CrystalGraph& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (int v = 0; v < g.size(); ++v) nodes.push_back({{"id", v}, {"label", g.labels[v]}, {"weight", g.weights[v]}});
    for (int i = 1; i <= g.colors; ++i)
        for (int v = 0; v < g.size(); ++v)
            if (g.f_at(i, v) >= 0) edges.push_back({{"from", v}, {"to", g.f_at(i, v)}, {"color", i}});
    return {{"colors", g.colors}, {"nodes", nodes}, {"edges", edges}};
}

Json to_json(const Report& r) {
    return {{"tag", r.tag}, {"instances", r.instances}, {"failures", r.failures}, {"seconds", r.seconds},
            {"witness", r.witness}, {"ok", r.ok()}};
}

HeckeWord word_from_json(const Json& j) {
    return HeckeWord(as<std::vector<int>>(field(j, "letters"), "letters"), as<int>(field(j, "n"), "n"));
}

DecreasingFactorization factorization_from_json(const Json& j) {
    return DecreasingFactorization(as<std::vector<Factor>>(field(j, "factors"), "factors"), as<int>(field(j, "n"), "n"));
}

HeckeBiword biword_from_json(const Json& j) {
    HeckeBiword b{as<std::vector<int>>(field(j, "top"), "top"), as<std::vector<int>>(field(j, "bottom"), "bottom")};
    validate_biword(b);
    return b;
}

Tableau tableau_from_json(const Json& j) {
    Tableau t;
    t.rows = as<std::vector<std::vector<int>>>(field(j, "rows"), "rows");
    t.inner = j.contains("inner") ? as<std::vector<int>>(j.at("inner"), "inner") : std::vector<int>{};
    if (t.inner.size() > t.rows.size()) throw ValidationError("inner lists more rows than rows");
    t.inner.resize(t.rows.size(), 0);
    return t;
}

SetValuedTableau svt_from_json(const Json& j) {
    SetValuedTableau t;
    t.rows = as<std::vector<std::vector<std::vector<int>>>>(field(j, "rows"), "rows");
    t.inner = j.contains("inner") ? as<std::vector<int>>(j.at("inner"), "inner") : std::vector<int>{};
    if (t.inner.size() > t.rows.size()) throw ValidationError("inner lists more rows than rows");
    t.inner.resize(t.rows.size(), 0);
    return t;
}

BetaSchurSeries series_from_json(const Json& j) {
    BetaSchurSeries s;
    s.vars = as<int>(field(j, "vars"), "vars");
    s.max_beta = as<int>(field(j, "max_beta"), "max_beta");
    for (const Json& term : field(j, "terms"))
        s.coeffs[{as<int>(field(term, "beta"), "beta"), as<Partition>(field(term, "partition"), "partition")}] =
            as<std::int64_t>(field(term, "coefficient"), "coefficient");
    return s;
}

}  // namespace hk

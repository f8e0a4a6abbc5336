#include "higgs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace higgs::io {

namespace fs = std::filesystem;
using nlohmann::json;

const char* mode_name(asymptotic::Mode m) {
    return m == asymptotic::Mode::y ? "y" : "uv";
}

std::optional<asymptotic::Mode> mode_from_name(const std::string& s) {
    if (s == "y") return asymptotic::Mode::y;
    if (s == "uv") return asymptotic::Mode::uv;
    return std::nullopt;
}

std::string poly_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::string mono;
        for (size_t i = 0; i < p.vars().size(); ++i) {
            if (t.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(p.vars()[i]);
            if (t.e[i] != 1) mono += "^" + std::to_string(t.e[i]);
        }
        Int nu = Int(boost::multiprecision::numerator(c));
        Int de = Int(boost::multiprecision::denominator(c));
        std::string coef = int_str(nu);
        if (de != 1) coef += "/" + int_str(de);
        if (mono.empty())
            out += coef;
        else if (coef == "1")
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

std::string ratfn_text(const RationalFn& f) {
    if (f.is_polynomial()) return poly_text(f.as_poly());
    return "(" + poly_text(f.num()) + ") / (" + poly_text(f.den()) + ")";
}

json poly_to_json(const LaurentPoly& p) {
    json vars = json::array();
    for (size_t i = 0; i < p.vars().size(); ++i) vars.push_back(var_name(p.vars()[i]));
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exp = json::array();
        for (size_t i = 0; i < p.vars().size(); ++i) exp.push_back(t.e[i]);
        terms.push_back({{"exp", std::move(exp)},
                         {"num", int_str(Int(boost::multiprecision::numerator(t.c)))},
                         {"den", int_str(Int(boost::multiprecision::denominator(t.c)))}});
    }
    return {{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    VarSet vs;
    const auto& names = j.at("vars");
    if (names.size() > 4) throw ParseError("polynomial JSON: too many variables");
    for (const auto& n : names) {
        auto v = var_from_name(n.get<std::string>());
        if (!v) throw ParseError("polynomial JSON: unknown variable name");
        vs.vs[vs.n++] = *v;
    }
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        Exp e = exp_zero();
        const auto& ej = t.at("exp");
        if (ej.size() != vs.size()) throw ParseError("polynomial JSON: exponent arity mismatch");
        for (size_t i = 0; i < ej.size(); ++i) e[i] = ej[i].get<int32_t>();
        Rat c(Int(t.at("num").get<std::string>()), Int(t.at("den").get<std::string>()));
        if (c == 0) throw ParseError("polynomial JSON: zero term");
        terms.push_back({e, std::move(c)});
    }
    if (!std::is_sorted(terms.begin(), terms.end(),
                        [](const auto& x, const auto& y) { return x.e < y.e; }))
        throw ParseError("polynomial JSON: terms out of order");
    if (std::adjacent_find(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
            return x.e == y.e;
        }) != terms.end())
        throw ParseError("polynomial JSON: duplicate exponent vector");
    return LaurentPoly::from_sorted_terms(vs, std::move(terms));
}

json ratfn_to_json(const RationalFn& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFn ratfn_from_json(const json& j) {
    return RationalFn::reduced(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

FixtureCase parse_case_header(const std::string& line, const fs::path& file, int lineno) {
    FixtureCase c;
    std::istringstream in(line);
    std::string word;
    in >> word;  // "case"
    bool saw_mode = false;
    while (in >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": malformed case parameter '" + word + "'");
        std::string key = word.substr(0, eq), val = word.substr(eq + 1);
        if (key == "g")
            c.g = std::stoi(val);
        else if (key == "p")
            c.p = std::stoi(val);
        else if (key == "r")
            c.r = std::stoi(val);
        else if (key == "e")
            c.e = std::stol(val);
        else if (key == "mode") {
            auto m = mode_from_name(val);
            if (!m)
                throw ParseError(file.string() + ":" + std::to_string(lineno) +
                                 ": unknown mode '" + val + "'");
            c.mode = *m;
            saw_mode = true;
        } else
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": unknown case parameter '" + key + "'");
    }
    if (!saw_mode)
        throw ParseError(file.string() + ":" + std::to_string(lineno) + ": case without mode");
    c.id = "g" + std::to_string(c.g) + "_p" + std::to_string(c.p) + "_r" + std::to_string(c.r) +
           "_e" + std::to_string(c.e) + "_" + mode_name(c.mode);
    return c;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

std::vector<FixtureCase> read_fixture_file(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open fixture file " + file.string());
    std::vector<FixtureCase> out;
    std::string line;
    int lineno = 0;
    std::optional<FixtureCase> current;
    auto finish = [&] {
        if (!current) return;
        if (blank(current->expr))
            throw ParseError(file.string() + ": case " + current->id + " has no expression");
        out.push_back(std::move(*current));
        current.reset();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (blank(line)) {
            finish();
            continue;
        }
        if (line.rfind("case ", 0) == 0) {
            finish();
            current = parse_case_header(line, file, lineno);
            continue;
        }
        if (!current)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": expression outside a case block");
        current->expr += line;
        current->expr += "\n";
    }
    finish();
    return out;
}

std::vector<FixtureCase> read_fixture_dir(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& ent : fs::directory_iterator(dir))
        if (ent.is_regular_file() && ent.path().extension() == ".txt")
            files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    std::vector<FixtureCase> out;
    for (const auto& f : files) {
        auto cases = read_fixture_file(f);
        out.insert(out.end(), std::make_move_iterator(cases.begin()),
                   std::make_move_iterator(cases.end()));
    }
    return out;
}

std::optional<CacheEntries> load_invariants(const fs::path& file) {
    std::ifstream in(file);
    if (!in) return CacheEntries{};
    try {
        json j = json::parse(in);
        if (!j.is_object() || j.value("version", std::string{}) != kCacheVersion)
            return std::nullopt;
        CacheEntries out;
        for (const auto& ent : j.at("entries")) {
            auto m = mode_from_name(ent.at("mode").get<std::string>());
            if (!m) return std::nullopt;
            InvariantKey k{ent.at("g").get<int>(), ent.at("p").get<int>(), ent.at("r").get<int>(),
                           ent.at("e").get<long>(), *m};
            out.emplace(std::move(k), ratfn_from_json(ent.at("value")));
        }
        return out;
    } catch (...) {
        return std::nullopt;
    }
}

void save_invariants(const fs::path& file, const CacheEntries& entries) {
    json ents = json::array();
    for (const auto& [k, v] : entries)
        ents.push_back({{"g", k.g},
                        {"p", k.p},
                        {"r", k.r},
                        {"e", k.e},
                        {"mode", mode_name(k.mode)},
                        {"value", ratfn_to_json(v)}});
    json j{{"version", kCacheVersion}, {"entries", std::move(ents)}};
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) throw ParseError("cannot write cache file " + tmp.string());
        out << j.dump() << "\n";
    }
    fs::rename(tmp, file);
}

} // namespace higgs::io

#include "cmv/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmv {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ' || ch == '\t' || ch == ',') {
            if (!cur.empty()) out.push_back(std::exchange(cur, ""));
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s, int lineno)
{
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad integer '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad integer '" + s + "'");
    return v;
}

double parse_d(const std::string& s, int lineno)
{
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad number '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad number '" + s + "'");
    return v;
}

} // namespace

RunConfig parse_config_text(const std::string& text)
{
    RunConfig cfg;
    cfg.y.clear();
    bool have_delta = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        if (key == "base_disc") {
            cfg.tower.base_disc = parse_ll(val, lineno);
        } else if (key == "delta") {
            auto tk = tokens(val);
            if (tk.empty() || tk.size() > 2)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": delta takes one or two coordinates");
            cfg.tower.delta_a = parse_ll(tk[0], lineno);
            cfg.tower.delta_b = tk.size() == 2 ? parse_ll(tk[1], lineno) : 0;
            have_delta = true;
        } else if (key == "h") {
            cfg.tower.h = parse_ll(val, lineno);
        } else if (key == "ck") {
            cfg.tower.ck = parse_ll(val, lineno);
        } else if (key == "alphas") {
            std::stringstream chunks(val);
            std::string chunk;
            while (std::getline(chunks, chunk, ';')) {
                auto tk = tokens(chunk);
                if (tk.empty()) continue;
                if (tk.size() > 2)
                    throw std::invalid_argument("config line " + std::to_string(lineno) +
                                                ": alpha takes one or two coordinates");
                long long a = parse_ll(tk[0], lineno);
                long long b = tk.size() == 2 ? parse_ll(tk[1], lineno) : 0;
                cfg.alphas.emplace_back(a, b);
            }
        } else if (key == "alpha_bound") {
            cfg.alpha_bound = parse_ll(val, lineno);
        } else if (key == "y") {
            for (const std::string& tk : tokens(val)) cfg.y.push_back(parse_d(tk, lineno));
        } else if (key == "tolerance") {
            cfg.tolerance = parse_d(val, lineno);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                        key + "'");
        }
    }

    if (!have_delta) throw std::invalid_argument("config: delta is required");
    if (cfg.alphas.empty() && cfg.alpha_bound <= 0)
        throw std::invalid_argument("config: either alphas or a positive alpha_bound is required");
    if (cfg.y.empty()) cfg.y.push_back(1.0);
    for (double v : cfg.y)
        if (!(v > 0)) throw std::invalid_argument("config: y values must be positive");
    if (!(cfg.tolerance > 0)) throw std::invalid_argument("config: tolerance must be positive");
    return cfg;
}

RunConfig parse_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::vector<ElementF> expand_alphas(const FieldTower& tower, const RunConfig& cfg)
{
    std::vector<ElementF> out;
    if (!cfg.alphas.empty()) {
        for (auto [a, b] : cfg.alphas) out.push_back(make_element(tower.F, a, b));
    } else {
        long long B = cfg.alpha_bound;
        if (tower.F.n == 1) {
            for (long long a = -B; a <= B; ++a)
                if (a != 0) out.push_back(make_element(tower.F, a));
        } else {
            for (long long a = -B; a <= B; ++a)
                for (long long b = -B; b <= B; ++b)
                    if (a != 0 || b != 0) out.push_back(make_element(tower.F, a, b));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty alpha grid");
    return out;
}

} // namespace cmv

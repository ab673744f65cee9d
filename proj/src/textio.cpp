#include "kvf/textio.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace kvf {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

int unit_index(char ch) {
    switch (ch) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
    }
    return -1;
}

}  // namespace

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s0) {
    const std::string s = strip(s0);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_ll(s));
    return Rat(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

std::string hc_str(const HyperComplex<Rat>& v) {
    static const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int k = 0; k < v.dim() && k < 4; ++k) {
        const Rat& c = v.c[k];
        if (c.is_zero()) continue;
        const Rat a = c.abs();
        std::string mag = a.str();
        if (k > 0 && mag == "1") mag.clear();
        if (out.empty())
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? "-" : "+";
        out += mag + units[k];
    }
    if (out.empty()) out = "0";
    return out;
}

HyperComplex<Rat> parse_hc(const std::string& s0, Field f) {
    if (f == Field::O) throw std::invalid_argument("octonion literals are not supported");
    std::string s;
    for (char ch : s0)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    HyperComplex<Rat> v(f);
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::string num;
        while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) num += s[pos++];
        int idx = 0;
        if (pos < s.size() && unit_index(s[pos]) >= 0) {
            idx = unit_index(s[pos]);
            ++pos;
        }
        Rat coef = num.empty() ? Rat(1) : parse_rat(num);
        if (num.empty() && idx == 0) throw std::invalid_argument("bad scalar literal: " + s0);
        if (idx >= field_dim(f)) throw std::invalid_argument("unit outside the field: " + s0);
        if (sign < 0) coef = -coef;
        v.c[idx] += coef;
    }
    return v;
}

std::string matrix_str(const RatMatrix& m) {
    std::string out;
    for (int i = 0; i < m.n; ++i) {
        if (i) out += ";\n";
        for (int j = 0; j < m.n; ++j) {
            if (j) out += ", ";
            out += hc_str(m.at(i, j));
        }
    }
    return out;
}

RatMatrix parse_matrix(const std::string& s, Field f) {
    auto rows = split(strip(s), ';');
    while (!rows.empty() && strip(rows.back()).empty()) rows.pop_back();
    const int n = int(rows.size());
    if (n == 0) throw std::invalid_argument("empty matrix literal");
    RatMatrix m(f, n);
    for (int i = 0; i < n; ++i) {
        auto cells = split(rows[i], ',');
        if (int(cells.size()) != n)
            throw std::invalid_argument("matrix literal is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = parse_hc(cells[j], f);
    }
    return m;
}

std::vector<HyperComplex<Rat>> parse_vector(const std::string& s, Field f) {
    auto rows = split(strip(s), ';');
    while (!rows.empty() && strip(rows.back()).empty()) rows.pop_back();
    std::vector<HyperComplex<Rat>> v;
    if (rows.size() == 1) {
        for (auto& cell : split(rows[0], ',')) v.push_back(parse_hc(cell, f));
    } else {
        for (auto& row : rows) {
            auto cells = split(row, ',');
            if (cells.size() != 1) throw std::invalid_argument("vector literal must be one row or one column");
            v.push_back(parse_hc(cells[0], f));
        }
    }
    return v;
}

std::string vector_str(const std::vector<HyperComplex<Rat>>& v) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += hc_str(v[k]);
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace kvf

// Copyright 2026 The cedist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cedist/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cedist {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) a++;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) b--;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? next : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::vector<LaurentPoly> parse_poly_list(const std::string& text, size_t line_no) {
    std::vector<LaurentPoly> out;
    for (const auto& part : split(text, ',')) {
        if (part.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty polynomial entry");
        try {
            out.push_back(LaurentPoly::parse(part));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

PauliVec parse_paulivec_row(const std::string& line, size_t line_no) {
    size_t bar = line.find('|');
    if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": expected one '|' between Z and X parts");
    auto z = parse_poly_list(line.substr(0, bar), line_no);
    auto x = parse_poly_list(line.substr(bar + 1), line_no);
    if (z.size() != x.size())
        throw ParseError("line " + std::to_string(line_no) + ": Z and X parts differ in length");
    return PauliVec(std::move(z), std::move(x));
}

GF4Generator parse_gf4_row(const std::string& line, size_t line_no, size_t n) {
    GF4Generator g;
    g.entries.resize(n);
    auto frames = split(line, ';');
    for (size_t f = 0; f < frames.size(); f++) {
        std::istringstream is(frames[f]);
        std::string sym;
        size_t q = 0;
        while (is >> sym) {
            if (q >= n)
                throw ParseError("line " + std::to_string(line_no) + ": more than n=" +
                                 std::to_string(n) + " symbols in a frame");
            int exp = static_cast<int>(f);
            if (sym == "0") {
                // zero contributes nothing
            } else if (sym == "w") {
                g.entries[q].omega += LaurentPoly::monomial(exp);
            } else if (sym == "W") {
                g.entries[q].omega_bar += LaurentPoly::monomial(exp);
            } else if (sym == "1") {
                g.entries[q].omega += LaurentPoly::monomial(exp);
                g.entries[q].omega_bar += LaurentPoly::monomial(exp);
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": F4 symbol '" + sym +
                                 "' outside {0,1,w,W}");
            }
            q++;
        }
        if (q != n)
            throw ParseError("line " + std::to_string(line_no) + ": frame has " + std::to_string(q) +
                             " symbols, expected n=" + std::to_string(n));
    }
    return g;
}

Construction infer_construction(size_t gens, size_t ebits) {
    if (ebits == 0) return Construction::Raw;
    if (ebits == gens) return gens == 1 ? Construction::Single : Construction::Multi;
    return Construction::Css;
}

}  // namespace

GeneratorSet parse_generator_set(std::string_view text, bool css_expand) {
    std::istringstream is{std::string(text)};
    std::string line;
    size_t line_no = 0;
    size_t n = 0;
    std::string fmt;
    bool header_seen = false;
    std::vector<PauliVec> rows;

    while (std::getline(is, line)) {
        line_no++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            std::istringstream hs(t);
            std::string field;
            while (hs >> field) {
                size_t eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("line " + std::to_string(line_no) + ": bad header field '" + field + "'");
                std::string key = field.substr(0, eq), val = field.substr(eq + 1);
                if (key == "n") {
                    try {
                        n = std::stoul(val);
                    } catch (const std::exception&) {
                        throw ParseError("line " + std::to_string(line_no) + ": bad n '" + val + "'");
                    }
                } else if (key == "fmt") {
                    fmt = val;
                } else {
                    throw ParseError("line " + std::to_string(line_no) + ": unknown header key '" + key + "'");
                }
            }
            if (n == 0 || (fmt != "paulivec" && fmt != "gf4" && fmt != "binary"))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must be 'n=<int> fmt=<paulivec|gf4|binary>'");
            header_seen = true;
            continue;
        }
        if (fmt == "paulivec") {
            PauliVec v = parse_paulivec_row(t, line_no);
            if (v.frame_size() < n)
                throw ParseError("line " + std::to_string(line_no) + ": row has fewer than n columns");
            rows.push_back(std::move(v));
        } else if (fmt == "gf4") {
            auto pair = import_gf4(parse_gf4_row(t, line_no, n));
            rows.push_back(std::move(pair[0]));
            rows.push_back(std::move(pair[1]));
        } else {
            auto polys = parse_poly_list(t, line_no);
            if (polys.size() != n)
                throw ParseError("line " + std::to_string(line_no) + ": parity row has " +
                                 std::to_string(polys.size()) + " entries, expected n=" + std::to_string(n));
            rows.push_back(PauliVec(polys, std::vector<LaurentPoly>(n)));
        }
    }
    if (!header_seen) throw ParseError("missing header line 'n=<int> fmt=<...>'");
    if (rows.empty()) throw ParseError("no generators");

    if (css_expand) {
        if (fmt != "binary") throw ParseError("css expansion applies to fmt=binary files");
        size_t count = rows.size();
        for (size_t i = 0; i < count; i++)
            rows.push_back(PauliVec(std::vector<LaurentPoly>(n), rows[i].z));
    }

    size_t total = rows[0].frame_size();
    for (const auto& r : rows)
        if (r.frame_size() != total) throw ParseError("generators disagree on frame size");
    if (total < n) throw ParseError("rows narrower than the declared n");
    Construction construction = infer_construction(rows.size(), total - n);
    return GeneratorSet(n, total - n, std::move(rows), construction);
}

GeneratorSet load_generator_set(const std::string& path, bool css_expand) {
    return parse_generator_set(read_text_file(path), css_expand);
}

std::string format_generator_set(const GeneratorSet& g) {
    std::ostringstream os;
    os << "n=" << g.n_noisy << " fmt=paulivec\n";
    for (const auto& gen : g.gens) {
        for (size_t q = 0; q < gen.frame_size(); q++) {
            if (q) os << ", ";
            os << gen.z[q].str();
        }
        os << " | ";
        for (size_t q = 0; q < gen.frame_size(); q++) {
            if (q) os << ", ";
            os << gen.x[q].str();
        }
        os << '\n';
    }
    return os.str();
}

void save_generator_set(const GeneratorSet& g, const std::string& path) {
    write_text_file(path, format_generator_set(g));
}

std::string generator_window_string(const GeneratorSet& g, size_t index) {
    const PauliVec& gen = g.gens.at(index);
    return to_pauli_window(gen, gen.delay(), gen.degree()).str();
}

std::string syndrome_table_string(const GeneratorSet& g) {
    GeneratorSet gn = g.delay_normalized();
    int nu = gn.constraint_length();
    const Pauli letters[3] = {Pauli::X, Pauli::Z, Pauli::Y};

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> columns;  // per label, nu+1 cells
    for (size_t q = 0; q < gn.n_noisy; q++) {
        for (Pauli letter : letters) {
            PauliVec e;
            e.z.assign(gn.n_total(), LaurentPoly::zero());
            e.x.assign(gn.n_total(), LaurentPoly::zero());
            if (pauli_z_bit(letter)) e.z[q] = LaurentPoly::one();
            if (pauli_x_bit(letter)) e.x[q] = LaurentPoly::one();
            std::vector<std::string> col;
            for (int r = 0; r <= nu; r++) {
                std::string cell;
                for (size_t j = 0; j < gn.gens.size(); j++)
                    cell += shifted_symplectic(gn.gens[j], e).coeff(-r) ? '1' : '0';
                col.push_back(cell);
            }
            labels.push_back(std::string(1, pauli_char(letter)) + std::to_string(q + 1));
            columns.push_back(std::move(col));
        }
    }

    std::ostringstream os;
    os << "shift";
    for (const auto& l : labels) os << '\t' << l;
    os << '\n';
    for (int r = 0; r <= nu; r++) {
        os << r;
        for (const auto& col : columns) os << '\t' << col[static_cast<size_t>(r)];
        os << '\n';
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace cedist

/*
   Copyright 2026 the gqc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gqc/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gqc {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = raw.find_last_not_of(" \t\r");
        out.push_back({no, raw.substr(begin, end - begin + 1)});
    }
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

unsigned parse_uint(const std::string& tok, int line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    unsigned long v = std::stoul(tok);
    if (v > 0xffffffffUL) throw ParseError(line, "integer out of range");
    return static_cast<unsigned>(v);
}

class Cursor {
   public:
    explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& next() {
        if (done()) throw ParseError(0, "unexpected end of file");
        return lines_[pos_++];
    }
    int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

   private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

// "q: 2" or "q: p^s modulus: c0 .. cs"
Field parse_field_line(const Line& line) {
    auto toks = split(line.text);
    if (toks.size() < 2 || toks[0] != "q:") throw ParseError(line.number, "expected 'q: <order>'");
    const std::string& spec = toks[1];
    auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) {
            unsigned q = parse_uint(spec, line.number);
            if (q < 2) throw ParseError(line.number, "field order must be at least 2");
            unsigned p = q;
            for (unsigned d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    break;
                }
            unsigned s = 0;
            unsigned rest = q;
            while (rest > 1 && rest % p == 0) {
                rest /= p;
                ++s;
            }
            if (rest != 1) throw ParseError(line.number, "field order " + spec + " is not a prime power");
            if (toks.size() != 2) throw ParseError(line.number, "unexpected tokens after field order");
            return Field(p, s);
        }
        unsigned p = parse_uint(spec.substr(0, caret), line.number);
        unsigned s = parse_uint(spec.substr(caret + 1), line.number);
        if (toks.size() < 3 || toks[2] != "modulus:")
            throw ParseError(line.number, "extension field needs 'modulus: c0 ... cs'");
        std::vector<Fe> modulus;
        for (std::size_t i = 3; i < toks.size(); ++i) modulus.push_back(parse_uint(toks[i], line.number));
        if (modulus.size() != s + 1) throw ParseError(line.number, "modulus needs s+1 coefficients");
        return Field(p, s, modulus);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

std::vector<int> parse_orbits_line(const Line& line) {
    auto toks = split(line.text);
    if (toks.size() < 2 || toks[0] != "orbits:") throw ParseError(line.number, "expected 'orbits: l1 ... lm'");
    std::vector<int> lengths;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        unsigned l = parse_uint(toks[i], line.number);
        if (l < 1) throw ParseError(line.number, "orbit lengths must be positive");
        lengths.push_back(static_cast<int>(l));
    }
    return lengths;
}

std::vector<Fe> parse_entries(const std::vector<std::string>& toks, std::size_t from, const Field& f,
                              int line) {
    std::vector<Fe> out;
    for (std::size_t i = from; i < toks.size(); ++i) {
        unsigned e = parse_uint(toks[i], line);
        if (e >= f.order())
            throw ParseError(line, "entry " + toks[i] + " is not below the field order " +
                                       std::to_string(f.order()));
        out.push_back(e);
    }
    return out;
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
    Cursor cur(read_lines(in));
    {
        const Line& l = cur.next();
        if (l.text != "gqc-matrix v1") throw ParseError(l.number, "expected header 'gqc-matrix v1'");
    }
    Field f = parse_field_line(cur.next());
    std::vector<int> lengths = parse_orbits_line(cur.next());
    OrbitProfile profile(f, lengths);

    const Line& rows_line = cur.next();
    auto toks = split(rows_line.text);
    if (toks.size() != 2 || toks[0] != "rows:") throw ParseError(rows_line.number, "expected 'rows: <count>'");
    unsigned rows = parse_uint(toks[1], rows_line.number);

    MatrixFq m(f, 0, static_cast<std::size_t>(profile.length()));
    for (unsigned r = 0; r < rows; ++r) {
        if (cur.done()) throw ParseError(cur.last_line(), "expected " + std::to_string(rows) + " row lines");
        const Line& l = cur.next();
        auto rt = split(l.text);
        if (rt.empty() || rt[0] != "row:") throw ParseError(l.number, "expected 'row: e1 ... en'");
        auto entries = parse_entries(rt, 1, f, l.number);
        if (entries.size() != static_cast<std::size_t>(profile.length()))
            throw ParseError(l.number, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                           std::to_string(profile.length()));
        m.append_row(entries);
    }
    if (!cur.done()) throw ParseError(cur.next().number, "trailing content after the last row");
    return {std::move(m), std::move(profile)};
}

ParsedBasis parse_basis(std::istream& in) {
    Cursor cur(read_lines(in));
    {
        const Line& l = cur.next();
        if (l.text != "gqc-basis v1") throw ParseError(l.number, "expected header 'gqc-basis v1'");
    }
    Field f = parse_field_line(cur.next());
    std::vector<int> lengths = parse_orbits_line(cur.next());
    OrbitProfile profile(f, lengths);
    const int m = profile.orbit_count();

    Ordering ordering;
    {
        const Line& l = cur.next();
        auto toks = split(l.text);
        if (toks.size() != 2 || toks[0] != "ordering:")
            throw ParseError(l.number, "expected 'ordering: POT|rPOT'");
        if (toks[1] == "POT")
            ordering = Ordering::POT;
        else if (toks[1] == "rPOT")
            ordering = Ordering::RPOT;
        else
            throw ParseError(l.number, "unknown ordering '" + toks[1] + "'");
    }
    bool reduced;
    {
        const Line& l = cur.next();
        auto toks = split(l.text);
        if (toks.size() != 2 || toks[0] != "reduced:" || (toks[1] != "true" && toks[1] != "false"))
            throw ParseError(l.number, "expected 'reduced: true|false'");
        reduced = toks[1] == "true";
    }

    std::vector<PolyVec> vectors;
    for (int i = 0; i < m; ++i) {
        if (cur.done()) throw ParseError(cur.last_line(), "expected " + std::to_string(m) + " basis lines");
        const Line& l = cur.next();
        auto toks = split(l.text);
        if (toks.size() < 2 || toks[0] != "g" || toks[1] != std::to_string(i + 1) + ":")
            throw ParseError(l.number, "expected 'g " + std::to_string(i + 1) + ": [..] ... [..]'");
        // re-join and split on brackets
        std::string rest;
        for (std::size_t tk = 2; tk < toks.size(); ++tk) rest += toks[tk] + ' ';
        std::vector<Poly> parts;
        std::size_t pos = 0;
        while (pos < rest.size()) {
            while (pos < rest.size() && rest[pos] == ' ') ++pos;
            if (pos >= rest.size()) break;
            if (rest[pos] != '[') throw ParseError(l.number, "expected '[' to open a coefficient list");
            auto close = rest.find(']', pos);
            if (close == std::string::npos) throw ParseError(l.number, "unterminated coefficient list");
            auto body = split(rest.substr(pos + 1, close - pos - 1));
            auto coeffs = parse_entries(body, 0, f, l.number);
            parts.push_back(Poly(f, std::move(coeffs)));
            pos = close + 1;
        }
        if (parts.size() != static_cast<std::size_t>(m))
            throw ParseError(l.number, "expected " + std::to_string(m) + " coefficient lists");
        vectors.push_back(PolyVec(profile, std::move(parts)));
    }
    if (!cur.done()) throw ParseError(cur.next().number, "trailing content after the last basis line");
    return {GrobnerBasis{std::move(vectors), ordering, reduced, std::move(profile)}};
}

std::string format_field(const Field& f) {
    if (f.extension_degree() == 1) return "q: " + std::to_string(f.order());
    std::string s = "q: " + std::to_string(f.characteristic()) + "^" + std::to_string(f.extension_degree()) +
                    " modulus:";
    for (Fe c : f.modulus()) s += ' ' + std::to_string(c);
    return s;
}

void write_matrix(std::ostream& out, const MatrixFq& matrix, const OrbitProfile& profile) {
    out << "gqc-matrix v1\n" << format_field(profile.field()) << "\norbits:";
    for (int l : profile.lengths()) out << ' ' << l;
    out << "\nrows: " << matrix.rows() << '\n';
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        out << "row:";
        for (std::size_t c = 0; c < matrix.cols(); ++c) out << ' ' << matrix.at(r, c);
        out << '\n';
    }
}

void write_basis(std::ostream& out, const GrobnerBasis& basis) {
    out << "gqc-basis v1\n" << format_field(basis.profile.field()) << "\norbits:";
    for (int l : basis.profile.lengths()) out << ' ' << l;
    out << "\nordering: " << (basis.ordering == Ordering::POT ? "POT" : "rPOT");
    out << "\nreduced: " << (basis.reduced ? "true" : "false") << '\n';
    for (int i = 0; i < basis.profile.orbit_count(); ++i) {
        out << "g " << i + 1 << ':';
        for (int j = 0; j < basis.profile.orbit_count(); ++j) out << ' ' << basis.entry(i, j).to_string();
        out << '\n';
    }
}

}  // namespace gqc

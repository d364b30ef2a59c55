#include "cosetlab/ingest/formats.hpp"

#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::ingest {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<long long> integers(const std::string& line, std::size_t lineno) {
    std::istringstream is(line);
    std::vector<long long> out;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'", lineno);
        }
    }
    return out;
}

std::vector<long long> header(const std::vector<std::pair<std::size_t, std::string>>& lines, const std::string& kw,
                              std::size_t nargs) {
    if (lines.empty()) throw ParseError("empty input", 0);
    std::istringstream is(lines[0].second);
    std::string word;
    is >> word;
    if (word != kw) throw ParseError("expected header '" + kw + "'", lines[0].first);
    std::string rest;
    std::getline(is, rest);
    auto v = integers(rest, lines[0].first);
    if (v.size() != nargs) throw ParseError("malformed '" + kw + "' header", lines[0].first);
    for (auto x : v)
        if (x < 0) throw ParseError("negative value in header", lines[0].first);
    return v;
}

}  // namespace

std::string to_string(Format f) {
    switch (f) {
        case Format::images: return "images";
        case Format::cycles: return "cycles";
        case Format::matrix_text: return "matrix_text";
        case Format::slp: return "slp";
    }
    return "?";
}

Format format_from_string(const std::string& s) {
    for (Format f : {Format::images, Format::cycles, Format::matrix_text, Format::slp})
        if (to_string(f) == s) return f;
    throw ParseError("unknown file format '" + s + "'", 0);
}

Format detect_format(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty input", 0);
    std::istringstream is(lines[0].second);
    std::string w;
    is >> w;
    if (w == "perm") return Format::images;
    if (w == "deg") return Format::cycles;
    if (w == "mat") return Format::matrix_text;
    return Format::slp;
}

std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream is(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(is, raw)) {
        ++no;
        std::size_t start = 0;
        while (true) {
            auto slash = raw.find('/', start);
            std::string piece = trim(raw.substr(start, slash == std::string::npos ? std::string::npos : slash - start));
            if (!piece.empty() && piece[0] != '#') out.emplace_back(no, piece);
            if (slash == std::string::npos) break;
            start = slash + 1;
        }
    }
    return out;
}

std::vector<perm::Permutation> parse_images(const std::string& text) {
    auto lines = content_lines(text);
    auto h = header(lines, "perm", 2);
    const auto deg = static_cast<std::size_t>(h[0]);
    const auto count = static_cast<std::size_t>(h[1]);
    if (deg == 0) throw ParseError("degree must be positive", lines[0].first);
    if (lines.size() != count + 1)
        throw ParseError("expected " + std::to_string(count) + " permutation lines, found " +
                             std::to_string(lines.size() - 1),
                         lines.back().first);
    std::vector<perm::Permutation> out;
    for (std::size_t i = 1; i <= count; ++i) {
        auto v = integers(lines[i].second, lines[i].first);
        if (v.size() != deg) throw ParseError("expected " + std::to_string(deg) + " images", lines[i].first);
        std::vector<perm::Point> img(deg);
        std::vector<char> hit(deg, 0);
        for (std::size_t j = 0; j < deg; ++j) {
            if (v[j] < 1 || static_cast<std::size_t>(v[j]) > deg)
                throw ParseError("image " + std::to_string(v[j]) + " out of range", lines[i].first);
            img[j] = static_cast<perm::Point>(v[j] - 1);
            if (hit[img[j]]++) throw ParseError("not a bijection: " + std::to_string(v[j]) + " repeats", lines[i].first);
        }
        out.push_back(perm::Permutation::unchecked(std::move(img)));
    }
    return out;
}

std::string serialize_images(const std::vector<perm::Permutation>& gens) {
    if (gens.empty()) throw Error("serialize_images: no generators");
    std::ostringstream os;
    os << "perm " << gens[0].degree() << ' ' << gens.size() << '\n';
    for (const auto& g : gens) {
        if (g.degree() != gens[0].degree()) throw DegreeMismatch("serialize_images: mixed degrees");
        for (std::size_t i = 0; i < g.degree(); ++i) os << (i ? " " : "") << g[static_cast<perm::Point>(i)] + 1;
        os << '\n';
    }
    return os.str();
}

std::vector<perm::Permutation> parse_cycles(const std::string& text) {
    auto lines = content_lines(text);
    auto h = header(lines, "deg", 1);
    const auto deg = static_cast<std::size_t>(h[0]);
    if (deg == 0) throw ParseError("degree must be positive", lines[0].first);
    std::vector<perm::Permutation> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, s] = lines[i];
        std::vector<std::vector<perm::Point>> cycles;
        std::vector<char> seen(deg, 0);
        std::size_t k = 0;
        while (k < s.size()) {
            if (s[k] == ' ' || s[k] == '\t') {
                ++k;
                continue;
            }
            if (s[k] != '(') throw ParseError("expected '('", no);
            auto close = s.find(')', k);
            if (close == std::string::npos) throw ParseError("unclosed cycle", no);
            std::string body = s.substr(k + 1, close - k - 1);
            for (char& c : body)
                if (c == ',') c = ' ';
            std::vector<perm::Point> cyc;
            for (long long v : integers(body, no)) {
                if (v < 1 || static_cast<std::size_t>(v) > deg)
                    throw ParseError("point " + std::to_string(v) + " exceeds degree " + std::to_string(deg), no);
                auto pt = static_cast<perm::Point>(v - 1);
                if (seen[pt]++) throw ParseError("repeated point " + std::to_string(v), no);
                cyc.push_back(pt);
            }
            if (cyc.size() > 1) cycles.push_back(std::move(cyc));
            k = close + 1;
        }
        out.push_back(perm::Permutation::from_cycles(deg, cycles));
    }
    return out;
}

std::string serialize_cycles(const std::vector<perm::Permutation>& gens) {
    if (gens.empty()) throw Error("serialize_cycles: no generators");
    std::ostringstream os;
    os << "deg " << gens[0].degree() << '\n';
    for (const auto& g : gens) {
        if (g.degree() != gens[0].degree()) throw DegreeMismatch("serialize_cycles: mixed degrees");
        os << g.to_cycle_string() << '\n';
    }
    return os.str();
}

std::vector<mat::Matrix> parse_matrix_text(const std::string& text) {
    auto lines = content_lines(text);
    auto h = header(lines, "mat", 3);
    const int p = static_cast<int>(h[0]);
    const int n = static_cast<int>(h[1]);
    const auto count = static_cast<std::size_t>(h[2]);
    if (!mat::supported_prime(p)) throw ParseError("unsupported prime " + std::to_string(p), lines[0].first);
    if (n < 1 || n > mat::kMaxDim) throw ParseError("unsupported dimension " + std::to_string(n), lines[0].first);
    if (lines.size() != 1 + count * static_cast<std::size_t>(n))
        throw ParseError("expected " + std::to_string(count) + " blocks of " + std::to_string(n) + " rows",
                         lines.back().first);
    std::vector<mat::Matrix> out;
    for (std::size_t b = 0; b < count; ++b) {
        mat::Matrix m(p, n);
        for (int r = 0; r < n; ++r) {
            const auto& [no, s] = lines[1 + b * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)];
            std::string digits;
            for (char c : s)
                if (c != ' ' && c != '\t') digits += c;
            if (static_cast<int>(digits.size()) != n) throw ParseError("expected " + std::to_string(n) + " digits", no);
            for (int c = 0; c < n; ++c) {
                int d = digits[static_cast<std::size_t>(c)] - '0';
                if (d < 0 || d > 9) throw ParseError("not a digit", no);
                if (d >= p) throw ParseError("digit " + std::to_string(d) + " is not below p = " + std::to_string(p), no);
                m.set(r, c, d);
            }
        }
        if (m.determinant() == 0)
            throw ParseError("matrix " + std::to_string(b + 1) + " is not invertible",
                             lines[1 + b * static_cast<std::size_t>(n)].first);
        out.push_back(m);
    }
    return out;
}

std::string serialize_matrix_text(const std::vector<mat::Matrix>& gens) {
    if (gens.empty()) throw Error("serialize_matrix_text: no generators");
    std::ostringstream os;
    os << "mat " << gens[0].p() << ' ' << gens[0].n() << ' ' << gens.size() << '\n';
    for (const auto& m : gens) {
        if (m.p() != gens[0].p() || m.n() != gens[0].n()) throw DegreeMismatch("serialize_matrix_text: mixed shapes");
        for (int r = 0; r < m.n(); ++r) {
            for (int c = 0; c < m.n(); ++c) os << static_cast<int>(m(r, c));
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace cosetlab::ingest

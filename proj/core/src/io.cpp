#include "polarlike/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace polarlike {

namespace {

struct LineReader {
    std::istream& in;
    std::string path;
    std::size_t line_no = 0;

    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_no, path + ":" + std::to_string(line_no) + ": " + msg);
    }
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_uint(LineReader& rd, const std::string& tok) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        rd.fail("expected an unsigned integer, got '" + tok + "'");
    return v;
}

double parse_double(LineReader& rd, const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        rd.fail("expected a real number, got '" + tok + "'");
    }
}

std::vector<std::uint8_t> parse_bit_row(LineReader& rd, const std::string& line,
                                        std::size_t expected) {
    const auto toks = tokens_of(line);
    if (toks.size() != expected)
        rd.fail("expected " + std::to_string(expected) + " digits, got " +
                std::to_string(toks.size()));
    std::vector<std::uint8_t> row(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        if (toks[i] != "0" && toks[i] != "1") rd.fail("expected 0/1 digit, got '" + toks[i] + "'");
        row[i] = toks[i] == "1";
    }
    return row;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

BitMatrix load_generator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path + ": cannot open");
    LineReader rd{in, path};
    std::string line;
    if (!rd.next(line)) rd.fail("missing 'k n' header");
    const auto head = tokens_of(line);
    if (head.size() != 2) rd.fail("header must be 'k n'");
    const std::size_t k = parse_uint(rd, head[0]);
    const std::size_t n = parse_uint(rd, head[1]);
    if (n == 0) rd.fail("n must be positive");
    BitMatrix g(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (!rd.next(line)) rd.fail("unexpected end of file inside the matrix");
        const auto row = parse_bit_row(rd, line, n);
        for (std::size_t c = 0; c < n; ++c)
            if (row[c]) g.set(r, c, true);
    }
    return g;
}

void save_generator(const std::string& path, const BitMatrix& g) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open for writing");
    out << g.rows() << ' ' << g.cols() << '\n' << g.to_string();
}

void save_transformation(const std::string& path, const Transformation& t,
                         bool include_mdf) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open for writing");
    out << t.n_big << ' ' << t.n() << ' ' << t.k() << '\n';
    out << "perm:";
    for (auto v : t.perm.one_line()) out << ' ' << v;
    out << '\n' << "R:\n";
    for (std::size_t r = 0; r < t.pruning.half_n; ++r) {
        for (std::size_t j = 0; j < t.pruning.stages; ++j) {
            out << (t.pruning.kept(r, j) ? '1' : '0');
            if (j + 1 < t.pruning.stages) out << ' ';
        }
        out << '\n';
    }
    out << "dropped:";
    for (auto d : t.shorten.dropped) out << ' ' << (d + 1);
    out << '\n';
    if (include_mdf) {
        out << "mdf:\n" << t.m_df.to_string();
    }
}

Transformation load_transformation(const std::string& path, const BitMatrix& g) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path + ": cannot open");
    LineReader rd{in, path};
    std::string line;

    if (!rd.next(line)) rd.fail("missing 'N n k' header");
    const auto head = tokens_of(line);
    if (head.size() != 3) rd.fail("header must be 'N n k'");
    const std::size_t n_big = parse_uint(rd, head[0]);
    const std::size_t n = parse_uint(rd, head[1]);
    const std::size_t k = parse_uint(rd, head[2]);
    if (g.rows() != k || g.cols() != n)
        throw ConfigMismatch(path + ": generator is " + std::to_string(g.rows()) + "x" +
                             std::to_string(g.cols()) + " but the file declares k=" +
                             std::to_string(k) + " n=" + std::to_string(n));

    if (!rd.next(line)) rd.fail("missing 'perm:' line");
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] != "perm:") rd.fail("expected 'perm:'");
    if (toks.size() != n_big + 1) rd.fail("perm must list N integers");
    std::vector<std::uint32_t> one_line(n_big);
    for (std::size_t i = 0; i < n_big; ++i)
        one_line[i] = static_cast<std::uint32_t>(parse_uint(rd, toks[i + 1]));
    Permutation perm = Permutation::identity(1);
    try {
        perm = Permutation::from_one_line(one_line);
    } catch (const NotABijection& e) {
        rd.fail(e.what());
    }

    if (!rd.next(line) || tokens_of(line) != std::vector<std::string>{"R:"})
        rd.fail("expected 'R:'");
    PruningMatrix pruning = PruningMatrix::all_zeros(n_big);
    for (std::size_t r = 0; r < pruning.half_n; ++r) {
        if (!rd.next(line)) rd.fail("unexpected end of file inside R");
        const auto row = parse_bit_row(rd, line, pruning.stages);
        for (std::size_t j = 0; j < pruning.stages; ++j) pruning.set(r, j, row[j] != 0);
    }

    if (!rd.next(line)) rd.fail("missing 'dropped:' line");
    toks = tokens_of(line);
    if (toks.empty() || toks[0] != "dropped:") rd.fail("expected 'dropped:'");
    if (toks.size() != n_big - n + 1) rd.fail("dropped must list N-n positions");
    std::vector<std::uint32_t> dropped;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::uint64_t v = parse_uint(rd, toks[i]);
        if (v == 0 || v > n_big) rd.fail("dropped position out of range");
        dropped.push_back(static_cast<std::uint32_t>(v - 1));
    }

    BitMatrix stored_mdf;
    bool have_mdf = false;
    if (rd.next(line)) {
        if (tokens_of(line) != std::vector<std::string>{"mdf:"}) rd.fail("expected 'mdf:'");
        stored_mdf = BitMatrix(k, n_big);
        for (std::size_t r = 0; r < k; ++r) {
            if (!rd.next(line)) rd.fail("unexpected end of file inside mdf");
            const auto row = parse_bit_row(rd, line, n_big);
            for (std::size_t c = 0; c < n_big; ++c)
                if (row[c]) stored_mdf.set(r, c, true);
        }
        have_mdf = true;
    }

    Transformation t = build_transformation(g, n_big, std::move(perm), std::move(pruning),
                                            ShortenSpec::from_dropped(n_big, std::move(dropped)));
    if (have_mdf && !(stored_mdf == t.m_df))
        throw IntegrityError(path + ": stored mdf block disagrees with the recomputed m_df");
    return t;
}

std::string to_csv(const SimResult& result) {
    std::ostringstream out;
    out << "ebno_db,decoder,list_size,frames,frame_errors,bit_errors,fer,ber,"
           "candidates,wall_seconds,seed\n";
    for (const auto& p : result.points) {
        out << format_double(p.ebno_db) << ',' << result.decoder.name() << ','
            << result.decoder.list_size << ',' << p.frames << ',' << p.frame_errors << ','
            << p.bit_errors << ',' << format_double(p.fer) << ',' << format_double(p.ber) << ','
            << p.candidates << ',' << format_double(p.wall_seconds) << ',' << result.seed
            << '\n';
    }
    return out.str();
}

SimResult parse_csv(const std::string& text) {
    std::istringstream in(text);
    LineReader rd{in, "<csv>"};
    std::string line;
    if (!rd.next(line)) rd.fail("missing CSV header");

    SimResult result;
    bool first = true;
    while (rd.next(line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 11) rd.fail("expected 11 CSV fields");

        SimPoint p;
        p.ebno_db = parse_double(rd, fields[0]);
        DecoderSpec dec;
        if (fields[1] == "sc") dec.kind = DecoderSpec::Kind::sc;
        else if (fields[1] == "scl") dec.kind = DecoderSpec::Kind::scl;
        else if (fields[1] == "mld") dec.kind = DecoderSpec::Kind::mld;
        else rd.fail("unknown decoder '" + fields[1] + "'");
        dec.list_size = parse_uint(rd, fields[2]);
        p.frames = parse_uint(rd, fields[3]);
        p.frame_errors = parse_uint(rd, fields[4]);
        p.bit_errors = parse_uint(rd, fields[5]);
        p.fer = parse_double(rd, fields[6]);
        p.ber = parse_double(rd, fields[7]);
        p.candidates = parse_uint(rd, fields[8]);
        p.wall_seconds = parse_double(rd, fields[9]);
        const std::uint64_t seed = parse_uint(rd, fields[10]);
        if (first) {
            result.decoder = dec;
            result.seed = seed;
            first = false;
        }
        result.points.push_back(p);
    }
    return result;
}

void save_csv(const std::string& path, const SimResult& result) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open for writing");
    out << to_csv(result);
}

}  // namespace polarlike

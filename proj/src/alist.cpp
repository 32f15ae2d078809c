#include "parityproj/alist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace parityproj {

namespace {

struct Token {
    long value;
    int line;
};

struct TokenReader {
    std::vector<Token> tokens;
    std::size_t pos = 0;

    explicit TokenReader(const std::string& text) {
        int line = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            const char c = text[i];
            if (c == '\n') {
                ++line;
                ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else {
                const std::size_t start = i;
                while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
                const std::string word = text.substr(start, i - start);
                try {
                    std::size_t used = 0;
                    const long v = std::stol(word, &used);
                    if (used != word.size()) throw std::invalid_argument(word);
                    tokens.push_back({v, line});
                } catch (const std::exception&) {
                    throw AlistParseError("alist line " + std::to_string(line) +
                                          ": expected integer, got '" + word + "'");
                }
            }
        }
    }

    bool done() const { return pos == tokens.size(); }
    std::size_t remaining() const { return tokens.size() - pos; }

    long next(const char* what) {
        if (done()) throw AlistParseError(std::string("alist: unexpected end of input, expected ") + what);
        return tokens[pos++].value;
    }

    int line() const {
        return tokens.empty() ? 1 : tokens[pos < tokens.size() ? pos : tokens.size() - 1].line;
    }
};

[[noreturn]] void fail(const TokenReader& r, const std::string& msg) {
    throw AlistParseError("alist line " + std::to_string(r.line()) + ": " + msg);
}

} // namespace

ParityCheckMatrix::ParityCheckMatrix(int n, int m, std::vector<std::vector<std::int32_t>> rows)
    : n_(n), m_(m), rows_(std::move(rows)) {
    if (n_ < 1 || m_ < 1) throw AlistParseError("parity-check matrix: n and m must be positive");
    if (static_cast<int>(rows_.size()) != m_)
        throw AlistParseError("parity-check matrix: row count mismatch");
    cols_.assign(static_cast<std::size_t>(n_), {});
    col_pos_.assign(static_cast<std::size_t>(n_), {});
    for (int j = 0; j < m_; ++j) {
        auto& row = rows_[static_cast<std::size_t>(j)];
        std::sort(row.begin(), row.end());
        if (row.size() < 2)
            throw AlistParseError("parity-check matrix: row " + std::to_string(j + 1) +
                                  " has degree < 2");
        for (std::size_t k = 0; k < row.size(); ++k) {
            const std::int32_t i = row[k];
            if (i < 0 || i >= n_)
                throw AlistParseError("parity-check matrix: row " + std::to_string(j + 1) +
                                      " has out-of-range index");
            if (k > 0 && row[k - 1] == i)
                throw AlistParseError("parity-check matrix: row " + std::to_string(j + 1) +
                                      " has a duplicate index");
            cols_[static_cast<std::size_t>(i)].push_back(j);
            col_pos_[static_cast<std::size_t>(i)].push_back(static_cast<std::int32_t>(k));
        }
    }
}

int ParityCheckMatrix::max_row_degree() const {
    int mx = 0;
    for (const auto& r : rows_) mx = std::max(mx, static_cast<int>(r.size()));
    return mx;
}

int ParityCheckMatrix::max_col_degree() const {
    int mx = 0;
    for (const auto& c : cols_) mx = std::max(mx, static_cast<int>(c.size()));
    return mx;
}

bool ParityCheckMatrix::syndrome_ok(const std::vector<std::uint8_t>& bits) const {
    if (static_cast<int>(bits.size()) != n_)
        throw std::invalid_argument("syndrome_ok: length mismatch");
    for (const auto& row : rows_) {
        int parity = 0;
        for (std::int32_t i : row) parity ^= bits[static_cast<std::size_t>(i)] & 1;
        if (parity != 0) return false;
    }
    return true;
}

std::string ParityCheckMatrix::to_alist() const {
    std::ostringstream os;
    const int maxc = max_col_degree();
    const int maxr = max_row_degree();
    os << n_ << ' ' << m_ << '\n' << maxc << ' ' << maxr << '\n';
    for (int i = 0; i < n_; ++i) os << col_degree(i) << (i + 1 == n_ ? '\n' : ' ');
    for (int j = 0; j < m_; ++j) os << row_degree(j) << (j + 1 == m_ ? '\n' : ' ');
    for (int i = 0; i < n_; ++i) {
        const auto& c = cols_[static_cast<std::size_t>(i)];
        for (int k = 0; k < maxc; ++k)
            os << (k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] + 1 : 0)
               << (k + 1 == maxc ? '\n' : ' ');
    }
    for (int j = 0; j < m_; ++j) {
        const auto& r = rows_[static_cast<std::size_t>(j)];
        for (int k = 0; k < maxr; ++k)
            os << (k < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(k)] + 1 : 0)
               << (k + 1 == maxr ? '\n' : ' ');
    }
    return os.str();
}

ParityCheckMatrix parse_alist(const std::string& text) {
    TokenReader r(text);
    if (r.done()) throw AlistParseError("alist: empty input");
    const long n = r.next("n");
    const long m = r.next("m");
    if (n < 1 || m < 1) fail(r, "n and m must be positive");
    const long maxc = r.next("max column degree");
    const long maxr = r.next("max row degree");
    if (maxc < 1 || maxc > m) fail(r, "max column degree out of range");
    if (maxr < 1 || maxr > n) fail(r, "max row degree out of range");

    std::vector<long> cdeg(static_cast<std::size_t>(n));
    for (auto& v : cdeg) {
        v = r.next("column degree");
        if (v < 1 || v > maxc) fail(r, "column degree out of range");
    }
    std::vector<long> rdeg(static_cast<std::size_t>(m));
    for (auto& v : rdeg) {
        v = r.next("row degree");
        if (v < 2 || v > maxr) fail(r, "row degree out of range (must be >= 2)");
    }

    const std::size_t padded =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(maxc) +
        static_cast<std::size_t>(m) * static_cast<std::size_t>(maxr);
    const std::size_t packed =
        static_cast<std::size_t>(std::accumulate(cdeg.begin(), cdeg.end(), 0L)) +
        static_cast<std::size_t>(std::accumulate(rdeg.begin(), rdeg.end(), 0L));
    bool pad;
    if (r.remaining() == padded) {
        pad = true;
    } else if (r.remaining() == packed) {
        pad = false;
    } else {
        fail(r, "index block has " + std::to_string(r.remaining()) + " entries, expected " +
                std::to_string(padded) + " (padded) or " + std::to_string(packed) + " (packed)");
    }

    auto read_block = [&](long degree, long width, long upper,
                          const char* what) -> std::vector<std::int32_t> {
        std::vector<std::int32_t> idx;
        idx.reserve(static_cast<std::size_t>(degree));
        const long take = pad ? width : degree;
        for (long k = 0; k < take; ++k) {
            const long v = r.next(what);
            if (k < degree) {
                if (v < 1 || v > upper) fail(r, std::string("index out of range in ") + what);
                idx.push_back(static_cast<std::int32_t>(v - 1));
            } else if (v != 0) {
                fail(r, std::string("expected zero padding in ") + what);
            }
        }
        return idx;
    };

    // Column lists first (consistency-checked against the rows afterwards).
    std::vector<std::vector<std::int32_t>> cols(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        cols[static_cast<std::size_t>(i)] =
            read_block(cdeg[static_cast<std::size_t>(i)], maxc, m, "column block");
    std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j)
        rows[static_cast<std::size_t>(j)] =
            read_block(rdeg[static_cast<std::size_t>(j)], maxr, n, "row block");

    ParityCheckMatrix h(static_cast<int>(n), static_cast<int>(m), std::move(rows));
    for (long i = 0; i < n; ++i) {
        auto parsed = cols[static_cast<std::size_t>(i)];
        std::sort(parsed.begin(), parsed.end());
        if (parsed != h.col(static_cast<int>(i)))
            throw AlistParseError("alist: column list " + std::to_string(i + 1) +
                                  " disagrees with the row lists");
    }
    return h;
}

ParityCheckMatrix load_alist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AlistParseError("alist: cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_alist(os.str());
}

} // namespace parityproj

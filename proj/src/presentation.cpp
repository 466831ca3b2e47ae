#include "qweyl/presentation.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qweyl/error.hpp"

namespace qweyl {

AlgebraParams AlgebraParams::restrict_to(int m) const {
    if (m < 1 || m > n) throw DomainError("restriction index out of range");
    AlgebraParams r;
    r.ctx = ctx;
    r.n = m;
    r.q.assign(q.begin(), q.begin() + m);
    r.gamma.resize(m);
    for (int i = 0; i < m; ++i)
        r.gamma[i].assign(gamma[i].begin(), gamma[i].begin() + m);
    return r;
}

bool AlgebraParams::same_presentation(const AlgebraParams& o) const {
    if (!same_context(ctx, o.ctx) || n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (!q[i].eq(o.q[i])) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!gamma[i][j].eq(o.gamma[i][j])) return false;
    return true;
}

std::string AlgebraParams::to_spec_text() const {
    std::ostringstream out;
    out << "indeterminates:";
    for (const auto& nm : ctx->names()) out << " " << nm;
    out << "\n";
    out << "n: " << n << "\n";
    out << "q: ";
    for (int i = 0; i < n; ++i) out << (i ? ", " : "") << q[i].to_string();
    out << "\n";
    out << "gamma: ";
    for (int i = 0; i < n; ++i) {
        if (i) out << " ; ";
        for (int j = 0; j < n; ++j) out << (j ? ", " : "") << gamma[i][j].to_string();
    }
    out << "\n";
    return out.str();
}

std::vector<std::string> validate(const AlgebraParams& p) {
    std::vector<std::string> v;
    auto idx = [](int i) { return std::to_string(i + 1); };
    for (int i = 0; i < p.n; ++i) {
        if (p.q[i].is_zero())
            v.push_back("q[" + idx(i) + "] is zero");
        else if (p.q[i].is_root_of_unity())
            v.push_back("q[" + idx(i) + "] is a root of unity");
    }
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.gamma[i][j].is_zero())
                v.push_back("gamma[" + idx(i) + "][" + idx(j) + "] is zero");
    for (int i = 0; i < p.n; ++i) {
        if (!p.gamma[i][i].is_zero() && !p.gamma[i][i].is_one())
            v.push_back("gamma[" + idx(i) + "][" + idx(i) + "] != 1");
    }
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            if (p.gamma[i][j].is_zero() || p.gamma[j][i].is_zero()) continue;
            if (!(p.gamma[i][j] * p.gamma[j][i]).is_one())
                v.push_back("gamma[" + idx(i) + "][" + idx(j) + "]*gamma[" + idx(j) +
                            "][" + idx(i) + "] != 1");
        }
    return v;
}

namespace {

struct SpecLine {
    std::size_t lineno;
    std::string key;
    std::string value;
};

[[noreturn]] void spec_error(std::size_t lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Scalar parse_entry(const std::string& text, const VarCtxPtr& ctx, std::size_t lineno,
                   const std::string& what) {
    try {
        return scalar_parse(text, ctx);
    } catch (const ParseError& e) {
        spec_error(lineno, what + ": " + e.what());
    } catch (const DomainError& e) {
        spec_error(lineno, what + ": " + e.what());
    }
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
    std::vector<SpecLine> lines;
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string line = trim(raw);
            if (line.empty()) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                spec_error(lineno, "expected 'key: value'");
            SpecLine sl{lineno, trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
            static const char* known[] = {"indeterminates", "n", "q", "gamma"};
            bool ok = false;
            for (const char* k : known) ok = ok || sl.key == k;
            if (!ok) spec_error(lineno, "unknown key '" + sl.key + "'");
            for (const auto& prev : lines)
                if (prev.key == sl.key) spec_error(lineno, "duplicate key '" + sl.key + "'");
            lines.push_back(std::move(sl));
        }
    }
    auto find = [&](const std::string& key) -> const SpecLine* {
        for (const auto& l : lines)
            if (l.key == key) return &l;
        return nullptr;
    };
    for (const char* k : {"indeterminates", "n", "q", "gamma"})
        if (!find(k)) throw ParseError(std::string("missing key '") + k + "'", 1);

    const SpecLine& ind = *find("indeterminates");
    std::vector<std::string> names;
    {
        std::istringstream in(ind.value);
        std::string w;
        while (in >> w) names.push_back(w);
    }
    VarCtxPtr ctx;
    try {
        ctx = VarContext::make(std::move(names));
    } catch (const DomainError& e) {
        spec_error(ind.lineno, e.what());
    }

    const SpecLine& nl = *find("n");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(nl.value, &used);
        if (used != nl.value.size()) throw std::invalid_argument("");
    } catch (...) {
        spec_error(nl.lineno, "n must be an integer");
    }
    if (n < 1 || n > 64) spec_error(nl.lineno, "n must be in [1, 64]");

    AlgebraParams p;
    p.ctx = ctx;
    p.n = n;

    const SpecLine& ql = *find("q");
    {
        auto parts = split_on(ql.value, ',');
        if (static_cast<int>(parts.size()) != n)
            spec_error(ql.lineno, "q must have n = " + std::to_string(n) + " entries, got " +
                                      std::to_string(parts.size()));
        for (const auto& part : parts)
            p.q.push_back(parse_entry(trim(part), ctx, ql.lineno, "q entry '" + trim(part) + "'"));
    }

    const SpecLine& gl = *find("gamma");
    {
        auto rows = split_on(gl.value, ';');
        if (static_cast<int>(rows.size()) != n)
            spec_error(gl.lineno, "gamma must be n x n with n = " + std::to_string(n) +
                                      " rows, got " + std::to_string(rows.size()));
        for (const auto& row : rows) {
            auto parts = split_on(row, ',');
            if (static_cast<int>(parts.size()) != n)
                spec_error(gl.lineno, "gamma must be n x n; a row has " +
                                          std::to_string(parts.size()) + " entries");
            std::vector<Scalar> grow;
            for (const auto& part : parts)
                grow.push_back(
                    parse_entry(trim(part), ctx, gl.lineno, "gamma entry '" + trim(part) + "'"));
            p.gamma.push_back(std::move(grow));
        }
    }

    ParsedSpec out{std::move(p), {}};
    out.violations = validate(out.params);
    return out;
}

ParsedSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

namespace {

// Rank over Q of an integer matrix, by plain rational elimination.
int rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[row][c];
            for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[row][cc];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

GenericityResult genericity_rank(const AlgebraParams& p) {
    GenericityResult res;
    res.max_rank = p.n * (p.n + 1) / 2;
    std::vector<std::vector<mpq_class>> rows;
    auto push = [&](const Scalar& s, const std::string& label) {
        auto mono = s.as_unit_monomial();
        if (!mono) {
            res.detail = label + " is not a monomial with coefficient 1";
            return false;
        }
        std::vector<mpq_class> row;
        row.reserve(mono->size());
        for (long e : *mono) row.emplace_back(e);
        rows.push_back(std::move(row));
        return true;
    };
    for (int i = 1; i <= p.n; ++i)
        if (!push(p.q_at(i), "q[" + std::to_string(i) + "]")) return res;
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j)
            if (!push(p.gamma_at(i, j),
                      "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "]"))
                return res;
    res.decidable = true;
    res.rank = p.ctx->size() == 0 ? 0 : rational_rank(std::move(rows));
    res.generic = res.rank == res.max_rank;
    return res;
}

}  // namespace qweyl

#include "malp/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "malp/parse.hpp"

namespace malp {

namespace {

std::string strip(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

/* "keyword rest-of-line" */
std::pair<std::string, std::string> split_keyword(const std::string& s) {
    std::size_t e = s.find_first_of(" \t");
    if (e == std::string::npos) return {s, ""};
    std::size_t b = s.find_first_not_of(" \t", e);
    return {s.substr(0, e), b == std::string::npos ? "" : s.substr(b)};
}

Rational parse_rational(const std::string& s) {
    return Rational::parse(s);
}

/* reads lines, skipping blanks/comments, tracking the line number */
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            line = strip(raw);
            if (!line.empty()) return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }
    [[noreturn]] void fail(const std::string& msg) const { throw FileParseError(line_no_, msg); }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<std::string> assignments(const std::string& body) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t semi = body.find(';', start);
        std::string piece =
            semi == std::string::npos ? body.substr(start) : body.substr(start, semi - start);
        parts.push_back(piece);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return parts;
}

/* "name <- expr" */
std::pair<std::string, std::string> split_assignment(const std::string& piece) {
    std::size_t arrow = piece.find("<-");
    if (arrow == std::string::npos)
        throw std::runtime_error("expected '<-' in assignment '" + strip(piece) + "'");
    std::string lhs = strip(piece.substr(0, arrow));
    std::string rhs = strip(piece.substr(arrow + 2));
    if (lhs.empty() || words(lhs).size() != 1)
        throw std::runtime_error("assignment target must be a single coordinate name");
    if (rhs.empty()) throw std::runtime_error("empty assignment expression");
    return {lhs, rhs};
}

}  // namespace

ExteriorForm read_exterior_form(std::istream& in) {
    LineReader r(in);
    std::string line;
    int dim = -1, degree = -1;
    ExteriorForm w;
    while (r.next(line)) {
        auto [kw, rest] = split_keyword(line);
        auto ws = words(rest);
        if (kw == "dim") {
            if (dim >= 0) r.fail("duplicate dim line");
            if (ws.size() != 1) r.fail("dim expects one integer");
            dim = std::stoi(ws[0]);
            if (dim <= 0) r.fail("dim must be positive");
        } else if (kw == "degree") {
            if (dim < 0) r.fail("degree before dim");
            if (degree >= 0) r.fail("duplicate degree line");
            if (ws.size() != 1) r.fail("degree expects one integer");
            degree = std::stoi(ws[0]);
            if (degree < 0 || degree > dim) r.fail("degree out of range");
            w = ExteriorForm(dim, degree);
        } else if (kw == "term") {
            if (degree < 0) r.fail("term before degree");
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos) r.fail("term expects '<rational> : <indices>'");
            std::string cs = strip(rest.substr(0, colon));
            auto idx_words = words(rest.substr(colon + 1));
            if (cs.empty() || words(cs).size() != 1) r.fail("term expects one coefficient");
            if (static_cast<int>(idx_words.size()) != degree)
                r.fail("term expects " + std::to_string(degree) + " indices");
            Rational c;
            try {
                c = parse_rational(cs);
            } catch (const std::exception& e) {
                r.fail(e.what());
            }
            IndexTuple idx;
            for (const auto& s : idx_words) {
                int i = std::stoi(s);
                if (i < 1 || i > dim) r.fail("index " + s + " out of range 1.." + std::to_string(dim));
                if (!idx.empty() && i <= idx.back()) r.fail("indices must be strictly increasing");
                idx.push_back(i);
            }
            if (!w.coefficient(idx).is_zero()) r.fail("duplicate term");
            w.set(idx, c);
        } else {
            r.fail("unknown line '" + kw + "'");
        }
    }
    if (dim < 0) throw FileParseError(r.line_no(), "missing dim line");
    if (degree < 0) throw FileParseError(r.line_no(), "missing degree line");
    return w;
}

ExteriorForm read_exterior_form_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FileParseError(0, "cannot open '" + path + "'");
    return read_exterior_form(f);
}

void write_exterior_form(std::ostream& out, const ExteriorForm& w) {
    out << "dim " << w.dim() << "\n";
    out << "degree " << w.degree() << "\n";
    for (const auto& [idx, c] : w.terms()) {
        out << "term " << c.str() << " :";
        for (int i : idx) out << " " << i;
        out << "\n";
    }
}

std::pair<Subspace, Subspace> read_subspace_pair(std::istream& in) {
    LineReader r(in);
    std::string line;
    int dim = -1;
    std::vector<Subspace> blocks;
    while (r.next(line)) {
        auto [kw, rest] = split_keyword(line);
        if (kw == "dim") {
            if (dim >= 0) r.fail("duplicate dim line");
            auto ws = words(rest);
            if (ws.size() != 1) r.fail("dim expects one integer");
            dim = std::stoi(ws[0]);
            if (dim <= 0) r.fail("dim must be positive");
        } else if (kw == "subspace") {
            if (dim < 0) r.fail("subspace before dim");
            blocks.push_back(Subspace{dim, {}});
        } else if (kw == "vector") {
            if (blocks.empty()) r.fail("vector before subspace");
            auto ws = words(rest);
            if (static_cast<int>(ws.size()) != dim)
                r.fail("vector expects " + std::to_string(dim) + " components");
            Vec v;
            for (const auto& s : ws) {
                try {
                    v.push_back(parse_rational(s));
                } catch (const std::exception& e) {
                    r.fail(e.what());
                }
            }
            blocks.back().basis.push_back(std::move(v));
        } else {
            r.fail("unknown line '" + kw + "'");
        }
    }
    if (blocks.size() != 2) throw FileParseError(r.line_no(), "expected exactly two subspaces");
    return {blocks[0], blocks[1]};
}

std::pair<Subspace, Subspace> read_subspace_pair_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FileParseError(0, "cannot open '" + path + "'");
    return read_subspace_pair(f);
}

void write_subspace_pair(std::ostream& out, const Subspace& a, const Subspace& b) {
    out << "dim " << a.ambient << "\n";
    for (const Subspace* s : {&a, &b}) {
        out << "subspace\n";
        for (const auto& v : s->basis) {
            out << "vector";
            for (const auto& c : v) out << " " << c.str();
            out << "\n";
        }
    }
}

DiffForm parse_form_expr(const Chart& chart, const std::string& src) {
    Tokenizer t(src);
    auto is_gen = [&chart](const std::string& name) {
        return name.size() > 1 && name[0] == 'd' && chart.has(name.substr(1));
    };
    auto at_gen = [&]() { return t.peek().kind == Token::Ident && is_gen(t.peek().text); };

    struct RawTerm {
        RationalFunction coeff;
        IndexTuple idx;
    };
    std::vector<RawTerm> raw;
    bool negate = t.accept_op("-");
    while (true) {
        RationalFunction coeff = chart.one();
        if (!at_gen()) {
            ScalarParser sp(t, chart.names(), is_gen);
            coeff = sp.parse_term();
        }
        IndexTuple idx;
        if (at_gen()) {
            idx.push_back(static_cast<int>(chart.index_of(t.next().text.substr(1))) + 1);
            while (t.accept_op("^")) {
                if (!at_gen()) t.fail("expected a coordinate differential after '^'");
                int i = static_cast<int>(chart.index_of(t.next().text.substr(1))) + 1;
                for (int seen : idx)
                    if (seen == i) t.fail("repeated coordinate differential");
                idx.push_back(i);
            }
        }
        if (negate) coeff = -coeff;
        raw.push_back({std::move(coeff), std::move(idx)});
        if (t.accept_op("+")) negate = false;
        else if (t.accept_op("-")) negate = true;
        else break;
    }
    if (t.peek().kind != Token::End) t.fail("trailing input after form expression");

    std::size_t degree = raw.front().idx.size();
    for (const auto& term : raw)
        if (term.idx.size() != degree)
            throw std::runtime_error("form expression mixes degrees " + std::to_string(degree) +
                                     " and " + std::to_string(term.idx.size()));
    DiffForm w(chart, degree);
    for (auto& term : raw) w.add_term(term.idx, term.coeff);
    return w;
}

const DiffForm* SystemDocument::form(const std::string& name) const {
    for (const auto& [n, w] : forms)
        if (n == name) return &w;
    return nullptr;
}

const PointMap* SystemDocument::map(const std::string& name) const {
    for (const auto& [n, m] : maps)
        if (n == name) return &m;
    return nullptr;
}

SystemDocument read_system_document(std::istream& in) {
    LineReader r(in);
    SystemDocument doc;
    bool have_chart = false;
    std::string line;
    while (r.next(line)) {
        auto [kw, rest] = split_keyword(line);
        try {
            if (kw == "chart") {
                if (have_chart) r.fail("duplicate chart line");
                auto names = words(rest);
                doc.chart = Chart(names);
                for (const auto& n : names)
                    if (n.size() > 1 && n[0] == 'd' && doc.chart.has(n.substr(1)))
                        r.fail("coordinate '" + n + "' collides with the differential of '" +
                               n.substr(1) + "'");
                have_chart = true;
                continue;
            }
            if (!have_chart) r.fail("the chart line must come first");
            if (kw == "squared_coefficient") {
                if (!rest.empty()) r.fail("squared_coefficient takes no arguments");
                doc.squared_coefficient = true;
            } else if (kw == "constraint") {
                doc.constraints.push_back(parse_poly(doc.chart.names(), rest));
            } else if (kw == "form" || kw == "oneform") {
                std::size_t colon = rest.find(':');
                if (colon == std::string::npos) r.fail("missing ':' after the form name");
                auto head = words(rest.substr(0, colon));
                std::string body = rest.substr(colon + 1);
                const Chart* on = &doc.chart;
                if (head.size() == 3 && head[1] == "via") {
                    const PointMap* m = doc.map(head[2]);
                    if (!m) r.fail("unknown map '" + head[2] + "'");
                    on = &m->target();
                } else if (head.size() != 1) {
                    r.fail("form header must be '<name>' or '<name> via <map>'");
                }
                DiffForm w = parse_form_expr(*on, body);
                if (kw == "oneform" && w.degree() != 1)
                    r.fail("oneform '" + head[0] + "' has degree " + std::to_string(w.degree()));
                if (doc.form(head[0])) r.fail("duplicate form '" + head[0] + "'");
                doc.forms.emplace_back(head[0], std::move(w));
            } else if (kw == "map") {
                std::size_t colon = rest.find(':');
                if (colon == std::string::npos) r.fail("missing ':' after the map name");
                auto head = words(rest.substr(0, colon));
                if (head.size() != 1) r.fail("map header must be a single name");
                std::vector<std::string> target_names;
                std::vector<RationalFunction> comps;
                for (const auto& piece : assignments(rest.substr(colon + 1))) {
                    auto [lhs, rhs] = split_assignment(piece);
                    target_names.push_back(lhs);
                    comps.push_back(parse_scalar(doc.chart.names(), rhs));
                }
                if (doc.map(head[0])) r.fail("duplicate map '" + head[0] + "'");
                doc.maps.emplace_back(head[0],
                                      PointMap(doc.chart, Chart(target_names), std::move(comps)));
            } else if (kw == "frame1" || kw == "frame2") {
                std::size_t colon = rest.find(':');
                if (colon == std::string::npos) r.fail("missing ':' after the frame label");
                VecField v = VecField::zero(doc.chart);
                for (const auto& piece : assignments(rest.substr(colon + 1))) {
                    auto [lhs, rhs] = split_assignment(piece);
                    if (!doc.chart.has(lhs)) r.fail("unknown coordinate '" + lhs + "'");
                    v.set_component(lhs, parse_scalar(doc.chart.names(), rhs));
                }
                (kw == "frame1" ? doc.frame1 : doc.frame2).push_back(std::move(v));
            } else {
                r.fail("unknown declaration '" + kw + "'");
            }
        } catch (const FileParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw FileParseError(r.line_no(), e.what());
        }
    }
    if (!have_chart) throw FileParseError(r.line_no(), "missing chart line");
    return doc;
}

SystemDocument read_system_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FileParseError(0, "cannot open '" + path + "'");
    return read_system_document(f);
}

MASystem system_from_document(const SystemDocument& doc) {
    const DiffForm* theta = doc.form("theta");
    const DiffForm* omega = doc.form("omega");
    if (!theta) throw std::invalid_argument("document has no form named theta");
    if (!omega) throw std::invalid_argument("document has no form named omega");
    if (theta->degree() != 1) throw std::invalid_argument("theta must be a one-form");
    MASystem sys;
    sys.chart = doc.chart;
    sys.theta = *theta;
    sys.omega = *omega;
    sys.frame1 = doc.frame1;
    sys.frame2 = doc.frame2;
    sys.constraints = doc.constraints;
    sys.squared_coefficient = doc.squared_coefficient;
    return sys;
}

void write_system(std::ostream& out, const MASystem& sys) {
    out << "chart";
    for (const auto& n : sys.chart.names()) out << " " << n;
    out << "\n";
    out << "oneform theta: " << sys.theta.str() << "\n";
    out << "form omega: " << sys.omega.str() << "\n";
    for (std::size_t half = 0; half < 2; ++half) {
        const auto& frame = half == 0 ? sys.frame1 : sys.frame2;
        for (std::size_t j = 0; j < frame.size(); ++j) {
            out << (half == 0 ? "frame1" : "frame2") << " v" << j + 1 << ":";
            bool first = true;
            for (std::size_t i = 0; i < sys.chart.dim(); ++i) {
                const RationalFunction& c = frame[j].components()[i];
                if (c.is_zero()) continue;
                out << (first ? " " : "; ") << sys.chart.name(i) << " <- " << c.str();
                first = false;
            }
            if (first) out << " " << sys.chart.name(0) << " <- 0";
            out << "\n";
        }
    }
    for (const auto& p : sys.constraints) out << "constraint " << p.str() << "\n";
    if (sys.squared_coefficient) out << "squared_coefficient\n";
}

}  // namespace malp

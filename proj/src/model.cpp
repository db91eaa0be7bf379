#include "cylproj/model.hpp"

#include <cctype>
#include <sstream>

#include "cylproj/error.hpp"

namespace cylproj {

DimVar ModelFile::dim(const std::string& name) const {
    auto it = dim_ids.find(name);
    if (it == dim_ids.end())
        throw Error(Errc::unknown_name, "unknown dimension name '" + name + "'");
    return it->second;
}

namespace {

// cursor over one line; tracks column for diagnostics
class LineParser {
public:
    LineParser(ModelFile& model, const std::string& line, int lineno)
        : model_(model), line_(line), lineno_(lineno) {}

    void parse_statement();

private:
    ModelFile& model_;
    const std::string& line_;
    int lineno_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(Errc code, const std::string& msg) const {
        throw Error(code, "line " + std::to_string(lineno_) + ":" +
                              std::to_string(pos_ + 1) + ": " + msg,
                    lineno_, static_cast<int>(pos_ + 1));
    }

    void skip_ws() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= line_.size() || line_[pos_] == '#';
    }
    char peek() {
        skip_ws();
        return pos_ < line_.size() ? line_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(Errc::syntax_error, std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                       line_[pos_] == '_'))
            ++pos_;
        if (pos_ == start ||
            std::isdigit(static_cast<unsigned char>(line_[start])))
            fail(Errc::syntax_error, "expected an identifier");
        return line_.substr(start, pos_ - start);
    }

    bool ident_ahead(const std::string& kw) {
        skip_ws();
        std::size_t p = pos_;
        if (line_.compare(p, kw.size(), kw) != 0) return false;
        std::size_t after = p + kw.size();
        if (after < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[after])) ||
                                     line_[after] == '_'))
            return false;
        return true;
    }
    bool accept_ident(const std::string& kw) {
        if (!ident_ahead(kw)) return false;
        pos_ += kw.size();
        return true;
    }

    Rat rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (pos_ == start) fail(Errc::invalid_rational, "expected a rational p/q or integer");
        if (pos_ < line_.size() && line_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            if (pos_ == dstart) fail(Errc::invalid_rational, "expected a denominator");
        }
        auto r = parse_rational(std::string_view(line_).substr(start, pos_ - start));
        if (!r) fail(Errc::invalid_rational, "malformed rational '" +
                                                 line_.substr(start, pos_ - start) + "'");
        return *r;
    }

    std::uint32_t atom_index() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (pos_ == start) fail(Errc::syntax_error, "expected an atom index");
        return static_cast<std::uint32_t>(std::stoul(line_.substr(start, pos_ - start)));
    }

    DimVar dim_id(const std::string& name) {
        auto it = model_.dim_ids.find(name);
        if (it != model_.dim_ids.end()) return it->second;
        DimVar id = static_cast<DimVar>(model_.dim_names.size());
        model_.dim_ids.emplace(name, id);
        model_.dim_names.push_back(name);
        return id;
    }

    void check_fresh(const std::string& name) {
        if (model_.sets.count(name) || model_.dsets.count(name) ||
            model_.profiles.count(name) || name == model_.base_name)
            fail(Errc::duplicate_name, "name '" + name + "' is already defined");
    }

    OneDimSet interval_body(bool closed) {
        Rat lo = rational();
        expect(',');
        Rat hi = rational();
        expect(')');
        if (lo < 0 || hi > 1) fail(Errc::invalid_rational, "interval must lie within [0,1]");
        if (!(lo < hi))
            fail(Errc::invalid_rational,
                 "empty interval [" + rat_string(lo) + "," + rat_string(hi) + ")");
        return closed ? OneDimSet::interval(lo, hi) : OneDimSet::open_interval(lo, hi);
    }

    // one component atom of a rect
    OneDimSet comp_atom() {
        if (accept('[')) return interval_body(true);
        if (accept('(')) return interval_body(false);
        if (accept('{')) {
            OneDimSet s = OneDimSet::empty_set();
            while (true) {
                Rat p = rational();
                if (p < 0 || p >= 1) fail(Errc::invalid_rational, "point must lie in [0,1)");
                s = unite(s, OneDimSet::point(p));
                if (!accept(',')) break;
            }
            expect('}');
            return s;
        }
        fail(Errc::syntax_error, "expected a component: [lo,hi), (lo,hi) or {points}");
    }

    OneDimSet component() {
        OneDimSet s = comp_atom();
        while (accept('|')) s = unite(s, comp_atom());
        return s;
    }

    FinDimSet rect() {
        expect('{');
        std::map<DimVar, OneDimSet> comps;
        if (!accept('}')) {
            while (true) {
                std::string dn = ident();
                DimVar d = dim_id(dn);
                expect(':');
                OneDimSet c = component();
                auto [it, fresh] = comps.emplace(d, c);
                if (!fresh) it->second = intersect(it->second, c);
                if (!accept(',')) break;
            }
            expect('}');
        }
        return FinDimSet::box(comps);
    }

    FinDimSet expr_factor() {
        if (accept('!')) return complement(expr_factor());
        if (accept('(')) {
            FinDimSet s = expr();
            expect(')');
            return s;
        }
        if (accept_ident("rect")) return rect();
        std::string name = ident();
        auto it = model_.sets.find(name);
        if (it == model_.sets.end())
            fail(Errc::unknown_name, "unknown set name '" + name + "'");
        return it->second;
    }

    FinDimSet expr_term() {
        FinDimSet s = expr_factor();
        while (peek() == '&') {
            accept('&');
            s = intersect(s, expr_factor());
        }
        return s;
    }

    FinDimSet expr() {
        FinDimSet s = expr_term();
        while (peek() == '|') {
            accept('|');
            s = unite(s, expr_term());
        }
        return s;
    }

    AtomSet datom() {
        bool co = accept_ident("co");
        expect('{');
        std::set<std::uint32_t> members;
        if (peek() != '}') {
            while (true) {
                members.insert(atom_index());
                if (!accept(',')) break;
            }
        }
        expect('}');
        return co ? AtomSet::cofinite(std::move(members)) : AtomSet::finite(std::move(members));
    }

    DiscreteSet prod() {
        expect('(');
        DiscreteTerm term;
        if (!accept(')')) {
            while (true) {
                std::string dn = ident();
                DimVar d = dim_id(dn);
                expect(':');
                AtomSet c = datom();
                auto [it, fresh] = term.emplace(d, c);
                if (!fresh) it->second = intersect(it->second, c);
                if (!accept(',')) break;
            }
            expect(')');
        }
        return DiscreteSet::box(term);
    }

    DiscreteSet dexpr_factor() {
        if (accept('!')) return complement(dexpr_factor());
        if (accept('(')) {
            DiscreteSet s = dexpr();
            expect(')');
            return s;
        }
        if (accept_ident("prod")) return prod();
        std::string name = ident();
        auto it = model_.dsets.find(name);
        if (it == model_.dsets.end())
            fail(Errc::unknown_name, "unknown dset name '" + name + "'");
        return it->second;
    }

    DiscreteSet dexpr_term() {
        DiscreteSet s = dexpr_factor();
        while (peek() == '&') {
            accept('&');
            s = intersect(s, dexpr_factor());
        }
        return s;
    }

    DiscreteSet dexpr() {
        DiscreteSet s = dexpr_term();
        while (peek() == '|') {
            accept('|');
            s = unite(s, dexpr_term());
        }
        return s;
    }

    void end_of_statement() {
        if (!at_end()) fail(Errc::syntax_error, "unexpected trailing input");
    }
};

void LineParser::parse_statement() {
    if (at_end()) return;
    if (accept_ident("base")) {
        std::string name = ident();
        check_fresh(name);
        if (model_.base)
            fail(Errc::duplicate_name, "a base is already defined ('" + model_.base_name + "')");
        if (!accept_ident("probs")) fail(Errc::syntax_error, "expected probs=[...]");
        expect('=');
        expect('[');
        std::vector<Rat> probs;
        if (peek() != ']') {
            while (true) {
                probs.push_back(rational());
                if (!accept(',')) break;
            }
        }
        expect(']');
        if (!accept_ident("tail")) fail(Errc::syntax_error, "expected tail=p/q");
        expect('=');
        Rat tail = rational();
        try {
            model_.base.emplace(std::move(probs), std::move(tail));
        } catch (const Error& e) {
            fail(e.code, e.what());
        }
        model_.base_name = name;
        end_of_statement();
        return;
    }
    if (accept_ident("set")) {
        std::string name = ident();
        check_fresh(name);
        expect('=');
        FinDimSet s = expr();
        end_of_statement();
        model_.sets.emplace(std::move(name), std::move(s));
        return;
    }
    if (accept_ident("dset")) {
        std::string name = ident();
        check_fresh(name);
        expect('=');
        DiscreteSet s = dexpr();
        end_of_statement();
        model_.dsets.emplace(std::move(name), std::move(s));
        return;
    }
    if (accept_ident("profile")) {
        std::string name = ident();
        check_fresh(name);
        expect('=');
        if (!accept_ident("cells")) fail(Errc::syntax_error, "expected cells[(vol=..., q=...), ...]");
        expect('[');
        std::vector<std::pair<Rat, Rat>> cells;
        if (peek() != ']') {
            while (true) {
                expect('(');
                if (!accept_ident("vol")) fail(Errc::syntax_error, "expected vol=");
                expect('=');
                Rat vol = rational();
                expect(',');
                if (!accept_ident("q")) fail(Errc::syntax_error, "expected q=");
                expect('=');
                Rat q = rational();
                expect(')');
                cells.emplace_back(std::move(vol), std::move(q));
                if (!accept(',')) break;
            }
        }
        expect(']');
        end_of_statement();
        try {
            model_.profiles.emplace(std::move(name), raw_profile(cells));
        } catch (const Error& e) {
            fail(e.code, e.what());
        }
        return;
    }
    fail(Errc::syntax_error, "expected one of: base, set, dset, profile");
}

}  // namespace

ModelFile parse_model(std::string_view text) {
    ModelFile model;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        LineParser(model, line, lineno).parse_statement();
    }
    return model;
}

}  // namespace cylproj

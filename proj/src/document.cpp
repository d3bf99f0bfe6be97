#include "eqs/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace eqs {

namespace {

struct Line {
    std::size_t no;
    std::string text;
};

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Position of "|-" outside double quotes, or npos.
std::size_t turnstile(const std::string &s) {
    bool quoted = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (!quoted && s[i] == '|' && s[i + 1] == '-') return i;
    }
    return std::string::npos;
}

struct Pending {
    std::size_t depth;
    std::size_t line;
    Sequent conclusion;
    RuleApp app;
    std::vector<std::size_t> children;
};

class DocParser {
public:
    explicit DocParser(const std::string &text) {
        std::istringstream in(text);
        std::string s;
        for (std::size_t no = 1; std::getline(in, s); ++no) lines_.push_back({no, s});
    }

    DerivationDocument run() {
        DerivationDocument doc;
        std::size_t k = 0;
        bool have_format = false, have_system = false;
        for (; k < lines_.size(); ++k) {
            const Line &l = lines_[k];
            const std::string t = trim(l.text);
            if (t.empty() || t[0] == '#') continue;
            if (turnstile(l.text) != std::string::npos) break;
            const std::size_t col = l.text.find_first_not_of(" \t") + 1;
            if (t.rfind("term ", 0) == 0 || t.rfind("formula ", 0) == 0) {
                abbreviation(l, t, col, doc);
                continue;
            }
            const auto colon = t.find(':');
            if (colon == std::string::npos) throw ParseError(l.no, col, "expected 'key: value' or an inference line");
            const std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
            const std::size_t vcol = col + t.find(value, colon + 1);
            if (key == "format") {
                if (value != "1") throw ParseError(l.no, vcol, "unsupported format version '" + value + "'");
                have_format = true;
            } else if (key == "system") {
                doc.system = value;
                try {
                    parse_system(value);
                } catch (const ProofError &e) {
                    throw ParseError(l.no, vcol, e.what());
                }
                have_system = true;
            } else if (key == "order") {
                doc.order = value;
            } else if (key == "hypothesis") {
                doc.hypotheses.push_back(parse_sequent(value, &sig_, l.no, vcol));
            } else {
                throw ParseError(l.no, col, "unknown header key '" + key + "'");
            }
        }
        if (!have_format && !have_system && k == lines_.size()) throw ParseError(1, 1, "empty document");
        if (!have_format) throw ParseError(1, 1, "missing 'format: 1' header");
        if (!have_system) throw ParseError(1, 1, "missing 'system:' header");
        if (k == lines_.size()) throw ParseError(lines_.empty() ? 1 : lines_.back().no, 1, "no derivation tree");

        for (; k < lines_.size(); ++k) {
            const Line &l = lines_[k];
            const std::string t = trim(l.text);
            if (t.empty() || t[0] == '#') continue;
            inference(l);
        }
        doc.derivation = build(0);
        return doc;
    }

private:
    std::vector<Line> lines_;
    Signature sig_;
    std::vector<Pending> nodes_;
    std::vector<std::size_t> stack_;  // open ancestors, by index into nodes_

    void abbreviation(const Line &l, const std::string &t, std::size_t col, DerivationDocument &doc) {
        const bool term = t.rfind("term ", 0) == 0;
        const std::size_t start = term ? 5 : 8;
        const auto eq = t.find('=', start);
        if (eq == std::string::npos) throw ParseError(l.no, col, "expected 'name = value'");
        const std::string name = trim(t.substr(start, eq - start));
        if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            }))
            throw ParseError(l.no, col + start, "bad abbreviation name '" + name + "'");
        if (sig_.abbreviations.count(name)) throw ParseError(l.no, col + start, "abbreviation $" + name + " redefined");
        const std::string value = t.substr(eq + 1);
        std::variant<Term, Formula> v;
        if (term) v = parse_term(value, &sig_, l.no, col + eq + 1);
        else v = parse_formula(value, &sig_, l.no, col + eq + 1);
        sig_.abbreviations[name] = v;
        doc.abbreviations.emplace_back(name, v);
    }

    void inference(const Line &l) {
        const std::string &s = l.text;
        std::size_t indent = 0;
        while (indent < s.size() && s[indent] == ' ') ++indent;
        if (indent < s.size() && s[indent] == '\t') throw ParseError(l.no, indent + 1, "tabs are not allowed");
        if (indent % 2) throw ParseError(l.no, indent + 1, "indentation must be a multiple of two spaces");
        const std::size_t depth = indent / 2;
        const std::size_t ts = turnstile(s);
        if (ts == std::string::npos) throw ParseError(l.no, indent + 1, "expected '|-'");

        Pending p{depth, l.no, parse_sequent(s.substr(ts + 2), &sig_, l.no, ts + 3), {}, {}};
        annotations(l, s.substr(0, ts), p.app);

        while (!stack_.empty() && nodes_[stack_.back()].depth >= depth) stack_.pop_back();
        if (nodes_.empty()) {
            if (depth != 0) throw ParseError(l.no, 1, "the root must not be indented");
        } else {
            if (stack_.empty()) throw ParseError(l.no, 1, "a document holds a single tree");
            if (nodes_[stack_.back()].depth + 1 != depth)
                throw ParseError(l.no, indent + 1, "child indented more than two spaces below its parent");
            nodes_[stack_.back()].children.push_back(nodes_.size());
        }
        stack_.push_back(nodes_.size());
        nodes_.push_back(std::move(p));
    }

    void annotations(const Line &l, const std::string &head, RuleApp &app) {
        std::size_t i = 0;
        auto skip = [&] {
            while (i < head.size() && head[i] == ' ') ++i;
        };
        skip();
        std::size_t b = i;
        while (i < head.size() && head[i] != ' ') ++i;
        const std::string name = head.substr(b, i - b);
        auto rule = rule_from_name(name);
        if (!rule) throw ParseError(l.no, b + 1, "unknown rule '" + name + "'");
        app.rule = *rule;
        for (skip(); i < head.size(); skip()) {
            const std::size_t kb = i;
            while (i < head.size() && head[i] != '=' && head[i] != ' ') ++i;
            if (i >= head.size() || head[i] != '=') throw ParseError(l.no, kb + 1, "expected key=value");
            const std::string key = head.substr(kb, i - kb);
            ++i;
            std::string value;
            std::size_t vcol;
            if (i < head.size() && head[i] == '"') {
                const auto close = head.find('"', i + 1);
                if (close == std::string::npos) throw ParseError(l.no, i + 1, "unterminated quote");
                value = head.substr(i + 1, close - i - 1);
                vcol = i + 2;
                i = close + 1;
            } else {
                const std::size_t vb = i;
                while (i < head.size() && head[i] != ' ') ++i;
                value = head.substr(vb, i - vb);
                vcol = vb + 1;
            }
            set(l, key, value, vcol, kb + 1, app);
        }
    }

    void set(const Line &l, const std::string &key, const std::string &value, std::size_t vcol, std::size_t kcol,
             RuleApp &app) {
        auto number = [&] {
            if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(c); }))
                throw ParseError(l.no, vcol, "expected a number for " + key);
            return static_cast<std::size_t>(std::stoull(value));
        };
        if (key == "f") app.f = parse_formula(value, &sig_, l.no, vcol);
        else if (key == "skel") app.ab.skeleton = parse_formula(value, &sig_, l.no, vcol);
        else if (key == "t") app.t = parse_term(value, &sig_, l.no, vcol);
        else if (key == "r") app.r = parse_term(value, &sig_, l.no, vcol);
        else if (key == "s") app.s = parse_term(value, &sig_, l.no, vcol);
        else if (key == "u") app.u = value;
        else if (key == "hole") app.ab.hole = value;
        else if (key == "i") app.i = number();
        else if (key == "la") app.la = number();
        else if (key == "ls") app.ls = number();
        else throw ParseError(l.no, kcol, "unknown annotation '" + key + "'");
    }

    Derivation build(std::size_t k) {
        const Pending &p = nodes_[k];
        if (p.children.size() != premiss_count(p.app.rule))
            throw ParseError(p.line, 1,
                             std::string(rule_name(p.app.rule)) + " needs " +
                                 std::to_string(premiss_count(p.app.rule)) + " premisses, found " +
                                 std::to_string(p.children.size()));
        std::vector<Derivation> ps;
        for (auto c : p.children) ps.push_back(build(c));
        return Derivation::make(p.conclusion, p.app, std::move(ps));
    }
};

void print_tree(const Derivation &d, std::size_t depth, std::string &out) {
    out += std::string(2 * depth, ' ') + d.app().str() + " |- " + d.conclusion().str() + "\n";
    for (const auto &p : d.premisses()) print_tree(p, depth + 1, out);
}

}  // namespace

SystemSpec DerivationDocument::spec() const {
    SystemSpec s = parse_system(system);
    s.hypotheses = hypotheses;
    return s;
}

DerivationDocument parse_document(const std::string &text) { return DocParser(text).run(); }

std::string print_document(const DerivationDocument &doc) {
    std::string out = "format: " + std::to_string(doc.format) + "\nsystem: " + doc.system + "\n";
    if (!doc.order.empty()) out += "order: " + doc.order + "\n";
    for (const auto &h : doc.hypotheses) out += "hypothesis: " + h.str() + "\n";
    for (const auto &[name, v] : doc.abbreviations) {
        if (const Term *t = std::get_if<Term>(&v)) out += "term " + name + " = " + t->str() + "\n";
        else out += "formula " + name + " = " + std::get<Formula>(v).str() + "\n";
    }
    out += "\n";
    print_tree(doc.derivation, 0, out);
    return out;
}

DerivationDocument read_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void write_document(const DerivationDocument &doc, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw ProofError("cannot write " + path);
    out << print_document(doc);
}

}  // namespace eqs

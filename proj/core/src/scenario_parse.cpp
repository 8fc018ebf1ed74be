#include <fstream>
#include <sstream>

#include "diffalg/scenario.hpp"

namespace diffalg {

namespace {

// recursive-descent parser over a single expression string
class ExprParser {
  public:
    ExprParser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        if (++depth_ > 128) fail("expression nesting too deep");
        Polynomial acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else {
                --depth_;
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (isalnum(static_cast<unsigned char>(c)) || c == '(') {
                fail("implicit multiplication is not allowed");
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (!isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a number");
            long e = 0;
            while (isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (text_[pos_++] - '0');
                if (e > 4096) fail("exponent too large");
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            return Polynomial::constant(ring_, ring_->field().from_string(digits));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += text_[pos_++];
            int idx = ring_->var_index(name);
            if (idx < 0)
                throw ParseError("unknown identifier '" + name + "'", 1,
                                 static_cast<int>(start) + 1);
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail(c == '\0' ? "unexpected end of expression"
                       : std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value, int line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : value) {
        if (c == '"') {
            quoted = !quoted;
            continue;
        }
        if (c == ',' && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (quoted) throw ParseError("unterminated quote", line, 1);
    std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    return out;
}

}  // namespace

namespace scenario_detail {

// split a value at top-level commas, honoring double quotes; quotes are
// stripped from the pieces
std::vector<std::string> split_list(const std::string& value) {
    return diffalg::split_list(value, 0);  // anonymous-namespace helper above
}

std::string unquote(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '"') out += c;
    return trim(out);
}

}  // namespace scenario_detail

namespace {

std::string unquote(const std::string& s) { return scenario_detail::unquote(s); }

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return ExprParser(text, ring).parse();
}

const std::string& TaskSpec::get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw algebra_error("task " + std::to_string(number) + " (" + kind +
                            ") is missing parameter '" + key + "'");
    return it->second;
}

const std::vector<Polynomial>* Scenario::derivation_images(const std::string& name) const {
    for (const auto& [n, imgs] : derivations)
        if (n == name) return &imgs;
    return nullptr;
}

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
    Scenario out;
    out.name = name;

    struct RawSection {
        std::string header;
        std::vector<std::tuple<std::string, std::string, int>> entries;  // key, value, line
        int line;
    };
    std::vector<RawSection> sections;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError("unterminated section header", lineno, 1);
            sections.push_back({trim(t.substr(1, t.size() - 2)), {}, lineno});
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, 1);
        if (sections.empty()) throw ParseError("entry before any section", lineno, 1);
        sections.back().entries.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno});
    }

    // pass 1: the ring
    const RawSection* ring_section = nullptr;
    for (const auto& s : sections)
        if (s.header == "ring") {
            if (ring_section) throw ParseError("duplicate [ring] section", s.line, 1);
            ring_section = &s;
        }
    if (!ring_section) throw ParseError("missing [ring] section", 1, 1);

    Field field = Field::rationals();
    std::vector<std::string> variables;
    std::vector<int> weights;
    std::vector<std::string> ideal_texts;
    bool saw_field = false;
    for (const auto& [key, value, l] : ring_section->entries) {
        if (key == "field") {
            saw_field = true;
            if (value == "Q")
                field = Field::rationals();
            else if (value.size() > 1 && value[0] == 'F')
                field = Field::prime(static_cast<std::uint32_t>(std::stoul(value.substr(1))));
            else
                throw ParseError("field must be Q or F<p>, got '" + value + "'", l, 1);
        } else if (key == "variables") {
            for (const auto& v : split_list(value, l)) variables.push_back(v);
        } else if (key == "weights") {
            for (const auto& v : split_list(value, l)) weights.push_back(std::stoi(v));
        } else if (key == "ideal") {
            for (const auto& v : split_list(value, l)) ideal_texts.push_back(v);
        } else if (key == "is_domain") {
            out.is_domain = value == "true";
        } else if (key == "order") {
            if (value != "grevlex" && value != "lex")
                throw ParseError("order must be grevlex or lex", l, 1);
            out.order = value;
        } else {
            throw ParseError("unknown [ring] key '" + key + "'", l, 1);
        }
    }
    if (!saw_field) throw ParseError("[ring] needs a field", ring_section->line, 1);
    if (variables.empty()) throw ParseError("[ring] needs variables", ring_section->line, 1);
    out.ring = make_ring(field, variables, weights);
    for (const auto& t : ideal_texts) out.ideal.push_back(parse_polynomial(t, out.ring));

    // pass 2: derivations and tasks
    for (const auto& s : sections) {
        if (s.header == "ring") continue;
        if (s.header.rfind("derivation ", 0) == 0) {
            std::string dname = trim(s.header.substr(11));
            if (dname.empty()) throw ParseError("derivation needs a name", s.line, 1);
            std::vector<Polynomial> images(out.ring->nvars(), Polynomial::zero(out.ring));
            for (const auto& [key, value, l] : s.entries) {
                int idx = out.ring->var_index(key);
                if (idx < 0) throw ParseError("unknown variable " + key, l, 1);
                images[static_cast<std::size_t>(idx)] =
                    parse_polynomial(unquote(value), out.ring);
            }
            out.derivations.emplace_back(dname, std::move(images));
            continue;
        }
        if (s.header.rfind("task", 0) == 0) {
            TaskSpec task;
            task.line = s.line;
            std::string num = trim(s.header.substr(4));
            task.number = num.empty() ? static_cast<int>(out.tasks.size()) + 1 : std::stoi(num);
            for (const auto& [key, value, l] : s.entries) {
                if (key == "kind")
                    task.kind = value;
                else
                    task.params[key] = value;
            }
            if (task.kind.empty()) throw ParseError("task needs a kind", s.line, 1);
            if (!is_known_task_kind(task.kind))
                throw ParseError("unknown task kind '" + task.kind + "'", s.line, 1);
            out.tasks.push_back(std::move(task));
            continue;
        }
        throw ParseError("unknown section [" + s.header + "]", s.line, 1);
    }
    return out;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw algebra_error("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
    return parse_scenario_text(buf.str(), name);
}

}  // namespace diffalg

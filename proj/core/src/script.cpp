#include "q0u/script.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "q0u/abbrev.hpp"
#include "q0u/errors.hpp"
#include "q0u/parser.hpp"
#include "q0u/printer.hpp"

namespace q0u {

namespace {

struct Line {
    int number;  // 1-based in the file
    std::string text;
};

// Splits into lines, dropping comments and blank lines.
std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        out.push_back({n, raw.substr(b, e - b + 1)});
    }
    return out;
}

// Cursor over one line: words, quoted strings, and punctuation.
class LineScanner {
  public:
    LineScanner(const Line& line) : line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_.number, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < line_.text.size() &&
               std::isspace(static_cast<unsigned char>(line_.text[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= line_.text.size();
    }
    char peek() {
        skip_ws();
        return done() ? '\0' : line_.text[pos_];
    }
    bool try_punct(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(char c) {
        if (!try_punct(c)) fail(std::string("expected '") + c + "'");
    }

    // A run of non-space, non-delimiter characters.
    std::string word() {
        skip_ws();
        if (done()) fail("unexpected end of line");
        size_t start = pos_;
        while (pos_ < line_.text.size()) {
            const char c = line_.text[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '{' || c == '}' ||
                c == ';' || c == ':' || c == '[' || c == ']' || c == '.')
                break;
            ++pos_;
        }
        if (pos_ == start) fail("word expected");
        return line_.text.substr(start, pos_ - start);
    }

    std::string quoted() {
        skip_ws();
        if (peek() != '"') fail("quoted wff expected");
        ++pos_;
        size_t start = pos_;
        while (pos_ < line_.text.size() && line_.text[pos_] != '"') ++pos_;
        if (pos_ >= line_.text.size()) fail("unterminated quote");
        std::string s = line_.text.substr(start, pos_ - start);
        ++pos_;
        return s;
    }

    std::string rest() {
        skip_ws();
        return line_.text.substr(pos_);
    }

    int integer() {
        std::string w = word();
        try {
            size_t used = 0;
            int v = std::stoi(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (...) {
            fail("integer expected, got '" + w + "'");
        }
    }

    int line_number() const { return line_.number; }

  private:
    const Line& line_;
    size_t pos_ = 0;
};

// One `key := value` block: {x := x_i; B := "f_(oi) x_i"; alpha := i}.
// Values are wffs (quoted), or bare variable/type tokens.
struct ParamBlock {
    std::map<std::string, Wff> wffs;
    std::map<std::string, std::string> bare;
};

ParamBlock parse_params(LineScanner& s, const Signature& sig) {
    ParamBlock block;
    s.expect_punct('{');
    while (!s.try_punct('}')) {
        std::string key = s.word();
        s.expect_punct(':');
        s.expect_punct('=');
        if (s.peek() == '"') {
            std::string text = s.quoted();
            block.wffs.emplace(key, parse_wff(text, sig));
        } else {
            block.bare.emplace(key, s.word());
        }
        s.try_punct(';');
    }
    return block;
}

Variable bare_variable(const std::string& token, LineScanner& s) {
    Signature empty;
    Wff w;
    try {
        w = parse_wff(token, empty);
    } catch (const error& e) {
        s.fail("expected a variable, got '" + token + "' (" + e.what() + ")");
    }
    if (w.kind() != WffKind::Var) s.fail("expected a variable, got '" + token + "'");
    return Variable{w.name(), w.atom_type()};
}

class ScriptBuilder {
  public:
    explicit ScriptBuilder(std::vector<Line> lines) : lines_(std::move(lines)) {}

    ProofScript run() {
        if (!at_end() && first_word(cur()) == "theory") {
            LineScanner s(cur());
            s.word();
            script_.theory_name = s.word();
            ++pos_;
        }
        while (!at_end()) {
            const std::string head = first_word(cur());
            if (head == "const") {
                const_line();
            } else if (head == "proof") {
                proof_block();
            } else {
                LineScanner s(cur());
                s.fail("expected 'const' or 'proof', got '" + head + "'");
            }
        }
        return script_;
    }

  private:
    std::vector<Line> lines_;
    size_t pos_ = 0;
    ProofScript script_;

    bool at_end() const { return pos_ >= lines_.size(); }
    const Line& cur() const { return lines_[pos_]; }

    static std::string first_word(const Line& line) {
        LineScanner s(line);
        return s.word();
    }

    const ScriptProof* find_proof(const std::string& label) const {
        for (const auto& p : script_.proofs)
            if (p.label == label) return &p;
        return nullptr;
    }

    Wff load_wff(const std::string& text, LineScanner& s) {
        try {
            return expand(parse_wff(text, script_.signature));
        } catch (const error& e) {
            s.fail(std::string("in \"") + text + "\": " + e.what());
        }
    }

    void const_line() {
        LineScanner s(cur());
        s.word();  // const
        std::string name = s.word();
        s.expect_punct(':');
        try {
            script_.signature.declare(name, parse_type(s.rest()));
        } catch (const error& e) {
            s.fail(e.what());
        }
        ++pos_;
    }

    void proof_block() {
        LineScanner header(cur());
        header.word();  // proof
        ScriptProof entry;
        entry.label = header.word();
        if (find_proof(entry.label)) header.fail("duplicate proof label '" + entry.label + "'");

        if (header.try_punct('[')) {
            std::string kw = header.word();
            if (kw != "hyps") header.fail("expected 'hyps:' inside [...]");
            header.expect_punct(':');
            while (!header.try_punct(']')) {
                entry.proof.hypotheses.push_back(load_wff(header.quoted(), header));
                header.try_punct(';');
            }
        }
        header.expect_punct(':');
        entry.proof.conclusion = load_wff(header.quoted(), header);
        ++pos_;

        // Theorem-section assembly: one block of copied steps per imported
        // label, in first-use order.
        std::map<std::string, int> import_offsets;
        int qed = -1;
        while (true) {
            if (at_end()) {
                LineScanner s(lines_.back());
                s.fail("proof '" + entry.label + "' has no qed line");
            }
            if (first_word(cur()) == "qed") {
                LineScanner s(cur());
                s.word();
                qed = s.integer();
                ++pos_;
                break;
            }
            step_line(entry, import_offsets);
        }
        if (qed != static_cast<int>(entry.proof.main_steps.size())) {
            LineScanner s(lines_[pos_ - 1]);
            s.fail("qed cites step " + std::to_string(qed) + " but the proof has " +
                   std::to_string(entry.proof.main_steps.size()) + " steps");
        }
        script_.proofs.push_back(std::move(entry));
    }

    void step_line(ScriptProof& entry, std::map<std::string, int>& import_offsets) {
        LineScanner s(cur());
        const int expected = static_cast<int>(entry.proof.main_steps.size()) + 1;
        const int num = s.integer();
        if (num != expected)
            s.fail("step number " + std::to_string(num) + " out of order (expected " +
                   std::to_string(expected) + ")");
        s.expect_punct('.');
        Wff wff = load_wff(s.quoted(), s);
        Justification just = justification(s, entry, import_offsets);
        if (!s.done()) s.fail("trailing text after the justification");
        entry.proof.main_steps.push_back({std::move(wff), std::move(just)});
        ++pos_;
    }

    // 1-based source index -> 0-based, bounds checked later by the kernel.
    static int step_ref(LineScanner& s) { return s.integer() - 1; }

    Justification justification(LineScanner& s, ScriptProof& entry,
                                std::map<std::string, int>& import_offsets) {
        std::string kind = s.word();
        if (kind == "axiom") {
            std::string name = s.word();
            auto schema = axiom_schema_from_name(name);
            if (!schema) s.fail("unknown axiom schema '" + name + "'");
            AxiomParams params;
            if (s.peek() == '{') {
                ParamBlock block = parse_params(s, script_.signature);
                for (auto& [key, value] : block.bare) {
                    if (key == "alpha")
                        params.alpha = parse_type(value);
                    else if (key == "beta")
                        params.beta = parse_type(value);
                    else if (key == "x")
                        params.x = bare_variable(value, s);
                    else
                        s.fail("unexpected bare parameter '" + key + "'");
                }
                for (auto& [key, value] : block.wffs) {
                    if (key == "A")
                        params.A = value;
                    else if (key == "B")
                        params.B = value;
                    else if (key == "c")
                        params.c = value;
                    else if (key == "x" && value.kind() == WffKind::Var)
                        params.x = Variable{value.name(), value.atom_type()};
                    else
                        s.fail("unexpected wff parameter '" + key + "'");
                }
            }
            return AxiomJ{*schema, std::move(params)};
        }
        if (kind == "hyp") return HypJ{s.integer()};
        if (kind == "thm") {
            std::string label = s.word();
            s.expect_punct('.');
            const int source_step = s.integer();
            return import_theorem(label, source_step, entry, import_offsets, s);
        }
        if (kind == "R1") {
            R1J j;
            j.eq_step = step_ref(s);
            j.target_step = step_ref(s);
            if (s.word() != "at") s.fail("R1 needs 'at <path>'");
            j.path = parse_occurrence_path(s);
            return j;
        }
        if (kind == "R2") {
            R2J j;
            j.minor_step = step_ref(s);
            j.major_step = step_ref(s);
            return j;
        }
        if (kind == "derived") return derived_justification(s);
        s.fail("unknown justification '" + kind + "'");
    }

    OccurrencePath parse_occurrence_path(LineScanner& s) {
        std::string text;
        while (!s.done() && s.peek() != '{') {
            // path components are words possibly containing dots
            text += s.word();
            if (!s.done() && s.peek() == '.') {
                s.try_punct('.');
                text += '.';
            } else {
                break;
            }
        }
        try {
            return parse_path(text);
        } catch (const error& e) {
            s.fail(e.what());
        }
    }

    Justification import_theorem(const std::string& label, int source_step, ScriptProof& entry,
                                 std::map<std::string, int>& import_offsets, LineScanner& s) {
        const ScriptProof* source = find_proof(label);
        if (!source) s.fail("thm cites unknown proof '" + label + "'");
        if (!source->proof.hypotheses.empty())
            s.fail("thm can only cite hypothesis-free proofs ('" + label + "' has hypotheses)");
        for (const ProofStep& st : source->proof.main_steps) {
            if (std::holds_alternative<TheoremImportJ>(st.just))
                s.fail("thm cites '" + label +
                       "', which itself imports theorems; only one level of import is allowed");
            if (std::holds_alternative<HypJ>(st.just))
                s.fail("thm cites '" + label + "', which uses hypothesis steps");
        }
        if (source_step < 1 ||
            static_cast<size_t>(source_step) > source->proof.main_steps.size())
            s.fail("thm step " + std::to_string(source_step) + " out of range for '" + label +
                   "'");

        auto [it, inserted] = import_offsets.emplace(
            label, static_cast<int>(entry.proof.theorem_steps.size()));
        if (inserted) {
            const int offset = it->second;
            for (const ProofStep& st : source->proof.main_steps) {
                ProofStep copy = st;
                if (auto* r1 = std::get_if<R1J>(&copy.just)) {
                    r1->eq_step += offset;
                    r1->target_step += offset;
                } else if (auto* r2 = std::get_if<R2J>(&copy.just)) {
                    r2->minor_step += offset;
                    r2->major_step += offset;
                } else if (auto* d = std::get_if<DerivedJ>(&copy.just)) {
                    for (int& k : d->premises) k += offset;
                }
                entry.proof.theorem_steps.push_back(std::move(copy));
            }
        }
        return TheoremImportJ{it->second + source_step - 1, label, source_step};
    }

    Justification derived_justification(LineScanner& s) {
        std::string name = s.word();
        auto rule = derived_rule_from_name(name);
        if (!rule) s.fail("unknown derived rule '" + name + "'");
        DerivedJ j;
        j.rule = *rule;
        switch (*rule) {
            case DerivedRule::R1Prime:
            case DerivedRule::Beta: {
                j.premises.push_back(step_ref(s));
                j.premises.push_back(step_ref(s));
                if (s.word() != "at") s.fail(name + " needs 'at <path>'");
                j.params.path = parse_occurrence_path(s);
                return j;
            }
            case DerivedRule::R2Prime:
                j.premises.push_back(step_ref(s));
                j.premises.push_back(step_ref(s));
                return j;
            case DerivedRule::UnivInst: {
                j.premises.push_back(step_ref(s));
                j.premises.push_back(step_ref(s));
                ParamBlock block = parse_params(s, script_.signature);
                if (auto it = block.bare.find("x"); it != block.bare.end())
                    j.params.x = bare_variable(it->second, s);
                if (auto it = block.wffs.find("x"); it != block.wffs.end())
                    j.params.x = Variable{it->second.name(), it->second.atom_type()};
                if (auto it = block.wffs.find("A"); it != block.wffs.end()) j.params.A = it->second;
                if (auto it = block.wffs.find("B"); it != block.wffs.end()) j.params.B = it->second;
                return j;
            }
            case DerivedRule::UnivGen: {
                j.premises.push_back(step_ref(s));
                ParamBlock block = parse_params(s, script_.signature);
                if (auto it = block.bare.find("x"); it != block.bare.end())
                    j.params.x = bare_variable(it->second, s);
                return j;
            }
            case DerivedRule::Taut: {
                while (!s.done() && s.peek() != '{') j.premises.push_back(step_ref(s));
                // The target for the tautology check is the step's own wff;
                // the loader fills it in afterwards.
                return j;
            }
            case DerivedRule::Deduction: {
                std::string label = s.word();
                const ScriptProof* source = find_proof(label);
                if (!source) s.fail("deduction cites unknown proof '" + label + "'");
                j.params.subproof = std::make_shared<Proof>(source->proof);
                j.params.subproof_label = label;
                return j;
            }
        }
        s.fail("unhandled derived rule");
    }
};

}  // namespace

ProofScript parse_script(std::istream& in) {
    ScriptBuilder builder(significant_lines(in));
    ProofScript script = builder.run();
    // taut steps validate against the step's own wff
    for (ScriptProof& p : script.proofs)
        for (ProofStep& st : p.proof.main_steps)
            if (auto* d = std::get_if<DerivedJ>(&st.just))
                if (d->rule == DerivedRule::Taut && !d->params.A) d->params.A = st.wff;
    return script;
}

ProofScript parse_script_text(const std::string& text) {
    std::istringstream in(text);
    return parse_script(in);
}

ProofScript load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open script file: " + path);
    return parse_script(in);
}

namespace {

std::string quote(const Wff& w) { return "\"" + print_wff(fold(w)) + "\""; }

void serialize_axiom_params(const AxiomJ& ax, std::string& out) {
    std::vector<std::string> parts;
    if (ax.params.alpha) parts.push_back("alpha := " + print_type(*ax.params.alpha));
    if (ax.params.beta) parts.push_back("beta := " + print_type(*ax.params.beta));
    if (ax.params.x) parts.push_back("x := " + print_variable(*ax.params.x));
    if (ax.params.A) parts.push_back("A := " + quote(*ax.params.A));
    if (ax.params.B) parts.push_back("B := " + quote(*ax.params.B));
    if (ax.params.c) parts.push_back("c := " + quote(*ax.params.c));
    if (parts.empty()) return;
    out += " {";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    out += "}";
}

}  // namespace

std::string serialize_script(const ProofScript& script) {
    std::string out;
    if (!script.theory_name.empty()) out += "theory " + script.theory_name + "\n";
    for (const auto& [name, type] : script.signature.constants())
        out += "const " + name + " : " + print_type(type) + "\n";
    for (const ScriptProof& p : script.proofs) {
        if (!p.proof.theorem_steps.empty())
            throw error("serialize_script does not support proofs with theorem imports");
        out += "\nproof " + p.label;
        if (!p.proof.hypotheses.empty()) {
            out += " [hyps: ";
            for (size_t i = 0; i < p.proof.hypotheses.size(); ++i) {
                if (i) out += "; ";
                out += quote(p.proof.hypotheses[i]);
            }
            out += "]";
        }
        out += " : " + quote(p.proof.conclusion) + "\n";
        for (size_t i = 0; i < p.proof.main_steps.size(); ++i) {
            const ProofStep& st = p.proof.main_steps[i];
            out += "  " + std::to_string(i + 1) + ". " + quote(st.wff) + "  ";
            if (const auto* ax = std::get_if<AxiomJ>(&st.just)) {
                out += std::string("axiom ") + axiom_schema_name(ax->schema);
                serialize_axiom_params(*ax, out);
            } else if (const auto* hyp = std::get_if<HypJ>(&st.just)) {
                out += "hyp " + std::to_string(hyp->index);
            } else if (const auto* r1 = std::get_if<R1J>(&st.just)) {
                out += "R1 " + std::to_string(r1->eq_step + 1) + " " +
                       std::to_string(r1->target_step + 1) + " at " + print_path(r1->path);
            } else if (const auto* r2 = std::get_if<R2J>(&st.just)) {
                out += "R2 " + std::to_string(r2->minor_step + 1) + " " +
                       std::to_string(r2->major_step + 1);
            } else if (const auto* d = std::get_if<DerivedJ>(&st.just)) {
                out += std::string("derived ") + derived_rule_name(d->rule);
                if (d->rule == DerivedRule::Deduction) {
                    out += " " + d->params.subproof_label;
                } else {
                    for (int k : d->premises) out += " " + std::to_string(k + 1);
                    if (d->rule == DerivedRule::R1Prime || d->rule == DerivedRule::Beta)
                        out += " at " + print_path(d->params.path);
                    if (d->rule == DerivedRule::UnivGen && d->params.x)
                        out += " {x := " + print_variable(*d->params.x) + "}";
                    if (d->rule == DerivedRule::UnivInst && d->params.x) {
                        out += " {x := " + print_variable(*d->params.x);
                        if (d->params.A) out += "; A := " + quote(*d->params.A);
                        if (d->params.B) out += "; B := " + quote(*d->params.B);
                        out += "}";
                    }
                }
            } else {
                throw error("serialize_script: unsupported justification");
            }
            out += "\n";
        }
        out += "qed " + std::to_string(p.proof.main_steps.size()) + "\n";
    }
    return out;
}

}  // namespace q0u

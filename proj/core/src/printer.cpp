#include "q0u/printer.hpp"

#include "q0u/errors.hpp"

namespace q0u {

namespace {

// Binding strength, loosest first.  Binders take the lowest level: their
// body extends as far right as possible.
enum Level {
    kBinder = 0,
    kImplies = 1,
    kOr = 2,
    kAnd = 3,
    kEq = 4,
    kNot = 5,
    kApp = 6,
    kAtom = 7,
};

int level_of(const Wff& w) {
    switch (w.kind()) {
        case WffKind::Var:
        case WffKind::Const: return kAtom;
        case WffKind::App: return kApp;
        case WffKind::Abs: return kBinder;
        case WffKind::Abbrev:
            switch (w.abbrev_name()) {
                case AbbrevName::Implies: return kImplies;
                case AbbrevName::Or: return kOr;
                case AbbrevName::And: return kAnd;
                case AbbrevName::Equals:
                case AbbrevName::NotEquals:
                case AbbrevName::QuasiEquals: return kEq;
                case AbbrevName::Not: return kNot;
                case AbbrevName::Forall:
                case AbbrevName::Exists:
                case AbbrevName::ExistsUnique:
                case AbbrevName::DefiniteDescription: return kBinder;
                default: return kAtom;  // T F def(..) undef(..) bot sections
            }
    }
    return kAtom;
}

void print_rec(const Wff& w, int min_level, std::string& out);

void print_bracketed(const Wff& w, int min_level, std::string& out) {
    if (level_of(w) < min_level) {
        out += '[';
        print_rec(w, kBinder, out);
        out += ']';
    } else {
        print_rec(w, min_level, out);
    }
}

void print_binary(const Wff& a, const char* op, const Wff& b, int lvl, bool left_assoc,
                  std::string& out) {
    print_bracketed(a, left_assoc ? lvl : lvl + 1, out);
    out += ' ';
    out += op;
    out += ' ';
    print_bracketed(b, left_assoc ? lvl + 1 : lvl, out);
}

void print_rec(const Wff& w, int min_level, std::string& out) {
    switch (w.kind()) {
        case WffKind::Var:
            out += print_variable(Variable{w.name(), w.atom_type()});
            return;
        case WffKind::Const: {
            Type alpha;
            if (is_q_const(w, &alpha)) {
                out += print_variable(Variable{"Q", alpha});  // Q_<alpha>
                return;
            }
            if (is_iota_const(w, &alpha)) {
                out += print_variable(Variable{"iota", alpha});
                return;
            }
            out += w.name();
            return;
        }
        case WffKind::App:
            print_bracketed(w.fun(), kApp, out);
            out += ' ';
            print_bracketed(w.arg(), kAtom, out);
            return;
        case WffKind::Abs:
            out += '\\';
            out += print_variable(w.binder());
            out += ". ";
            print_rec(w.body(), kBinder, out);
            return;
        case WffKind::Abbrev: break;
    }
    const auto& args = w.abbrev_args();
    switch (w.abbrev_name()) {
        case AbbrevName::True: out += 'T'; return;
        case AbbrevName::False: out += 'F'; return;
        case AbbrevName::AndConst: out += "(/\\)"; return;
        case AbbrevName::OrConst: out += "(\\/)"; return;
        case AbbrevName::ImpliesConst: out += "(=>)"; return;
        case AbbrevName::NotConst: out += "(~)"; return;
        case AbbrevName::Bottom:
            out += print_variable(Variable{"bot", w.abbrev_type_arg()});
            return;
        case AbbrevName::IsDefined:
            out += "def(";
            print_rec(args[0], kBinder, out);
            out += ')';
            return;
        case AbbrevName::IsUndefined:
            out += "undef(";
            print_rec(args[0], kBinder, out);
            out += ')';
            return;
        case AbbrevName::Not:
            out += '~';
            print_bracketed(args[0], kNot, out);
            return;
        case AbbrevName::And: print_binary(args[0], "/\\", args[1], kAnd, true, out); return;
        case AbbrevName::Or: print_binary(args[0], "\\/", args[1], kOr, true, out); return;
        case AbbrevName::Implies:
            print_binary(args[0], "=>", args[1], kImplies, false, out);
            return;
        case AbbrevName::Equals: print_binary(args[0], "=", args[1], kEq, true, out); return;
        case AbbrevName::NotEquals: print_binary(args[0], "/=", args[1], kEq, true, out); return;
        case AbbrevName::QuasiEquals:
            print_binary(args[0], "~=", args[1], kEq, true, out);
            return;
        case AbbrevName::Forall:
        case AbbrevName::Exists:
        case AbbrevName::ExistsUnique:
        case AbbrevName::DefiniteDescription: {
            switch (w.abbrev_name()) {
                case AbbrevName::Forall: out += "forall "; break;
                case AbbrevName::Exists: out += "exists "; break;
                case AbbrevName::ExistsUnique: out += "exists1 "; break;
                default: out += "I "; break;
            }
            out += print_variable(w.binder());
            out += ". ";
            print_rec(w.body(), kBinder, out);
            return;
        }
    }
    throw error("unknown abbreviation in printer");
}

}  // namespace

std::string print_wff(const Wff& w) {
    std::string out;
    print_rec(w, kBinder, out);
    return out;
}

}  // namespace q0u

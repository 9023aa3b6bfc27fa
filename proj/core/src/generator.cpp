#include "q0u/generator.hpp"

#include "q0u/abbrev.hpp"

namespace q0u {

namespace {

const Type& o() {
    static const Type t = Type::omicron();
    return t;
}
const Type& i() {
    static const Type t = Type::iota();
    return t;
}

}  // namespace

WffGenerator::WffGenerator(unsigned seed) : rng_(seed) {}

Signature WffGenerator::catalog_signature() {
    Signature sig;
    sig.declare("c", i());
    sig.declare("p", o());
    sig.declare("r", Type::arrow(o(), i()));
    return sig;
}

int WffGenerator::roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

Type WffGenerator::small_type(int fuel) {
    if (fuel <= 0 || roll(3) == 0) return roll(2) == 0 ? o() : i();
    return Type::arrow(small_type(fuel - 1), small_type(0));
}

Wff WffGenerator::core_leaf(const Type& target) {
    // Prefer a bound variable of the right type when one is in scope.
    std::vector<Variable> candidates;
    for (const Variable& v : scope_)
        if (v.type == target) candidates.push_back(v);
    if (!candidates.empty() && roll(3) != 0) return Wff::var(candidates[roll(candidates.size())]);
    if (target.is_arrow()) {
        // Close the type off with an abstraction chain; no free function
        // variables, so validity sweeps stay cheap.
        const Variable v{std::string(1, "xyz"[roll(3)]), target.domain()};
        scope_.push_back(v);
        Wff body = core_leaf(target.codomain());
        scope_.pop_back();
        return Wff::abs(v, body);
    }
    if (target.is_iota() && roll(4) == 0)
        return Wff::constant("c", i(), ConstKind::Nonlogical);
    static const char* names[] = {"x", "y", "z"};
    return Wff::var(names[roll(3)], target);
}

Wff WffGenerator::core(const Type& target, int max_depth) {
    if (max_depth <= 0) return core_leaf(target);
    switch (roll(4)) {
        case 0: return core_leaf(target);
        case 1: {
            if (!target.is_arrow()) break;
            const Variable v{std::string(1, "xyzfgh"[roll(6)]), target.domain()};
            scope_.push_back(v);
            Wff body = core(target.codomain(), max_depth - 1);
            scope_.pop_back();
            return Wff::abs(v, body);
        }
        case 2: {
            // Application through a small argument type.
            const Type sigma = roll(2) == 0 ? o() : i();
            Wff fun = core(Type::arrow(target, sigma), max_depth - 1);
            Wff arg = core(sigma, max_depth - 1);
            return Wff::app(fun, arg);
        }
        case 3: {
            if (!(target == o())) break;
            // An equality at a small type.
            const Type alpha = small_type(1);
            Wff lhs = core(alpha, max_depth - 1);
            Wff rhs = core(alpha, max_depth - 1);
            return Wff::app(Wff::app(Wff::q_const(alpha), lhs), rhs);
        }
    }
    return core_leaf(target);
}

Wff WffGenerator::surface_of(const Type& target, int max_depth) {
    if (target == o() && max_depth > 0) {
        switch (roll(10)) {
            case 0: return make_abbrev(AbbrevName::True, {});
            case 1: return make_abbrev(AbbrevName::False, {});
            case 2: return make_abbrev(AbbrevName::Not, {surface_of(o(), max_depth - 1)});
            case 3: {
                const AbbrevName name = std::vector{AbbrevName::And, AbbrevName::Or,
                                                    AbbrevName::Implies}[roll(3)];
                return make_abbrev(name,
                                   {surface_of(o(), max_depth - 1), surface_of(o(), max_depth - 1)});
            }
            case 4: {
                const Type alpha = small_type(1);
                const AbbrevName name = std::vector{AbbrevName::Equals, AbbrevName::NotEquals,
                                                    AbbrevName::QuasiEquals}[roll(3)];
                return make_abbrev(name, {surface_of(alpha, max_depth - 1),
                                          surface_of(alpha, max_depth - 1)});
            }
            case 5: {
                const AbbrevName name = std::vector{AbbrevName::Forall, AbbrevName::Exists,
                                                    AbbrevName::ExistsUnique}[roll(3)];
                const Variable v{std::string(1, "xyzfgh"[roll(6)]), small_type(1)};
                scope_.push_back(v);
                Wff body = surface_of(o(), max_depth - 1);
                scope_.pop_back();
                return make_abbrev(name, {v, body});
            }
            case 6: {
                const Type alpha = small_type(1);
                const AbbrevName name =
                    roll(2) == 0 ? AbbrevName::IsDefined : AbbrevName::IsUndefined;
                return make_abbrev(name, {surface_of(alpha, max_depth - 1)});
            }
            default: break;
        }
        return core(o(), max_depth);
    }
    if (max_depth > 0 && !target.is_omicron()) {
        const int choice = roll(8);
        if (choice == 0) return make_abbrev(AbbrevName::Bottom, {target});
        if (choice == 1) {
            const Variable v{std::string(1, "xyz"[roll(3)]), target};
            scope_.push_back(v);
            Wff body = surface_of(o(), max_depth - 1);
            scope_.pop_back();
            return make_abbrev(AbbrevName::DefiniteDescription, {v, body});
        }
    }
    return core(target, max_depth);
}

Wff WffGenerator::surface(int max_depth) { return surface_of(o(), max_depth); }

}  // namespace q0u

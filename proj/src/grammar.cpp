#include "cogrowth/grammar.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace cogrowth {

namespace {

constexpr int kZero = -1;  // Z-truncation zero rule: the unknown is identically 0

struct Builder {
    const FreeProductSpec& spec;
    const GrammarOptions& opts;
    EquationSystem sys;

    // key: (tag, g, X-mask); tag -1 = copy-independent keys F_{1,0} and F_{1,{1}}
    std::map<std::tuple<int, long, unsigned>, int> index;
    std::deque<int> worklist;
    std::vector<std::tuple<int, long, unsigned>> keys;

    explicit Builder(const FreeProductSpec& s, const GrammarOptions& o) : spec(s), opts(o) {}

    static unsigned zbit(long e) { return 1u << (e + 1); }  // exponents -1,0,1

    std::string copy_symbol(int tag) const {
        static const char* syms[] = {"x", "y", "z", "u", "v", "w"};
        if (tag < 6) return syms[tag];
        return "g" + std::to_string(tag);
    }

    std::string elem_name(int tag, long g) const {
        const FactorSpec& fac = spec.factors[spec.factor_of_tag(tag)];
        if (fac.kind == FactorSpec::Kind::finite) {
            if (g == fac.identity) return "1";
            if (g == 1) return copy_symbol(tag);
            return copy_symbol(tag) + "^" + std::to_string(g);
        }
        if (g == 0) return "1";
        if (g == 1) return copy_symbol(tag);
        return copy_symbol(tag) + "^" + std::to_string(g);
    }

    std::string key_name(int tag, long g, unsigned mask) const {
        if (tag < 0) return mask == 0 ? "F[1,{}]" : "F[1,{1}]";
        std::string xs;
        if (spec.factors[spec.factor_of_tag(tag)].kind == FactorSpec::Kind::finite) {
            const FactorSpec& fac = spec.factors[spec.factor_of_tag(tag)];
            for (int e = 0; e < fac.order(); ++e)
                if (mask >> e & 1) xs += (xs.empty() ? "" : ",") + elem_name(tag, e);
        } else {
            for (long e = -1; e <= 1; ++e)
                if (mask & zbit(e)) xs += (xs.empty() ? "" : ",") + elem_name(tag, e);
        }
        return "F[" + elem_name(tag, g) + ",{" + xs + "}]";
    }

    // mask in stored format: finite = element bits; Z = bit e+1 over -1..1
    int intern(int tag, long g, unsigned mask) {
        auto key = std::make_tuple(tag, g, mask);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(keys.size());
        index.emplace(key, id);
        keys.push_back(key);
        worklist.push_back(id);
        sys.unknown_names.push_back(key_name(tag, g, mask));
        bool identity_g = (tag < 0) || [&] {
            const FactorSpec& fac = spec.factors[spec.factor_of_tag(tag)];
            return fac.kind == FactorSpec::Kind::finite ? g == fac.identity : g == 0;
        }();
        sys.seed_one.push_back(identity_g ? 1 : 0);
        return id;
    }

    // Z interning from a raw exponent set in -2..2 (bit e+2), applying the
    // truncation: drop the far element when a nearer one is present, and use
    // the zero rule for |g| = 2.
    int intern_z_raw(int tag, long g, unsigned raw) {
        if ((raw >> 3 & 1) && (raw >> 4 & 1)) raw &= ~(1u << 4);  // {1,2} -> drop 2
        if ((raw >> 1 & 1) && (raw >> 0 & 1)) raw &= ~1u;         // {-1,-2} -> drop -2
        if (raw & ((1u << 0) | (1u << 4)))
            throw std::logic_error("grammar: unnormalizable Z avoidance set");
        if (g == 2) {
            if (raw >> 3 & 1) return kZero;
            throw std::logic_error("grammar: unreachable Z element x^2");
        }
        if (g == -2) {
            if (raw >> 1 & 1) return kZero;
            throw std::logic_error("grammar: unreachable Z element x^-2");
        }
        return intern(tag, g, raw >> 1);
    }

    // the fresh unknown F_{s^-1,{s^-1}} for a letter
    int fresh_for_letter(const Letter& l) {
        const FactorSpec& fac = spec.factors[l.factor];
        int tag = spec.tag_of(l.factor, l.copy);
        if (fac.kind == FactorSpec::Kind::finite) {
            int gi = fac.inverse[l.value];
            return intern(tag, gi, 1u << gi);
        }
        return intern(tag, -l.value, zbit(-l.value));
    }

    void add_term(GrammarEquation& eq, UniPoly coeff, std::vector<int> unknowns) {
        for (int u : unknowns)
            if (u == kZero) return;
        eq.rhs.push_back({std::move(coeff), std::move(unknowns)});
    }

    void build_equation(int id) {
        auto [tag, g, mask] = keys[id];
        GrammarEquation eq;
        eq.lhs = id;
        const UniPoly one = UniPoly::constant(Rational(1), 't');
        const UniPoly t = UniPoly::monomial(Rational(1), 1, 't');

        if (tag < 0) {
            if (mask == 0) {
                // F = 1 + F*(F_{1,{1}} - 1)
                int up = intern(-1, 0, 1);
                add_term(eq, one, {});
                add_term(eq, one, {id, up});
                add_term(eq, -one, {id});
            } else {
                // F_{1,{1}} = 1 + sum_{s in S} t F_{s^-1,{s^-1}}
                add_term(eq, one, {});
                for (const Letter& l : spec.alphabet) add_term(eq, t, {fresh_for_letter(l)});
            }
            sys.equations.push_back(std::move(eq));
            return;
        }

        const int f = spec.factor_of_tag(tag);
        const FactorSpec& fac = spec.factors[f];

        if (fac.kind == FactorSpec::Kind::finite) {
            const unsigned idbit = 1u << fac.identity;
            if (opts.syllable_shortcut && fac.gens.size() == 1 &&
                g == fac.inverse[fac.gens[0]] && mask == (1u << g)) {
                // C = t^{d-1} A^{d-1} with A = F_{1,{x}}
                const int d = fac.order();
                int a = intern(tag, fac.identity, 1u << fac.gens[0]);
                add_term(eq, UniPoly::monomial(Rational(1), d - 1, 't'),
                         std::vector<int>(d - 1, a));
                sys.equations.push_back(std::move(eq));
                return;
            }
            auto shifted = [&](int sinv, unsigned m) {
                unsigned out = 0;
                for (int e = 0; e < fac.order(); ++e)
                    if (m >> e & 1) out |= 1u << fac.mul[sinv][e];
                return out;
            };
            if (g != fac.identity) {
                if (mask & idbit) {
                    bool g_in_gens = false;
                    for (int s : fac.gens) g_in_gens |= (s == g);
                    if (g_in_gens && (mask >> g & 1)) add_term(eq, t, {});
                    for (int s : fac.gens) {
                        if (mask >> s & 1) continue;
                        int si = fac.inverse[s];
                        add_term(eq, t, {intern(tag, fac.mul[si][g], shifted(si, mask))});
                    }
                } else {
                    add_term(eq, one,
                             {intern(tag, fac.identity, mask), intern(tag, g, mask | idbit)});
                }
            } else if (!(mask & idbit)) {
                int up = intern(tag, fac.identity, mask | idbit);
                add_term(eq, one, {});
                add_term(eq, one, {id, up});
                add_term(eq, -one, {id});
            } else {
                add_term(eq, one, {});
                for (const Letter& l : spec.alphabet) {
                    if (spec.tag_of(l.factor, l.copy) == tag) continue;
                    add_term(eq, t, {fresh_for_letter(l)});
                }
                for (int s : fac.gens) {
                    if (mask >> s & 1) continue;
                    int si = fac.inverse[s];
                    add_term(eq, t, {intern(tag, si, shifted(si, mask))});
                }
            }
            sys.equations.push_back(std::move(eq));
            return;
        }

        // infinite-cyclic factor; exponents, mask bits e+1 over -1..1
        auto raw = [&](unsigned m, long shift) {
            unsigned out = 0;
            for (long e = -1; e <= 1; ++e)
                if (m & zbit(e)) out |= 1u << (e + shift + 2);
            return out;
        };
        const unsigned idbit = zbit(0);
        if (g != 0) {
            if (mask & idbit) {
                if (mask & zbit(g)) add_term(eq, t, {});  // g is a generator here
                for (long s : {1L, -1L}) {
                    if (mask & zbit(s)) continue;
                    add_term(eq, t, {intern_z_raw(tag, g - s, raw(mask, -s))});
                }
            } else {
                add_term(eq, one, {intern(tag, 0, mask), intern(tag, g, mask | idbit)});
            }
        } else if (!(mask & idbit)) {
            int up = intern(tag, 0, mask | idbit);
            add_term(eq, one, {});
            add_term(eq, one, {id, up});
            add_term(eq, -one, {id});
        } else {
            add_term(eq, one, {});
            for (const Letter& l : spec.alphabet) {
                if (spec.tag_of(l.factor, l.copy) == tag) continue;
                add_term(eq, t, {fresh_for_letter(l)});
            }
            for (long s : {1L, -1L}) {
                if (mask & zbit(s)) continue;
                add_term(eq, t, {intern_z_raw(tag, -s, raw(mask, -s))});
            }
        }
        sys.equations.push_back(std::move(eq));
    }

    EquationSystem run() {
        for (size_t f = 0; f < spec.factors.size(); ++f) {
            const FactorSpec& fac = spec.factors[f];
            if (fac.kind == FactorSpec::Kind::finite && fac.order() > opts.max_factor_order)
                throw CapacityError("build_system: factor " + std::to_string(f) +
                                    " has order " + std::to_string(fac.order()) +
                                    " > bound " + std::to_string(opts.max_factor_order));
        }
        sys.root = intern(-1, 0, 0);
        if (spec.alphabet.empty()) {
            // degenerate product: only the empty word
            worklist.clear();
            GrammarEquation eq;
            eq.lhs = sys.root;
            eq.rhs.push_back({UniPoly::constant(Rational(1), 't'), {}});
            sys.equations.push_back(std::move(eq));
            return std::move(sys);
        }
        while (!worklist.empty()) {
            int id = worklist.front();
            worklist.pop_front();
            build_equation(id);
        }
        // equations were appended in pop order == id order
        for (int i = 0; i < sys.size(); ++i)
            if (sys.equations[i].lhs != i)
                throw std::logic_error("grammar: equation order mismatch");
        return std::move(sys);
    }
};

}  // namespace

EquationSystem build_system(const FreeProductSpec& spec, const GrammarOptions& opts) {
    return Builder(spec, opts).run();
}

std::vector<TruncatedSeries> solve_system_all(const EquationSystem& sys, int N) {
    if (N < 0) throw std::domain_error("solve_system_series: N must be >= 0");
    std::vector<TruncatedSeries> vals;
    vals.reserve(sys.size());
    for (int i = 0; i < sys.size(); ++i) {
        TruncatedSeries s(N);
        if (sys.seed_one[i]) s.set_coeff(0, Rational(1));
        vals.push_back(std::move(s));
    }
    auto step = [&](const std::vector<TruncatedSeries>& cur) {
        std::vector<TruncatedSeries> next;
        next.reserve(sys.size());
        for (const GrammarEquation& eq : sys.equations) {
            TruncatedSeries acc(N);
            for (const GrammarTerm& term : eq.rhs) {
                TruncatedSeries prod = TruncatedSeries::from_poly(term.coeff, N);
                for (int u : term.unknowns) prod = prod * cur[u];
                acc = acc + prod;
            }
            next.push_back(std::move(acc));
        }
        return next;
    };
    // product-rule chains can need a couple of rounds per t-order
    const int max_rounds = 4 * (N + 2);
    for (int round = 0; round < max_rounds; ++round) {
        auto next = step(vals);
        const bool stable = next == vals;
        vals = std::move(next);
        if (stable) return vals;
    }
    throw std::runtime_error("solve_system_series: fixpoint iteration did not converge");
}

TruncatedSeries solve_system_series(const EquationSystem& sys, int N) {
    return solve_system_all(sys, N)[sys.root];
}

std::string export_system(const EquationSystem& sys, const std::string& format) {
    auto term_str = [&](const GrammarTerm& term) {
        std::string s;
        const bool coeff_is_one = term.coeff == UniPoly::constant(Rational(1), 't');
        if (!coeff_is_one || term.unknowns.empty()) {
            std::string c = term.coeff.str();
            if (term.coeff.degree() > 0 && !term.unknowns.empty() &&
                term.coeff.str().find(' ') != std::string::npos)
                c = "(" + c + ")";
            s = c;
        }
        for (int u : term.unknowns) {
            if (!s.empty()) s += "*";
            s += sys.unknown_names[u];
        }
        return s;
    };

    if (format == "text") {
        std::ostringstream os;
        for (const GrammarEquation& eq : sys.equations) {
            os << sys.unknown_names[eq.lhs] << " = ";
            if (eq.rhs.empty()) os << "0";
            for (size_t k = 0; k < eq.rhs.size(); ++k) {
                if (k > 0) os << " + ";
                os << term_str(eq.rhs[k]);
            }
            os << "\n";
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["unknowns"] = sys.unknown_names;
        j["root"] = sys.unknown_names[sys.root];
        nlohmann::json eqs = nlohmann::json::array();
        for (const GrammarEquation& eq : sys.equations) {
            nlohmann::json terms = nlohmann::json::array();
            for (const GrammarTerm& term : eq.rhs) {
                nlohmann::json names = nlohmann::json::array();
                for (int u : term.unknowns) names.push_back(sys.unknown_names[u]);
                terms.push_back({term.coeff.str(), names});
            }
            eqs.push_back({{"lhs", sys.unknown_names[eq.lhs]}, {"rhs", terms}});
        }
        j["equations"] = eqs;
        return j.dump(2);
    }
    throw std::domain_error("export_system: unknown format " + format);
}

}  // namespace cogrowth

#include "cogrowth/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <stdexcept>

namespace cogrowth {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table)
    : mul(std::move(table)) {
    order = static_cast<int>(mul.size());
    if (order < 1 || order > 127)
        throw std::domain_error("FiniteGroupTable: order must be in 1..127");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != order)
            throw std::domain_error("FiniteGroupTable: table is not square");
        for (int v : row)
            if (v < 0 || v >= order)
                throw std::domain_error("FiniteGroupTable: entry out of range");
    }

    identity = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::domain_error("FiniteGroupTable: no identity element");

    inverse.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (mul[a][b] == identity && mul[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0)
            throw std::domain_error("FiniteGroupTable: element without inverse");
    }

    if (order <= 64) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        throw std::domain_error("FiniteGroupTable: not associative");
    } else {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<int> pick(0, order - 1);
        for (int trial = 0; trial < 200000; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                throw std::domain_error("FiniteGroupTable: not associative");
        }
    }
}

FiniteGroupTable FiniteGroupTable::cyclic(int d) {
    if (d < 1) throw std::domain_error("cyclic: order must be positive");
    std::vector<std::vector<int>> table(d, std::vector<int>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) table[a][b] = (a + b) % d;
    return FiniteGroupTable(std::move(table));
}

GeneratingSetSpec::GeneratingSetSpec(const FiniteGroupTable& g, std::vector<int> es,
                                     bool allow_identity)
    : elems(std::move(es)) {
    for (int e : elems) {
        if (e < 0 || e >= g.order)
            throw std::domain_error("GeneratingSetSpec: element out of range");
        if (e == g.identity && !allow_identity)
            throw std::domain_error("GeneratingSetSpec: identity not allowed");
        if (std::count(elems.begin(), elems.end(), e) != 1)
            throw std::domain_error("GeneratingSetSpec: duplicate element");
    }

    symmetric = true;
    for (int e : elems)
        if (std::find(elems.begin(), elems.end(), g.inverse[e]) == elems.end())
            symmetric = false;

    // closure BFS: the set must generate the whole group
    std::vector<char> seen(g.order, 0);
    std::deque<int> queue{g.identity};
    seen[g.identity] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int s : elems) {
            int b = g.mul[a][s];
            if (!seen[b]) {
                seen[b] = 1;
                ++reached;
                queue.push_back(b);
            }
        }
    }
    if (reached != g.order)
        throw std::domain_error("GeneratingSetSpec: set does not generate the group");
}

FactorSpec FactorSpec::finite(const FiniteGroupTable& g, const GeneratingSetSpec& s,
                              int multiplicity) {
    if (multiplicity < 1) throw std::domain_error("FactorSpec: multiplicity must be >= 1");
    FactorSpec f;
    f.kind = Kind::finite;
    f.mul = g.mul;
    f.identity = g.identity;
    f.inverse = g.inverse;
    f.gens = s.elems;
    f.symmetric_gens = s.symmetric;
    f.multiplicity = multiplicity;
    return f;
}

FactorSpec FactorSpec::z(int multiplicity) {
    if (multiplicity < 1) throw std::domain_error("FactorSpec: multiplicity must be >= 1");
    FactorSpec f;
    f.kind = Kind::infinite_cyclic;
    f.symmetric_gens = true;
    f.multiplicity = multiplicity;
    return f;
}

NormalFormElement NormalFormElement::from_key(std::string key) {
    if (key.size() % 2 != 0)
        throw std::domain_error("NormalFormElement: malformed key");
    NormalFormElement e;
    e.code_ = std::move(key);
    return e;
}

FreeProductSpec::FreeProductSpec(std::vector<FactorSpec> factor_list)
    : factors(std::move(factor_list)) {
    if (factors.empty()) throw std::domain_error("FreeProductSpec: no factors");

    int tag = 0;
    for (size_t f = 0; f < factors.size(); ++f) {
        const FactorSpec& fac = factors[f];
        copy_base.push_back(tag);
        tag += fac.multiplicity;
        if (tag > 255) throw std::domain_error("FreeProductSpec: too many factor copies");
        for (int j = 0; j < fac.multiplicity; ++j) {
            if (fac.kind == FactorSpec::Kind::finite) {
                for (int g : fac.gens)
                    alphabet.push_back({static_cast<int>(f), j, g});
            } else {
                alphabet.push_back({static_cast<int>(f), j, +1});
                alphabet.push_back({static_cast<int>(f), j, -1});
            }
        }
    }

    // per-factor shortest-word tables (right multiplication by generators)
    dist_.resize(factors.size());
    for (size_t f = 0; f < factors.size(); ++f) {
        const FactorSpec& fac = factors[f];
        if (fac.kind != FactorSpec::Kind::finite) continue;
        std::vector<int>& d = dist_[f];
        d.assign(fac.order(), -1);
        d[fac.identity] = 0;
        std::deque<int> queue{fac.identity};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int s : fac.gens) {
                int b = fac.mul[a][s];
                if (d[b] < 0) {
                    d[b] = d[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        for (int v : d)
            if (v < 0)
                throw std::domain_error(
                    "FreeProductSpec: generating set does not generate its factor");
    }
}

int FreeProductSpec::factor_of_tag(int tag) const {
    for (size_t f = factors.size(); f-- > 0;) {
        if (tag >= copy_base[f]) {
            if (tag >= copy_base[f] + factors[f].multiplicity) break;
            return static_cast<int>(f);
        }
    }
    throw std::domain_error("FreeProductSpec: bad tag");
}

bool FreeProductSpec::all_symmetric() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const FactorSpec& f) { return f.symmetric_gens; });
}

NormalFormElement FreeProductSpec::nf_multiply(const NormalFormElement& a,
                                               const Letter& s) const {
    if (s.factor < 0 || s.factor >= static_cast<int>(factors.size()))
        throw std::domain_error("nf_multiply: unknown factor");
    const FactorSpec& fac = factors[s.factor];
    if (s.copy < 0 || s.copy >= fac.multiplicity)
        throw std::domain_error("nf_multiply: unknown copy");
    const int tag = tag_of(s.factor, s.copy);

    NormalFormElement r = a;
    std::string& code = r.code_;
    const int len = r.length();
    if (len > 0 && r.tag(len - 1) == tag) {
        int merged;
        if (fac.kind == FactorSpec::Kind::finite) {
            if (s.value < 0 || s.value >= fac.order())
                throw std::domain_error("nf_multiply: element out of range");
            merged = fac.mul[r.value(len - 1)][s.value];
            if (merged == fac.identity) {
                code.resize(code.size() - 2);
                return r;
            }
        } else {
            if (s.value != 1 && s.value != -1)
                throw std::domain_error("nf_multiply: Z letter must be x or x^-1");
            merged = r.value(len - 1) + s.value;
            if (merged == 0) {
                code.resize(code.size() - 2);
                return r;
            }
            if (merged < -127 || merged > 127)
                throw std::domain_error("nf_multiply: exponent overflow");
        }
        code[code.size() - 1] = static_cast<char>(merged);
        return r;
    }

    if (fac.kind == FactorSpec::Kind::finite) {
        if (s.value < 0 || s.value >= fac.order() || s.value == fac.identity)
            throw std::domain_error("nf_multiply: bad finite letter");
    } else if (s.value != 1 && s.value != -1) {
        throw std::domain_error("nf_multiply: Z letter must be x or x^-1");
    }
    code.push_back(static_cast<char>(tag));
    code.push_back(static_cast<char>(s.value));
    return r;
}

NormalFormElement FreeProductSpec::nf_multiply(const NormalFormElement& a,
                                               int letter_index) const {
    if (letter_index < 0 || letter_index >= alphabet_size())
        throw std::domain_error("nf_multiply: letter index out of range");
    return nf_multiply(a, alphabet[letter_index]);
}

int FreeProductSpec::min_return_length(const NormalFormElement& e) const {
    int total = 0;
    for (int i = 0; i < e.length(); ++i) {
        const int f = factor_of_tag(e.tag(i));
        const FactorSpec& fac = factors[f];
        if (fac.kind == FactorSpec::Kind::finite)
            total += dist_[f][fac.inverse[e.value(i)]];
        else
            total += std::abs(e.value(i));
    }
    return total;
}

FreeProductSpec z_to_z2z2(const FreeProductSpec& spec) {
    const FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    const GeneratingSetSpec gens(z2, {1});
    std::vector<FactorSpec> out;
    for (const FactorSpec& f : spec.factors) {
        if (f.kind == FactorSpec::Kind::infinite_cyclic)
            out.push_back(FactorSpec::finite(z2, gens, 2 * f.multiplicity));
        else
            out.push_back(f);
    }
    return FreeProductSpec(std::move(out));
}

}  // namespace cogrowth

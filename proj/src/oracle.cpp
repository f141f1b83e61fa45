#include "cogrowth/oracle.hpp"

#include <unordered_map>
#include <utility>

namespace cogrowth {

std::vector<Integer> cogrowth_sequence(const FreeProductSpec& spec, int n_max,
                                       const CogrowthOptions& opts) {
    if (n_max < 0) throw std::domain_error("cogrowth_sequence: n_max must be >= 0");

    using StateMap = std::unordered_map<std::string, Integer>;
    StateMap states;
    states.emplace(std::string(), Integer(1));

    std::vector<Integer> a(n_max + 1, Integer(0));
    a[0] = 1;

    for (int step = 1; step <= n_max; ++step) {
        const int remaining = n_max - step;
        StateMap next;
        next.reserve(states.size() * 2);
        for (const auto& [key, count] : states) {
            const NormalFormElement e = NormalFormElement::from_key(key);
            for (const Letter& s : spec.alphabet) {
                NormalFormElement f = spec.nf_multiply(e, s);
                if (spec.min_return_length(f) > remaining) continue;
                next[f.key()] += count;
            }
            if (static_cast<long long>(next.size()) > opts.state_cap)
                throw CapacityError("cogrowth_sequence: live-state cap exceeded");
        }
        states = std::move(next);
        auto it = states.find(std::string());
        if (it != states.end()) a[step] = it->second;
    }
    return a;
}

std::vector<Integer> finite_group_moments(const FiniteGroupTable& g,
                                          const GeneratingSetSpec& s, int n_max) {
    if (n_max < 0) throw std::domain_error("finite_group_moments: n_max must be >= 0");
    std::vector<Integer> v(g.order, Integer(0));
    v[g.identity] = 1;
    std::vector<Integer> out;
    out.reserve(n_max + 1);
    for (int n = 0;; ++n) {
        out.push_back(v[g.identity]);
        if (n == n_max) break;
        std::vector<Integer> w(g.order, Integer(0));
        for (int a = 0; a < g.order; ++a) {
            if (v[a] == 0) continue;
            for (int gen : s.elems) w[g.mul[a][gen]] += v[a];
        }
        v = std::move(w);
    }
    return out;
}

}  // namespace cogrowth

#include "cogrowth/spec_json.hpp"

#include <json.hpp>

namespace cogrowth {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecParseError(what); }

// byte offset -> "line:column" for parse_error diagnostics
std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

int int_field(const json& j, const char* name, int lo) {
    if (!j.contains(name) || !j[name].is_number_integer())
        fail(std::string("factor field '") + name + "' must be an integer");
    int v = j[name].get<int>();
    if (v < lo)
        fail(std::string("factor field '") + name + "' must be >= " +
             std::to_string(lo));
    return v;
}

int multiplicity_field(const json& j) {
    if (!j.contains("multiplicity")) return 1;
    return int_field(j, "multiplicity", 1);
}

FactorSpec parse_factor(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail("each factor must be an object with a string 'kind'");
    std::string kind = j["kind"].get<std::string>();
    int mult = multiplicity_field(j);
    if (kind == "Z") return FactorSpec::z(mult);
    if (kind == "cyclic") {
        int d = int_field(j, "order", 2);
        if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
            fail("cyclic factor needs a nonempty 'gens' array");
        std::vector<int> gens;
        for (const json& g : j["gens"]) {
            if (!g.is_string()) fail("cyclic 'gens' entries must be strings");
            std::string s = g.get<std::string>();
            if (s == "x")
                gens.push_back(1);
            else if (s == "x^-1")
                gens.push_back(d - 1);
            else
                fail("cyclic generator must be \"x\" or \"x^-1\", got \"" + s + "\"");
        }
        FiniteGroupTable t = FiniteGroupTable::cyclic(d);
        try {
            return FactorSpec::finite(t, GeneratingSetSpec(t, gens), mult);
        } catch (const std::exception& e) {
            fail(std::string("cyclic factor: ") + e.what());
        }
    }
    if (kind == "table") {
        if (!j.contains("mul") || !j["mul"].is_array())
            fail("table factor needs a 'mul' array of rows");
        std::vector<std::vector<int>> mul;
        for (const json& row : j["mul"]) {
            if (!row.is_array()) fail("'mul' rows must be arrays");
            std::vector<int> r;
            for (const json& e : row) {
                if (!e.is_number_integer()) fail("'mul' entries must be integers");
                r.push_back(e.get<int>());
            }
            mul.push_back(std::move(r));
        }
        if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
            fail("table factor needs a nonempty 'gens' array of indices");
        std::vector<int> gens;
        for (const json& g : j["gens"]) {
            if (!g.is_number_integer()) fail("table 'gens' entries must be integers");
            gens.push_back(g.get<int>());
        }
        try {
            FiniteGroupTable t(mul);
            return FactorSpec::finite(t, GeneratingSetSpec(t, gens), mult);
        } catch (const std::exception& e) {
            fail(std::string("table factor: ") + e.what());
        }
    }
    fail("unknown factor kind \"" + kind + "\"");
}

}  // namespace

FreeProductSpec parse_spec_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("JSON syntax error at " + locate(text, e.byte ? e.byte - 1 : 0) +
             ": " + e.what());
    }
    const json* factors = &j;
    if (j.is_object()) {
        if (!j.contains("factors")) fail("top-level object needs a 'factors' array");
        factors = &j["factors"];
    }
    if (!factors->is_array() || factors->empty())
        fail("spec must be a nonempty array of factors");
    std::vector<FactorSpec> list;
    for (const json& f : *factors) list.push_back(parse_factor(f));
    try {
        return FreeProductSpec(std::move(list));
    } catch (const std::exception& e) {
        fail(std::string("invalid spec: ") + e.what());
    }
}

std::string render_spec_json(const FreeProductSpec& spec) {
    json factors = json::array();
    for (const FactorSpec& f : spec.factors) {
        json jf;
        jf["multiplicity"] = f.multiplicity;
        if (f.kind == FactorSpec::Kind::infinite_cyclic) {
            jf["kind"] = "Z";
            factors.push_back(jf);
            continue;
        }
        int d = f.order();
        bool is_cyclic = (f.mul == FiniteGroupTable::cyclic(d).mul);
        bool named_gens = true;
        for (int g : f.gens)
            if (g != 1 && g != d - 1) named_gens = false;
        if (is_cyclic && named_gens) {
            jf["kind"] = "cyclic";
            jf["order"] = d;
            json gens = json::array();
            for (int g : f.gens) gens.push_back(g == 1 ? "x" : "x^-1");
            jf["gens"] = gens;
        } else {
            jf["kind"] = "table";
            jf["mul"] = f.mul;
            jf["gens"] = f.gens;
        }
        factors.push_back(jf);
    }
    json out;
    out["factors"] = factors;
    return out.dump(2);
}

FreeProductSpec family_cyclic(int d, int m) {
    if (d < 2 || m < 1) throw std::domain_error("family_cyclic: need d >= 2, m >= 1");
    FiniteGroupTable t = FiniteGroupTable::cyclic(d);
    return FreeProductSpec({FactorSpec::finite(t, GeneratingSetSpec(t, {1}), m)});
}

FreeProductSpec family_z2zn(int n) {
    if (n < 3) throw std::domain_error("family_z2zn: need n >= 3");
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    FiniteGroupTable zn = FiniteGroupTable::cyclic(n);
    return FreeProductSpec({FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), 1),
                            FactorSpec::finite(zn, GeneratingSetSpec(zn, {1}), 1)});
}

FreeProductSpec family_z2_free(int m, int s) {
    if (m < 0 || s < 0 || m + s == 0)
        throw std::domain_error("family_z2_free: need m, s >= 0, not both zero");
    std::vector<FactorSpec> list;
    FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
    if (m > 0)
        list.push_back(FactorSpec::finite(z2, GeneratingSetSpec(z2, {1}), m));
    if (s > 0) list.push_back(FactorSpec::z(s));
    return FreeProductSpec(std::move(list));
}

}  // namespace cogrowth

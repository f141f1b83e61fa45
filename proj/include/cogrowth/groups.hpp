#pragma once

#include <string>
#include <vector>

namespace cogrowth {

// Finite group given by an explicit multiplication table.  Identity and
// inverses are deduced; the group laws are checked on construction
// (associativity exhaustively for order <= 64, sampled above).
struct FiniteGroupTable {
    int order = 1;
    std::vector<std::vector<int>> mul;  // mul[a][b]
    int identity = 0;
    std::vector<int> inverse;

    explicit FiniteGroupTable(std::vector<std::vector<int>> table);
    static FiniteGroupTable cyclic(int d);

    int multiply(int a, int b) const { return mul[a][b]; }
};

// Generating set as element indices.  Duplicates are rejected; the identity
// is rejected unless allow_identity; generation is verified by closure BFS.
struct GeneratingSetSpec {
    std::vector<int> elems;
    bool symmetric = false;  // closed under inverse

    GeneratingSetSpec(const FiniteGroupTable& g, std::vector<int> elems,
                      bool allow_identity = false);
};

struct FactorSpec {
    enum class Kind { finite, infinite_cyclic };
    Kind kind;
    // finite only (parallel vectors keep the struct copyable without optionals)
    std::vector<std::vector<int>> mul;
    int identity = 0;
    std::vector<int> inverse;
    std::vector<int> gens;
    bool symmetric_gens = false;
    int multiplicity = 1;

    static FactorSpec finite(const FiniteGroupTable& g, const GeneratingSetSpec& s,
                             int multiplicity);
    static FactorSpec z(int multiplicity);  // generators x, x^-1

    int order() const { return static_cast<int>(mul.size()); }
};

// One letter of the flattened alphabet S.  For finite factors `value` is a
// group element index; for infinite-cyclic factors it is +1 or -1.
struct Letter {
    int factor = 0;
    int copy = 0;
    int value = 0;
};

// Reduced word in the free product, encoded two bytes per syllable:
// (factor-copy tag, value).  Values fit a signed byte at oracle scale
// (exponents are bounded by the word length, group orders by 127).
class NormalFormElement {
  public:
    NormalFormElement() = default;

    bool is_identity() const { return code_.empty(); }
    int length() const { return static_cast<int>(code_.size()) / 2; }
    int tag(int i) const { return static_cast<unsigned char>(code_[2 * i]); }
    int value(int i) const { return static_cast<signed char>(code_[2 * i + 1]); }

    const std::string& key() const { return code_; }
    static NormalFormElement from_key(std::string key);

    bool operator==(const NormalFormElement& o) const { return code_ == o.code_; }
    bool operator<(const NormalFormElement& o) const { return code_ < o.code_; }

  private:
    std::string code_;
    friend struct FreeProductSpec;
};

struct FreeProductSpec {
    std::vector<FactorSpec> factors;
    std::vector<Letter> alphabet;
    std::vector<int> copy_base;  // global tag of (factor f, copy 0)

    explicit FreeProductSpec(std::vector<FactorSpec> factor_list);

    int alphabet_size() const { return static_cast<int>(alphabet.size()); }
    int tag_of(int factor, int copy) const { return copy_base[factor] + copy; }
    int factor_of_tag(int tag) const;
    bool all_symmetric() const;

    NormalFormElement nf_multiply(const NormalFormElement& a, const Letter& s) const;
    NormalFormElement nf_multiply(const NormalFormElement& a, int letter_index) const;

    // Lower bound on letters needed to bring e back to the identity: sum of
    // per-factor BFS distances to each syllable's inverse.
    int min_return_length(const NormalFormElement& e) const;

  private:
    // dist_[f][g] = length of a shortest S_f-word equal to g (finite factors)
    std::vector<std::vector<int>> dist_;
};

// Replace every infinite-cyclic factor of multiplicity s by (Z/2Z)^{* 2s}
// with S = {x}; the cogrowth sequence is unchanged.
FreeProductSpec z_to_z2z2(const FreeProductSpec& spec);

}  // namespace cogrowth

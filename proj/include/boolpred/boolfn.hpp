#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boolpred {

// Boolean function b : {0,1}^n -> {0,1} as an explicit table of 2^n bits.
// Index encoding: x_1 is the MSB, so bit k of the index (counting from the
// top) is x_{k+1}.  Cofactors on x_1 are the two contiguous halves.
class TruthTable {
public:
    static constexpr int kMaxArity = 26;

    TruthTable(int n, std::vector<bool> bits);

    int arity() const { return n_; }
    std::size_t size() const { return bits_.size(); }
    bool operator()(std::uint32_t index) const { return bits_[index]; }
    bool operator==(const TruthTable&) const = default;

    // Number of inputs mapped to 1.
    std::uint64_t weight() const;

    // b(value, x_2..x_n) as a function of arity n-1.
    TruthTable cofactor(bool value) const;

    TruthTable complement() const;

    // Apply a permutation of the input coordinates: result(x) = b(x at perm).
    // perm[k] = source coordinate (1-based) feeding output coordinate k+1.
    TruthTable permute(const std::vector<int>& perm) const;

    const std::vector<bool>& bits() const { return bits_; }

private:
    int n_;
    std::vector<bool> bits_;
};

// Permutation-invariant function, one output bit per Hamming weight class.
class SymmetricProfile {
public:
    static constexpr int kMaxArity = 4096;

    SymmetricProfile(int n, std::vector<bool> out);

    int arity() const { return n_; }
    bool at_weight(int w) const { return out_[w]; }
    const std::vector<bool>& profile() const { return out_; }
    bool operator==(const SymmetricProfile&) const = default;

    std::uint64_t weight() const;
    TruthTable expand() const;  // requires n <= TruthTable::kMaxArity

private:
    int n_;
    std::vector<bool> out_;
};

enum class TieRule { ones, zeros };

TruthTable dictator(int n, int coordinate);
SymmetricProfile majority(int n, TieRule tie = TieRule::ones);
SymmetricProfile parity(int n);
SymmetricProfile constant_fn(int n, bool value);

// Unbalanced majority: 1 on the ~q*2^n inputs of largest Hamming weight.
// The boundary weight class goes wholly to whichever side lands the total
// weight nearest q*2^n.
SymmetricProfile maj_q(int n, double q);

// Present iff b is constant on every Hamming-weight class.
std::optional<SymmetricProfile> detect_symmetric(const TruthTable& b);

// JSON forms: {"n": int, "hex": string} with bit i of the hex value equal to
// b at integer index i, or {"n": int, "minterms": [int]}.
TruthTable parse_truth_table(const std::string& text);
std::string serialize(const TruthTable& b);

SymmetricProfile parse_symmetric_profile(const std::string& text);
std::string serialize(const SymmetricProfile& s);

}  // namespace boolpred

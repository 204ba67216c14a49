#include "boolpred/boolfn.hpp"

#include "json.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace boolpred {

using json = nlohmann::json;

TruthTable::TruthTable(int n, std::vector<bool> bits) : n_(n), bits_(std::move(bits)) {
    if (n < 1 || n > kMaxArity) throw std::domain_error("TruthTable: arity outside [1,26]");
    if (bits_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("TruthTable: bit vector length != 2^n");
}

std::uint64_t TruthTable::weight() const {
    std::uint64_t w = 0;
    for (bool b : bits_) w += b;
    return w;
}

TruthTable TruthTable::cofactor(bool value) const {
    if (n_ < 2) throw std::domain_error("cofactor: arity must be >= 2");
    std::size_t half = bits_.size() / 2;
    std::size_t off = value ? half : 0;
    std::vector<bool> sub(bits_.begin() + off, bits_.begin() + off + half);
    return TruthTable(n_ - 1, std::move(sub));
}

TruthTable TruthTable::complement() const {
    std::vector<bool> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = !bits_[i];
    return TruthTable(n_, std::move(out));
}

TruthTable TruthTable::permute(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permute: permutation size != arity");
    std::vector<bool> out(bits_.size());
    for (std::uint32_t idx = 0; idx < bits_.size(); ++idx) {
        std::uint32_t src = 0;
        for (int k = 0; k < n_; ++k) {
            // coordinate k+1 of the new input is coordinate perm[k] of x
            int bit = (idx >> (n_ - 1 - k)) & 1u;
            src |= static_cast<std::uint32_t>(bit) << (n_ - perm[k]);
        }
        out[idx] = bits_[src];
    }
    return TruthTable(n_, std::move(out));
}

SymmetricProfile::SymmetricProfile(int n, std::vector<bool> out)
    : n_(n), out_(std::move(out)) {
    if (n < 1 || n > kMaxArity) throw std::domain_error("SymmetricProfile: arity outside [1,4096]");
    if (out_.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("SymmetricProfile: profile length != n+1");
}

std::uint64_t SymmetricProfile::weight() const {
    if (n_ > 63) throw std::domain_error("SymmetricProfile::weight: arity too large for uint64");
    std::uint64_t w = 0;
    std::uint64_t c = 1;  // C(n,0)
    for (int k = 0; k <= n_; ++k) {
        if (out_[k]) w += c;
        if (k < n_) c = c * (n_ - k) / (k + 1);
    }
    return w;
}

TruthTable SymmetricProfile::expand() const {
    if (n_ > TruthTable::kMaxArity)
        throw std::domain_error("SymmetricProfile::expand: arity too large for TruthTable");
    std::vector<bool> bits(std::size_t{1} << n_);
    for (std::uint32_t i = 0; i < bits.size(); ++i)
        bits[i] = out_[std::popcount(i)];
    return TruthTable(n_, std::move(bits));
}

TruthTable dictator(int n, int coordinate) {
    if (n < 1 || n > TruthTable::kMaxArity) throw std::domain_error("dictator: bad arity");
    if (coordinate < 1 || coordinate > n) throw std::domain_error("dictator: bad coordinate");
    std::vector<bool> bits(std::size_t{1} << n);
    std::uint32_t mask = 1u << (n - coordinate);
    for (std::uint32_t i = 0; i < bits.size(); ++i) bits[i] = (i & mask) != 0;
    return TruthTable(n, std::move(bits));
}

SymmetricProfile majority(int n, TieRule tie) {
    std::vector<bool> out(n + 1);
    for (int w = 0; w <= n; ++w) {
        if (2 * w > n)
            out[w] = true;
        else if (2 * w == n)
            out[w] = (tie == TieRule::ones);
    }
    return SymmetricProfile(n, std::move(out));
}

SymmetricProfile parity(int n) {
    std::vector<bool> out(n + 1);
    for (int w = 0; w <= n; ++w) out[w] = (w % 2) != 0;
    return SymmetricProfile(n, std::move(out));
}

SymmetricProfile constant_fn(int n, bool value) {
    return SymmetricProfile(n, std::vector<bool>(n + 1, value));
}

SymmetricProfile maj_q(int n, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("maj_q: q outside (0,1)");
    if (n > 63) throw std::domain_error("maj_q: arity too large");
    double target = q * std::ldexp(1.0, n);
    // cumulative class sizes from the top weight down
    std::vector<std::uint64_t> csize(n + 1);
    std::uint64_t c = 1;
    for (int w = 0; w <= n; ++w) {
        csize[w] = c;
        if (w < n) c = c * (n - w) / (w + 1);
    }
    std::uint64_t cum = 0;
    int cut = n + 1;  // smallest weight assigned 1
    for (int w = n; w >= 0; --w) {
        std::uint64_t with = cum + csize[w];
        if (static_cast<double>(with) >= target) {
            // boundary class: take whichever side is closer to the target
            double d_inc = std::abs(static_cast<double>(with) - target);
            double d_exc = std::abs(static_cast<double>(cum) - target);
            cut = (d_inc <= d_exc) ? w : w + 1;
            break;
        }
        cum = with;
    }
    std::vector<bool> out(n + 1);
    for (int w = cut; w <= n; ++w) out[w] = true;
    return SymmetricProfile(n, std::move(out));
}

std::optional<SymmetricProfile> detect_symmetric(const TruthTable& b) {
    int n = b.arity();
    std::vector<int> seen(n + 1, -1);
    for (std::uint32_t i = 0; i < b.size(); ++i) {
        int w = std::popcount(i);
        int v = b(i) ? 1 : 0;
        if (seen[w] == -1)
            seen[w] = v;
        else if (seen[w] != v)
            return std::nullopt;
    }
    std::vector<bool> out(n + 1);
    for (int w = 0; w <= n; ++w) out[w] = seen[w] == 1;
    return SymmetricProfile(n, std::move(out));
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("truth table: invalid hex character");
}

}  // namespace

TruthTable parse_truth_table(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("truth table: missing arity");
    int n = j["n"].get<int>();
    if (n < 1 || n > TruthTable::kMaxArity)
        throw std::domain_error("truth table: arity outside [1,26]");
    std::size_t size = std::size_t{1} << n;
    std::vector<bool> bits(size);
    if (j.contains("hex")) {
        std::string hex = j["hex"].get<std::string>();
        std::size_t want = (size + 3) / 4;
        if (hex.size() != want)
            throw std::invalid_argument("truth table: hex length mismatch");
        // the hex string is the number sum_i b(i)*2^i, most significant digit first
        for (std::size_t d = 0; d < hex.size(); ++d) {
            int v = hex_digit(hex[hex.size() - 1 - d]);
            for (int k = 0; k < 4; ++k) {
                std::size_t i = 4 * d + k;
                if (i < size) bits[i] = (v >> k) & 1;
            }
        }
    } else if (j.contains("minterms")) {
        for (auto& m : j["minterms"]) {
            std::int64_t idx = m.get<std::int64_t>();
            if (idx < 0 || idx >= static_cast<std::int64_t>(size))
                throw std::invalid_argument("truth table: minterm out of range");
            bits[static_cast<std::size_t>(idx)] = true;
        }
    } else {
        throw std::invalid_argument("truth table: need \"hex\" or \"minterms\"");
    }
    return TruthTable(n, std::move(bits));
}

std::string serialize(const TruthTable& b) {
    static const char* digits = "0123456789ABCDEF";
    std::size_t size = b.size();
    std::size_t ndigits = (size + 3) / 4;
    std::string hex(ndigits, '0');
    for (std::size_t d = 0; d < ndigits; ++d) {
        int v = 0;
        for (int k = 0; k < 4; ++k) {
            std::size_t i = 4 * d + k;
            if (i < size && b(static_cast<std::uint32_t>(i))) v |= 1 << k;
        }
        hex[ndigits - 1 - d] = digits[v];
    }
    json j;
    j["n"] = b.arity();
    j["hex"] = hex;
    return j.dump();
}

SymmetricProfile parse_symmetric_profile(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    auto& arr = j.at("profile");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("symmetric profile: length != n+1");
    std::vector<bool> out(n + 1);
    for (int w = 0; w <= n; ++w) {
        int v = arr[w].get<int>();
        if (v != 0 && v != 1) throw std::invalid_argument("symmetric profile: bits must be 0/1");
        out[w] = v == 1;
    }
    return SymmetricProfile(n, std::move(out));
}

std::string serialize(const SymmetricProfile& s) {
    json j;
    j["n"] = s.arity();
    std::vector<int> prof;
    for (bool b : s.profile()) prof.push_back(b ? 1 : 0);
    j["profile"] = prof;
    return j.dump();
}

}  // namespace boolpred

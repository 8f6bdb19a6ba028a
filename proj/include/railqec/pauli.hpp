#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace railqec {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

inline bool anticommutes(Pauli a, Pauli b) {
    return a != Pauli::I && b != Pauli::I && a != b;
}

// Product up to phase: X*Z = Y etc. (I acts as identity, P*P = I).
inline Pauli pauli_mul(Pauli a, Pauli b) {
    if (a == Pauli::I) return b;
    if (b == Pauli::I) return a;
    if (a == b) return Pauli::I;
    int s = static_cast<int>(a) + static_cast<int>(b);  // 1+2=3,1+3=4,2+3=5
    return static_cast<Pauli>(6 - s);
}

// Sparse multi-qubit Pauli operator; identity entries are never stored.
class PauliString {
  public:
    PauliString() = default;

    Pauli at(int qubit) const {
        auto it = support_.find(qubit);
        return it == support_.end() ? Pauli::I : it->second;
    }

    void set(int qubit, Pauli p) {
        if (p == Pauli::I)
            support_.erase(qubit);
        else
            support_[qubit] = p;
    }

    int weight() const { return static_cast<int>(support_.size()); }

    const std::map<int, Pauli>& support() const { return support_; }

    PauliString times(const PauliString& other) const {
        PauliString out = *this;
        for (auto [q, p] : other.support_) out.set(q, pauli_mul(out.at(q), p));
        return out;
    }

    bool operator==(const PauliString& other) const { return support_ == other.support_; }

    std::string str() const {
        std::string s;
        for (auto [q, p] : support_) {
            if (!s.empty()) s += ' ';
            s += pauli_char(p);
            s += std::to_string(q);
        }
        return s.empty() ? "I" : s;
    }

  private:
    std::map<int, Pauli> support_;
};

// Even number of pointwise anticommutations <=> the operators commute.
inline bool commutes(const PauliString& a, const PauliString& b) {
    int anti = 0;
    const auto& sa = a.support();
    const auto& sb = b.support();
    // iterate the smaller support
    const auto& small = sa.size() <= sb.size() ? sa : sb;
    const PauliString& other = sa.size() <= sb.size() ? b : a;
    for (auto [q, p] : small)
        if (anticommutes(p, other.at(q))) anti++;
    return anti % 2 == 0;
}

// ---------------------------------------------------------------------------
// Binary symplectic representation: operator on n qubits -> 2n-bit row
// (x-part | z-part), packed in 64-bit words. Y contributes to both parts.
// ---------------------------------------------------------------------------
struct SymplecticRow {
    std::vector<uint64_t> x, z;

    explicit SymplecticRow(int n_qubits = 0)
        : x((n_qubits + 63) / 64, 0), z((n_qubits + 63) / 64, 0) {}

    void set(int q, Pauli p) {
        uint64_t bit = uint64_t(1) << (q % 64);
        if (p == Pauli::X || p == Pauli::Y) x[q / 64] |= bit;
        if (p == Pauli::Z || p == Pauli::Y) z[q / 64] |= bit;
    }

    void xor_with(const SymplecticRow& o) {
        for (size_t i = 0; i < x.size(); i++) {
            x[i] ^= o.x[i];
            z[i] ^= o.z[i];
        }
    }

    bool is_zero() const {
        for (size_t i = 0; i < x.size(); i++)
            if (x[i] | z[i]) return false;
        return true;
    }

    int weight() const {
        int w = 0;
        for (size_t i = 0; i < x.size(); i++) w += __builtin_popcountll(x[i] | z[i]);
        return w;
    }

    // Symplectic product: parity of <a.x, b.z> + <a.z, b.x>; odd <=> anticommute.
    int sym_product(const SymplecticRow& o) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < x.size(); i++) acc ^= (x[i] & o.z[i]) ^ (z[i] & o.x[i]);
        return __builtin_parityll(acc);
    }
};

inline SymplecticRow to_symplectic(const PauliString& p, int n_qubits) {
    SymplecticRow row(n_qubits);
    for (auto [q, op] : p.support()) row.set(q, op);
    return row;
}

// GF(2) rank of the rows viewed as 2n-bit vectors.
inline int symplectic_rank(std::vector<SymplecticRow> rows) {
    if (rows.empty()) return 0;
    size_t words = rows[0].x.size();
    int rank = 0;
    for (size_t col = 0; col < 2 * 64 * words; col++) {
        size_t w = col / 64;
        uint64_t bit = uint64_t(1) << (col % 64);
        bool in_x = w < words;
        size_t wi = in_x ? w : w - words;
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); r++) {
            uint64_t v = in_x ? rows[r].x[wi] : rows[r].z[wi];
            if (v & bit) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (static_cast<int>(r) == rank) continue;
            uint64_t v = in_x ? rows[r].x[wi] : rows[r].z[wi];
            if (v & bit) rows[r].xor_with(rows[rank]);
        }
        rank++;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

}  // namespace railqec

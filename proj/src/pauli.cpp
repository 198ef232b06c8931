#include "stabsort/pauli.hpp"

#include <bit>

namespace stabsort {

SitePauli parse_pauli_string(const std::string& s) {
    if (s.size() > 32) throw std::invalid_argument("pauli string longer than 32 qubits");
    SitePauli p;
    for (std::size_t i = 0; i < s.size(); ++i) {
        uint32_t bit = uint32_t(1) << i;
        switch (s[i]) {
            case 'I': break;
            case 'X': p.x |= bit; break;
            case 'Z': p.z |= bit; break;
            case 'Y': p.x |= bit; p.z |= bit; break;
            default: throw std::invalid_argument(std::string("invalid Pauli character '") + s[i] + "'");
        }
    }
    return p;
}

std::string pauli_string(const SitePauli& p, int n_v) {
    std::string s(n_v, 'I');
    for (int i = 0; i < n_v; ++i) {
        bool x = (p.x >> i) & 1u, z = (p.z >> i) & 1u;
        s[i] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
    if (a.n_v() != b.n_v()) throw std::invalid_argument("multiply: qubits-per-site mismatch");
    PauliOp out = a;
    for (const auto& [s, p] : b.support()) out.mul_at(s, p);
    return out;
}

int symplectic_product(const PauliOp& a, const PauliOp& b) {
    if (a.n_v() != b.n_v()) throw std::invalid_argument("symplectic_product: qubits-per-site mismatch");
    int acc = 0;
    // Walk the smaller support.
    const PauliOp& small = a.support().size() <= b.support().size() ? a : b;
    const PauliOp& big = a.support().size() <= b.support().size() ? b : a;
    for (const auto& [s, p] : small.support()) acc ^= site_symplectic(p, big.at(s));
    return acc;
}

}  // namespace stabsort

#pragma once

// Phase-free Pauli operators on finite site sets, in the symplectic
// representation: per site an (x, z) exponent-bit pair per qubit. Phases are
// dropped throughout; every diagnostic here is commutation-based.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabsort/lattice.hpp"

namespace stabsort {

// Exponent bits for the qubits of one site (up to 32 qubits per site).
struct SitePauli {
    uint32_t x = 0, z = 0;

    bool trivial() const { return x == 0 && z == 0; }
    SitePauli operator*(const SitePauli& o) const { return {x ^ o.x, z ^ o.z}; }
    friend auto operator<=>(const SitePauli&, const SitePauli&) = default;
};

// 0 commute / 1 anticommute for the qubits of one site.
inline int site_symplectic(const SitePauli& a, const SitePauli& b) {
    return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

SitePauli parse_pauli_string(const std::string& s);          // over {I,X,Y,Z}
std::string pauli_string(const SitePauli& p, int n_v);

class PauliOp {
  public:
    PauliOp() = default;
    explicit PauliOp(int n_v) : n_v_(n_v) {}

    int n_v() const { return n_v_; }
    bool identity() const { return support_.empty(); }
    const std::map<Site, SitePauli>& support() const { return support_; }

    SitePauli at(const Site& s) const {
        auto it = support_.find(s);
        return it == support_.end() ? SitePauli{} : it->second;
    }

    // Multiplies in `p` at site `s` (exponentwise xor, sparse form kept).
    void mul_at(const Site& s, const SitePauli& p) {
        if (p.trivial()) return;
        auto [it, fresh] = support_.emplace(s, p);
        if (!fresh) {
            it->second = it->second * p;
            if (it->second.trivial()) support_.erase(it);
        }
    }

    PauliOp translated(const Site& t) const {
        PauliOp out(n_v_);
        for (const auto& [s, p] : support_) out.support_.emplace(s + t, p);
        return out;
    }

  private:
    int n_v_ = 1;
    std::map<Site, SitePauli> support_;
};

// Exponentwise product; same n_v required.
PauliOp multiply(const PauliOp& a, const PauliOp& b);

// 0 iff the operators commute.
int symplectic_product(const PauliOp& a, const PauliOp& b);

// Excited generator translates: (generator type index, translation).
struct Syndrome {
    std::set<std::pair<int, Site>> excited;

    bool empty() const { return excited.empty(); }
    void toggle(int type, const Site& t) {
        auto key = std::make_pair(type, t);
        auto it = excited.find(key);
        if (it == excited.end())
            excited.insert(key);
        else
            excited.erase(it);
    }
    Syndrome translated(const Site& d) const {
        Syndrome out;
        for (const auto& [g, t] : excited) out.excited.emplace(g, t + d);
        return out;
    }
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

}  // namespace stabsort

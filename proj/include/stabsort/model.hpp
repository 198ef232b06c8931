#pragma once

// Translation-invariant stabilizer models: generator patterns on lattice
// offsets, the text-format parser, lattice/modular transformations, and
// stabilizer-group equivalence checks.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabsort/gf2.hpp"
#include "stabsort/pauli.hpp"

namespace stabsort {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One generator type: Pauli pattern on lattice offsets, normalized so the
// minimal corner of the support bounding box is (0,0,0).
struct GeneratorSpec {
    std::vector<std::pair<Site, SitePauli>> offsets;  // sorted by Site, nontrivial entries only

    SitePauli at(const Site& o) const;
    Box bbox() const;
    void normalize();
    PauliOp as_pauli(int n_v) const;
};

struct ModelSpec {
    std::string name;
    int n_v = 1;
    std::vector<GeneratorSpec> generators;
    bool css = false;

    // Max support extent over generators and axes, minus one ("generator
    // diameter"): translates at distance > diameter never overlap a site.
    int diameter() const;

    // 0/1 commutator between generators[gi] at the origin and generators[gj]
    // translated by t.
    int translate_commutator(int gi, int gj, const Site& t) const;

    // Exhaustive pairwise commutativity over the overlap window. Returns the
    // first violating (gi, gj, t) if any.
    std::optional<std::tuple<int, int, Site>> find_commutation_violation() const;
    void validate() const;  // throws ValidationError
};

ModelSpec parse_model(const std::string& text);
std::string serialize_model(const ModelSpec& m);

// Excitation pattern of P: every generator translate that anticommutes with
// it. Only translates whose support window meets supp(P) are examined.
Syndrome syndrome(const ModelSpec& model, const PauliOp& p);

// Lattice + on-site change of presentation.
struct ModelTransform {
    std::array<std::array<int, 3>, 3> lattice_map{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};  // row-major
    std::vector<Site> qubit_shifts;       // per-qubit offset in original coordinates, before the lattice map
    BitMatrix onsite_clifford;            // 2n_v x 2n_v symplectic, acts on (x|z) per site
    std::vector<int> qubit_permutation;   // applied last

    static ModelTransform identity(int n_v);
    void validate(int n_v) const;  // unimodular lattice map, symplectic on-site matrix
};

Site apply_lattice_map(const std::array<std::array<int, 3>, 3>& m, const Site& s);
int lattice_map_det(const std::array<std::array<int, 3>, 3>& m);

ModelSpec apply_transform(const ModelSpec& m, const ModelTransform& t);

// True iff the two models generate the same stabilizer group: every generator
// of `a` lies in the group generated by b's translates within the window and
// vice versa. The window must exceed the combined generator diameters.
bool same_stabilizer_group(const ModelSpec& a, const ModelSpec& b, const Site& window);

// Disjoint union on a common lattice: qubits per site concatenated.
ModelSpec stack_models(const ModelSpec& a, const ModelSpec& b, const std::string& name);

}  // namespace stabsort

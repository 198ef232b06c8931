#include "stabsort/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stabsort {

SitePauli GeneratorSpec::at(const Site& o) const {
    auto it = std::lower_bound(offsets.begin(), offsets.end(), o,
                               [](const auto& e, const Site& s) { return e.first < s; });
    if (it != offsets.end() && it->first == o) return it->second;
    return {};
}

Box GeneratorSpec::bbox() const {
    std::vector<Site> sites;
    sites.reserve(offsets.size());
    for (const auto& [s, p] : offsets) sites.push_back(s);
    return bounding_box(sites);
}

void GeneratorSpec::normalize() {
    std::erase_if(offsets, [](const auto& e) { return e.second.trivial(); });
    if (offsets.empty()) throw ValidationError("generator with empty support");
    std::sort(offsets.begin(), offsets.end());
    Site lo = bbox().lo;
    for (auto& [s, p] : offsets) s = s - lo;
}

PauliOp GeneratorSpec::as_pauli(int n_v) const {
    PauliOp p(n_v);
    for (const auto& [s, q] : offsets) p.mul_at(s, q);
    return p;
}

int ModelSpec::diameter() const {
    int d = 0;
    for (const auto& g : generators) {
        Box b = g.bbox();
        for (int a = 0; a < 3; ++a) d = std::max(d, b.extent(a) - 1);
    }
    return d;
}

int ModelSpec::translate_commutator(int gi, int gj, const Site& t) const {
    const GeneratorSpec& a = generators[gi];
    const GeneratorSpec& b = generators[gj];
    int acc = 0;
    for (const auto& [s, p] : a.offsets) acc ^= site_symplectic(p, b.at(s - t));
    return acc;
}

std::optional<std::tuple<int, int, Site>> ModelSpec::find_commutation_violation() const {
    for (int i = 0; i < int(generators.size()); ++i) {
        Box bi = generators[i].bbox();
        for (int j = i; j < int(generators.size()); ++j) {
            Box bj = generators[j].bbox();
            Box window{{bi.lo.x - bj.hi.x, bi.lo.y - bj.hi.y, bi.lo.z - bj.hi.z},
                       {bi.hi.x - bj.lo.x, bi.hi.y - bj.lo.y, bi.hi.z - bj.lo.z}};
            std::optional<std::tuple<int, int, Site>> bad;
            window.for_each([&](const Site& t) {
                if (!bad && translate_commutator(i, j, t)) bad = std::make_tuple(i, j, t);
            });
            if (bad) return bad;
        }
    }
    return std::nullopt;
}

void ModelSpec::validate() const {
    if (n_v < 1 || n_v > 32) throw ValidationError("qubits_per_site out of range");
    if (generators.empty()) throw ValidationError("model has no generators");
    for (const auto& g : generators)
        if (g.offsets.empty()) throw ValidationError("generator with empty support");
    if (auto bad = find_commutation_violation()) {
        auto [i, j, t] = *bad;
        std::ostringstream os;
        os << "generators " << i << " and " << j << " anticommute at relative offset (" << t.x << ","
           << t.y << "," << t.z << ")";
        throw ValidationError(os.str());
    }
    bool all_pure = true;
    for (const auto& g : generators) {
        bool has_x = false, has_z = false;
        for (const auto& [s, p] : g.offsets) {
            if (p.x) has_x = true;
            if (p.z) has_z = true;
        }
        if (has_x && has_z) all_pure = false;
    }
    if (css != all_pure) throw ValidationError("css flag inconsistent with generator contents");
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ModelSpec parse_model(const std::string& text) {
    ModelSpec m;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_name = false, have_nv = false;
    std::optional<GeneratorSpec> current;

    auto fail = [&](const std::string& what) -> ParseError { return ParseError(lineno, what); };

    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;

        if (!have_name) {
            if (tok.size() != 2 || tok[0] != "model") throw fail("expected 'model <name>'");
            m.name = tok[1];
            have_name = true;
            continue;
        }
        if (tok[0] == "local_dimension") {
            if (tok.size() != 2) throw fail("expected 'local_dimension <d>'");
            if (tok[1] != "2")
                throw fail("unsupported local dimension " + tok[1] + " (only qubit models, d=2, are supported)");
            continue;
        }
        if (!have_nv) {
            if (tok.size() != 2 || tok[0] != "qubits_per_site") throw fail("expected 'qubits_per_site <n>'");
            try {
                m.n_v = std::stoi(tok[1]);
            } catch (...) {
                throw fail("invalid qubit count '" + tok[1] + "'");
            }
            if (m.n_v < 1 || m.n_v > 32) throw fail("qubits_per_site out of range [1,32]");
            have_nv = true;
            continue;
        }
        if (tok[0] == "generator") {
            if (current) throw fail("nested 'generator' block");
            current.emplace();
            continue;
        }
        if (tok[0] == "end") {
            if (!current) throw fail("'end' outside generator block");
            if (current->offsets.empty()) throw fail("generator block with no entries");
            current->normalize();
            m.generators.push_back(std::move(*current));
            current.reset();
            continue;
        }
        if (!current) throw fail("unexpected line outside generator block");
        if (std::count(line.begin(), line.end(), ':') != 1) throw fail("expected exactly one ':' per entry");
        auto colon = std::find(tok.begin(), tok.end(), ":");
        if (colon == tok.end()) {
            // ':' glued to a token; re-split around it.
            std::string l = line;
            l.replace(l.find(':'), 1, " : ");
            tok = split_ws(l);
            colon = std::find(tok.begin(), tok.end(), ":");
        }
        if (colon - tok.begin() != 3 || tok.end() - colon != 2)
            throw fail("expected '<dx> <dy> <dz> : <pauli-string>'");
        Site off;
        try {
            off = {std::stoi(tok[0]), std::stoi(tok[1]), std::stoi(tok[2])};
        } catch (...) {
            throw fail("invalid offset coordinate");
        }
        const std::string& ps = tok[4];
        if (int(ps.size()) != m.n_v)
            throw fail("pauli string length " + std::to_string(ps.size()) + " != qubits_per_site " +
                       std::to_string(m.n_v));
        SitePauli p;
        try {
            p = parse_pauli_string(ps);
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
        if (p.trivial()) continue;  // omitted offsets are identity
        for (const auto& [s, q] : current->offsets)
            if (s == off) throw fail("duplicate offset in generator");
        current->offsets.emplace_back(off, p);
    }
    if (!have_name) throw ParseError(lineno, "missing 'model' header");
    if (!have_nv) throw ParseError(lineno, "missing 'qubits_per_site'");
    if (current) throw ParseError(lineno, "unterminated generator block");
    if (m.generators.empty()) throw ParseError(lineno, "model has no generators");

    bool all_pure = true;
    for (const auto& g : m.generators) {
        bool has_x = false, has_z = false;
        for (const auto& [s, p] : g.offsets) {
            if (p.x) has_x = true;
            if (p.z) has_z = true;
        }
        if (has_x && has_z) all_pure = false;
    }
    m.css = all_pure;
    m.validate();
    return m;
}

std::string serialize_model(const ModelSpec& m) {
    std::ostringstream os;
    os << "model " << m.name << "\n";
    os << "qubits_per_site " << m.n_v << "\n";
    for (const auto& g : m.generators) {
        os << "generator\n";
        for (const auto& [s, p] : g.offsets)
            os << "  " << s.x << " " << s.y << " " << s.z << " : " << pauli_string(p, m.n_v) << "\n";
        os << "end\n";
    }
    return os.str();
}

Syndrome syndrome(const ModelSpec& model, const PauliOp& p) {
    Syndrome out;
    if (p.identity()) return out;
    std::vector<Site> psites;
    for (const auto& [s, q] : p.support()) psites.push_back(s);
    Box pb = bounding_box(psites);
    for (int gi = 0; gi < int(model.generators.size()); ++gi) {
        const GeneratorSpec& g = model.generators[gi];
        Box gb = g.bbox();
        Box window{{pb.lo.x - gb.hi.x, pb.lo.y - gb.hi.y, pb.lo.z - gb.hi.z},
                   {pb.hi.x - gb.lo.x, pb.hi.y - gb.lo.y, pb.hi.z - gb.lo.z}};
        window.for_each([&](const Site& t) {
            int acc = 0;
            for (const auto& [o, q] : g.offsets) acc ^= site_symplectic(q, p.at(o + t));
            if (acc) out.toggle(gi, t);
        });
    }
    return out;
}

Site apply_lattice_map(const std::array<std::array<int, 3>, 3>& m, const Site& s) {
    return {m[0][0] * s.x + m[0][1] * s.y + m[0][2] * s.z,
            m[1][0] * s.x + m[1][1] * s.y + m[1][2] * s.z,
            m[2][0] * s.x + m[2][1] * s.y + m[2][2] * s.z};
}

int lattice_map_det(const std::array<std::array<int, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ModelTransform ModelTransform::identity(int n_v) {
    ModelTransform t;
    t.qubit_shifts.assign(n_v, Site{});
    t.onsite_clifford = BitMatrix::identity(2 * n_v);
    t.qubit_permutation.resize(n_v);
    for (int i = 0; i < n_v; ++i) t.qubit_permutation[i] = i;
    return t;
}

void ModelTransform::validate(int n_v) const {
    int det = lattice_map_det(lattice_map);
    if (det != 1 && det != -1) throw ValidationError("lattice map is not unimodular");
    if (int(qubit_shifts.size()) != n_v) throw ValidationError("qubit_shifts size mismatch");
    if (int(qubit_permutation.size()) != n_v) throw ValidationError("qubit_permutation size mismatch");
    const std::size_t d = 2 * std::size_t(n_v);
    if (onsite_clifford.rows() != d || onsite_clifford.cols() != d)
        throw ValidationError("onsite_clifford dimension mismatch");
    // C preserves Omega: C Omega C^T == Omega.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            int acc = 0;
            for (std::size_t k = 0; k < std::size_t(n_v); ++k) {
                acc ^= (onsite_clifford.get(i, k) & onsite_clifford.get(j, k + n_v));
                acc ^= (onsite_clifford.get(i, k + n_v) & onsite_clifford.get(j, k));
            }
            int want = (i + n_v == j || j + n_v == i) ? 1 : 0;
            if (acc != want) throw ValidationError("onsite_clifford is not symplectic");
        }
    }
}

ModelSpec apply_transform(const ModelSpec& m, const ModelTransform& t) {
    t.validate(m.n_v);
    const int n = m.n_v;
    ModelSpec out;
    out.name = m.name + "'";
    out.n_v = n;
    for (const GeneratorSpec& g : m.generators) {
        // Per-qubit symplectic entries after the on-site Clifford, then move
        // each qubit's entry through the lattice map plus its shift.
        std::map<Site, SitePauli> acc;
        for (const auto& [off, p] : g.offsets) {
            // v = (x|z) for this site; image rows of C give the new entries.
            for (std::size_t col = 0; col < std::size_t(2 * n); ++col) {
                bool bit = col < std::size_t(n) ? ((p.x >> col) & 1u) : ((p.z >> (col - n)) & 1u);
                if (!bit) continue;
                // Column `col` of the input hits row vector C(col, *).
                for (std::size_t row = 0; row < std::size_t(2 * n); ++row) {
                    if (!t.onsite_clifford.get(col, row)) continue;
                    int q = int(row < std::size_t(n) ? row : row - n);
                    bool is_x = row < std::size_t(n);
                    int q_out = t.qubit_permutation[q];
                    Site pos = apply_lattice_map(t.lattice_map, off + t.qubit_shifts[q]);
                    SitePauli delta;
                    if (is_x)
                        delta.x = uint32_t(1) << q_out;
                    else
                        delta.z = uint32_t(1) << q_out;
                    auto [it, fresh] = acc.emplace(pos, delta);
                    if (!fresh) it->second = it->second * delta;
                }
            }
        }
        GeneratorSpec ng;
        for (const auto& [s, p] : acc)
            if (!p.trivial()) ng.offsets.emplace_back(s, p);
        ng.normalize();
        out.generators.push_back(std::move(ng));
    }
    bool all_pure = true;
    for (const auto& g : out.generators) {
        bool hx = false, hz = false;
        for (const auto& [s, p] : g.offsets) hx |= p.x != 0, hz |= p.z != 0;
        if (hx && hz) all_pure = false;
    }
    out.css = all_pure;
    out.validate();
    return out;
}

bool same_stabilizer_group(const ModelSpec& a, const ModelSpec& b, const Site& window) {
    if (a.n_v != b.n_v) throw std::invalid_argument("same_stabilizer_group: qubits-per-site mismatch");
    int need = 2 * (a.diameter() + b.diameter() + 1);
    if (window.x < need || window.y < need || window.z < need)
        throw std::invalid_argument("same_stabilizer_group: window smaller than combined generator diameters");

    // One direction: each generator of `x` centered in the window must lie in
    // the span of y's translates restricted to the window (padded so that
    // boundary translates are excluded symmetrically).
    auto covered = [&](const ModelSpec& x, const ModelSpec& y) {
        const int n = x.n_v;
        Box region{{0, 0, 0}, {window.x - 1, window.y - 1, window.z - 1}};
        std::vector<Site> sites;
        region.for_each([&](const Site& s) { sites.push_back(s); });
        std::sort(sites.begin(), sites.end());
        auto index_of = [&](const Site& s) -> int {
            auto it = std::lower_bound(sites.begin(), sites.end(), s);
            if (it == sites.end() || *it != s) return -1;
            return int(it - sites.begin());
        };
        const std::size_t ncols = 2 * std::size_t(n) * sites.size();
        auto to_row = [&](const GeneratorSpec& g, const Site& t, BitMatrix& m, std::size_t r) -> bool {
            for (const auto& [o, p] : g.offsets) {
                int idx = index_of(o + t);
                if (idx < 0) return false;  // sticks out of the window
                for (int q = 0; q < n; ++q) {
                    if ((p.x >> q) & 1u) m.flip(r, std::size_t(idx) * 2 * n + q);
                    if ((p.z >> q) & 1u) m.flip(r, std::size_t(idx) * 2 * n + n + q);
                }
            }
            return true;
        };
        // All y-translates fully inside the window.
        BitMatrix basis(0, ncols);
        for (const auto& g : y.generators) {
            Box gb = g.bbox();
            Box ts{{-gb.lo.x, -gb.lo.y, -gb.lo.z},
                   {window.x - 1 - gb.hi.x, window.y - 1 - gb.hi.y, window.z - 1 - gb.hi.z}};
            ts.for_each([&](const Site& t) {
                basis.append_zero_row();
                if (!to_row(g, t, basis, basis.rows() - 1)) throw std::logic_error("translate enumeration");
            });
        }
        Eliminator e(ncols);
        std::vector<uint64_t> scratch;
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            scratch.assign(basis.row(r).begin(), basis.row(r).end());
            e.add_row(scratch);
        }
        Site mid{window.x / 2, window.y / 2, window.z / 2};
        for (const auto& g : x.generators) {
            BitMatrix v(1, ncols);
            if (!to_row(g, mid, v, 0)) return false;
            scratch.assign(v.row(0).begin(), v.row(0).end());
            if (!e.reduces_to_zero(scratch)) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

ModelSpec stack_models(const ModelSpec& a, const ModelSpec& b, const std::string& name) {
    ModelSpec out;
    out.name = name;
    out.n_v = a.n_v + b.n_v;
    out.generators = a.generators;
    for (GeneratorSpec g : b.generators) {
        for (auto& [s, p] : g.offsets) {
            p.x <<= a.n_v;
            p.z <<= a.n_v;
        }
        out.generators.push_back(std::move(g));
    }
    bool all_pure = true;
    for (const auto& g : out.generators) {
        bool hx = false, hz = false;
        for (const auto& [s, p] : g.offsets) hx |= p.x != 0, hz |= p.z != 0;
        if (hx && hz) all_pure = false;
    }
    out.css = all_pure;
    out.validate();
    return out;
}

}  // namespace stabsort

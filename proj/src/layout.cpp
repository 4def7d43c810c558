#include "qecsyn/layout.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace qecsyn {

namespace {

struct Face {
    int a, b;  // face covers data qubits (a,b),(a,b+1),(a+1,b),(a+1,b+1)
    StabKind kind;
    std::vector<int> data;
    bool interior;
};

}  // namespace

std::vector<int> SurfaceCodeLayout::ancillas_of_kind(StabKind k) const {
    std::vector<int> out;
    for (const auto& p : plaquettes)
        if (p.kind == k) out.push_back(p.ancilla);
    return out;
}

const Plaquette& SurfaceCodeLayout::plaquette_of(int ancilla) const {
    for (const auto& p : plaquettes)
        if (p.ancilla == ancilla) return p;
    throw std::out_of_range("no plaquette for qubit " + std::to_string(ancilla));
}

std::vector<int> SurfaceCodeLayout::shared_data(int ancilla_a, int ancilla_b) const {
    const auto& a = plaquette_of(ancilla_a).data;
    const auto& b = plaquette_of(ancilla_b).data;
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SurfaceCodeLayout build_layout(int distance) {
    if (distance < 3 || distance % 2 == 0)
        throw std::invalid_argument("distance must be an odd integer >= 3");

    const int d = distance;
    SurfaceCodeLayout L;
    L.distance = d;
    L.n_data = d * d;

    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            L.data_pos.emplace_back(r, c);
            L.qubit_name.push_back("D" + std::to_string(r * d + c + 1));
        }

    // Candidate faces on the checkerboard; X faces where (a+b) is odd. Faces
    // hanging off the north/south edges are kept only when X-type, east/west
    // ones only when Z-type.
    std::vector<Face> faces;
    for (int a = -1; a < d; ++a)
        for (int b = -1; b < d; ++b) {
            Face f;
            f.a = a;
            f.b = b;
            f.kind = ((a + b) % 2 != 0) ? StabKind::X : StabKind::Z;
            for (int dr = 0; dr <= 1; ++dr)
                for (int dc = 0; dc <= 1; ++dc) {
                    int r = a + dr, c = b + dc;
                    if (r >= 0 && r < d && c >= 0 && c < d) f.data.push_back(r * d + c);
                }
            std::sort(f.data.begin(), f.data.end());
            f.interior = (a >= 0 && a < d - 1 && b >= 0 && b < d - 1);
            if (f.data.size() < 2) continue;
            bool row_edge = (a == -1 || a == d - 1);
            bool col_edge = (b == -1 || b == d - 1);
            if (row_edge && f.kind != StabKind::X) continue;
            if (col_edge && f.kind != StabKind::Z) continue;
            faces.push_back(std::move(f));
        }

    // Per kind: interior plaquettes in ascending (a,b) order, then boundary
    // ones descending; this reproduces the usual d=3 naming where X1 and X3
    // carry the east matching boundary.
    auto order_kind = [&](StabKind k) {
        std::vector<const Face*> sel;
        for (const auto& f : faces)
            if (f.kind == k) sel.push_back(&f);
        std::stable_sort(sel.begin(), sel.end(), [](const Face* x, const Face* y) {
            if (x->interior != y->interior) return x->interior > y->interior;
            if (x->interior) return std::make_pair(x->a, x->b) < std::make_pair(y->a, y->b);
            return std::make_pair(x->a, x->b) > std::make_pair(y->a, y->b);
        });
        return sel;
    };

    int next_id = L.n_data;
    for (StabKind k : {StabKind::X, StabKind::Z}) {
        int serial = 0;
        for (const Face* f : order_kind(k)) {
            Plaquette p;
            p.ancilla = next_id++;
            p.kind = k;
            p.row2 = 2 * f->a + 1;
            p.col2 = 2 * f->b + 1;
            p.data = f->data;
            auto at = [&](int r, int c) -> int {
                if (r < 0 || r >= d || c < 0 || c >= d) return -1;
                return r * d + c;
            };
            int nw = at(f->a + 1, f->b), ne = at(f->a + 1, f->b + 1);
            int sw = at(f->a, f->b), se = at(f->a, f->b + 1);
            // gate orders chosen so simultaneous same-kind maps never clash on a
            // shared qubit and hook chains run perpendicular to the logical they
            // could otherwise shorten
            if (k == StabKind::X)
                p.slot_qubit = {nw, ne, sw, se};
            else
                p.slot_qubit = {nw, sw, ne, se};
            L.qubit_name.push_back(kind_name(k) + std::to_string(++serial));
            L.plaquettes.push_back(std::move(p));
        }
    }
    L.n_qubits = next_id;

    for (int r = 0; r < d; ++r) L.logical_x_support.push_back(r * d);  // west column
    for (int c = 0; c < d; ++c) L.logical_z_support.push_back(c);      // south row

    // Matching boundaries: a data qubit covered by exactly one plaquette of a
    // kind gives that plaquette a boundary edge on the qubit's side.
    for (const auto& p : L.plaquettes) {
        for (int q : p.data) {
            int cover = 0;
            for (const auto& o : L.plaquettes)
                if (o.kind == p.kind &&
                    std::binary_search(o.data.begin(), o.data.end(), q))
                    ++cover;
            if (cover != 1) continue;
            auto [r, c] = L.data_pos[q];
            Boundary side;
            if (p.kind == StabKind::X)
                side = (c == d - 1) ? Boundary::East : Boundary::West;
            else
                side = (r == d - 1) ? Boundary::North : Boundary::South;
            if ((p.kind == StabKind::X && c != 0 && c != d - 1) ||
                (p.kind == StabKind::Z && r != 0 && r != d - 1))
                throw std::logic_error("boundary qubit off the lattice edge");
            auto it = L.boundary_assignment.find(p.ancilla);
            if (it != L.boundary_assignment.end() && it->second != side)
                throw std::logic_error("plaquette touches two opposing boundaries");
            L.boundary_assignment[p.ancilla] = side;
        }
    }

    // construction sanity
    int w4 = 0, w2 = 0;
    for (const auto& p : L.plaquettes) {
        if (p.data.size() == 4) ++w4;
        else if (p.data.size() == 2) ++w2;
        else throw std::logic_error("plaquette weight must be 2 or 4");
    }
    if (w4 != (d - 1) * (d - 1) || w2 != 2 * (d - 1))
        throw std::logic_error("unexpected plaquette counts");
    for (const auto& a : L.plaquettes)
        for (const auto& b : L.plaquettes)
            if (a.kind != b.kind && (L.shared_data(a.ancilla, b.ancilla).size() % 2) != 0)
                throw std::logic_error("stabilizers do not commute");

    return L;
}

std::string SurfaceCodeLayout::to_json() const {
    nlohmann::json j;
    j["distance"] = distance;
    j["n_data"] = n_data;
    j["n_qubits"] = n_qubits;
    for (int q = 0; q < n_qubits; ++q) j["qubit_names"].push_back(qubit_name[q]);
    for (const auto& p : plaquettes) {
        nlohmann::json pj;
        pj["ancilla"] = p.ancilla;
        pj["name"] = qubit_name[p.ancilla];
        pj["kind"] = kind_name(p.kind);
        pj["data"] = p.data;
        pj["gate_order"] = p.slot_qubit;
        auto it = boundary_assignment.find(p.ancilla);
        pj["boundary"] = boundary_name(it == boundary_assignment.end() ? Boundary::None
                                                                       : it->second);
        j["plaquettes"].push_back(pj);
    }
    j["logical_x_support"] = logical_x_support;
    j["logical_z_support"] = logical_z_support;
    return j.dump(2);
}

}  // namespace qecsyn

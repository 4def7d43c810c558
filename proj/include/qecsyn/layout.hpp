#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qecsyn/common.hpp"

namespace qecsyn {

/// One stabilizer plaquette and the ancilla that measures it.
/// slot_qubit lists the data qubits in CZ gate order (4 slots, -1 = idle slot).
struct Plaquette {
    int ancilla = -1;
    StabKind kind = StabKind::X;
    // face center in doubled grid coordinates (so 2*r+1, 2*c+1 for the face
    // "southwest of" data qubit (r+1, c+1)); boundary faces stick out by one.
    int row2 = 0, col2 = 0;
    std::vector<int> data;            // sorted support
    std::array<int, 4> slot_qubit{};  // gate order, -1 where no neighbor
};

/// Rotated surface code layout on a d x d data-qubit grid.
///
/// Data qubits are indexed row-major from the south-west corner. X-type
/// boundary plaquettes sit on the north/south edges and Z-type ones on the
/// east/west edges; the logical Z support is the south row and the logical X
/// support the west column. Z errors on the east/west columns therefore flip a
/// single X-type stabilizer, which assigns each X ancilla an east or west
/// matching boundary (and each Z ancilla a north or south one).
struct SurfaceCodeLayout {
    int distance = 0;
    int n_data = 0;
    int n_qubits = 0;  // data + ancillas
    std::vector<Plaquette> plaquettes;
    std::vector<std::string> qubit_name;        // by qubit id
    std::vector<std::pair<int, int>> data_pos;  // (row, col) by data qubit id
    std::vector<int> logical_x_support;         // west column
    std::vector<int> logical_z_support;         // south row
    std::map<int, Boundary> boundary_assignment;  // ancilla -> matching boundary

    std::vector<int> ancillas_of_kind(StabKind k) const;
    const Plaquette& plaquette_of(int ancilla) const;
    bool is_ancilla(int q) const { return q >= n_data; }
    StabKind ancilla_kind(int ancilla) const { return plaquette_of(ancilla).kind; }
    /// Data qubits shared by two plaquettes.
    std::vector<int> shared_data(int ancilla_a, int ancilla_b) const;
    int data_id(int row, int col) const { return row * distance + col; }

    std::string to_json() const;
};

/// Build the rotated surface code layout for an odd distance >= 3.
/// Throws std::invalid_argument otherwise.
SurfaceCodeLayout build_layout(int distance);

}  // namespace qecsyn

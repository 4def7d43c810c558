#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qecsyn/layout.hpp"

namespace qecsyn {

enum class OpType : uint8_t {
    Hadamard,     // basis-swap rotation on one qubit
    CZ,           // conditional phase between ancilla (q1) and data (q2)
    Readout,      // ancilla readout, produces a measurement event
    DataReadout,  // final data-qubit readout, produces a measurement event
    Idle,         // explicit idle slot (a noise/fault location, no gate action)
};

/// A point in the compiled circuit where a Pauli fault can be injected.
/// Gate locations inject after the gate, readout locations just before it.
struct FaultLocation {
    OpType type = OpType::Idle;
    int tick = 0;      // half-cycle index, 0-based
    int layer = 0;     // layer index within the tick
    int q1 = -1;       // primary qubit
    int q2 = -1;       // second qubit for CZ
    double idle_time = 0.0;  // microseconds, for Idle locations
};

struct Op {
    OpType type;
    int q1 = -1;
    int q2 = -1;
    int location = -1;  // index into fault_locations
    int meas_event = -1;  // index into measurement events for readouts
};

struct MeasEvent {
    int qubit = -1;
    int tick = 0;
    bool is_data = false;
};

/// Pipelined stabilizer-measurement schedule.
///
/// Each tick is one half-cycle: the parity map of one stabilizer kind runs
/// while the other kind's ancillas are read out. The prepared kind's map is
/// omitted in the first cycle (its initial stabilizer values are known), and
/// the final readout measures all data qubits together with the last
/// prepared-kind ancilla readout. Detectors compare measurement events per the
/// rules below; for N cycles this yields N detectors per prepared-kind ancilla
/// (even ticks 4..2N+2 including the data-readout detector) and N-1 per
/// other-kind ancilla (odd ticks 3..2N-1), (d^2-1)(2N-1)/2 in total.
struct CircuitSchedule {
    SurfaceCodeLayout layout;
    int cycles = 0;
    StabKind prepared_basis = StabKind::Z;
    int n_ticks = 0;

    std::vector<std::vector<Op>> tick_ops;  // ops grouped by tick, in order
    std::vector<FaultLocation> fault_locations;
    std::vector<MeasEvent> meas_events;

    std::vector<DetectorCoord> detector_list;  // sorted by (tick, ancilla)
    // detector -> measurement events whose recorded-flip XOR defines it
    std::vector<std::vector<int>> detector_rule;
    std::unordered_map<DetectorCoord, int, DetectorCoordHash> detector_index;

    int n_detectors() const { return int(detector_list.size()); }
    StabKind detector_kind(int det) const {
        return layout.ancilla_kind(detector_list[det].ancilla);
    }
    /// Tick range of detectors assumed time-translation invariant
    /// (first and last cycle excluded): [first_bulk_tick, last_bulk_tick].
    int first_bulk_tick() const { return 5; }
    int last_bulk_tick() const { return 2 * cycles - 2; }

    int cz_locations_per_cycle() const;
    std::string to_json() const;
};

/// Compile the pipelined schedule for `cycles` >= 1 rounds.
CircuitSchedule build_schedule(const SurfaceCodeLayout& layout, int cycles,
                               StabKind prepared_basis = StabKind::Z);

}  // namespace qecsyn

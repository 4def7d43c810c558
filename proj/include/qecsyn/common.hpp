#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qecsyn {

enum class StabKind : uint8_t { X = 0, Z = 1 };

inline StabKind other_kind(StabKind k) {
    return k == StabKind::X ? StabKind::Z : StabKind::X;
}

inline const char* kind_name(StabKind k) { return k == StabKind::X ? "X" : "Z"; }

// Matching-graph boundary labels. X-type graphs use East/West, Z-type North/South.
enum class Boundary : uint8_t { East = 0, West = 1, North = 2, South = 3, None = 255 };

const char* boundary_name(Boundary b);

/// One syndrome element: an ancilla qubit and a half-cycle tick.
/// Ticks are twice the cycle index, so half-integer cycles stay integral.
/// One detector kind lives on even ticks, the other on odd ticks.
struct DetectorCoord {
    int32_t ancilla = -1;
    int32_t tick = -1;

    friend auto operator<=>(const DetectorCoord&, const DetectorCoord&) = default;
};

struct DetectorCoordHash {
    size_t operator()(const DetectorCoord& d) const {
        uint64_t v = (uint64_t(uint32_t(d.ancilla)) << 32) | uint32_t(d.tick);
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return size_t(v);
    }
};

enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };  // bit0 = X part, bit1 = Z part

inline Pauli pauli_mul(Pauli a, Pauli b) {
    return Pauli(uint8_t(a) ^ uint8_t(b));  // phases ignored, frame arithmetic only
}

const char* pauli_name(Pauli p);

/// Signature taxonomy; see ErrorClass docs in catalog.hpp for the rules.
enum class ErrorClass : uint8_t {
    B,        // single syndrome element (boundary)
    T,        // same ancilla, one cycle apart
    Tprime,   // same ancilla, two cycles apart (readout misclassification)
    S_XZ,     // neighboring ancillas, same cycle
    S_Y,      // both-kind signature of a data Y between parity maps
    ST_X,     // neighboring ancillas, consecutive cycles
    ST_Y,     // both-kind signature of a data Y inside a parity map
    H_X,      // hook: ancilla bit flip mid parity map
    H_Y,      // hook plus own-ancilla trace of an ancilla Y
    M_ZZ,     // correlated phase flip on a CZ pair
    M_XY,     // correlated bit flip on a CZ pair
    C,        // highly correlated template (single ancilla long span / one-qubit cluster)
    Unclassified,
};

const char* error_class_name(ErrorClass c);

/// Set of detectors flipped by one independent error process, with labels for
/// whether the process flips the logical X / Z operator value.
/// Detectors are kept sorted by (ancilla, tick) so signatures hash and compare
/// deterministically.
struct ErrorSignature {
    std::vector<DetectorCoord> detectors;
    bool logical_flip_x = false;
    bool logical_flip_z = false;

    void canonicalize();
    int weight() const { return int(detectors.size()); }
    bool empty() const { return detectors.empty(); }
    int min_tick() const;
    int max_tick() const;
    /// Signature with all ticks shifted by delta (must keep kind parity, so
    /// delta is even for in-schedule shifts).
    ErrorSignature shifted(int delta_ticks) const;

    friend bool operator==(const ErrorSignature& a, const ErrorSignature& b) {
        return a.detectors == b.detectors;
    }
};

struct SignatureHash {
    size_t operator()(const ErrorSignature& s) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (const auto& d : s.detectors) {
            h ^= (uint64_t(uint32_t(d.ancilla)) << 32) | uint32_t(d.tick);
            h *= 0x100000001b3ULL;
        }
        return size_t(h);
    }
};

std::string to_string(const DetectorCoord& d);
std::string to_string(const ErrorSignature& s);

}  // namespace qecsyn

#include "qecsyn/common.hpp"

#include <algorithm>

namespace qecsyn {

const char* boundary_name(Boundary b) {
    switch (b) {
        case Boundary::East: return "E";
        case Boundary::West: return "W";
        case Boundary::North: return "N";
        case Boundary::South: return "S";
        default: return "-";
    }
}

const char* pauli_name(Pauli p) {
    switch (p) {
        case Pauli::I: return "I";
        case Pauli::X: return "X";
        case Pauli::Z: return "Z";
        case Pauli::Y: return "Y";
    }
    return "?";
}

const char* error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::B: return "B";
        case ErrorClass::T: return "T";
        case ErrorClass::Tprime: return "T'";
        case ErrorClass::S_XZ: return "S_XZ";
        case ErrorClass::S_Y: return "S_Y";
        case ErrorClass::ST_X: return "ST_X";
        case ErrorClass::ST_Y: return "ST_Y";
        case ErrorClass::H_X: return "H_X";
        case ErrorClass::H_Y: return "H_Y";
        case ErrorClass::M_ZZ: return "M_ZZ";
        case ErrorClass::M_XY: return "M_XY";
        case ErrorClass::C: return "C";
        case ErrorClass::Unclassified: return "unclassified";
    }
    return "?";
}

void ErrorSignature::canonicalize() {
    std::sort(detectors.begin(), detectors.end());
    detectors.erase(std::unique(detectors.begin(), detectors.end()), detectors.end());
}

int ErrorSignature::min_tick() const {
    int t = INT32_MAX;
    for (const auto& d : detectors) t = std::min(t, d.tick);
    return t;
}

int ErrorSignature::max_tick() const {
    int t = INT32_MIN;
    for (const auto& d : detectors) t = std::max(t, d.tick);
    return t;
}

ErrorSignature ErrorSignature::shifted(int delta_ticks) const {
    ErrorSignature out = *this;
    for (auto& d : out.detectors) d.tick += delta_ticks;
    return out;
}

std::string to_string(const DetectorCoord& d) {
    return "(" + std::to_string(d.ancilla) + "," + std::to_string(d.tick) + ")";
}

std::string to_string(const ErrorSignature& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.detectors.size(); ++i) {
        if (i) out += " ";
        out += to_string(s.detectors[i]);
    }
    out += "}";
    if (s.logical_flip_x) out += "Lx";
    if (s.logical_flip_z) out += "Lz";
    return out;
}

}  // namespace qecsyn

#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qecsyn/schedule.hpp"

namespace qecsyn {

/// A single-qubit Pauli at any fault location, or a two-qubit Pauli pair at a
/// CZ location (pauli on the ancilla, pauli2 on the data qubit).
struct PauliFault {
    int location = -1;
    Pauli pauli = Pauli::I;
    Pauli pauli2 = Pauli::I;  // CZ locations only

    bool is_two_qubit() const { return pauli2 != Pauli::I; }
};

/// Propagate one Pauli fault through the remaining circuit and report the
/// exact set of flipped detectors plus logical flips.
ErrorSignature propagate_fault(const CircuitSchedule& schedule, const PauliFault& fault);

/// Flip set of a pure readout misclassification (recorded value flips, state
/// does not) at measurement event `event`.
ErrorSignature misclassification_signature(const CircuitSchedule& schedule, int event);

struct CatalogEntry {
    ErrorSignature signature;   // canonical if the catalog is time-canonical
    std::vector<PauliFault> faults;
    int nu = 0;                 // number of (Pauli, location) combinations
    ErrorClass cls = ErrorClass::Unclassified;
};

/// Catalog of signatures reachable by single Pauli faults.
/// `bulk` catalogs are built from one middle cycle and canonicalized by time
/// translation (minimum tick shifted into {0,1}); `full` catalogs keep
/// absolute ticks over the whole schedule.
struct FaultCatalog {
    bool time_canonical = false;
    std::vector<CatalogEntry> entries;
    std::unordered_map<ErrorSignature, int, SignatureHash> index;

    const CatalogEntry* find(const ErrorSignature& s) const;
    int total_combinations() const;
};

/// Canonical time-translation representative: shift ticks down by an even
/// amount so the minimum tick lands in {0, 1}.
ErrorSignature time_canonical(const ErrorSignature& s);

/// Enumerate every single-qubit Pauli at every location of one bulk cycle and
/// all 15 two-qubit Paulis at its CZ locations; group by canonical signature.
/// Empty signatures are dropped; ν sums the merged fault multiplicity.
FaultCatalog enumerate_fault_catalog(const CircuitSchedule& schedule);

/// Same enumeration over all locations of the whole schedule, absolute ticks.
FaultCatalog enumerate_fault_catalog_full(const CircuitSchedule& schedule);

/// Deterministic signature taxonomy (see spec of classes in common.hpp).
/// Pure function of (signature, layout, schedule): simple structural patterns
/// first, then the Pauli-catalog shape rules, then the highly-correlated
/// templates.
ErrorClass classify_signature(const ErrorSignature& s, const CircuitSchedule& schedule,
                              const FaultCatalog& bulk_catalog);

struct CClassOptions {
    int max_time_span = 9;  // cycles, template (a): one ancilla
    int max_nbr_sep = 2;    // cycles, template (b): ancillas around one data qubit
};

/// Generate the highly-correlated template signatures (time-canonical):
/// (a) any non-empty detector subset on one ancilla within max_time_span
///     consecutive cycles,
/// (b) any subset touching >= 2 ancillas that neighbor one data qubit within
///     max_nbr_sep cycles,
/// excluding signatures already present in the bulk Pauli catalog.
std::vector<ErrorSignature> generate_c_class(const CircuitSchedule& schedule,
                                             const FaultCatalog& bulk_catalog,
                                             const CClassOptions& opts = {});

/// Reduced single-qubit form of a fault when one exists: pure single-qubit
/// faults reduce trivially; CZ pairs with an X-component on only one side
/// reduce to that side (the Z on the other side commutes through the gate).
std::optional<std::pair<int, Pauli>> reduced_single_qubit(const CircuitSchedule& schedule,
                                                          const PauliFault& fault);

}  // namespace qecsyn

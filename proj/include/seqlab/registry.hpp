#pragma once

// Every sequence the library can produce, by id and by short name.

#include "seqlab/hard_enum.hpp"
#include "seqlab/seqdb.hpp"
#include "seqlab/sequence.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab {

struct RegistryBudget {
    HardEnumBudget hard;
    std::size_t wilson_terms = 12;  // through 9737333
    std::size_t levine_terms = 13;  // L_1..L_13

    static RegistryBudget standard() { return {}; }
    static RegistryBudget extended() { return {HardEnumBudget::extended(), 13, 15}; }
};

struct RegistryEntry {
    std::string name;         // short alias, e.g. "golomb"
    std::string description;
    Sequence seq;
    std::size_t db_terms = 0;  // terms written to the shipped database
};

std::vector<RegistryEntry> make_registry(const RegistryBudget& budget = RegistryBudget::standard());

/// The standard-budget registry, built once.
const std::vector<RegistryEntry>& registry();

/// By id ("A5228", "A005228") or by name; nullptr if unknown.
const RegistryEntry* find_registered(std::string_view key);

/// A database holding db_terms terms of every registered sequence.
SeqDatabase registry_database();

}  // namespace seqlab

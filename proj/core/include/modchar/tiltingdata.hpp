/* Ingestion, validation and (for SL2) generation of tilting-character
   datasets, the external data the pipeline consumes. */
#pragma once

#include <modchar/charring.hpp>
#include <modchar/rootsystem.hpp>

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace modchar {

class PipelineConfig;

struct DatasetMeta {
    char type_letter;
    int rank;
    long long p;
};

// A validated map (highest weight -> ch T(highest weight)). Every entry is
// checked on construction: Weyl-invariant, nonnegative, coefficient 1 at the
// key, support not above the key, and a nonnegative greedy decomposition
// into Weyl characters. Immutable afterwards.
class TiltingDataset {
public:
    TiltingDataset(DatasetMeta meta, std::map<Weight, Character> entries);

    static TiltingDataset from_json(const nlohmann::json& doc);
    static TiltingDataset load(std::istream& in);
    static TiltingDataset load_file(const std::string& path);

    // The closed-form SL2 recursion: ch T(t) = chi(t) for t <= p-1,
    // ch T(t) = chi(t) + chi(2p-2-t) for p <= t <= 2p-2, and
    // ch T(a+pb) = ch T(a) * ch T(b)^{(1)} with the unique a in [p-1, 2p-2]
    // congruent to the weight mod p (the interval covers each residue once).
    static TiltingDataset generate_sl2(long long p, long long max_highest_weight);

    nlohmann::json to_json() const;
    void save(std::ostream& out) const;

    const DatasetMeta& meta() const { return meta_; }
    const RootSystem& rs() const { return rs_; }
    const std::map<Weight, Character>& entries() const { return entries_; }
    const Character* find(const Weight& highest) const;
    // throws naming the absent highest weight
    const Character& require(const Weight& highest) const;

private:
    DatasetMeta meta_;
    RootSystem rs_;
    std::map<Weight, Character> entries_;
};

struct ValidationItem {
    Weight lambda;          // restricted weight the pipeline needs
    Weight tilting_weight;  // stable tilting weight for lambda
    bool present = false;
    bool extracted = false;
    bool mass_ok = false;
    std::string message;    // failure detail, empty when ok
    bool ok() const { return present && extracted && mass_ok; }
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool all_ok() const;
};

// Runs the multiplicity extraction on every entry the pipeline would need
// and reports per-lambda success plus the mass rule check. Never throws on
// bad data; failures are carried in the report.
ValidationReport validate_against_pipeline(const TiltingDataset& dataset,
                                           const PipelineConfig& cfg);

}  // namespace modchar

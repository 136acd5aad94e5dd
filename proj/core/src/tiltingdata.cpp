#include <modchar/tiltingdata.hpp>

#include <modchar/json_io.hpp>
#include <modchar/oracle.hpp>
#include <modchar/pipeline.hpp>
#include <modchar/weylchar.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace modchar {

using nlohmann::json;

namespace {

void validate_entry(const RootSystem& rs, WeylCharacterCache& cache, const Weight& highest,
                    const Character& ch) {
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("tilting entry " + highest.str() + ": " + why);
    };
    if (!rs.is_dominant(highest)) fail("highest weight is not dominant");
    if (ch.is_zero()) fail("character is empty");
    for (const auto& t : ch.terms()) {
        if (t.coeff < 0)
            fail("negative coefficient " + t.coeff.str() + " at weight " + t.weight.str());
        if (t.weight != highest && rs.dominance_leq(highest, t.weight))
            fail("support weight " + t.weight.str() + " lies strictly above the highest weight");
    }
    if (ch.coeff_at(highest) != 1) fail("highest coefficient must be 1, found " +
                                        ch.coeff_at(highest).str());
    if (!is_weyl_invariant(rs, ch)) fail("character is not Weyl-invariant");
    // must decompose nonnegatively into Weyl characters chi(mu), mu <= highest
    auto decomp = decompose_into_weyl_characters(cache, ch);
    for (const auto& [mu, c] : decomp.table())
        if (c < 0)
            fail("no nonnegative Weyl character decomposition (coefficient " + c.str() +
                 " at chi(" + mu.str() + "))");
}

}  // namespace

TiltingDataset::TiltingDataset(DatasetMeta meta, std::map<Weight, Character> entries)
    : meta_(meta), rs_(RootSystem::build(meta.type_letter, meta.rank)),
      entries_(std::move(entries)) {
    if (meta_.p < 2) throw std::runtime_error("tilting dataset: p must be >= 2");
    WeylCharacterCache cache(rs_);
    for (const auto& [highest, ch] : entries_) {
        rs_.check_weight(highest);
        validate_entry(rs_, cache, highest, ch);
    }
}

TiltingDataset TiltingDataset::from_json(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("tilting dataset: top level must be an object");
    for (const char* field : {"type", "rank", "p", "tilting"})
        if (!doc.contains(field))
            throw std::runtime_error(std::string("tilting dataset: missing field '") + field +
                                     "'");
    const auto& type = doc.at("type");
    if (!type.is_string() || type.get_ref<const std::string&>().size() != 1)
        throw std::runtime_error("tilting dataset: 'type' must be a single letter");
    if (!doc.at("rank").is_number_integer())
        throw std::runtime_error("tilting dataset: 'rank' must be an integer");
    if (!doc.at("p").is_number_integer())
        throw std::runtime_error("tilting dataset: 'p' must be an integer");

    DatasetMeta meta{type.get_ref<const std::string&>()[0],
                     doc.at("rank").get<int>(), doc.at("p").get<long long>()};
    RootSystem rs = RootSystem::build(meta.type_letter, meta.rank);

    if (!doc.at("tilting").is_array())
        throw std::runtime_error("tilting dataset: 'tilting' must be an array");
    std::map<Weight, Character> entries;
    for (const auto& rec : doc.at("tilting")) {
        if (!rec.is_object() || !rec.contains("highest") || !rec.contains("character"))
            throw std::runtime_error(
                "tilting dataset: each entry needs 'highest' and 'character' fields");
        Weight highest = weight_from_json(rec.at("highest"), meta.rank, "tilting entry");
        Character ch = character_from_json(rec.at("character"), rs,
                                           "tilting entry " + highest.str());
        if (!entries.emplace(std::move(highest), std::move(ch)).second)
            throw std::runtime_error("tilting dataset: duplicate entry for highest weight");
    }
    return TiltingDataset(meta, std::move(entries));
}

TiltingDataset TiltingDataset::load(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("tilting dataset: JSON parse error: ") + e.what());
    }
    return from_json(doc);
}

TiltingDataset TiltingDataset::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tilting dataset file: " + path);
    return load(in);
}

TiltingDataset TiltingDataset::generate_sl2(long long p, long long max_highest_weight) {
    if (p < 2) throw std::invalid_argument("generate_sl2: p must be >= 2");
    if (max_highest_weight < 0)
        throw std::invalid_argument("generate_sl2: max highest weight must be >= 0");
    RootSystem rs = RootSystem::build('A', 1);
    WeylCharacterCache cache(rs);

    // ch T(t) for the fundamental window t in [p-1, 2p-2]
    auto base = [&](long long t) -> Character {
        if (t == p - 1) return cache.weyl(Weight{p - 1});
        return add(cache.weyl(Weight{t}), cache.weyl(Weight{2 * p - 2 - t}));
    };

    std::map<Weight, Character> entries;
    std::map<long long, Character> memo;
    std::function<const Character&(long long)> tilt = [&](long long t) -> const Character& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        Character ch;
        if (t <= p - 1) {
            ch = cache.weyl(Weight{t});
        } else {
            // unique split t = a + p*b with a in [p-1, 2p-2], a congruent to t mod p
            long long a = p - 1 + ((t - (p - 1)) % p);
            long long b = (t - a) / p;
            ch = multiply(base(a), frobenius_twist(tilt(b), p, 1));
        }
        return memo.emplace(t, std::move(ch)).first->second;
    };
    for (long long t = 0; t <= max_highest_weight; ++t) entries.emplace(Weight{t}, tilt(t));
    return TiltingDataset(DatasetMeta{'A', 1, p}, std::move(entries));
}

json TiltingDataset::to_json() const {
    json doc;
    doc["type"] = std::string(1, meta_.type_letter);
    doc["rank"] = meta_.rank;
    doc["p"] = meta_.p;
    json arr = json::array();
    // entry order: height descending, lex descending, matching character terms
    std::vector<const std::pair<const Weight, Character>*> order;
    order.reserve(entries_.size());
    for (const auto& e : entries_) order.push_back(&e);
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        long long ha = rs_.height_scaled(a->first), hb = rs_.height_scaled(b->first);
        if (ha != hb) return ha > hb;
        return b->first < a->first;
    });
    for (const auto* e : order) {
        json rec;
        rec["highest"] = weight_to_json(e->first);
        rec["character"] = character_to_json(rs_, e->second);
        arr.push_back(std::move(rec));
    }
    doc["tilting"] = std::move(arr);
    return doc;
}

void TiltingDataset::save(std::ostream& out) const {
    out << to_json().dump(2) << '\n';
}

const Character* TiltingDataset::find(const Weight& highest) const {
    auto it = entries_.find(highest);
    return it == entries_.end() ? nullptr : &it->second;
}

const Character& TiltingDataset::require(const Weight& highest) const {
    const Character* ch = find(highest);
    if (!ch)
        throw std::runtime_error("tilting character for highest weight " + highest.str() +
                                 " is missing from the dataset");
    return *ch;
}

bool ValidationReport::all_ok() const {
    for (const auto& item : items)
        if (!item.ok()) return false;
    return true;
}

ValidationReport validate_against_pipeline(const TiltingDataset& dataset,
                                           const PipelineConfig& cfg) {
    ValidationReport report;
    const RootSystem& rs = cfg.rs();
    Int verma_mass = pow_int(Int(cfg.p()),
                             static_cast<unsigned>(cfg.n() * rs.positive_roots().size()));
    for (const Weight& lambda : restricted_weights(rs, cfg.p())) {
        ValidationItem item;
        item.lambda = lambda;
        item.tilting_weight = stable_tilting_weight(cfg, lambda);
        const Character* tilt = dataset.find(item.tilting_weight);
        if (!tilt) {
            item.message = "missing tilting character";
            report.items.push_back(std::move(item));
            continue;
        }
        item.present = true;
        try {
            auto b = extract_baby_verma_multiplicities(cfg.cache(), cfg.p(),
                                                       static_cast<int>(cfg.n()), *tilt);
            item.extracted = true;
            Int total = 0;
            for (const auto& [mu, mult] : b) total += mult;
            item.mass_ok = (total * verma_mass == tilt->total_mass());
            if (!item.mass_ok) item.message = "mass rule violated";
        } catch (const std::exception& e) {
            item.message = e.what();
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace modchar

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ringlab/central.hpp"
#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/submodule.hpp"

namespace ringlab {

/// Witnesses serialize as coordinate vectors for struct-consts rings and as
/// bare element indices for table rings.
inline nlohmann::json element_json(const Ring& r, ElemIndex e) {
    if (r.encoding() == Ring::Encoding::StructConsts) {
        std::vector<std::uint32_t> coords(static_cast<std::size_t>(r.generator_count()));
        r.decode(e, coords.data());
        return coords;
    }
    return e;
}

struct ClassificationReport {
    std::string name;
    std::uint64_t size = 0;
    std::uint64_t characteristic = 0;
    std::uint64_t center_size = 0;
    bool centrally_essential = false;
    std::optional<ElemIndex> ce_witness;
    std::uint64_t idempotent_count = 0;
    std::uint64_t jacobson_size = 0;
    PredicateRecord predicates;
};

inline ClassificationReport classify(const Ring& r, const RunConfig& cfg = {}) {
    ClassificationReport rep;
    rep.name = r.name();
    rep.size = r.size();
    rep.characteristic = r.characteristic();
    CenterData c = center(r, cfg);
    rep.center_size = c.size();
    EssentialityResult ce = is_centrally_essential(r, c, cfg);
    rep.centrally_essential = ce.essential;
    if (!ce.essential) rep.ce_witness = ce.witness;
    rep.idempotent_count = idempotents(r, cfg).size();
    rep.jacobson_size = jacobson_radical(r, cfg).size();
    rep.predicates = structural_predicates(r, cfg);
    return rep;
}

inline nlohmann::json to_json(const Ring& r, const ClassificationReport& rep) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["name"] = rep.name;
    doc["size"] = rep.size;
    doc["characteristic"] = rep.characteristic;
    doc["center_size"] = rep.center_size;
    doc["centrally_essential"] = rep.centrally_essential;
    if (rep.ce_witness) doc["centrally_essential_witness"] = element_json(r, *rep.ce_witness);
    doc["idempotent_count"] = rep.idempotent_count;
    doc["jacobson_size"] = rep.jacobson_size;
    nlohmann::json p;
    p["commutative"] = rep.predicates.commutative;
    p["has_zero_divisors"] = rep.predicates.has_zero_divisors;
    p["reduced"] = rep.predicates.reduced;
    p["semiprime"] = rep.predicates.semiprime;
    p["regular"] = rep.predicates.regular;
    p["right_nonsingular"] = rep.predicates.right_nonsingular;
    doc["predicates"] = std::move(p);
    return doc;
}

}  // namespace ringlab

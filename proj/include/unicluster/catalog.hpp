#pragma once

#include "unicluster/coordring.hpp"
#include "unicluster/rep.hpp"

#include <optional>

namespace unicluster {

// The twelve indecomposable modules, named by socle/top structure. Enum
// order is the lexicographic order of the labels; canonical lists are sorted
// in this order.
enum class CatalogId : int { P1, P2, P3, S1, S2, S3, SOC2, TOP2, U12, U21, U23, U32 };

std::string to_string(CatalogId id);
std::optional<CatalogId> catalog_id_from_string(const std::string& name);

const std::vector<CatalogId>& all_catalog_ids();      // 12, sorted
const std::vector<CatalogId>& projective_ids();       // P1, P2, P3
const std::vector<CatalogId>& nonprojective_ids();    // the other 9
bool is_projective(CatalogId id);

// The fixed rational model of each module, entries in {0, +-1}; P2 carries
// the single -1 needed by the vertex-2 relation.
const Rep& catalog_rep(CatalogId id);
// The minor attached to the module by the character table.
const MinorSpec& catalog_minor(CatalogId id);
std::optional<CatalogId> catalog_id_of_minor(const MinorSpec& spec);

// Cached dim Ext^1 between catalog modules.
int ext1_table(CatalogId x, CatalogId y);
int hom_table(CatalogId x, CatalogId y);

// Which catalog module a representation is isomorphic to, if any.
std::optional<CatalogId> identify(const Rep& x);

// Indecomposable summands with multiplicity, sorted. Fitting peeling over a
// deterministic list of endomorphism candidates; indecomposability is
// certified by End/rad being one-dimensional before catalog matching.
std::vector<CatalogId> decompose(const Rep& x);

// Basis of the radical (non-invertible part) of the endomorphism algebra
// spanned by `endos`, via the characteristic-zero trace form.
std::vector<RepMap> radical_of_end(const std::vector<RepMap>& endos);

}  // namespace unicluster

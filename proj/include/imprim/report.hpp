#ifndef IMPRIM_REPORT_HPP
#define IMPRIM_REPORT_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "imprim/group.hpp"
#include "imprim/itype.hpp"

namespace imprim {

using json = nlohmann::ordered_json;

// {"n":66,"itype":[[11,6]],"witnesses":{"11,6":{"clusters":[[1,5],[10,...]],
// "k_i":[1,10]}}} — pairs ascending, one witness per pair.
json itype_set_to_json(const ITypeSet& s);
ITypeSet itype_set_from_json(const json& j);

// Group files: first non-comment line `degree N`, then one generator per
// line in cycle notation; `#` starts a comment.
PermutationGroup read_group(std::istream& in);
PermutationGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const PermutationGroup& g);

// Minimal JSON-schema checker covering exactly the keywords the shipped
// schema uses: type, properties, required, items, enum,
// additionalProperties.  On failure returns false and, when `error` is
// given, a path-qualified message.
bool validate_against_schema(const json& value, const json& schema,
                             std::string* error = nullptr);

} // namespace imprim

#endif

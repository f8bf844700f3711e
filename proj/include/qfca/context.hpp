#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qfca/qdist.hpp"

namespace qfca {

// A parsed context file. Names are kept in sorted maps so every traversal,
// and hence every serialization, is deterministic.
struct ContextDocument {
  std::string quantaloid_source;  // canonical JSON of the "quantaloid" section
  QuantaloidPtr Q;
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, QDistributor> distributors;
  std::map<std::string, QFunctor> functors;

  const QDistributor& distributor(std::string_view name) const;
  // The only distributor, or the named one; InvalidParams otherwise.
  const std::pair<const std::string, QDistributor>& pick_distributor(std::string_view name) const;
  std::string category_name(const CategoryPtr& A) const;
};

bool operator==(const ContextDocument& a, const ContextDocument& b);

// ParseError for malformed JSON or dangling references, InvalidParams for
// bad preset parameters. Omitted hom and distributor entries default to ⊥.
ContextDocument parse_context(std::string_view text);
ContextDocument load_context(const std::string& path);
std::string serialize_context(const ContextDocument& doc);

// Every validator over the document, merged with prefixes naming the part.
Report validate_document(const ContextDocument& doc);

}  // namespace qfca

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lexshell/algebra.hpp"
#include "lexshell/category.hpp"
#include "lexshell/complex.hpp"
#include "lexshell/groebner.hpp"
#include "lexshell/labelling.hpp"
#include "lexshell/path_table.hpp"
#include "lexshell/poset.hpp"

#include <json.hpp>

namespace lexshell {

/// Parsed instance file: a poset or a category, with optional edge labels
/// (keyed the way the file keys them: cover pairs resp. generator ids).
struct ParsedInstance {
  std::variant<Poset, AcyclicCategory> value;
  std::vector<std::optional<long>> labels;  // one slot per input cover/generator
  std::vector<std::string> label_keys;      // "a<b" resp. generator id
  std::string digest;

  bool is_poset() const { return std::holds_alternative<Poset>(value); }
  const Poset& poset() const { return std::get<Poset>(value); }
  const AcyclicCategory& category() const { return std::get<AcyclicCategory>(value); }
  PathTable make_table() const;
  bool has_labelling() const;
  /// Labelling aligned with the table's edge order; ValidationError if the
  /// file carried no labels or only some.
  EdgeLabelling labelling_for(const PathTable& t) const;
};

ParsedInstance parse_instance(const std::string& text);
ParsedInstance load_instance(const std::string& path);

std::string instance_to_json(const PathTable& t, const EdgeLabelling* lab);

nlohmann::json render_element(const PathTable& t, const AlgebraElement& f);
nlohmann::json render_basis(const PathTable& t, const GroebnerBasis& g);
nlohmann::json render_complex(const Complex& k);

/// Basis file: {"elements": [{"terms": [{"coef": 1, "path": ["a","d","g"]}...]}...]}
/// Poset paths are vertex arrays; category paths are generator-id arrays.
std::vector<AlgebraElement> parse_basis_file(const std::string& text, const PathTable& t);

std::string digest_of(const std::string& canonical_text);

}  // namespace lexshell

#ifndef ARGANNOT_SCHEME_H_
#define ARGANNOT_SCHEME_H_

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace argannot {

// Version tag written into every file the toolkit produces.
inline constexpr std::string_view kSchemeVersion = "1.0";

// Argumentation level of the Discourse dimension.
enum class ArgLabel { kNone, kClaim };

// Rhetorical level of the Discourse dimension.
enum class RhetLabel { kNone, kElaboration };

// Leaf categories of the Domain dimension. Only leaves are legal labels;
// IR.Theory and IR.Data are reachable through MainCategory().
enum class DomainLabel {
  kNone,
  kTheoryDefinition,
  kTheoryStatement,
  kDataSpeculative,
  kDataEvaluative,
  kDataOther,
  kIrOther,
  kOtherDomain,
};

enum class DomainMain { kNone, kTheory, kData, kOther, kOtherDomain };

enum class RelationKind { kSupport, kAttack };

// Annotation level a label belongs to.
enum class Level { kArgumentation, kRhetorical, kDomain, kRelation };

inline constexpr std::array<DomainLabel, 8> kAllDomainLabels = {
    DomainLabel::kTheoryDefinition, DomainLabel::kTheoryStatement,
    DomainLabel::kDataSpeculative,  DomainLabel::kDataEvaluative,
    DomainLabel::kDataOther,        DomainLabel::kIrOther,
    DomainLabel::kOtherDomain,      DomainLabel::kNone,
};

inline constexpr std::array<DomainMain, 5> kAllDomainMains = {
    DomainMain::kTheory, DomainMain::kData, DomainMain::kOther,
    DomainMain::kOtherDomain, DomainMain::kNone,
};

DomainMain MainCategory(DomainLabel label);

std::string_view Render(ArgLabel label);
std::string_view Render(RhetLabel label);
std::string_view Render(DomainLabel label);
std::string_view Render(DomainMain main);
std::string_view Render(RelationKind kind);
std::string_view Render(Level level);

// Case-sensitive parsers; all throw Error(kUnknownLabel) naming the text.
ArgLabel ParseArgLabel(std::string_view text);
RhetLabel ParseRhetLabel(std::string_view text);
DomainLabel ParseDomainLabel(std::string_view text);
RelationKind ParseRelationKind(std::string_view text);

using AnyLabel = std::variant<ArgLabel, RhetLabel, DomainLabel, RelationKind>;

// Parses a label at a known level.
AnyLabel ParseLabel(Level level, std::string_view text);

// Parses a label without a level. "None" exists at three levels and is
// rejected here as ambiguous; use the level-qualified overload for it.
AnyLabel ParseLabel(std::string_view text);

// One row of the handbook.
struct CatalogEntry {
  Level level;
  std::string path;
  std::string main_category;  // domain entries only, empty otherwise
  std::string definition;
};

// All legal labels: 2 argumentation, 2 rhetorical, 8 domain, 2 relation.
const std::vector<CatalogEntry> &Catalog();

// The handbook as written to scheme.json (pretty-printed, newline-terminated).
std::string RenderCatalogJson();

// Annotation of one segment across the three levels. None is explicit.
struct LabelSet {
  ArgLabel arg = ArgLabel::kNone;
  RhetLabel rhet = RhetLabel::kNone;
  DomainLabel domain = DomainLabel::kNone;

  bool operator==(const LabelSet &) const = default;
};

}  // namespace argannot

#endif  // ARGANNOT_SCHEME_H_

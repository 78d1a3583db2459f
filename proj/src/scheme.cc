#include "argannot/scheme.h"

#include "json.hpp"

#include "argannot/error.h"

namespace argannot {

DomainMain MainCategory(DomainLabel label) {
  switch (label) {
    case DomainLabel::kTheoryDefinition:
    case DomainLabel::kTheoryStatement:
      return DomainMain::kTheory;
    case DomainLabel::kDataSpeculative:
    case DomainLabel::kDataEvaluative:
    case DomainLabel::kDataOther:
      return DomainMain::kData;
    case DomainLabel::kIrOther:
      return DomainMain::kOther;
    case DomainLabel::kOtherDomain:
      return DomainMain::kOtherDomain;
    case DomainLabel::kNone:
      return DomainMain::kNone;
  }
  return DomainMain::kNone;
}

std::string_view Render(ArgLabel label) {
  return label == ArgLabel::kClaim ? "Claim" : "None";
}

std::string_view Render(RhetLabel label) {
  return label == RhetLabel::kElaboration ? "Elaboration" : "None";
}

std::string_view Render(DomainLabel label) {
  switch (label) {
    case DomainLabel::kTheoryDefinition: return "IR.Theory.Definition";
    case DomainLabel::kTheoryStatement: return "IR.Theory.Statement";
    case DomainLabel::kDataSpeculative: return "IR.Data.Speculative";
    case DomainLabel::kDataEvaluative: return "IR.Data.Evaluative";
    case DomainLabel::kDataOther: return "IR.Data.Other";
    case DomainLabel::kIrOther: return "IR.Other";
    case DomainLabel::kOtherDomain: return "OtherDomain";
    case DomainLabel::kNone: return "None";
  }
  return "None";
}

std::string_view Render(DomainMain main) {
  switch (main) {
    case DomainMain::kTheory: return "Theory";
    case DomainMain::kData: return "Data";
    case DomainMain::kOther: return "Other";
    case DomainMain::kOtherDomain: return "OtherDomain";
    case DomainMain::kNone: return "None";
  }
  return "None";
}

std::string_view Render(RelationKind kind) {
  return kind == RelationKind::kSupport ? "Support" : "Attack";
}

std::string_view Render(Level level) {
  switch (level) {
    case Level::kArgumentation: return "argumentation";
    case Level::kRhetorical: return "rhetorical";
    case Level::kDomain: return "domain";
    case Level::kRelation: return "relation";
  }
  return "";
}

namespace {

[[noreturn]] void Unknown(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kUnknownLabel,
              "'" + std::string(text) + "' is not a " + std::string(what));
}

}  // namespace

ArgLabel ParseArgLabel(std::string_view text) {
  if (text == "Claim") return ArgLabel::kClaim;
  if (text == "None") return ArgLabel::kNone;
  Unknown("argumentation label", text);
}

RhetLabel ParseRhetLabel(std::string_view text) {
  if (text == "Elaboration") return RhetLabel::kElaboration;
  if (text == "None") return RhetLabel::kNone;
  Unknown("rhetorical label", text);
}

DomainLabel ParseDomainLabel(std::string_view text) {
  for (DomainLabel label : kAllDomainLabels) {
    if (Render(label) == text) return label;
  }
  Unknown("domain label", text);
}

RelationKind ParseRelationKind(std::string_view text) {
  if (text == "Support") return RelationKind::kSupport;
  if (text == "Attack") return RelationKind::kAttack;
  Unknown("relation kind", text);
}

AnyLabel ParseLabel(Level level, std::string_view text) {
  switch (level) {
    case Level::kArgumentation: return ParseArgLabel(text);
    case Level::kRhetorical: return ParseRhetLabel(text);
    case Level::kDomain: return ParseDomainLabel(text);
    case Level::kRelation: return ParseRelationKind(text);
  }
  Unknown("label", text);
}

AnyLabel ParseLabel(std::string_view text) {
  if (text == "None") {
    throw Error(ErrorCode::kUnknownLabel,
                "'None' is ambiguous without an annotation level");
  }
  if (text == "Claim") return ArgLabel::kClaim;
  if (text == "Elaboration") return RhetLabel::kElaboration;
  if (text == "Support" || text == "Attack") return ParseRelationKind(text);
  return ParseDomainLabel(text);
}

const std::vector<CatalogEntry> &Catalog() {
  static const std::vector<CatalogEntry> *catalog = [] {
    auto *entries = new std::vector<CatalogEntry>;
    auto add = [&](Level level, std::string path, std::string main,
                   std::string definition) {
      entries->push_back({level, std::move(path), std::move(main),
                          std::move(definition)});
    };
    add(Level::kArgumentation, "Claim", "",
        "An assertion the author wants the reader to accept; the unit that "
        "arguments are built from.");
    add(Level::kArgumentation, "None", "",
        "No argumentative function (reviewed, not a Claim).");
    add(Level::kRhetorical, "Elaboration", "",
        "Adds detail to, restates, or changes the level of abstraction of an "
        "earlier segment in the same paragraph.");
    add(Level::kRhetorical, "None", "",
        "Does not elaborate an earlier segment.");
    add(Level::kDomain, "IR.Theory.Definition", "Theory",
        "Theoretical content that fixes what a term of the field means.");
    add(Level::kDomain, "IR.Theory.Statement", "Theory",
        "Theoretical content about concepts of the field that is not a "
        "definition; generalizes beyond concrete cases.");
    add(Level::kDomain, "IR.Data.Speculative", "Data",
        "Empirical reference to a scenario that has not happened: a possible "
        "present or future, or a counterfactual past.");
    add(Level::kDomain, "IR.Data.Evaluative", "Data",
        "Empirical reference to actual events, data or social facts as "
        "interpreted or judged by the author.");
    add(Level::kDomain, "IR.Data.Other", "Data",
        "Empirical reference to the real world that is neither speculative "
        "nor evaluative.");
    add(Level::kDomain, "IR.Other", "Other",
        "Relevant to international politics but neither Theory nor Data.");
    add(Level::kDomain, "OtherDomain", "OtherDomain",
        "Content that belongs to a field other than political science or "
        "international politics.");
    add(Level::kDomain, "None", "None",
        "No domain category assigned.");
    add(Level::kRelation, "Support", "",
        "The source Claim gives evidence that raises the credibility of the "
        "target Claim.");
    add(Level::kRelation, "Attack", "",
        "The source Claim is a counter-argument that lowers the credibility "
        "of the target Claim.");
    return entries;
  }();
  return *catalog;
}

std::string RenderCatalogJson() {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CatalogEntry &entry : Catalog()) {
    nlohmann::ordered_json row;
    row["level"] = Render(entry.level);
    row["path"] = entry.path;
    if (entry.level == Level::kDomain) row["main"] = entry.main_category;
    row["definition"] = entry.definition;
    entries.push_back(std::move(row));
  }
  nlohmann::ordered_json root;
  root["scheme_version"] = kSchemeVersion;
  root["labels"] = std::move(entries);
  return root.dump(2) + "\n";
}

}  // namespace argannot

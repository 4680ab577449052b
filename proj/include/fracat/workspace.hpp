#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fracat/burnside.hpp"
#include "fracat/category.hpp"

namespace fracat {

struct WorkspaceConfig {
  int max_order = kDefaultMaxOrder;
  long long modulus = 0;  // 0 = integer coefficients
  uint64_t seed = 1;
  int budget = 200;
};

// Named entities built from definition documents, plus the built-in small
// group catalog. All stored values pass their invariants at insertion.
class Workspace {
 public:
  explicit Workspace(WorkspaceConfig cfg = {});

  const WorkspaceConfig& config() const { return cfg_; }

  // Definition documents; text and JSON forms. Throws ParseError,
  // InvariantViolation or CapExceeded with line/field context.
  void define_text(const std::string& text);
  void define_json(const std::string& text);
  void define_file(const std::string& path);

  bool has_group(const std::string& name) const { return groups_.count(name) != 0; }
  GroupPtr group(const std::string& name) const;
  const GSet& gset(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;

  // Object lookup; "pt:GROUP" resolves to the one-point object over GROUP.
  CatObject object(const std::string& name) const;

  // One line per entity defined so far, in definition order.
  std::string summary() const;

 private:
  void add_group(const std::string& name, GroupPtr g,
                 std::vector<std::vector<int>> perms = {});
  void add_gset(const std::string& name, GSet x);
  void add_object(const std::string& name, CatObject obj);
  void add_morphism(const std::string& name, Morphism m);
  void check_fresh(const std::string& kind, const std::string& name) const;

  WorkspaceConfig cfg_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::vector<std::vector<int>>> perms_;  // permutation realizations
  std::map<std::string, GSet> gsets_;
  std::map<std::string, CatObject> objects_;
  std::map<std::string, Morphism> morphisms_;
  std::vector<std::string> log_;
};

enum class Format { text, json };

// Command implementations behind the CLI verbs; every number printed comes
// from a library call.
std::string cmd_compose(const Workspace& ws, const std::string& f, const std::string& g,
                        Format fmt);
std::string cmd_table(const Workspace& ws, const std::string& group_name, Format fmt);
std::string cmd_decompose(const Workspace& ws, const std::string& object_name, Format fmt);
std::string cmd_iso(const Workspace& ws, const std::string& a, const std::string& b, Format fmt);
std::string cmd_hom_rank(const Workspace& ws, const std::string& a, const std::string& b,
                         Format fmt);
std::string cmd_export(const Workspace& ws, const std::string& kind, const std::string& name);

struct CheckOutcome {
  std::string report;
  bool passed = false;
};
CheckOutcome cmd_check(const std::string& suite, uint64_t seed, int budget);

}  // namespace fracat

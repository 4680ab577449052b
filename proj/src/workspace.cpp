#include "fracat/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fracat/errors.hpp"
#include "fracat/fuzz.hpp"

namespace fracat {

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text, int degree_hint,
                                           const std::string& where) {
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles
  std::vector<std::vector<int>> cur;
  size_t i = 0;
  int maxpt = -1;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == ',') {
      if (cur.empty()) throw ParseError(where + ": empty generator");
      gens.push_back(cur);
      cur.clear();
      ++i;
    } else if (ch == '(') {
      ++i;
      std::vector<int> cycle;
      while (i < text.size() && text[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError(where + ": expected a point number in a cycle");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        cycle.push_back(v);
        maxpt = std::max(maxpt, v);
      }
      if (i == text.size()) throw ParseError(where + ": unterminated cycle");
      ++i;  // ')'
      cur.push_back(std::move(cycle));
    } else {
      throw ParseError(where + ": unexpected character '" + std::string(1, ch) + "'");
    }
  }
  if (!cur.empty()) gens.push_back(cur);

  int degree = degree_hint > 0 ? degree_hint : maxpt + 1;
  if (degree < 1) degree = 1;
  if (maxpt >= degree) throw ParseError(where + ": cycle point exceeds the degree");

  std::vector<std::vector<int>> perms;
  for (const auto& cycles : gens) {
    std::vector<int> perm(degree);
    for (int p = 0; p < degree; ++p) perm[p] = p;
    for (const auto& cycle : cycles) {
      std::vector<int> cp(degree);
      for (int p = 0; p < degree; ++p) cp[p] = p;
      for (size_t k = 0; k < cycle.size(); ++k) cp[cycle[k]] = cycle[(k + 1) % cycle.size()];
      for (int p = 0; p < degree; ++p) perm[p] = cp[perm[p]];
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

// Replays the deterministic closure of group_from_generators and returns the
// permutation realizing each element id.
std::vector<std::vector<int>> element_permutations(int degree,
                                                   const std::vector<std::vector<int>>& gens) {
  std::vector<int> idp(degree);
  for (int i = 0; i < degree; ++i) idp[i] = i;
  std::vector<std::vector<int>> elems{idp};
  std::map<std::vector<int>, int> index{{idp, 0}};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::set<std::vector<int>> batch;
    for (int u : frontier)
      for (const auto& p : gens) {
        std::vector<int> q(degree);
        for (int i = 0; i < degree; ++i) q[i] = elems[u][p[i]];
        if (!index.count(q)) batch.insert(q);
      }
    frontier.clear();
    for (const auto& q : batch) {
      index.emplace(q, static_cast<int>(elems.size()));
      frontier.push_back(static_cast<int>(elems.size()));
      elems.push_back(q);
    }
  }
  return elems;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& where) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(where + ": expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

struct Stanza {
  std::string kind, name;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> fields;  // key -> value

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }
};

std::vector<Stanza> split_stanzas(const std::string& text) {
  std::vector<Stanza> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Stanza cur;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back(std::move(cur));
    cur = Stanza{};
    open = false;
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (!open) {
      std::istringstream head(body);
      std::string kind, name, extra;
      head >> kind >> name;
      if (name.empty() || (head >> extra))
        throw ParseError("line " + std::to_string(lineno) + ": expected 'kind name'");
      cur.kind = kind;
      cur.name = name;
      cur.line = lineno;
      open = true;
    } else {
      auto colon = body.find(':');
      if (colon == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
      std::string key = body.substr(0, colon);
      std::string value = body.substr(colon + 1);
      auto kl = key.find_last_not_of(" \t");
      key.erase(kl + 1);
      auto vf = value.find_first_not_of(" \t");
      value = vf == std::string::npos ? "" : value.substr(vf);
      cur.fields.emplace_back(key, value);
    }
  }
  flush();
  return out;
}

}  // namespace

Workspace::Workspace(WorkspaceConfig cfg) : cfg_(cfg) {
  // Built-in groups; cyclic groups carry their rotation realization so the
  // natural G-set is available.
  for (int n = 1; n <= 8; ++n) {
    GroupPtr c = cyclic_group(n);
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    groups_[c->label] = c;
    if (n > 1) perms_[c->label] = {rot};
  }
  // built-ins are a fixed catalog; the configured cap applies to definitions
  auto s3 = group_from_generators(3, {{1, 2, 0}, {1, 0, 2}}, 0, "S3");
  groups_["S3"] = s3;
  perms_["S3"] = {{1, 2, 0}, {1, 0, 2}};
  auto d4 = group_from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, 0, "D4");
  groups_["D4"] = d4;
  perms_["D4"] = {{1, 2, 3, 0}, {0, 3, 2, 1}};
  groups_["C2xC2"] = direct_product(groups_["C2"], groups_["C2"]);
  groups_["C4xC2"] = direct_product(groups_["C4"], groups_["C2"]);
  groups_["C2xC2xC2"] = direct_product(groups_["C2xC2"], groups_["C2"]);
}

void Workspace::check_fresh(const std::string& kind, const std::string& name) const {
  bool taken = (kind == "group" && groups_.count(name)) ||
               (kind == "gset" && gsets_.count(name)) ||
               (kind == "object" && objects_.count(name)) ||
               (kind == "morphism" && morphisms_.count(name));
  if (taken) throw ParseError("duplicate name: " + kind + " '" + name + "'");
}

void Workspace::add_group(const std::string& name, GroupPtr g,
                          std::vector<std::vector<int>> perms) {
  check_fresh("group", name);
  validate_group(*g);
  log_.push_back("group " + name + " order " + std::to_string(g->order));
  if (!perms.empty()) perms_[name] = std::move(perms);
  groups_[name] = std::move(g);
}

void Workspace::add_gset(const std::string& name, GSet x) {
  check_fresh("gset", name);
  validate_gset(x);
  log_.push_back("gset " + name + " size " + std::to_string(x.size) + " over order-" +
                 std::to_string(x.group->order) + " group");
  gsets_.emplace(name, std::move(x));
}

void Workspace::add_object(const std::string& name, CatObject obj) {
  check_fresh("object", name);
  validate_gset(obj.xset);
  log_.push_back("object " + name + " = " + object_to_string(obj));
  objects_.emplace(name, std::move(obj));
}

void Workspace::add_morphism(const std::string& name, Morphism m) {
  check_fresh("morphism", name);
  log_.push_back("morphism " + name + " : " + object_to_string(m.source) + " -> " +
                 object_to_string(m.target) + " (" + std::to_string(m.terms.size()) +
                 " classes)");
  morphisms_.emplace(name, std::move(m));
}

GroupPtr Workspace::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw ParseError("unknown group: " + name);
  return it->second;
}

const GSet& Workspace::gset(const std::string& name) const {
  auto it = gsets_.find(name);
  if (it == gsets_.end()) throw ParseError("unknown gset: " + name);
  return it->second;
}

const Morphism& Workspace::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw ParseError("unknown morphism: " + name);
  return it->second;
}

CatObject Workspace::object(const std::string& name) const {
  if (name.rfind("pt:", 0) == 0) return one_point_object(group(name.substr(3)));
  auto it = objects_.find(name);
  if (it == objects_.end()) throw ParseError("unknown object: " + name);
  return it->second;
}

std::string Workspace::summary() const {
  std::string out;
  for (const auto& l : log_) out += l + "\n";
  return out;
}

void Workspace::define_text(const std::string& text) {
  for (const auto& st : split_stanzas(text)) {
    const std::string where = "line " + std::to_string(st.line) + " (" + st.kind + " " +
                              st.name + ")";
    if (st.kind == "group") {
      if (const std::string* cyc = st.find("cycles")) {
        int degree = 0;
        if (const std::string* d = st.find("degree")) {
          auto v = parse_int_list(*d, where);
          if (v.size() != 1) throw ParseError(where + ": degree wants a single integer");
          degree = v[0];
        }
        auto perms = parse_cycles(*cyc, degree, where);
        int deg = perms.empty() ? std::max(degree, 1) : static_cast<int>(perms[0].size());
        add_group(st.name, group_from_generators(deg, perms, cfg_.max_order, st.name), perms);
      } else if (const std::string* prod = st.find("product")) {
        std::istringstream is(*prod);
        std::string a, b, extra;
        if (!(is >> a >> b) || (is >> extra))
          throw ParseError(where + ": product wants exactly two group names");
        add_group(st.name, direct_product(group(a), group(b), cfg_.max_order));
      } else {
        throw ParseError(where + ": group wants 'cycles' or 'product'");
      }
    } else if (st.kind == "gset") {
      const std::string* gname = st.find("group");
      if (!gname) throw ParseError(where + ": gset wants 'group'");
      GroupPtr g = group(*gname);
      if (const std::string* cosets = st.find("cosets")) {
        // the listed elements generate the subgroup
        for (int e : parse_int_list(*cosets, where))
          if (e < 0 || e >= g->order) throw ParseError(where + ": element id out of range");
        Subgroup h = subgroup_closure(g, parse_int_list(*cosets, where));
        add_gset(st.name, coset_gset(g, h));
      } else if (const std::string* triv = st.find("trivial")) {
        auto v = parse_int_list(*triv, where);
        if (v.size() != 1 || v[0] < 0)
          throw ParseError(where + ": trivial wants a point count");
        add_gset(st.name, trivial_gset(g, v[0]));
      } else if (st.find("regular")) {
        add_gset(st.name, regular_gset(g));
      } else if (st.find("natural")) {
        auto it = perms_.find(*gname);
        if (it == perms_.end())
          throw ParseError(where + ": group has no permutation realization");
        const auto& gens = it->second;
        const int deg = static_cast<int>(gens[0].size());
        GroupPtr rebuilt = group_from_generators(deg, gens, 0);
        if (!same_group(*rebuilt, *g))
          throw ParseError(where + ": permutation realization does not match the group");
        auto byid = element_permutations(deg, gens);
        std::vector<int> act(static_cast<size_t>(g->order) * deg);
        for (int e = 0; e < g->order; ++e)
          for (int pt = 0; pt < deg; ++pt) act[static_cast<size_t>(e) * deg + pt] = byid[e][pt];
        add_gset(st.name, GSet{g, deg, std::move(act)});
      } else if (const std::string* size = st.find("size")) {
        auto v = parse_int_list(*size, where);
        if (v.size() != 1 || v[0] < 0) throw ParseError(where + ": size wants a point count");
        const int npts = v[0];
        std::vector<int> act(static_cast<size_t>(g->order) * npts, -1);
        for (const auto& [k, val] : st.fields) {
          if (k.rfind("row ", 0) != 0) continue;
          auto ridv = parse_int_list(k.substr(4), where);
          if (ridv.size() != 1 || ridv[0] < 0 || ridv[0] >= g->order)
            throw ParseError(where + ": bad row element id");
          auto images = parse_int_list(val, where);
          if (images.size() != static_cast<size_t>(npts))
            throw ParseError(where + ": row has wrong length");
          for (int p = 0; p < npts; ++p) act[static_cast<size_t>(ridv[0]) * npts + p] = images[p];
        }
        for (int v2 : act)
          if (v2 < 0) throw ParseError(where + ": missing row for some element");
        add_gset(st.name, make_gset(g, npts, std::move(act)));
      } else {
        throw ParseError(where + ": gset wants one of cosets/trivial/regular/natural/size");
      }
    } else if (st.kind == "object") {
      const std::string* gs = st.find("gset");
      if (!gs) throw ParseError(where + ": object wants 'gset'");
      add_object(st.name, make_object(gset(*gs)));
    } else if (st.kind == "morphism") {
      if (const std::string* idof = st.find("identity")) {
        add_morphism(st.name, identity_morphism(object(*idof), cfg_.modulus));
      } else {
        const std::string* src = st.find("source");
        const std::string* tgt = st.find("target");
        const std::string* span = st.find("span");
        const std::string* beta = st.find("beta");
        const std::string* alpha = st.find("alpha");
        if (!src || !tgt || !span || !beta || !alpha)
          throw ParseError(where + ": morphism wants source/target/span/beta/alpha");
        Span s{object(*src), object(*tgt), gset(*span), parse_int_list(*beta, where),
               parse_int_list(*alpha, where)};
        try {
          add_morphism(st.name, canonicalize(s, cfg_.modulus));
        } catch (const InvariantViolation& e) {
          throw InvariantViolation(where + ": " + e.what());
        }
      }
    } else {
      throw ParseError(where + ": unknown kind '" + st.kind + "'");
    }
  }
}

void Workspace::define_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("json: expected an array of entities");
  // Reuse the text path by rendering each entity as a stanza.
  std::string rendered;
  for (const auto& ent : doc) {
    if (!ent.contains("kind") || !ent.contains("name"))
      throw ParseError("json: entity without kind/name");
    rendered += ent["kind"].get<std::string>() + " " + ent["name"].get<std::string>() + "\n";
    for (auto it = ent.begin(); it != ent.end(); ++it) {
      if (it.key() == "kind" || it.key() == "name") continue;
      const auto& v = it.value();
      std::string val;
      if (v.is_string()) {
        val = v.get<std::string>();
      } else if (v.is_boolean()) {
        val = v.get<bool>() ? "true" : "false";
      } else if (v.is_number_integer()) {
        val = std::to_string(v.get<long long>());
      } else if (v.is_array() && it.key() == "table") {
        // rows become "row i" fields
        int rid = 0;
        for (const auto& row : v) {
          rendered += "  row " + std::to_string(rid++) + ":";
          for (const auto& x : row) rendered += " " + std::to_string(x.get<int>());
          rendered += "\n";
        }
        rendered += "  size: " + std::to_string(v.empty() ? 0 : v[0].size()) + "\n";
        continue;
      } else if (v.is_array() && it.key() == "product") {
        val = v[0].get<std::string>() + " " + v[1].get<std::string>();
      } else if (v.is_array()) {
        for (const auto& x : v) val += std::to_string(x.get<long long>()) + " ";
      } else {
        throw ParseError("json: unsupported value for key '" + it.key() + "'");
      }
      rendered += "  " + it.key() + ": " + val + "\n";
    }
    rendered += "\n";
  }
  define_text(rendered);
}

void Workspace::define_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open definition file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{'))
    define_json(text);
  else
    define_text(text);
}

namespace {

nlohmann::ordered_json key_json(const SpanClassKey& k) {
  nlohmann::ordered_json j;
  j["stab"] = k.stab;
  j["mark"] = {k.mark_y, k.mark_x};
  return j;
}

nlohmann::ordered_json morphism_json(const Morphism& m) {
  nlohmann::ordered_json j;
  j["source"] = object_to_string(m.source);
  j["target"] = object_to_string(m.target);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : m.terms) {
    auto t = key_json(key);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

std::string cmd_compose(const Workspace& ws, const std::string& f, const std::string& g,
                        Format fmt) {
  Morphism m = compose(ws.morphism(f), ws.morphism(g), ws.config().modulus);
  if (fmt == Format::json) return morphism_json(m).dump(2) + "\n";
  return object_to_string(m.source) + " -> " + object_to_string(m.target) + "\n" +
         morphism_to_string(m) + "\n";
}

std::string cmd_table(const Workspace& ws, const std::string& group_name, Format fmt) {
  StructureTable t = double_burnside_table(ws.group(group_name));
  const int n = t.rank();
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["group"] = group_name;
    j["rank"] = n;
    j["identity"] = t.identity_index;
    auto basis = nlohmann::ordered_json::array();
    for (const auto& k : t.basis.classes) basis.push_back(key_json(k));
    j["basis"] = std::move(basis);
    auto coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int jj = 0; jj < n; ++jj) {
        auto cell = nlohmann::ordered_json::array();
        for (int k = 0; k < n; ++k) cell.push_back(t.at(i, jj, k));
        row.push_back(std::move(cell));
      }
      coeffs.push_back(std::move(row));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "table " << group_name << "\n";
  os << "rank " << n << "\n";
  os << "identity " << t.identity_index << "\n";
  os << "basis\n";
  for (int i = 0; i < n; ++i) os << i << " " << key_to_string(t.basis.classes[i]) << "\n";
  os << "products\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      os << i << "*" << j << " =";
      bool any = false;
      for (int k = 0; k < n; ++k) {
        long long c = t.at(i, j, k);
        if (c == 0) continue;
        os << " " << (any ? "+ " : "") << c << "*" << k;
        any = true;
      }
      if (!any) os << " 0";
      os << "\n";
    }
  return os.str();
}

std::string cmd_decompose(const Workspace& ws, const std::string& object_name, Format fmt) {
  Decomposition d = decompose(ws.object(object_name));
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : d) {
      nlohmann::ordered_json f;
      f["order"] = g->order;
      f["name"] = identify_small_group(*g);
      arr.push_back(std::move(f));
    }
    j["factors"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (d.empty()) os << "zero object (empty set)\n";
  for (size_t i = 0; i < d.size(); ++i)
    os << i << ": pt/" << identify_small_group(*d[i]) << " (order " << d[i]->order << ")\n";
  return os.str();
}

std::string cmd_iso(const Workspace& ws, const std::string& a, const std::string& b, Format fmt) {
  bool iso = objects_isomorphic(ws.object(a), ws.object(b));
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["isomorphic"] = iso;
    return j.dump(2) + "\n";
  }
  return iso ? "true\n" : "false\n";
}

std::string cmd_hom_rank(const Workspace& ws, const std::string& a, const std::string& b,
                         Format fmt) {
  HomBasis basis = hom_basis(ws.object(a), ws.object(b));
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["rank"] = basis.rank();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& k : basis.classes) arr.push_back(key_json(k));
    j["classes"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << basis.rank() << "\n";
  return os.str();
}

std::string cmd_export(const Workspace& ws, const std::string& kind, const std::string& name) {
  if (kind == "group") {
    GroupPtr g = ws.group(name);
    nlohmann::ordered_json j;
    j["order"] = g->order;
    j["mul"] = g->mul;
    return j.dump(2) + "\n";
  }
  if (kind == "table") {
    return cmd_table(ws, name, Format::json);
  }
  throw PreconditionError("export kind must be 'group' or 'table'");
}

CheckOutcome cmd_check(const std::string& suite, uint64_t seed, int budget) {
  CheckReport r = run_suite(suite, seed, budget);
  std::ostringstream os;
  os << "suite " << suite << " seed " << seed << " budget " << budget << "\n";
  os << "checked " << r.checked << "\n";
  for (const auto& c : r.counterexamples) os << "counterexample: " << c << "\n";
  os << (r.ok() ? "PASS" : "FAIL") << "\n";
  return {os.str(), r.ok()};
}

}  // namespace fracat

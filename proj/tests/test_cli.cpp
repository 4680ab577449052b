#include <doctest.h>

#include "fracat/errors.hpp"
#include "fracat/workspace.hpp"

using namespace fracat;

namespace {

const char* kSample = R"(
# tiny workspace
gset nat3
  group: S3
  natural: true

object X3
  gset: nat3

gset cos31
  group: S3
  cosets: 1

object A
  gset: cos31

gset one_point_C2
  group: C2
  trivial: 1

object pt2
  gset: one_point_C2

morphism idX
  identity: X3

group P22
  product: C2 C2

gset U2
  group: P22
  size: 2
  row 0: 0 1
  row 1: 1 0
  row 2: 1 0
  row 3: 0 1

morphism reg2
  source: pt2
  target: pt2
  span: U2
  beta: 0 0
  alpha: 0 0
)";

}  // namespace

TEST_CASE("definition documents") {
  Workspace ws;
  ws.define_text(kSample);

  SUBCASE("groups from cycles and products") {
    Workspace w2;
    w2.define_text("group G\n  cycles: (0 1 2), (0 1)\n");
    CHECK(w2.group("G")->order == 6);
    w2.define_text("group H\n  product: G C2\n");
    CHECK(w2.group("H")->order == 12);
  }
  SUBCASE("stored entities pass their invariants") {
    CHECK(ws.gset("nat3").size == 3);
    CHECK(ws.object("X3").xset.size == 3);
    CHECK(ws.object("pt:C2").xset.size == 1);
    CHECK(ws.morphism("idX").terms.size() == 1);
    // the explicit span canonicalizes to the identity of pt/C2
    CHECK(ws.morphism("reg2") == identity_morphism(ws.object("pt2")));
  }
  SUBCASE("duplicate names are rejected") {
    CHECK_THROWS_AS(ws.define_text("gset nat3\n  group: S3\n  trivial: 1\n"), ParseError);
    CHECK_THROWS_AS(ws.define_text("group S3\n  cycles: (0 1)\n"), ParseError);
  }
  SUBCASE("parse errors carry line context") {
    try {
      Workspace w2;
      w2.define_text("gset bad\n  group: S3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
  }
  SUBCASE("invalid action tables are rejected") {
    Workspace w2;
    CHECK_THROWS_AS(
        w2.define_text("gset bad\n  group: C2\n  size: 2\n  row 0: 0 1\n  row 1: 0 0\n"),
        InvariantViolation);
  }
  SUBCASE("order cap") {
    WorkspaceConfig cfg;
    cfg.max_order = 4;
    Workspace w2(cfg);
    CHECK_THROWS_AS(w2.define_text("group G\n  cycles: (0 1 2 3 4)\n"), CapExceeded);
    CHECK_THROWS_AS(w2.define_text("group H\n  product: C4 C4\n"), CapExceeded);
  }
  SUBCASE("unknown names") {
    CHECK_THROWS_AS(ws.object("nosuch"), ParseError);
    CHECK_THROWS_AS(ws.morphism("nosuch"), ParseError);
    CHECK_THROWS_AS(ws.group("nosuch"), ParseError);
  }
  SUBCASE("coefficient modulus applies at insertion") {
    WorkspaceConfig cfg;
    cfg.modulus = 2;
    Workspace w2(cfg);
    // two disjoint copies of the regular (C2,C2)-biset: coefficient 2 = 0 mod 2
    w2.define_text(
        "group P22\n  product: C2 C2\n\n"
        "gset pt1\n  group: C2\n  trivial: 1\n\n"
        "object pt2\n  gset: pt1\n\n"
        "gset U4\n  group: P22\n  size: 4\n"
        "  row 0: 0 1 2 3\n  row 1: 1 0 3 2\n  row 2: 1 0 3 2\n  row 3: 0 1 2 3\n\n"
        "morphism dbl\n  source: pt2\n  target: pt2\n  span: U4\n"
        "  beta: 0 0 0 0\n  alpha: 0 0 0 0\n");
    CHECK(w2.morphism("dbl").is_zero());
  }
}

TEST_CASE("json definitions match the text form") {
  const char* json = R"json([
    {"kind": "group", "name": "G", "cycles": "(0 1 2), (0 1)"},
    {"kind": "gset", "name": "X", "group": "G", "cosets": [1]},
    {"kind": "object", "name": "A", "gset": "X"},
    {"kind": "gset", "name": "T", "group": "C2", "table": [[0, 1], [1, 0]]},
    {"kind": "morphism", "name": "i", "identity": "A"}
  ])json";
  Workspace ws;
  ws.define_json(json);
  CHECK(ws.group("G")->order == 6);
  CHECK(ws.object("A").xset.size == 3);
  CHECK(ws.gset("T").size == 2);
  CHECK(ws.morphism("i") == identity_morphism(ws.object("A")));
}

TEST_CASE("command output") {
  Workspace ws;
  ws.define_text(kSample);

  SUBCASE("compose") {
    std::string out = cmd_compose(ws, "reg2", "reg2", Format::text);
    CHECK(out.find("[{0,3};(0,0)]") != std::string::npos);
  }
  SUBCASE("table") {
    std::string out = cmd_table(ws, "C2", Format::text);
    CHECK(out.find("rank 5") != std::string::npos);
    std::string json = cmd_table(ws, "C2", Format::json);
    CHECK(json.find("\"rank\": 5") != std::string::npos);
  }
  SUBCASE("decompose and iso") {
    CHECK(cmd_decompose(ws, "A", Format::text).find("C2") != std::string::npos);
    CHECK(cmd_iso(ws, "A", "pt:C2", Format::text) == "true\n");
    CHECK(cmd_iso(ws, "X3", "pt:C3", Format::text) == "false\n");
  }
  SUBCASE("hom-rank") {
    CHECK(cmd_hom_rank(ws, "pt:C1", "A", Format::text) == "2\n");
  }
  SUBCASE("export field order is stable") {
    std::string out = cmd_export(ws, "group", "C2");
    CHECK(out.find("\"order\"") < out.find("\"mul\""));
    CHECK_THROWS_AS(cmd_export(ws, "gset", "nat3"), PreconditionError);
  }
  SUBCASE("check reports are deterministic") {
    CheckOutcome a = cmd_check("laws", 5, 10);
    CheckOutcome b = cmd_check("laws", 5, 10);
    CHECK(a.report == b.report);
    CHECK(a.passed);
    CHECK(a.report.find("PASS") != std::string::npos);
  }
}

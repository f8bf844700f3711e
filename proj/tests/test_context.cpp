#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "qfca/context.hpp"
#include "qfca/render.hpp"

using namespace qfca;
using fixtures::error_of;

namespace {

std::vector<std::string> context_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(QFCA_CONTEXT_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("every example context round-trips") {
  std::size_t parsed = 0;
  for (const auto& path : context_files()) {
    CAPTURE(path);
    std::optional<ContextDocument> doc;
    try {
      doc = load_context(path);
    } catch (const Error&) {
      continue;  // bad-preset is meant to be rejected
    }
    ++parsed;
    auto text = serialize_context(*doc);
    auto again = parse_context(text);
    CHECK(again == *doc);
    CHECK(serialize_context(again) == text);
  }
  CHECK(parsed >= 7);
}

TEST_CASE("parsed contexts match the fixtures") {
  auto doc = load_context(std::string(QFCA_CONTEXT_DIR) + "/fix-dl3.json");
  auto ctx = fixtures::fix_dl3();
  CHECK(*doc.Q == *ctx.Q);
  CHECK(doc.distributor("phi") == ctx.phi);
  CHECK(same_category(doc.categories.at("A"), ctx.A));

  auto l3 = load_context(std::string(QFCA_CONTEXT_DIR) + "/fix-l3.json");
  CHECK(l3.distributor("phi") == fixtures::fix_l3().phi);
}

TEST_CASE("inline quantaloid matches the preset") {
  const char* text = R"({
    "quantaloid": {
      "objects": ["*"],
      "homs": {"*->*": {"elements": ["0", "1"], "leq": [["0", "1"]]}},
      "compose": [["1", "1", "1"]],
      "units": {"*": "1"}
    }
  })";
  auto doc = parse_context(text);
  CHECK(*doc.Q == *fixtures::two());
  CHECK(validate_document(doc).ok());
}

TEST_CASE("two-object inline quantaloid uses qualified arrows") {
  // The suspension-like quantaloid with objects p, q over 2.
  const char* text = R"({
    "quantaloid": {
      "objects": ["p", "q"],
      "homs": {
        "p->p": {"elements": ["0", "1"], "leq": [["0", "1"]]},
        "p->q": {"elements": ["0", "1"], "leq": [["0", "1"]]},
        "q->p": {"elements": ["0"], "leq": []},
        "q->q": {"elements": ["0", "1"], "leq": [["0", "1"]]}
      },
      "compose": [["p->p:1", "p->p:1", "p->p:1"], ["q->q:1", "q->q:1", "q->q:1"],
                  ["p->q:1", "p->p:1", "p->q:1"], ["q->q:1", "p->q:1", "p->q:1"]],
      "units": {"p": "1", "q": "1"}
    },
    "categories": {
      "C": {"objects": [{"label": "x", "type": "p"}, {"label": "y", "type": "q"}],
            "hom": [["x", "x", "1"], ["y", "y", "1"], ["x", "y", "1"]]}
    }
  })";
  auto doc = parse_context(text);
  CHECK(doc.Q->size() == 2);
  CHECK(validate_document(doc).ok());
  CHECK(parse_context(serialize_context(doc)) == doc);
}

TEST_CASE("parse errors") {
  CHECK(error_of([] { parse_context("{"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { parse_context("[]"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { parse_context(R"({"categories": {}})"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { parse_context(R"({"quantaloid": {"preset": "nope"}})"); }) ==
        ErrorKind::InvalidParams);
  const std::string head = R"({"quantaloid": {"preset": "two"}, "categories": {"A": {"objects": [{"label": "a"}], )";
  CHECK(error_of([&] { parse_context(head + R"("hom": [["a", "a", "2"]]}}})"); }) == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_context(head + R"("hom": [["a", "z", "1"]]}}})"); }) == ErrorKind::ParseError);
  CHECK(error_of([&] {
          parse_context(head + R"("hom": []}}, "distributors": {"d": {"from": "A", "to": "Z"}}})");
        }) == ErrorKind::ParseError);
  CHECK(error_of([] {
          parse_context(R"({"quantaloid": {"preset": "two"}, "categories": {"A": {"objects": [{"label": "a"}, {"label": "a"}]}}})");
        }) == ErrorKind::ParseError);
}

TEST_CASE("omitted entries are bottom and then validated") {
  auto doc = parse_context(R"({"quantaloid": {"preset": "two"},
    "categories": {"A": {"objects": [{"label": "a"}]}}})");
  CHECK(doc.Q->label((*doc.categories.at("A"))(0, 0)) == "0");
  auto r = validate_document(doc);
  CHECK(r.has_failure("category A: reflexivity"));
}

TEST_CASE("broken composition is reported with its triple") {
  auto doc = load_context(std::string(QFCA_CONTEXT_DIR) + "/broken-assoc.json");
  auto r = validate_document(doc);
  CHECK(r.has_failure("quantaloid: associativity"));
  bool named = false;
  for (const auto& c : r.checks())
    if (!c.passed && c.detail.find("(b, b, a)") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("distributor selection") {
  auto doc = load_context(std::string(QFCA_CONTEXT_DIR) + "/crisp.json");
  CHECK(doc.pick_distributor("").first == "incidence");
  CHECK(error_of([&] { doc.pick_distributor("nope"); }) == ErrorKind::InvalidParams);
  CHECK(doc.functors.at("swap")(0) == 1);
}

TEST_CASE("renderers") {
  auto ctx = fixtures::fix_2id();
  auto M = compute_M(ctx.phi);
  auto dot = lattice_dot(M, "phi");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("a1:1, a2:0") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t i = dot.find("->"); i != std::string::npos; i = dot.find("->", i + 1)) ++edges;
  CHECK(edges == 4);
  CHECK(lattice_json(M, "phi") == lattice_json(compute_M(ctx.phi), "phi"));

  auto dl3 = fixtures::fix_dl3();
  auto Md = compute_M(dl3.phi);
  std::size_t graphs = 0;
  auto d3 = lattice_dot(Md, "phi");
  for (std::size_t i = d3.find("digraph"); i != std::string::npos; i = d3.find("digraph", i + 1)) ++graphs;
  std::size_t types = 0;
  for (ObjectId q = 0; q < dl3.Q->size(); ++q) types += !Md.of_type(q).empty();
  CHECK(graphs == types);

  auto l3 = fixtures::fix_l3();
  auto abar = build_Abar(l3.A);
  auto tr = abar_json(abar, phi_tr(l3.phi, abar), "phi");
  CHECK(tr.find("\"from\"") != std::string::npos);
  CHECK(tr == abar_json(build_Abar(l3.A), phi_tr(l3.phi), "phi"));

  Report r("x");
  r.fail("a", "b");
  CHECK(report_json(r).find("\"ok\": false") != std::string::npos);
}

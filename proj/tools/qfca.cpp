#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "qfca/context.hpp"
#include "qfca/errors.hpp"
#include "qfca/render.hpp"
#include "qfca/represent.hpp"

using namespace qfca;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kFailed = 3 };

int emit(const Report& r, int failure_code) {
  std::cout << report_json(r);
  return r.ok() ? kOk : failure_code;
}

// Loads and validates; prints the report and returns nullopt when invalid.
std::optional<ContextDocument> load_valid(const std::string& path) {
  auto doc = load_context(path);
  auto r = validate_document(doc);
  if (!r.ok()) {
    std::cout << report_json(r);
    return std::nullopt;
  }
  return doc;
}

std::string family_text(const Quantaloid& Q, const std::vector<Arrow>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + Q.label(d[i]);
  return s + ")";
}

int cmd_validate(const std::string& path) {
  auto doc = load_context(path);
  return emit(validate_document(doc), kInvalid);
}

struct ConceptArgs {
  std::string dist, mode = "fca", type = "all", out = "json";
  bool oracle = false;
};

int cmd_concepts(const std::string& path, const ConceptArgs& a) {
  auto doc = load_valid(path);
  if (!doc) return kInvalid;
  const auto& [name, phi] = doc->pick_distributor(a.dist);
  ConceptOptions opts;
  opts.budget = Budget::from_env();
  if (a.type != "all") {
    auto q = doc->Q->find_object(a.type);
    if (!q) raise(ErrorKind::InvalidParams, "unknown type " + a.type);
    opts.only_type = *q;
  }
  const auto kind = a.mode == "fca" ? ConceptKind::FCA : ConceptKind::RST;
  auto L = kind == ConceptKind::FCA ? compute_M(phi, opts) : compute_K(phi, opts);

  if (a.oracle) {
    bool agree = true;
    for (ObjectId q = 0; q < doc->Q->size(); ++q) {
      if (opts.only_type && *opts.only_type != q) continue;
      std::vector<Presheaf> got;
      for (auto i : L.of_type(q)) got.push_back(L.concepts()[i]);
#ifdef QFCA_INJECT_FAULT
      if (!got.empty()) got.pop_back();
#endif
      auto want = brute_force_fixed(phi, kind, q, opts.budget);
      if (!same_concepts(got, want)) {
        agree = false;
        std::cerr << "type " << doc->Q->object_label(q) << ": computed " << got.size()
                  << " concepts, brute force " << want.size() << "\n";
        for (const auto& w : want)
          if (std::none_of(got.begin(), got.end(), [&](const Presheaf& g) { return g.values == w.values; })) {
            std::cerr << "  missing:";
            for (std::size_t x = 0; x < w.values.size(); ++x)
              std::cerr << " " << w.base->label(x) << ":" << doc->Q->label(w.values[x]);
            std::cerr << "\n";
          }
      }
    }
    if (!agree) return kFailed;
  }
  std::cout << (a.out == "dot" ? lattice_dot(L, name) : lattice_json(L, name));
  return kOk;
}

int cmd_girard(const std::string& path) {
  auto doc = load_context(path);
  auto r = validate_quantaloid(*doc.Q);
  if (!r.ok()) {
    std::cout << report_json(r);
    return kInvalid;
  }
  auto fam = find_cyclic_dualizing_family(*doc.Q, Budget::from_env());
  if (!fam) std::cout << "not Girard; no cyclic family\n";
  else if (fam->girard()) std::cout << "Girard, d=" << family_text(*doc.Q, fam->d) << "\n";
  else std::cout << "not Girard; best cyclic family d=" << family_text(*doc.Q, fam->d) << "\n";
  return kOk;
}

Report yoneda_report(const CategoryPtr& A, const std::string& side, const Budget& budget) {
  Report r("yoneda");
  const auto& Q = A->Q();
  std::size_t n = 0, bad = 0;
  for (ObjectId q = 0; q < Q.size(); ++q) {
    for (const auto& mu : enumerate_presheaves(A, q, budget))
      for (std::size_t a = 0; a < A->size(); ++a, ++n)
        if (presheaf_hom(yoneda(A, a), mu) != mu.values[a]) ++bad;
    for (const auto& lam : enumerate_copresheaves(A, q, budget))
      for (std::size_t a = 0; a < A->size(); ++a, ++n)
        if (copresheaf_hom(lam, coyoneda(A, a)) != lam.values[a]) ++bad;
  }
  r.check(side + ": mu(a) = PA(Ya, mu)", bad == 0, std::to_string(bad) + " of " + std::to_string(n) + " instances fail");
  return r;
}

struct IsbellData {
  PresheafCategory PA;
  CopresheafCategory PdB;
  QFunctor up, down;
};

IsbellData isbell(const QDistributor& phi, const Budget& b) {
  auto PA = materialize_PA(phi.dom_ptr(), b);
  auto PdB = materialize_PdA(phi.cod_ptr(), b);
  auto up = isbell_up_functor(phi, PA, PdB);
  auto down = isbell_down_functor(phi, PdB, PA);
  return {std::move(PA), std::move(PdB), std::move(up), std::move(down)};
}

struct KanData {
  PresheafCategory PB, PA;
  QFunctor star, lower;
};

KanData kan(const QDistributor& phi, const Budget& b) {
  auto PB = materialize_PA(phi.cod_ptr(), b);
  auto PA = materialize_PA(phi.dom_ptr(), b);
  auto star = kan_star_functor(phi, PB, PA);
  auto lower = kan_lower_functor(phi, PA, PB);
  return {std::move(PB), std::move(PA), std::move(star), std::move(lower)};
}

Report adjunction_report(const char* title, const QFunctor& S, const QFunctor& T) {
  Report r(title);
  bool adj = is_adjoint_functor_pair(S, T);
  r.check("S -| T", adj);
  if (adj) r.merge(verify_fix_equivalence(make_adjunction(S, T)), "Fix(TS) ~ Fix(ST)");
  return r;
}

const QFunctor& functor_named(const ContextDocument& doc, const std::string& name) {
  auto it = doc.functors.find(name);
  if (it == doc.functors.end()) raise(ErrorKind::InvalidParams, "no functor " + name);
  return it->second;
}

int cmd_verify(const std::string& path, const std::string& prop, const std::string& dist,
               const std::vector<std::string>& data) {
  auto doc = load_valid(path);
  if (!doc) return kInvalid;
  const auto budget = Budget::from_env();
  const auto& phi = doc->pick_distributor(dist).second;
  Report r(prop);

  if (prop == "k-eq-m-tr") {
    r.merge(verify_K_eq_M_tr(phi, budget));
  } else if (prop == "k-eq-m-neg") {
    auto fam = find_cyclic_dualizing_family(*doc->Q, budget);
    if (!fam || !fam->girard()) raise(ErrorKind::NotGirard, "the quantaloid has no cyclic dualizing family");
    r.merge(verify_K_eq_M_neg(phi, *fam, budget));
  } else if (prop == "isbell-adjunction") {
    auto i = isbell(phi, budget);
    r.merge(adjunction_report("isbell", i.up, i.down), "isbell");
  } else if (prop == "kan-adjunction") {
    auto k = kan(phi, budget);
    r.merge(adjunction_report("kan", k.star, k.lower), "kan");
  } else if (prop == "yoneda") {
    r.merge(yoneda_report(phi.dom_ptr(), "dom", budget));
    r.merge(yoneda_report(phi.cod_ptr(), "cod", budget));
  } else if (prop == "dense-cond") {
    r.merge(build_generator_maps(phi.dom_ptr(), budget).density, "dom");
    r.merge(build_generator_maps(phi.cod_ptr(), budget).density, "cod");
  } else if (prop == "elementary-identities") {
    r.merge(verify_elementary_identities(phi));
  } else if (prop == "thm33") {
    auto i = isbell(phi, budget);
    auto ia = make_adjunction(i.up, i.down);
    auto [L, R] = canonical_general_data(ia);
    r.merge(verify_general_representation(ia, L, R), "isbell");
    auto k = kan(phi, budget);
    auto ka = make_adjunction(k.star, k.lower);
    auto [Lk, Rk] = canonical_general_data(ka);
    r.merge(verify_general_representation(ka, Lk, Rk), "kan");
  } else if (prop == "thm51") {
    DenseOptions o;
    o.budget = budget;
    auto i = isbell(phi, budget);
    auto ia = make_adjunction(i.up, i.down);
    auto [L, R] = canonical_general_data(ia);
    auto YA = yoneda_functor(i.PA);
    auto YdB = coyoneda_functor(i.PdB);
    r.merge(verify_dense_representation(ia, compose_functors(L, YA), YA, compose_functors(R, YdB), YdB, o),
            "isbell");
    auto k = kan(phi, budget);
    auto ka = make_adjunction(k.star, k.lower);
    auto [Lk, Rk] = canonical_general_data(ka);
    r.merge(verify_dense_representation(ka, Lk, identity_functor(k.PB.category), Rk,
                                        identity_functor(k.PA.category), o),
            "kan");
  } else if (prop == "mphi-rep") {
    if (data.empty()) {
      auto M = compute_M(phi, {budget});
      auto [F, G] = canonical_mphi_data(phi, M);
      r.merge(verify_mphi_representation(phi, F, G));
    } else {
      if (data.size() != 2) raise(ErrorKind::InvalidParams, "--data takes two functor names F G");
      r.merge(verify_mphi_representation(phi, functor_named(*doc, data[0]), functor_named(*doc, data[1])));
    }
  } else if (prop == "kphi-rep") {
    auto K = compute_K(phi, {budget});
    auto abar = build_Abar(phi.dom_ptr());
    auto [F, G] = canonical_kphi_data(phi, K, abar);
    r.merge(verify_kphi_representation(phi, F, G));
  } else if (prop == "elementary-rep") {
    auto M = compute_M(phi, {budget});
    auto m = canonical_elementary_data(phi, M);
    r.merge(verify_elementary_representation(phi, M.lattice.category, m.F, m.G, ConceptKind::FCA), "fca");
    auto K = compute_K(phi, {budget});
    auto k = canonical_elementary_data(phi, K);
    r.merge(verify_elementary_representation(phi, K.lattice.category, k.F, k.G, ConceptKind::RST), "rst");
    if (doc->Q->size() == 1) {
      r.merge(quantale_corollary_check(phi, M.lattice.category, m.F, m.G, ConceptKind::FCA), "fca quantale");
      r.merge(quantale_corollary_check(phi, K.lattice.category, k.F, k.G, ConceptKind::RST), "rst quantale");
    }
  }
  if (!data.empty() && prop != "mphi-rep") raise(ErrorKind::InvalidParams, "--data applies to mphi-rep only");
  return emit(r, kFailed);
}

int cmd_tr(const std::string& path, const std::string& dist) {
  auto doc = load_valid(path);
  if (!doc) return kInvalid;
  const auto& [name, phi] = doc->pick_distributor(dist);
  auto abar = build_Abar(phi.dom_ptr());
  std::cout << abar_json(abar, phi_tr(phi, abar), name);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept lattices of distributors over finite quantaloids"};
  app.require_subcommand(1);
  std::string path, dist, prop, out = "json";
  ConceptArgs ca;
  std::vector<std::string> data;

  auto* validate = app.add_subcommand("validate", "Run every validator on a context file");
  validate->add_option("path", path)->required();

  auto* concepts = app.add_subcommand("concepts", "Compute M(phi) or K(phi)");
  concepts->add_option("path", path)->required();
  concepts->add_option("--dist", ca.dist, "Distributor name");
  concepts->add_option("--mode", ca.mode)->check(CLI::IsMember({"fca", "rst"}));
  concepts->add_option("--type", ca.type, "Object of Q, or all");
  concepts->add_option("--out", ca.out)->check(CLI::IsMember({"json", "dot"}));
  concepts->add_flag("--oracle", ca.oracle, "Compare against brute-force enumeration");

  auto* girard = app.add_subcommand("girard", "Search for a cyclic dualizing family");
  girard->add_option("path", path)->required();

  auto* verify = app.add_subcommand("verify", "Check one identity or representation theorem");
  verify->add_option("path", path)->required();
  verify->add_option("--prop", prop)
      ->required()
      ->check(CLI::IsMember({"k-eq-m-tr", "k-eq-m-neg", "isbell-adjunction", "kan-adjunction", "yoneda",
                             "dense-cond", "elementary-identities", "thm33", "thm51", "mphi-rep",
                             "kphi-rep", "elementary-rep"}));
  verify->add_option("--dist", dist);
  verify->add_option("--data", data, "Functor names F G for mphi-rep");

  auto* tr = app.add_subcommand("tr", "Print the transpose category and phi^tr");
  tr->add_option("path", path)->required();
  tr->add_option("--dist", dist);
  tr->add_option("--out", out)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*concepts) return cmd_concepts(path, ca);
    if (*girard) return cmd_girard(path);
    if (*verify) return cmd_verify(path, prop, dist, data);
    if (*tr) return cmd_tr(path, dist);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::ConditionFailed ? kFailed : kUsage;
  }
  return kUsage;
}

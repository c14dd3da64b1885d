#pragma once

#include "glcat/diagram.hpp"
#include "glcat/k0.hpp"
#include "glcat/laurent.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/scalar.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace glcat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kElementSchema = "glcat.element/1";
inline constexpr const char* kHomologySchema = "glcat.homology/1";
inline constexpr const char* kCertificateSchema = "glcat.certificate/1";

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw DomainError("not a rational number: '" + s + "'");
  }
}

template <class S>
Json element_to_json(const Element<S>& e, const std::string& ring, Engine& eng = default_engine()) {
  Json terms = Json::array();
  for (const auto& [t, c] : ordered_terms(e, eng)) {
    Json dots = Json::array();
    for (int d : t.dots) dots.push_back(d);
    terms.push_back({{"source", t.source.str()},
                     {"target", t.target().str()},
                     {"word", eng.canonical_word(t.perm).letters},
                     {"dots", dots},
                     {"coeff", to_string(c)}});
  }
  return {{"schema", kElementSchema}, {"ring", ring}, {"terms", terms}};
}

/// Reads terms written by element_to_json; the word may be any reduced word of the permutation.
inline Element<Rational> element_from_json(const Json& j) {
  if (!j.contains("schema") || j.at("schema") != kElementSchema) throw DomainError("element JSON: missing or wrong schema");
  Element<Rational> e;
  for (const auto& t : j.at("terms")) {
    TypedSequence src(t.at("source").get<std::string>());
    auto letters = t.at("word").get<std::vector<int>>();
    if (!is_reduced(letters, src.size())) throw DomainError("element JSON: word is not reduced");
    auto dots = t.at("dots").get<std::vector<int>>();
    if (static_cast<int>(dots.size()) != src.twos()) throw DomainError("element JSON: dot vector has wrong length");
    for (int d : dots)
      if (d < 0) throw DomainError("element JSON: negative dot exponent");
    e.add(DiagramTerm{src, evaluate_word(letters, src.size()), dots}, parse_rational(t.at("coeff").get<std::string>()));
  }
  return e;
}

struct HomologyRow {
  std::string source, target;
  int qdeg, cohdeg, dim;
};

inline Json homology_to_json(const std::vector<HomologyRow>& rows) {
  Json blocks = Json::array();
  for (const auto& r : rows)
    blocks.push_back({{"source", r.source}, {"target", r.target}, {"qdeg", r.qdeg}, {"cohdeg", r.cohdeg}, {"dim", r.dim}});
  return {{"schema", kHomologySchema}, {"blocks", blocks}};
}

inline Json certificate_to_json(const DecompositionCertificate& c, Engine& eng = default_engine()) {
  Json targets = Json::array();
  for (const auto& t : c.targets)
    targets.push_back({{"seq", t.seq.str()}, {"shift", t.shift}, {"multiplicity", t.multiplicity.str()}});
  Json pairs = Json::array();
  for (std::size_t a = 0; a < c.alphas.size(); ++a)
    pairs.push_back({{"target", c.pair_target[a]},
                     {"degree", c.alpha_degree[a]},
                     {"alpha", element_to_json(c.alphas[a], "qq", eng)},
                     {"beta", element_to_json(c.betas[a], "qq", eng)}});
  return {{"schema", kCertificateSchema},
          {"source", c.source.str()},
          {"source_shift", c.source_shift},
          {"targets", targets},
          {"pairs", pairs}};
}

inline DecompositionCertificate certificate_from_json(const Json& j) {
  if (!j.contains("schema") || j.at("schema") != kCertificateSchema)
    throw DomainError("certificate JSON: missing or wrong schema");
  DecompositionCertificate c;
  c.source = DividedPowerSequence::parse(j.at("source").get<std::string>());
  c.source_shift = j.at("source_shift").get<int>();
  for (const auto& t : j.at("targets"))
    c.targets.push_back({DividedPowerSequence::parse(t.at("seq").get<std::string>()), t.at("shift").get<int>(),
                         LaurentInt::parse(t.at("multiplicity").get<std::string>())});
  for (const auto& p : j.at("pairs")) {
    c.pair_target.push_back(p.at("target").get<int>());
    c.alpha_degree.push_back(p.at("degree").get<int>());
    c.alphas.push_back(element_from_json(p.at("alpha")));
    c.betas.push_back(element_from_json(p.at("beta")));
  }
  return c;
}

}  // namespace glcat

#include "adjrep/json_io.hpp"

#include <stdexcept>

namespace adjrep {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body())
{
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

} // namespace

Json to_json(const Partition& p)
{
  Json j = Json::array();
  for (int part : p.parts())
    j.push_back(part);
  return j;
}

Partition partition_from_json(const Json& j)
{
  return guarded("partition", [&] {
    if (!j.is_array())
      throw std::invalid_argument("partition: expected an array");
    return Partition(j.get<std::vector<int>>());
  });
}

Json to_json(const SymFunc& f)
{
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_fraction_string(c)}});
  return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j)
{
  return guarded("symfunc", [&] {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
      f.add_term(partition_from_json(t.at("partition")),
                 parse_rational(t.at("coeff").get<std::string>()));
    return f;
  });
}

Json to_json(const ClassFunction& chi)
{
  Json values = Json::array();
  for (const auto& [mu, v] : chi.values())
    values.push_back({{"class", to_json(mu)}, {"value", to_fraction_string(v)}});
  return {{"n", chi.degree()}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j)
{
  return guarded("class function", [&] {
    ClassFunction chi(j.at("n").get<int>());
    for (const auto& v : j.at("values"))
      chi.set(partition_from_json(v.at("class")),
              parse_rational(v.at("value").get<std::string>()));
    return chi;
  });
}

Json to_json(const LoopAugmentedForest& forest)
{
  Json parent = Json::array();
  for (int p : forest.parents())
    parent.push_back(p == LoopAugmentedForest::kRoot ? 0 : p + 1);
  Json loops = Json::array();
  for (int r : forest.loops())
    loops.push_back(r + 1);
  return {{"n", forest.size()}, {"parent", parent}, {"loops", loops}};
}

LoopAugmentedForest forest_from_json(const Json& j)
{
  return guarded("forest", [&] {
    const int n = j.at("n").get<int>();
    auto raw = j.at("parent").get<std::vector<int>>();
    if (static_cast<int>(raw.size()) != n)
      throw std::invalid_argument("forest: parent array length differs from n");
    std::vector<int> parent;
    for (int p : raw) {
      if (p < 0 || p > n)
        throw std::invalid_argument("forest: parent " + std::to_string(p) +
                                    " out of range");
      parent.push_back(p == 0 ? LoopAugmentedForest::kRoot : p - 1);
    }
    std::vector<int> loops;
    if (j.contains("loops"))
      for (int r : j.at("loops").get<std::vector<int>>()) {
        if (r < 1 || r > n)
          throw std::invalid_argument("forest: loop vertex out of range");
        loops.push_back(r - 1);
      }
    return LoopAugmentedForest(std::move(parent), std::move(loops));
  });
}

Json to_json(const PartialTransformation& f)
{
  Json image = Json::object();
  for (int i = 0; i < f.degree(); ++i)
    if (f.defined_at(i))
      image[std::to_string(i + 1)] = f(i) + 1;
  return {{"n", f.degree()}, {"image", image}};
}

PartialTransformation partial_transformation_from_json(const Json& j)
{
  return guarded("partial transformation", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0)
      throw std::invalid_argument("partial transformation: negative n");
    std::vector<int> image(static_cast<std::size_t>(n), PartialTransformation::kUndefined);
    for (const auto& [key, value] : j.at("image").items()) {
      int from = 0;
      try {
        std::size_t used = 0;
        from = std::stoi(key, &used);
        if (used != key.size())
          throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("partial transformation: bad key '" + key + "'");
      }
      const int to = value.get<int>();
      if (from < 1 || from > n || to < 1 || to > n)
        throw std::invalid_argument("partial transformation: point out of range");
      image[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    return PartialTransformation(std::move(image));
  });
}

Json to_json(const VerifyRecord& r)
{
  return {{"n", r.n},
          {"kind", space_name(r.kind)},
          {"formula", to_json(r.formula)},
          {"orbit", to_json(r.orbit)},
          {"bruteforce", to_json(r.bruteforce)},
          {"match", r.match},
          {"millis", r.millis}};
}

VerifyRecord verify_record_from_json(const Json& j)
{
  return guarded("verify record", [&] {
    VerifyRecord r;
    r.n = j.at("n").get<int>();
    r.kind = parse_space(j.at("kind").get<std::string>());
    r.formula = symfunc_from_json(j.at("formula"));
    r.orbit = symfunc_from_json(j.at("orbit"));
    r.bruteforce = symfunc_from_json(j.at("bruteforce"));
    r.match = j.at("match").get<bool>();
    r.millis = j.value("millis", 0.0);
    return r;
  });
}

Json to_json(const VerifyReport& report)
{
  Json records = Json::array();
  for (const auto& r : report.records)
    records.push_back(to_json(r));
  Json additivity = Json::array();
  for (const auto& [n, holds] : report.additivity)
    additivity.push_back({{"n", n}, {"holds", holds}});
  return {{"records", records},
          {"additivity", additivity},
          {"all_match", report.all_match()}};
}

} // namespace adjrep

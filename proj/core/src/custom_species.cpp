#include "specoh/custom_species.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "specoh/errors.hpp"

namespace specoh {

using nlohmann::json;

namespace {

std::string path_of(const std::string& field, std::initializer_list<std::size_t> idx) {
  std::string p = field;
  for (auto i : idx) p += "[" + std::to_string(i) + "]";
  return p;
}

const json& require(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw InvalidArgument("custom species: missing field '" + key + "'");
  return doc.at(key);
}

const json& require_array(const json& node, const std::string& path, std::size_t expected_size) {
  if (!node.is_array()) throw InvalidArgument("custom species: " + path + " must be an array");
  if (node.size() != expected_size)
    throw InvalidArgument("custom species: " + path + " has " + std::to_string(node.size()) + " entries, expected " +
                          std::to_string(expected_size));
  return node;
}

int require_index(const json& node, const std::string& path, std::size_t bound) {
  if (!node.is_number_integer()) throw InvalidArgument("custom species: " + path + " must be an integer");
  const auto v = node.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw InvalidArgument("custom species: " + path + " = " + std::to_string(v) + " is out of range [0, " +
                          std::to_string(bound) + ")");
  return static_cast<int>(v);
}

std::vector<std::vector<std::vector<std::optional<int>>>> parse_deletions(
    const json& doc, const std::string& field, const std::vector<std::vector<std::string>>& labels) {
  const auto arities = labels.size();
  const json& top = require_array(require(doc, field), field, arities);
  std::vector<std::vector<std::vector<std::optional<int>>>> out(arities);
  for (std::size_t n = 0; n < arities; ++n) {
    const json& per_element = require_array(top[n], path_of(field, {n}), n);
    out[n].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const json& row = require_array(per_element[k], path_of(field, {n, k}), labels[n].size());
      for (std::size_t s = 0; s < row.size(); ++s) {
        if (row[s].is_null()) {
          out[n][k].push_back(std::nullopt);
        } else {
          out[n][k].push_back(require_index(row[s], path_of(field, {n, k, s}), labels[n - 1].size()));
        }
      }
    }
  }
  return out;
}

}  // namespace

CustomSpecies::CustomSpecies(Tables tables) : tables_(std::move(tables)) { validate(); }

std::shared_ptr<CustomSpecies> CustomSpecies::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("custom species: malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("custom species: document must be an object");
  Tables t;
  const json& name = require(doc, "name");
  if (!name.is_string() || name.get<std::string>().empty())
    throw InvalidArgument("custom species: name must be a nonempty string");
  t.name = name.get<std::string>();
  if (t.name.find_first_of(". ()+,") != std::string::npos)
    throw InvalidArgument("custom species: name must not contain '.', '+', ',', spaces or parentheses");
  const json& max_arity = require(doc, "max_arity");
  if (!max_arity.is_number_integer() || max_arity.get<int>() < 0 || max_arity.get<int>() > 12)
    throw InvalidArgument("custom species: max_arity must be an integer in [0, 12]");
  t.max_arity = max_arity.get<int>();
  const json& cosym = require(doc, "cosymmetric");
  if (!cosym.is_boolean()) throw InvalidArgument("custom species: cosymmetric must be a boolean");
  t.cosymmetric = cosym.get<bool>();

  const auto arities = static_cast<std::size_t>(t.max_arity) + 1;
  const json& structures = require_array(require(doc, "structures"), "structures", arities);
  t.labels.resize(arities);
  for (std::size_t n = 0; n < arities; ++n) {
    if (!structures[n].is_array()) throw InvalidArgument("custom species: " + path_of("structures", {n}) + " must be an array");
    for (std::size_t s = 0; s < structures[n].size(); ++s) {
      const json& label = structures[n][s];
      if (!label.is_string()) throw InvalidArgument("custom species: " + path_of("structures", {n, s}) + " must be a string");
      t.labels[n].push_back(label.get<std::string>());
    }
  }

  const json& action = require_array(require(doc, "transposition_action"), "transposition_action", arities);
  t.transposition.resize(arities);
  for (std::size_t n = 0; n < arities; ++n) {
    const std::size_t gens = n >= 2 ? n - 1 : 0;
    const json& per_k = require_array(action[n], path_of("transposition_action", {n}), gens);
    t.transposition[n].resize(gens);
    for (std::size_t k = 0; k < gens; ++k) {
      const json& row = require_array(per_k[k], path_of("transposition_action", {n, k}), t.labels[n].size());
      for (std::size_t s = 0; s < row.size(); ++s)
        t.transposition[n][k].push_back(
            require_index(row[s], path_of("transposition_action", {n, k, s}), t.labels[n].size()));
    }
  }
  t.delete_left = parse_deletions(doc, "delete_left", t.labels);
  t.delete_right = parse_deletions(doc, "delete_right", t.labels);
  return std::make_shared<CustomSpecies>(std::move(t));
}

std::shared_ptr<CustomSpecies> CustomSpecies::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open custom species file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

int CustomSpecies::apply_transposition(int n, int k, int index) const {
  return tables_.transposition[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)][static_cast<std::size_t>(index)];
}

std::optional<int> CustomSpecies::delete_one(Side side, int n, int element, int index) const {
  const auto& t = side == Side::left ? tables_.delete_left : tables_.delete_right;
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(element - 1)][static_cast<std::size_t>(index)];
}

void CustomSpecies::validate() const {
  const auto& t = tables_;
  auto label = [&](int n, int s) {
    return "'" + t.labels[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] + "' (arity " + std::to_string(n) + ")";
  };
  auto fail = [&](const std::string& path, const std::string& law, const std::string& witness) {
    throw ValidationError("custom species '" + t.name + "': " + path + " violates " + law, witness);
  };
  auto compose = [](std::optional<int> v, auto&& f) -> std::optional<int> {
    if (!v) return std::nullopt;
    return f(*v);
  };

  for (int n = 0; n <= t.max_arity; ++n) {
    const int count = static_cast<int>(t.labels[static_cast<std::size_t>(n)].size());
    // S_n action: Coxeter relations on adjacent transpositions.
    for (int k = 0; k + 1 < n; ++k) {
      for (int s = 0; s < count; ++s) {
        if (apply_transposition(n, k, apply_transposition(n, k, s)) != s)
          fail(path_of("transposition_action", {static_cast<std::size_t>(n), static_cast<std::size_t>(k)}),
               "the involution law s_k s_k = id", "k=" + std::to_string(k + 1) + ", z=" + label(n, s));
        for (int j = k + 1; j + 1 < n; ++j) {
          int lhs = 0;
          int rhs = 0;
          std::string law;
          if (j == k + 1) {
            lhs = apply_transposition(n, k, apply_transposition(n, j, apply_transposition(n, k, s)));
            rhs = apply_transposition(n, j, apply_transposition(n, k, apply_transposition(n, j, s)));
            law = "the braid relation";
          } else {
            lhs = apply_transposition(n, k, apply_transposition(n, j, s));
            rhs = apply_transposition(n, j, apply_transposition(n, k, s));
            law = "commutation of distant transpositions";
          }
          if (lhs != rhs)
            fail(path_of("transposition_action", {static_cast<std::size_t>(n)}), law,
                 "k=" + std::to_string(k + 1) + ", j=" + std::to_string(j + 1) + ", z=" + label(n, s));
        }
      }
    }
    if (n == 0) continue;
    for (Side side : {Side::left, Side::right}) {
      const std::string field = side == Side::left ? "delete_left" : "delete_right";
      // Equivariance: deleting sigma(e) from sigma z equals sigma' applied to z minus e.
      for (int k = 0; k + 1 < n; ++k) {
        const int a = k + 1;
        const int b = k + 2;
        for (int e = 1; e <= n; ++e) {
          for (int s = 0; s < count; ++s) {
            const int moved = apply_transposition(n, k, s);
            const int image_e = e == a ? b : (e == b ? a : e);
            const auto lhs = delete_one(side, n, image_e, moved);
            std::optional<int> rhs = delete_one(side, n, e, s);
            if (e != a && e != b && rhs) {
              const int k_prime = e < a ? k - 1 : k;
              rhs = apply_transposition(n - 1, k_prime, *rhs);
            }
            if (lhs != rhs)
              fail(path_of(field, {static_cast<std::size_t>(n), static_cast<std::size_t>(e - 1)}),
                   "equivariance of restriction",
                   "sigma=(" + std::to_string(a) + " " + std::to_string(b) + "), z=" + label(n, s) +
                       ", S=[" + std::to_string(n) + "]-{" + std::to_string(e) + "}");
          }
        }
      }
      // Coassociativity: deletions commute after index adjustment.
      if (n >= 2) {
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            for (int s = 0; s < count; ++s) {
              const auto lhs = compose(delete_one(side, n, b, s), [&](int v) { return delete_one(side, n - 1, a, v); });
              const auto rhs = compose(delete_one(side, n, a, s), [&](int v) { return delete_one(side, n - 1, b - 1, v); });
              if (lhs != rhs)
                fail(path_of(field, {static_cast<std::size_t>(n)}), "coassociativity of restrictions",
                     "z=" + label(n, s) + ", deleting " + std::to_string(a) + " and " + std::to_string(b));
            }
          }
        }
      }
    }
    // Bicomodule compatibility: a left deletion commutes with a right deletion
    // of a different element.
    if (n >= 2) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          const int b_after = b - (a < b ? 1 : 0);
          const int a_after = a - (b < a ? 1 : 0);
          for (int s = 0; s < count; ++s) {
            const auto lhs = compose(delete_one(Side::left, n, a, s),
                                     [&](int v) { return delete_one(Side::right, n - 1, b_after, v); });
            const auto rhs = compose(delete_one(Side::right, n, b, s),
                                     [&](int v) { return delete_one(Side::left, n - 1, a_after, v); });
            if (lhs != rhs)
              fail("delete_left/delete_right[" + std::to_string(n) + "]", "bicomodule compatibility",
                   "z=" + label(n, s) + ", left-deleting " + std::to_string(a) + ", right-deleting " +
                       std::to_string(b));
          }
        }
      }
    }
    if (t.cosymmetric) {
      for (int e = 1; e <= n; ++e)
        for (int s = 0; s < count; ++s)
          if (delete_one(Side::left, n, e, s) != delete_one(Side::right, n, e, s))
            fail(path_of("delete_left", {static_cast<std::size_t>(n), static_cast<std::size_t>(e - 1)}),
                 "cosymmetry (cosymmetric is true but left and right deletions differ)",
                 "z=" + label(n, s) + ", deleting " + std::to_string(e));
    }
  }
}

std::vector<Structure> CustomSpecies::enumerate(int n) const {
  std::vector<Structure> out;
  for (std::size_t s = 0; s < tables_.labels.at(static_cast<std::size_t>(n)).size(); ++s)
    out.push_back(Structure{n, {static_cast<int>(s)}});
  return out;
}

Structure CustomSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  // Bubble sort the image word: sigma * s_{j1} * ... * s_{jm} = id, hence
  // sigma . z = s_{jm} . ... . s_{j1} . z, i.e. apply the swaps in order.
  std::vector<int> word = sigma.images();
  int index = z.payload.at(0);
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        index = apply_transposition(z.arity, static_cast<int>(j), index);
      }
    }
  }
  return Structure{z.arity, {index}};
}

std::optional<Structure> CustomSpecies::restrict_to(Side side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  int index = z.payload.at(0);
  int n = z.arity;
  const auto removed = s.complement().members();
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const auto next = delete_one(side, n, *it, index);
    if (!next) return std::nullopt;
    index = *next;
    --n;
  }
  return Structure{n, {index}};
}

std::string CustomSpecies::describe(const Structure& z) const {
  return tables_.labels.at(static_cast<std::size_t>(z.arity)).at(static_cast<std::size_t>(z.payload.at(0)));
}

std::string export_species_json(const Species& species, int max_arity, const std::string& name) {
  json doc;
  doc["name"] = name;
  doc["max_arity"] = max_arity;
  doc["cosymmetric"] = species.cosymmetric();
  json structures = json::array();
  json action = json::array();
  json left = json::array();
  json right = json::array();
  for (int n = 0; n <= max_arity; ++n) {
    const auto& list = species.structures(n);
    json labels = json::array();
    for (const auto& z : list) labels.push_back(species.describe(z));
    structures.push_back(labels);
    json per_k = json::array();
    for (int k = 1; k + 1 <= n; ++k) {
      const auto tau = Permutation::transposition(n, k, k + 1);
      json row = json::array();
      for (const auto& z : list) row.push_back(species.rank(species.relabel(tau, z)));
      per_k.push_back(row);
    }
    action.push_back(per_k);
    for (Side side : {Side::left, Side::right}) {
      json per_e = json::array();
      for (int e = 1; e <= n; ++e) {
        const Subset keep = Subset::full(n).without(e);
        json row = json::array();
        for (const auto& z : list) {
          const auto r = species.restrict_to(side, z, keep);
          row.push_back(r ? json(species.rank(*r)) : json(nullptr));
        }
        per_e.push_back(row);
      }
      (side == Side::left ? left : right).push_back(per_e);
    }
  }
  doc["structures"] = structures;
  doc["transposition_action"] = action;
  doc["delete_left"] = left;
  doc["delete_right"] = right;
  return doc.dump(1);
}

}  // namespace specoh

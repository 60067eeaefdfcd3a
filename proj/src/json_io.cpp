#include "torblocks/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

namespace torblocks::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  }
  for (const auto& [key, unused] : j.items()) {
    (void)unused;
    const auto match = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), match) &&
        std::none_of(optional.begin(), optional.end(), match)) {
      fail(where, "unknown field \"" + key + "\"");
    }
  }
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t k_from_json(const Json& j, const std::string& where) {
  const auto k = int_from_json(j, where);
  if (k < 1) fail(where, "k must be >= 1");
  return static_cast<std::size_t>(k);
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(big_from_json(j, where));
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

std::int64_t int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail(where, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  fail(where, "expected an integer");
}

IntVector int_vector_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json big_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer big_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const Rational q = rational_from_json(j, where);
    if (q.get_den() != 1) fail(where, "expected an integer");
    return q.get_num();
  }
  fail(where, "expected an integer");
}

Json big_vector_to_json(const BigVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(big_to_json(z));
  return out;
}

BigVector big_vector_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  BigVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(big_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json lie_type_to_json(const LieType& t) { return t.name(); }

LieType lie_type_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a Lie type such as \"A2\"");
  try {
    return LieType::parse(j.get<std::string>());
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

namespace {

FiniteWeight fin_from_json(const LieType& t, const Json& j, const std::string& where) {
  FiniteWeight w{t, int_vector_from_json(j, where)};
  if (w.coeffs.size() != static_cast<std::size_t>(t.rank)) {
    fail(where, "expected " + std::to_string(t.rank) + " coefficients for " + t.name());
  }
  return w;
}

Json int_vector_to_json(const IntVector& v) { return Json(v); }

}  // namespace

Json affine_to_json(const AffineWeight& w) {
  return Json{{"level", w.level}, {"fin", int_vector_to_json(w.fin.coeffs)}, {"delta", rational_to_json(w.delta)}};
}

AffineWeight affine_from_json(const LieType& t, const Json& j, const std::string& where) {
  require_object(j, where, {"level", "fin"}, {"delta"});
  AffineWeight w;
  w.type = t;
  w.level = int_from_json(j["level"], where + ".level");
  w.fin = fin_from_json(t, j["fin"], where + ".fin");
  w.delta = j.contains("delta") ? rational_from_json(j["delta"], where + ".delta") : Rational(0);
  return w;
}

Json toroidal_to_json(const ToroidalWeight& w) {
  Json deltas = Json::array();
  for (const auto& d : w.deltas) deltas.push_back(rational_to_json(d));
  return Json{{"type", lie_type_to_json(w.type)},
              {"central", int_vector_to_json(w.central)},
              {"fin", int_vector_to_json(w.fin.coeffs)},
              {"deltas", deltas}};
}

ToroidalWeight toroidal_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"type", "central", "fin"}, {"deltas"});
  ToroidalWeight w;
  w.type = lie_type_from_json(j["type"], where + ".type");
  w.central = int_vector_from_json(j["central"], where + ".central");
  w.k = w.central.size();
  w.fin = fin_from_json(w.type, j["fin"], where + ".fin");
  if (j.contains("deltas")) {
    const auto& d = require_array(j["deltas"], where + ".deltas");
    for (std::size_t i = 0; i < d.size(); ++i) {
      w.deltas.push_back(rational_from_json(d[i], where + ".deltas[" + std::to_string(i) + "]"));
    }
  } else {
    w.deltas.assign(w.k, Rational(0));
  }
  try {
    w.validate();
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  return w;
}

Json point_to_json(const TorusPoint& p) { return scaling_to_json(p.coords()); }

TorusPoint point_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  try {
    return TorusPoint(std::move(coords));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

Json scaling_to_json(const ScalingElement& b) {
  Json out = Json::array();
  for (const auto& q : b) out.push_back(rational_to_json(q));
  return out;
}

Json pi_to_json(const PiFunction& pi) {
  Json entries = Json::array();
  for (const auto& e : pi.entries()) {
    entries.push_back(Json{{"point", point_to_json(e.point)}, {"weight", affine_to_json(e.weight)}});
  }
  return Json{{"type", lie_type_to_json(pi.type())}, {"k", pi.k()}, {"entries", entries}};
}

PiFunction pi_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"type", "k", "entries"});
  const LieType t = lie_type_from_json(j["type"], where + ".type");
  const std::size_t k = k_from_json(j["k"], where + ".k");
  const auto& arr = require_array(j["entries"], where + ".entries");
  std::vector<PiEntry> entries;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + ".entries[" + std::to_string(i) + "]";
    require_object(arr[i], w, {"point", "weight"});
    entries.push_back(PiEntry{point_from_json(arr[i]["point"], w + ".point"),
                              affine_from_json(t, arr[i]["weight"], w + ".weight")});
  }
  try {
    return PiFunction::make(t, k, std::move(entries));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

Json xi_to_json(const XiCharacter& xi) {
  Json entries = Json::array();
  for (const auto& e : xi.entries()) {
    entries.push_back(Json{{"point", point_to_json(e.point)},
                           {"value", Json{{"level", e.value.level}, {"class", e.value.cls.label()}}}});
  }
  return Json{{"type", lie_type_to_json(xi.type())}, {"k", xi.k()}, {"entries", entries}};
}

XiCharacter xi_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"type", "k", "entries"});
  const LieType t = lie_type_from_json(j["type"], where + ".type");
  const std::size_t k = k_from_json(j["k"], where + ".k");
  const auto& arr = require_array(j["entries"], where + ".entries");
  std::vector<XiEntry> entries;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + ".entries[" + std::to_string(i) + "]";
    require_object(arr[i], w, {"point", "value"});
    const Json& v = arr[i]["value"];
    require_object(v, w + ".value", {"level", "class"});
    if (!v["class"].is_string()) fail(w + ".value.class", "expected a class label such as \"0\" or \"w1\"");
    GammaClass cls;
    try {
      cls = GammaClass::parse(t, v["class"].get<std::string>());
    } catch (const ValidationError& e) {
      fail(w + ".value.class", e.what());
    }
    entries.push_back(
        XiEntry{point_from_json(arr[i]["point"], w + ".point"), XiValue{int_from_json(v["level"], w + ".value.level"), cls}});
  }
  try {
    return XiCharacter::make(t, k, std::move(entries));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

Json lattice_to_json(const ZLattice& l) {
  Json basis = Json::array();
  for (const auto& row : l.basis()) basis.push_back(big_vector_to_json(row));
  return Json{{"dim", l.dim()}, {"basis", basis}};
}

ZLattice lattice_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"dim", "basis"});
  const auto dim = int_from_json(j["dim"], where + ".dim");
  if (dim < 0) fail(where + ".dim", "must be nonnegative");
  const auto& arr = require_array(j["basis"], where + ".basis");
  BigMatrix rows;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    rows.push_back(big_vector_from_json(arr[i], where + ".basis[" + std::to_string(i) + "]"));
    if (rows.back().size() != static_cast<std::size_t>(dim)) fail(where + ".basis", "row length differs from dim");
  }
  return hnf(rows, static_cast<std::size_t>(dim));
}

Json quotient_to_json(const QuotientData& q) {
  Json reps = Json::array();
  for (const auto& r : q.coset_reps) reps.push_back(big_vector_to_json(r));
  return Json{{"invariant_factors", big_vector_to_json(q.invariant_factors)},
              {"free_rank", q.free_rank},
              {"index", q.index ? big_to_json(*q.index) : Json(nullptr)},
              {"coset_reps", reps}};
}

Json gpi_to_json(const GPiResult& r) {
  Json log = Json::array();
  for (const auto& w : r.witnesses) log.push_back(big_vector_to_json(w));
  return Json{{"lattice", lattice_to_json(r.lattice)},
              {"quotient", quotient_to_json(r.quotient)},
              {"sign_kernel", lattice_to_json(r.sign_kernel)},
              {"generators_log", log}};
}

Json block_id_to_json(const BlockId& id) {
  if (id.kind == TypeTag::TypeI) return Json{{"kind", "I"}, {"xi", xi_to_json(id.xi)}};
  return Json{{"kind", "II"}, {"pi", pi_to_json(id.pi)}, {"coset", big_vector_to_json(id.coset)}};
}

BlockId block_id_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail(where, "expected {\"kind\": \"I\"|\"II\", ...}");
  BlockId id;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "I") {
    require_object(j, where, {"kind", "xi"});
    id.kind = TypeTag::TypeI;
    id.xi = xi_from_json(j["xi"], where + ".xi");
  } else if (kind == "II") {
    require_object(j, where, {"kind", "pi", "coset"});
    id.kind = TypeTag::TypeII;
    id.pi = pi_from_json(j["pi"], where + ".pi");
    id.coset = big_vector_from_json(j["coset"], where + ".coset");
    if (id.coset.size() != id.pi.torus_dim()) fail(where + ".coset", "length must be k-1");
  } else {
    fail(where + ".kind", "expected \"I\" or \"II\"");
  }
  return id;
}

Json character_type_to_json(const CharacterType& c) {
  Json out{{"type", c.tag == TypeTag::TypeI ? "I" : "II"}};
  if (c.witness) {
    Json reals = Json::array();
    for (const auto& r : c.witness->realizations) reals.push_back(Json(r.coeffs));
    out["witness"] = Json{{"point", point_to_json(c.witness->point)},
                          {"value", Json{{"level", c.witness->value.level}, {"class", c.witness->value.cls.label()}}},
                          {"realizations", reals}};
  }
  return out;
}

Json diagnostics_to_json(const std::vector<Diagnostic>& d) {
  Json out = Json::array();
  for (const auto& x : d) out.push_back(Json{{"code", x.code}, {"message", x.message}});
  return out;
}

}  // namespace torblocks::json_io

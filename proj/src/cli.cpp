#include "torblocks/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace torblocks::cli {

using json_io::Json;

namespace {

const char* const kSchemas = R"json({
  "values": {
    "type": "string naming a Lie type: A1.., B3.., C2.., D4.., E6, E7, E8, F4, G2",
    "rational": "string \"p/q\" in lowest terms with q > 0, or \"p\"; JSON integers are accepted on input",
    "point": "array of nonzero rationals of length k-1",
    "class": "\"0\" or \"w<i>\" with i in J_0",
    "affine_weight": {"level": "int", "fin": "[int] omega coordinates", "delta": "rational, optional on input"},
    "toroidal_weight": {"type": "type", "central": "[int] of length k", "fin": "[int]", "deltas": "[rational] of length k, optional on input"},
    "pi": {"type": "type", "k": "int >= 1", "entries": [{"point": "point", "weight": "affine_weight"}]},
    "xi": {"type": "type", "k": "int >= 1", "entries": [{"point": "point", "value": {"level": "int", "class": "class"}}]},
    "lattice": {"dim": "int", "basis": "[[int]] in Hermite normal form"},
    "block_id": {"kind": "\"I\" or \"II\"", "xi": "xi (kind I)", "pi": "pi with zero deltas (kind II)", "coset": "[int] (kind II)"}
  },
  "commands": {
    "gamma": {"input": "positional type, or {\"type\"}", "output": {"invariant_factors": "[int]", "j0": "[int]"}},
    "j0": {"input": "positional type, or {\"type\"}", "output": {"j0": "[int]"}},
    "realizations": {"input": {"type": "type", "level": "int >= 1", "class": "class"}, "output": {"realizations": "[[int]]", "count": "int"}},
    "chi": {"input": {"pi": "pi"}, "output": {"xi": "xi", "xi_affine_coroot": "xi", "wt": "affine_weight"}},
    "gpi": {"input": {"pi": "pi"}, "output": {"lattice": "lattice", "quotient": {"invariant_factors": "[int]", "free_rank": "int", "index": "int", "coset_reps": "[[int]]"}, "sign_kernel": "lattice", "generators_log": "[[int]]"}},
    "type": {"input": "{\"xi\"} or {\"pi\"}", "output": {"type": "\"I\" or \"II\"", "witness": "{point, value, realizations} for type I"}},
    "iso": {"input": {"pi1": "pi", "g1": "[int]", "pi2": "pi", "g2": "[int]"}, "output": {"isomorphic": "bool"}},
    "link": {"input": {"pi1": "pi", "g1": "[int]", "pi2": "pi", "g2": "[int]"}, "output": {"same_block": "bool"}},
    "blockid": {"input": {"pi": "pi", "g": "[int]"}, "output": {"block_id": "block_id"}},
    "orbit": {"input": {"from": "[{point, label}]", "to": "[{point, label}]"}, "output": {"match": "bool", "scaling": "[rational] when match"}},
    "translate": {"input": {"weight": "toroidal_weight", "root": "[int] positive root in simple-root coordinates", "loop": "int in 1..k", "m": "int"}, "output": {"weight": "toroidal_weight"}},
    "normalize": {"input": {"weight": "toroidal_weight", "m": "int > 0"}, "output": {"weight": "toroidal_weight"}},
    "gcdform": {"input": "[int] or {\"central\": [int]}", "output": {"m": "int", "normal": "[int]"}},
    "level0block": {"input": {"xi": "xi with all levels 0"}, "output": {"xi": "xi"}},
    "schemas": {"input": "none", "output": "this document"}
  },
  "results": "every result may carry \"diagnostics\": [{code, message}]",
  "errors": {"error": {"kind": "\"validation\" (exit 2) or \"internal\" (exit 3)", "message": "string"}}
})json";

void require_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ValidationError("input: expected a JSON object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw ValidationError(std::string("input: missing field \"") + k + "\"");
  }
  for (const auto& [key, unused] : j.items()) {
    (void)unused;
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw ValidationError("input: unknown field \"" + key + "\"");
    }
  }
}

LieType type_argument(const std::optional<std::string>& positional, const Json& input) {
  if (positional) return LieType::parse(*positional);
  require_keys(input, {"type"});
  return json_io::lie_type_from_json(input["type"], "input.type");
}

Json int_list(const std::vector<int>& v) { return Json(v); }

IntVector coset_arg(const Json& j, const std::string& where, std::size_t dim) {
  IntVector g = json_io::int_vector_from_json(j, where);
  if (g.size() != dim) throw ValidationError(where + ": expected length k-1 = " + std::to_string(dim));
  return g;
}

void attach(Json& result, const std::vector<Diagnostic>& diagnostics) {
  if (!diagnostics.empty()) result["diagnostics"] = json_io::diagnostics_to_json(diagnostics);
}

std::vector<Diagnostic> chi_diagnostics(const PiFunction& pi) {
  if (wt(pi).level < 1) return {};
  return classify_type(chi(pi)).diagnostics;
}

LabeledPoints<Json> labeled_from_json(const Json& j, const std::string& where, std::optional<std::size_t>& dim) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array");
  LabeledPoints<Json> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_object() || !j[i].contains("point") || !j[i].contains("label") || j[i].size() != 2) {
      throw ValidationError(w + ": expected {\"point\", \"label\"}");
    }
    TorusPoint p = json_io::point_from_json(j[i]["point"], w + ".point");
    if (!dim) dim = p.dim();
    out.emplace_back(std::move(p), j[i]["label"]);
  }
  return out;
}

void render(std::ostringstream& os, const Json& doc, int indent, bool color) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const auto key = [&](const std::string& k) { return color ? "\x1b[1m" + k + "\x1b[0m" : k; };
  const auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
  };
  const auto inline_form = [&](const Json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + ")";
  };
  if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) {
      if (v.is_primitive()) {
        os << pad << key(k) << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << key(k) << ": " << inline_form(v) << "\n";
      } else {
        os << pad << key(k) << ":\n";
        render(os, v, indent + 1, color);
      }
    }
  } else if (doc.is_array()) {
    if (doc.empty()) os << pad << "(none)\n";
    for (const auto& v : doc) {
      if (v.is_primitive()) {
        os << pad << "- " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << "- " << inline_form(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 1, color);
      }
    }
  } else {
    os << pad << scalar(doc) << "\n";
  }
}

std::string render_doc(const Json& doc, const std::string& format, bool color) {
  return format == "text" ? render_text(doc, color) : doc.dump(2) + "\n";
}

Json error_doc(const char* kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gamma",  "j0",        "realizations", "chi",     "gpi",
                                              "type",   "iso",       "link",         "blockid", "orbit",
                                              "translate", "normalize", "gcdform",   "level0block", "schemas"};
  return names;
}

const Json& schemas() {
  static const Json doc = Json::parse(kSchemas);
  return doc;
}

Json execute(const std::string& command, const std::optional<std::string>& positional, const Json& input,
             unsigned threads) {
  if (positional && command != "gamma" && command != "j0") {
    throw ValidationError("command " + command + " takes no positional argument");
  }
  if (command == "schemas") return schemas();
  if (command == "gamma") {
    const LieType t = type_argument(positional, input);
    return Json{{"invariant_factors", json_io::big_vector_to_json(gamma_invariant_factors(t))},
                {"j0", int_list(j0_set(t))}};
  }
  if (command == "j0") return Json{{"j0", int_list(j0_set(type_argument(positional, input)))}};
  if (command == "realizations") {
    require_keys(input, {"type", "level", "class"});
    const LieType t = json_io::lie_type_from_json(input["type"], "input.type");
    const auto level = json_io::int_from_json(input["level"], "input.level");
    if (!input["class"].is_string()) throw ValidationError("input.class: expected a class label");
    const GammaClass cls = GammaClass::parse(t, input["class"].get<std::string>());
    Json list = Json::array();
    for (const auto& w : realizations(t, level, cls)) list.push_back(Json(w.coeffs));
    const std::size_t n = list.size();
    return Json{{"realizations", std::move(list)}, {"count", n}};
  }
  if (command == "chi") {
    require_keys(input, {"pi"});
    const PiFunction pi = json_io::pi_from_json(input["pi"], "input.pi");
    return Json{{"xi", json_io::xi_to_json(chi(pi))},
                {"xi_affine_coroot", json_io::xi_to_json(chi_affine_coroot(pi))},
                {"wt", json_io::affine_to_json(wt(pi))}};
  }
  if (command == "gpi") {
    require_keys(input, {"pi"});
    return json_io::gpi_to_json(g_pi(json_io::pi_from_json(input["pi"], "input.pi"), threads));
  }
  if (command == "type") {
    if (!input.is_object() || input.size() != 1 || !(input.contains("xi") || input.contains("pi"))) {
      throw ValidationError("input: expected {\"xi\": ...} or {\"pi\": ...}");
    }
    const XiCharacter xi = input.contains("xi") ? json_io::xi_from_json(input["xi"], "input.xi")
                                                : chi(json_io::pi_from_json(input["pi"], "input.pi"));
    const CharacterType ct = classify_type(xi);
    Json result = json_io::character_type_to_json(ct);
    attach(result, ct.diagnostics);
    return result;
  }
  if (command == "iso" || command == "link") {
    require_keys(input, {"pi1", "g1", "pi2", "g2"});
    const PiFunction pi1 = json_io::pi_from_json(input["pi1"], "input.pi1");
    const PiFunction pi2 = json_io::pi_from_json(input["pi2"], "input.pi2");
    const IntVector g1 = coset_arg(input["g1"], "input.g1", pi1.torus_dim());
    const IntVector g2 = coset_arg(input["g2"], "input.g2", pi2.torus_dim());
    if (command == "iso") return Json{{"isomorphic", is_isomorphic(pi1, g1, pi2, g2)}};
    Json result{{"same_block", same_block(pi1, g1, pi2, g2)}};
    attach(result, chi_diagnostics(pi1));
    return result;
  }
  if (command == "blockid") {
    require_keys(input, {"pi", "g"});
    const PiFunction pi = json_io::pi_from_json(input["pi"], "input.pi");
    const IntVector g = coset_arg(input["g"], "input.g", pi.torus_dim());
    Json result{{"block_id", json_io::block_id_to_json(block_id(pi, g))}};
    attach(result, chi_diagnostics(pi));
    return result;
  }
  if (command == "orbit") {
    require_keys(input, {"from", "to"});
    std::optional<std::size_t> dim;
    const auto a = labeled_from_json(input["from"], "input.from", dim);
    const auto b = labeled_from_json(input["to"], "input.to", dim);
    if (!dim) throw ValidationError("input: at least one point is needed to fix the dimension");
    const auto match = orbit_match(a, b, *dim, std::equal_to<Json>{});
    Json result{{"match", match.has_value()}};
    if (match) result["scaling"] = json_io::scaling_to_json(*match);
    return result;
  }
  if (command == "translate") {
    require_keys(input, {"weight", "root", "loop", "m"});
    const ToroidalWeight w = json_io::toroidal_from_json(input["weight"], "input.weight");
    const IntVector root = json_io::int_vector_from_json(input["root"], "input.root");
    const auto loop = json_io::int_from_json(input["loop"], "input.loop");
    if (loop < 1) throw ValidationError("input.loop: must be >= 1");
    const auto m = json_io::int_from_json(input["m"], "input.m");
    return Json{{"weight", json_io::toroidal_to_json(weyl_translate(w, root, static_cast<std::size_t>(loop), m))}};
  }
  if (command == "normalize") {
    require_keys(input, {"weight", "m"});
    const ToroidalWeight w = json_io::toroidal_from_json(input["weight"], "input.weight");
    return Json{{"weight", json_io::toroidal_to_json(normalize_deltas(w, json_io::int_from_json(input["m"], "input.m")))}};
  }
  if (command == "gcdform") {
    const Json* central = &input;
    if (input.is_object()) {
      require_keys(input, {"central"});
      central = &input["central"];
    }
    const auto f = gcd_normal_form(json_io::int_vector_from_json(*central, "input.central"));
    return Json{{"m", f.m}, {"normal", Json(f.normal)}};
  }
  if (command == "level0block") {
    require_keys(input, {"xi"});
    return Json{{"xi", json_io::xi_to_json(level_zero_block(json_io::xi_from_json(input["xi"], "input.xi")))}};
  }
  throw ValidationError("unknown command \"" + command + "\"");
}

std::string render_text(const Json& doc, bool color) {
  std::ostringstream os;
  render(os, doc, 0, color);
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        bool out_is_terminal) {
  CLI::App app{"Exact block decomposition toolkit for toroidal Lie algebra modules", "torblocks"};
  std::string command;
  std::optional<std::string> positional;
  std::string format = "json";
  std::string input_path;
  std::string output_path;
  unsigned threads = 1;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("argument", positional, "Lie type for gamma and j0");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input", input_path, "Read the request document from this file instead of stdin");
  app.add_option("--output", output_path, "Write the result to this file instead of stdout");
  app.add_option("--threads", threads, "Worker threads for lattice computations (0 = all cores)");

  std::string fmt_for_errors = "json";
  auto report = [&](const char* kind, const std::string& message, int code) {
    err << render_doc(error_doc(kind, message), fmt_for_errors, false);
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report("validation", e.what(), kExitValidation);
  }
  fmt_for_errors = format;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  try {
    Json input;
    const bool needs_input = command != "schemas" && !((command == "gamma" || command == "j0") && positional);
    if (needs_input) {
      std::string text;
      if (input_path.empty()) {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        std::ifstream f(input_path, std::ios::binary);
        if (!f) throw ValidationError("cannot open input file " + input_path);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
      }
      try {
        input = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
      }
    }
    const Json result = execute(command, positional, input, threads);
    const char* no_color = std::getenv("NO_COLOR");
    const bool color = out_is_terminal && output_path.empty() && (no_color == nullptr || *no_color == '\0');
    const std::string rendered = render_doc(result, format, color);
    if (output_path.empty()) {
      out << rendered;
    } else {
      std::ofstream f(output_path, std::ios::binary);
      if (!f) throw ValidationError("cannot open output file " + output_path);
      f << rendered;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    return report("validation", e.what(), kExitValidation);
  } catch (const InternalError& e) {
    return report("internal", e.what(), kExitInternal);
  } catch (const Json::exception& e) {
    return report("validation", e.what(), kExitValidation);
  }
}

}  // namespace torblocks::cli
